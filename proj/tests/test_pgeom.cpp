#include "gqlrc/pgeom.hpp"

#include <doctest.h>

#include <stdexcept>

#include <set>

using namespace gqlrc;

namespace {
const Field F2 = Field::create(2, 1);
const Field F3 = Field::create(3, 1);
const Field F4 = Field::create(2, 2);
} // namespace

TEST_CASE("point enumeration counts and order") {
    CHECK(ProjectiveSpace(F2, 2).size() == 7);
    CHECK(ProjectiveSpace(F2, 3).size() == 15);
    CHECK(ProjectiveSpace(F3, 0).size() == 1);
    CHECK(ProjectiveSpace(F3, 2).size() == 13);
    CHECK(ProjectiveSpace(F4, 2).size() == 21);

    ProjectiveSpace S(F2, 2);
    CHECK(S.point(0) == Coords{0, 0, 1}); // lexicographically first
    CHECK(S.point(6) == Coords{1, 1, 1});
    for (std::uint32_t i = 0; i < S.size(); ++i) CHECK(S.index_of(S.point(i)) == i);
}

TEST_CASE("point normalization") {
    CHECK(normalize_point(F3, {2, 1, 0}) == Coords{1, 2, 0});
    CHECK(normalize_point(F3, {0, 2, 2}) == Coords{0, 1, 1});
    CHECK_THROWS_AS(normalize_point(F3, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("span and subspace points") {
    ProjectiveSpace S(F2, 2);
    Subspace pt = span_points(F2, 2, {{0, 0, 1}});
    CHECK(pt.proj_dim() == 0);
    CHECK(pt.points(F2).size() == 1);

    Subspace line = span_points(F2, 2, {{0, 0, 1}, {0, 1, 0}});
    CHECK(line.proj_dim() == 1);
    CHECK(line.points(F2).size() == 3);

    auto conic = conic_points(F2);
    Subspace plane = span_points(F2, 2, conic);
    CHECK(plane.proj_dim() == 2);

    CHECK_THROWS_AS(span_points(F2, 2, {}), std::invalid_argument);

    Subspace l32 = span_points(F2, 3, {{0, 0, 0, 1}, {0, 0, 1, 0}});
    CHECK(l32.points(F2).size() == 3);
    Subspace p33 = span_points(F3, 3, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
    CHECK(p33.points(F3).size() == 13); // (3^3-1)/2
}

TEST_CASE("canonical RREF basis") {
    // same subspace from different generators: (1,2,1) = gen1 + gen2 and
    // (2,2,0) = 2*gen1 over F_3
    Subspace a = span_points(F3, 2, {{1, 1, 0}, {0, 1, 1}});
    Subspace b = span_points(F3, 2, {{1, 2, 1}, {2, 2, 0}});
    CHECK(a == b);
    // span of the point set reproduces the subspace
    Subspace c = span_points(F3, 2, a.points(F3));
    CHECK(c == a);
}

TEST_CASE("subspace containment and intersection") {
    Subspace l1 = span_points(F2, 2, {{1, 0, 0}, {0, 1, 0}});
    Subspace l2 = span_points(F2, 2, {{1, 0, 0}, {0, 0, 1}});
    Subspace meet = intersection(F2, l1, l2);
    CHECK(meet.proj_dim() == 0);
    CHECK(meet.contains_point(F2, {1, 0, 0}));

    Subspace m1 = span_points(F2, 3, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    Subspace m2 = span_points(F2, 3, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(intersection(F2, m1, m2).rank() == 0); // skew lines
    CHECK(m1.contains(F2, span_points(F2, 3, {{1, 1, 0, 0}})));
}

TEST_CASE("hyperplane embedding") {
    ProjectiveSpace inner(F2, 2);
    HyperplaneEmbedding emb = embed_in_hyperplane(inner);
    CHECK(emb.outer.dim() == 3);
    CHECK(affine_point_ids(emb.outer).size() == 8); // 2^3
    for (const auto& pt : inner.points()) {
        Coords lifted = lift_point(pt);
        CHECK(at_infinity(lifted));
        CHECK(emb.h_infinity.contains_point(F2, lifted));
    }
    ProjectiveSpace inner3(F2, 3);
    CHECK(affine_point_ids(embed_in_hyperplane(inner3).outer).size() == 16);
}

TEST_CASE("subspace enumeration") {
    ProjectiveSpace S(F2, 3);
    CHECK(subspaces_of_dim(S, 0).size() == 15);
    CHECK(subspaces_of_dim(S, 1).size() == 35);
    CHECK(subspaces_of_dim(S, 2).size() == 15);
    ProjectiveSpace P(F3, 2);
    CHECK(subspaces_of_dim(P, 1).size() == 13);
}

TEST_CASE("classical varieties") {
    auto c2 = conic_points(F2);
    CHECK(c2.size() == 3);
    CHECK(is_arc(F2, 2, c2));

    auto c4 = conic_points(F4);
    CHECK(c4.size() == 5);
    CHECK(is_arc(F4, 2, c4));

    auto h4 = hyperoval_points(F4);
    CHECK(h4.size() == 6);
    CHECK(is_arc(F4, 2, h4));
    CHECK_THROWS_AS(hyperoval_points(F3), std::invalid_argument);

    auto eq2 = elliptic_quadric_points(F2);
    CHECK(eq2.size() == 5);
    CHECK(is_arc(F2, 3, eq2));
    auto eq3 = elliptic_quadric_points(F3);
    CHECK(eq3.size() == 10);
    CHECK(is_arc(F3, 3, eq3));

    CHECK(parabolic_quadric_points(F2).size() == 15);
    CHECK(parabolic_quadric_points(F3).size() == 40);
    CHECK(elliptic_quadric5_points(F2).size() == 27);

    CHECK(hermitian_points(F4, 3).size() == 45);
    CHECK(hermitian_points(F4, 4).size() == 165);
    CHECK_THROWS_AS(hermitian_points(F2, 3), std::invalid_argument);

    auto w2 = symplectic_lines(F2);
    CHECK(w2.size() == 15);
    for (const auto& l : w2) CHECK(l.proj_dim() == 1);
}

TEST_CASE("arc witness reports a collinear triple") {
    std::vector<Coords> pts = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}};
    std::vector<std::size_t> witness;
    CHECK_FALSE(is_arc(F2, 2, pts, &witness));
    CHECK(witness == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("lines fully contained in a point set") {
    ProjectiveSpace S(F2, 4);
    auto q4 = parabolic_quadric_points(F2);
    auto lines = lines_on_set(S, q4);
    CHECK(lines.size() == 15);
    for (const auto& l : lines)
        for (const auto& pt : l.points(F2))
            CHECK(std::find(q4.begin(), q4.end(), pt) != q4.end());
}

TEST_CASE("field reduction of a point of PG(1,4)") {
    FieldReduction red(F4, F2);
    CHECK(red.e() == 2);
    Subspace l = red.reduce_point({1, F4.gen()});
    CHECK(l.ambient_dim() == 3);
    CHECK(l.proj_dim() == 1);
    CHECK(l.points(F2).size() == 3);
}

TEST_CASE("field reduction with e = 1 is the identity on points") {
    FieldReduction red(F3, F3);
    CHECK(red.e() == 1);
    ProjectiveSpace S(F3, 2);
    for (const auto& pt : S.points()) {
        Subspace s = red.reduce_point(pt);
        CHECK(s.proj_dim() == 0);
        CHECK(s.basis()[0] == pt);
    }
}

TEST_CASE("field reduction of an oval gives disjoint lines") {
    FieldReduction red(F4, F2);
    auto oval = conic_points(F4);
    std::vector<Subspace> images;
    for (const auto& pt : oval) images.push_back(red.reduce_point(pt));
    CHECK(images.size() == 5);
    for (std::size_t i = 0; i < images.size(); ++i) {
        CHECK(images[i].ambient_dim() == 5);
        CHECK(images[i].proj_dim() == 1);
        for (std::size_t j = i + 1; j < images.size(); ++j)
            CHECK(intersection(F2, images[i], images[j]).rank() == 0);
    }
}

TEST_CASE("field reduction embedding is a ring homomorphism") {
    Field f16 = Field::create(2, 4);
    FieldReduction red(f16, F4);
    CHECK(red.e() == 2);
    for (felem a = 0; a < F4.q(); ++a) {
        for (felem b = 0; b < F4.q(); ++b) {
            CHECK(red.embed(F4.add(a, b)) == f16.add(red.embed(a), red.embed(b)));
            CHECK(red.embed(F4.mul(a, b)) == f16.mul(red.embed(a), red.embed(b)));
        }
        // expand inverts the basis expansion
        auto coords = red.expand(red.embed(a));
        CHECK(coords[0] == a);
        CHECK(coords[1] == 0);
    }
    CHECK_THROWS_AS(FieldReduction(Field::create(2, 3), F4), std::invalid_argument);
    CHECK_THROWS_AS(FieldReduction(f16, F3), std::invalid_argument);
}

TEST_CASE("collinear points reduce into the reduced line") {
    FieldReduction red(F4, F2);
    Coords p1 = {1, 0};
    Coords p2 = {0, 1};
    Coords p3 = normalize_point(F4, {1, 1});
    Subspace whole = red.reduce_subspace(span_points(F4, 1, {p1, p2}));
    CHECK(whole.proj_dim() == 3); // the full reduced line PG(1,4) -> PG(3,2)
    for (const auto& pt : {p1, p2, p3})
        CHECK(whole.contains(F2, red.reduce_point(pt)));
}

TEST_CASE("incidence matrix of points versus t-spaces of PG") {
    ProjectiveSpace fano(F2, 2);
    IncMatrix m = incidence_matrix_pg(fano, 1);
    CHECK(m.rows.size() == 7);
    CHECK(m.cols == 7);
    for (const auto& row : m.rows) {
        std::size_t w = 0;
        for (auto x : row) w += x;
        CHECK(w == 3);
    }

    // t = 0 gives a permutation matrix
    ProjectiveSpace line(F2, 1);
    IncMatrix perm = incidence_matrix_pg(line, 0);
    CHECK(perm.rows.size() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        std::size_t w = 0;
        for (auto x : perm.rows[r]) w += x;
        CHECK(w == 1);
        CHECK(perm.rows[r][r] == 1); // enumeration order matches the points
    }

    // generic row weight (q^{t+1}-1)/(q-1)
    ProjectiveSpace p33(F3, 3);
    IncMatrix planes = incidence_matrix_pg(p33, 2);
    for (const auto& row : planes.rows) {
        std::size_t w = 0;
        for (auto x : row) w += x;
        CHECK(w == 13);
    }
}

TEST_CASE("incidence matrix of affine points versus t-flats") {
    ProjectiveSpace S(F2, 3);
    IncMatrix m = incidence_matrix_ag(S, 1);
    CHECK(m.cols == 8);
    CHECK(m.rows.size() == 28); // 35 lines minus the 7 inside the hyperplane
    for (const auto& row : m.rows) {
        std::size_t w = 0;
        for (auto x : row) w += x;
        CHECK(w == 2); // q^t
    }
    CHECK_THROWS_AS(incidence_matrix_ag(S, 0), std::invalid_argument);
    CHECK_THROWS_AS(incidence_matrix_ag(S, 3), std::invalid_argument);

    ProjectiveSpace P(F3, 2);
    IncMatrix ag23 = incidence_matrix_ag(P, 1);
    CHECK(ag23.cols == 9);
    CHECK(ag23.rows.size() == 12);
    for (const auto& row : ag23.rows) {
        std::size_t w = 0;
        for (auto x : row) w += x;
        CHECK(w == 3);
    }
}
