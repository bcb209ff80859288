#include "gqlrc/gq.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>

using namespace gqlrc;

namespace {
const Field F2 = Field::create(2, 1);
const Field F3 = Field::create(3, 1);
const Field F4 = Field::create(2, 2);

void check_counts(const IncidenceStructure& is, long s, long t) {
    REQUIRE(is.params.has_value());
    CHECK(is.params->s == s);
    CHECK(is.params->t == t);
    CHECK(is.params->alpha == 1);
    CHECK(is.num_points() == static_cast<std::size_t>((s + 1) * (s * t + 1)));
    CHECK(is.num_lines() == static_cast<std::size_t>((t + 1) * (s * t + 1)));
}
} // namespace

TEST_CASE("translation GQ from the conic egg over GF(2)") {
    IncidenceStructure is = build_te(conic_egg(F2));
    check_counts(is, 2, 2);
    std::size_t aff = std::count(is.point_types.begin(), is.point_types.end(), "affine");
    std::size_t sub = std::count(is.point_types.begin(), is.point_types.end(), "subspace");
    std::size_t inf = std::count(is.point_types.begin(), is.point_types.end(), "infinity");
    CHECK(aff == 8);
    CHECK(sub == 6);
    CHECK(inf == 1);
    CHECK(std::count(is.line_types.begin(), is.line_types.end(), "affine") == 12);
    CHECK(std::count(is.line_types.begin(), is.line_types.end(), "egg") == 3);
}

TEST_CASE("translation GQ from the elliptic quadric egg over GF(2)") {
    IncidenceStructure is = build_te(ovoid_egg(F2));
    check_counts(is, 2, 4);
    CHECK(is.num_points() == 27);
    CHECK(is.num_lines() == 45);
}

TEST_CASE("translation GQ of order (4,4) from the reduced oval egg") {
    IncidenceStructure is = build_te(conic_egg(F2, 2));
    check_counts(is, 4, 4);
    CHECK(is.num_points() == 85);
    CHECK(is.num_lines() == 85);
}

TEST_CASE("T2*(O) structures") {
    IncidenceStructure q2 = build_t2star(F2);
    check_counts(q2, 1, 3);
    CHECK(q2.num_points() == 8);
    // q^2 (q+2) lines: one pencil of q^2 affine lines per hyperoval point
    CHECK(q2.num_lines() == 16);

    IncidenceStructure q4 = build_t2star(F4);
    check_counts(q4, 3, 5);
    CHECK(q4.num_points() == 64);
    CHECK(q4.num_lines() == 96);

    CHECK_THROWS_AS(build_t2star(F3), std::invalid_argument);
}

TEST_CASE("classical generalised quadrangles") {
    check_counts(build_classical(GqKind::W3, F2), 2, 2);
    check_counts(build_classical(GqKind::Q4, F2), 2, 2);
    check_counts(build_classical(GqKind::Q4, F3), 3, 3);
    check_counts(build_classical(GqKind::Q5, F2), 2, 4);
    check_counts(build_classical(GqKind::H3, F4), 4, 2);
    CHECK_THROWS_AS(build_classical(GqKind::H3, F2), std::invalid_argument);
}

TEST_CASE("H(4,4) has order (4,8)") {
    IncidenceStructure is = build_classical(GqKind::H4, F4);
    check_counts(is, 4, 8);
    CHECK(is.num_points() == 165);
    CHECK(is.num_lines() == 297);
}

TEST_CASE("Q(5,3) has order (3,9)") {
    IncidenceStructure is = build_classical(GqKind::Q5, F3);
    check_counts(is, 3, 9);
    CHECK(is.num_points() == 112);
    CHECK(is.num_lines() == 280);
}

TEST_CASE("conic-egg T(E) and Q(4,q) have matching invariant profiles") {
    for (const Field& F : {F2, F3}) {
        IncidenceStructure te = build_te(conic_egg(F));
        IncidenceStructure q4 = build_classical(GqKind::Q4, F);
        CHECK(te.params == q4.params);
        CHECK(te.num_points() == q4.num_points());
        CHECK(te.num_lines() == q4.num_lines());
        auto profile = [](const IncidenceStructure& is) {
            std::vector<std::size_t> sizes, degrees;
            for (const auto& l : is.lines) sizes.push_back(l.size());
            for (const auto& through : is.lines_through_points())
                degrees.push_back(through.size());
            std::sort(sizes.begin(), sizes.end());
            std::sort(degrees.begin(), degrees.end());
            return std::make_pair(sizes, degrees);
        };
        CHECK(profile(te) == profile(q4));
    }
}

TEST_CASE("axiom violations produce witnesses") {
    IncidenceStructure bad;
    bad.kind = "degenerate";
    bad.point_types.assign(4, "point");
    bad.line_types.assign(2, "line");
    bad.lines = {{0, 1, 2}, {0, 1, 3}}; // two lines through two common points
    PgVerdict v = verify_partial_geometry(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.witness.find("points 0,1") != std::string::npos);
}

TEST_CASE("partial geometries with alpha != 1 are measured correctly") {
    // a 3x3 grid is the GQ of order (2,1)
    IncidenceStructure grid;
    grid.kind = "grid";
    grid.point_types.assign(9, "point");
    for (int r = 0; r < 3; ++r) {
        grid.lines.push_back({static_cast<std::uint32_t>(3 * r),
                              static_cast<std::uint32_t>(3 * r + 1),
                              static_cast<std::uint32_t>(3 * r + 2)});
        grid.line_types.push_back("line");
    }
    for (int c = 0; c < 3; ++c) {
        grid.lines.push_back({static_cast<std::uint32_t>(c),
                              static_cast<std::uint32_t>(c + 3),
                              static_cast<std::uint32_t>(c + 6)});
        grid.line_types.push_back("line");
    }
    PgVerdict v = verify_partial_geometry(grid);
    CHECK(v.ok);
    CHECK(v.params.s == 2);
    CHECK(v.params.t == 1);
    CHECK(v.params.alpha == 1);

    // the affine plane AG(2,3) is a linear space: alpha = s + 1 = 3
    ProjectiveSpace S(Field::create(3, 1), 2);
    IncMatrix m = incidence_matrix_ag(S, 1);
    IncidenceStructure ag;
    ag.kind = "ag23";
    ag.point_types.assign(m.cols, "point");
    for (const auto& row : m.rows) {
        std::vector<std::uint32_t> pts;
        for (std::uint32_t j = 0; j < row.size(); ++j)
            if (row[j]) pts.push_back(j);
        ag.lines.push_back(std::move(pts));
        ag.line_types.push_back("line");
    }
    PgVerdict va = verify_partial_geometry(ag);
    CHECK(va.ok);
    CHECK(va.params.s == 2);
    CHECK(va.params.t == 3);
    CHECK(va.params.alpha == 3);
}

TEST_CASE("incidence matrix row and column sums") {
    IncidenceStructure w3 = build_classical(GqKind::W3, F2);
    BlockMatrix m = incidence_matrix(w3, MatrixOrdering::canonical);
    CHECK(m.num_rows() == 15);
    CHECK(m.num_cols() == 15);
    for (const auto& row : m.rows) {
        std::size_t w = 0;
        for (auto x : row) w += x;
        CHECK(w == 3); // s + 1
    }
    for (std::size_t c = 0; c < m.num_cols(); ++c) {
        std::size_t w = 0;
        for (const auto& row : m.rows) w += row[c];
        CHECK(w == 3); // t + 1
    }
}

TEST_CASE("block-ordered incidence matrix of a translation GQ") {
    IncidenceStructure te = build_te(conic_egg(F2));
    BlockMatrix m = incidence_matrix(te, MatrixOrdering::te_block);
    CHECK(m.has_blocks);
    CHECK(m.rows_a == 12);
    CHECK(m.cols_i == 8);
    CHECK(m.cols_ii == 6);
    CHECK_FALSE(check_te_blocks(m, 2).has_value());

    // tampering breaks the block shape
    BlockMatrix broken = m;
    broken.rows[0][m.cols_i] ^= 1;
    CHECK(check_te_blocks(broken, 2).has_value());

    // non-translation structures have no block ordering
    IncidenceStructure w3 = build_classical(GqKind::W3, F2);
    CHECK_THROWS_AS(incidence_matrix(w3, MatrixOrdering::te_block),
                    std::invalid_argument);
}

TEST_CASE("block structure of the (4,4) instance") {
    IncidenceStructure te = build_te(conic_egg(F2, 2));
    BlockMatrix m = incidence_matrix(te, MatrixOrdering::te_block);
    CHECK(m.rows_a == 80);
    CHECK(m.cols_i == 64);
    CHECK(m.cols_ii == 20);
    CHECK_FALSE(check_te_blocks(m, 4).has_value());
}
