#include "gqlrc/egg.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace gqlrc;

namespace {
const Field F2 = Field::create(2, 1);
const Field F3 = Field::create(3, 1);
const Field F4 = Field::create(2, 2);
} // namespace

TEST_CASE("conic egg over GF(2)") {
    Egg egg = conic_egg(F2);
    CHECK(egg.n == 1);
    CHECK(egg.m == 1);
    CHECK(egg.elements.size() == 3); // q^m + 1
    CHECK(egg.ambient_dim() == 2);
    EggReport rep = verify_egg(egg);
    CHECK(rep.pass);
    CHECK(rep.axioms.size() == 4);
}

TEST_CASE("conic egg over GF(3)") {
    Egg egg = conic_egg(F3);
    CHECK(egg.elements.size() == 4);
    CHECK(verify_egg(egg).pass);
    for (const auto& t : egg.tangents) CHECK(t.proj_dim() == 1);
}

TEST_CASE("elliptic quadric eggs") {
    Egg e2 = ovoid_egg(F2);
    CHECK(e2.n == 1);
    CHECK(e2.m == 2);
    CHECK(e2.elements.size() == 5); // q^2 + 1
    CHECK(e2.ambient_dim() == 3);
    CHECK(verify_egg(e2).pass);
    for (const auto& t : e2.tangents) CHECK(t.proj_dim() == 2);

    Egg e3 = ovoid_egg(F3);
    CHECK(e3.elements.size() == 10);
    CHECK(verify_egg(e3).pass);
}

TEST_CASE("field-reduced oval egg: PG(2,4) over GF(2)") {
    Egg egg = conic_egg(F2, 2);
    CHECK(egg.n == 2);
    CHECK(egg.m == 2);
    CHECK(egg.ambient_dim() == 5);
    CHECK(egg.elements.size() == 5);
    for (const auto& e : egg.elements) CHECK(e.proj_dim() == 1);
    for (const auto& t : egg.tangents) CHECK(t.proj_dim() == 3);
    CHECK(verify_egg(egg).pass);
}

TEST_CASE("a collinear triple is not an egg") {
    // three points of a line in PG(2,2) with the line as every tangent
    Subspace line = span_points(F2, 2, {{0, 0, 1}, {0, 1, 0}});
    Egg fake;
    fake.field = F2;
    fake.n = 1;
    fake.m = 1;
    for (const auto& pt : line.points(F2))
        fake.elements.push_back(span_points(F2, 2, {pt}));
    fake.tangents.assign(3, line);
    EggReport rep = verify_egg(fake);
    CHECK_FALSE(rep.pass);
    bool span_failed = false;
    for (const auto& ax : rep.axioms)
        if (ax.name.find("span") != std::string::npos) {
            span_failed = !ax.pass;
            CHECK(ax.witness.find("(0,1,2)") != std::string::npos);
        }
    CHECK(span_failed);
}

TEST_CASE("wrong cardinality is reported") {
    Egg egg = conic_egg(F2);
    egg.elements.pop_back();
    egg.tangents.pop_back();
    EggReport rep = verify_egg(egg);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.axioms[0].pass); // cardinality axiom
}

TEST_CASE("oval tangents") {
    // q odd: exactly one tangent per point, no common point
    auto t3 = oval_tangents(F3, conic_points(F3));
    CHECK(t3.size() == 4);

    // q even: all tangents pass through the nucleus
    auto t4 = oval_tangents(F4, conic_points(F4));
    CHECK(t4.size() == 5);
    Coords nucleus = conic_nucleus(F4);
    for (const auto& t : t4) CHECK(t.contains_point(F4, nucleus));
}

TEST_CASE("hyperoval input is rejected") {
    CHECK_THROWS_AS(egg_from_oval(F4, hyperoval_points(F4), F2),
                    std::invalid_argument);
    // every line meets a hyperoval in 0 or 2 points, so no tangents exist
    CHECK_THROWS_AS(oval_tangents(F4, hyperoval_points(F4)),
                    std::invalid_argument);
}

TEST_CASE("ovoid constructor rejects a plane section") {
    // a conic lifted into PG(3,q) has only q+1 points, not q^2+1
    std::vector<Coords> section;
    for (const auto& pt : conic_points(F3)) {
        Coords c = pt;
        c.push_back(0);
        section.push_back(c);
    }
    CHECK_THROWS_AS(egg_from_ovoid(F3, section, F3), std::invalid_argument);
}

namespace {

// depth-first enumeration of all (q+1)-arcs, each once (ascending indices)
void collect_ovals(const ProjectiveSpace& S, std::vector<Coords>& cur,
                   std::size_t next, std::size_t target,
                   std::vector<std::vector<Coords>>& out) {
    if (cur.size() == target) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = next; i < S.size(); ++i) {
        const Coords& cand = S.point(static_cast<std::uint32_t>(i));
        bool ok = true;
        for (std::size_t a = 0; a < cur.size() && ok; ++a)
            for (std::size_t b = a + 1; b < cur.size() && ok; ++b) {
                Subspace tri = span_points(S.field(), S.dim(), {cur[a], cur[b], cand});
                if (tri.rank() < 3) ok = false;
            }
        if (!ok) continue;
        cur.push_back(cand);
        collect_ovals(S, cur, i + 1, target, out);
        cur.pop_back();
    }
}

} // namespace

TEST_CASE("every oval of a small plane yields a verified egg") {
    struct PlaneCase {
        Field F;
        std::size_t expected_ovals; // 0 = derive from the hyperoval relation
    };
    // 35 - 7 collinear triples = 28 ovals in PG(2,2);
    // 13*12*9*4 / 4! = 234 in PG(2,3)
    std::vector<PlaneCase> cases = {{Field::create(2, 1), 28},
                                    {Field::create(3, 1), 234},
                                    {Field::create(2, 2), 0}};
    for (const auto& pc : cases) {
        ProjectiveSpace S(pc.F, 2);
        std::vector<std::vector<Coords>> ovals;
        std::vector<Coords> cur;
        collect_ovals(S, cur, 0, pc.F.q() + 1, ovals);
        if (pc.expected_ovals != 0) {
            CHECK(ovals.size() == pc.expected_ovals);
        } else {
            // q even: each oval closes with its nucleus into a hyperoval of
            // q+2 points, and every hyperoval carries q+2 ovals
            std::set<std::vector<Coords>> hyperovals;
            for (const auto& oval : ovals) {
                auto tangents = oval_tangents(pc.F, oval);
                Subspace nuc = intersection(pc.F, tangents[0], tangents[1]);
                REQUIRE(nuc.rank() == 1);
                auto closed = oval;
                closed.push_back(nuc.basis()[0]);
                std::sort(closed.begin(), closed.end());
                hyperovals.insert(closed);
            }
            CHECK(ovals.size() == hyperovals.size() * (pc.F.q() + 2));
        }
        for (const auto& oval : ovals) {
            Egg egg = egg_from_oval(pc.F, oval, pc.F); // throws unless verified
            CHECK(egg.elements.size() == pc.F.q() + 1);
        }
    }
}

TEST_CASE("tangency mirrors field reduction") {
    // reduced tangent contains the reduced point, and reduced non-tangency
    // stays disjoint (checked by verify_egg, here spot-checked directly)
    Egg egg = conic_egg(F2, 2);
    for (std::size_t i = 0; i < egg.elements.size(); ++i) {
        CHECK(egg.tangents[i].contains(F2, egg.elements[i]));
        for (std::size_t j = 0; j < egg.elements.size(); ++j) {
            if (i == j) continue;
            CHECK(intersection(F2, egg.tangents[i], egg.elements[j]).rank() == 0);
        }
    }
}
