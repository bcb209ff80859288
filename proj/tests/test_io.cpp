#include "gqlrc/io.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cstdio>

using namespace gqlrc;

namespace {
const Field F2 = Field::create(2, 1);
const Field F4 = Field::create(2, 2);
} // namespace

TEST_CASE("egg JSON round trip") {
    for (Egg egg : {conic_egg(F2), ovoid_egg(F2), conic_egg(F2, 2), conic_egg(F4)}) {
        json j = egg_to_json(egg);
        Egg back = egg_from_json(j);
        CHECK(back.field == egg.field);
        CHECK(back.n == egg.n);
        CHECK(back.m == egg.m);
        CHECK(back.elements == egg.elements);
        CHECK(back.tangents == egg.tangents);
        CHECK(verify_egg(back).pass);
    }
}

TEST_CASE("egg file save and load") {
    std::string path = "test_egg_roundtrip.json";
    Egg egg = conic_egg(F2);
    save_egg(egg, path);
    EggReport rep;
    Egg back = load_egg(path, &rep);
    CHECK(rep.pass);
    CHECK(back.elements == egg.elements);
    std::remove(path.c_str());
}

TEST_CASE("loading a broken egg file reports the failure") {
    std::string path = "test_egg_broken.json";
    Egg egg = conic_egg(F2);
    egg.elements.pop_back();
    egg.tangents.pop_back();
    write_text_file(path, egg_to_json(egg).dump());
    EggReport rep;
    Egg back = load_egg(path, &rep);
    CHECK_FALSE(rep.pass);
    CHECK(back.elements.size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("hand-written egg file matches the constructed egg") {
    // the conic egg of PG(2,2) typed in by hand: elements are the conic
    // points, tangents the lines through the nucleus (0,1,0)
    json j = json::parse(R"({
        "p": 2, "h": 1, "n": 1, "m": 1,
        "elements": [
            [[[0],[0],[1]]],
            [[[1],[0],[0]]],
            [[[1],[1],[1]]]
        ],
        "tangents": [
            [[[0],[0],[1]], [[0],[1],[0]]],
            [[[1],[0],[0]], [[0],[1],[0]]],
            [[[1],[1],[1]], [[0],[1],[0]]]
        ]
    })");
    Egg hand = egg_from_json(j);
    CHECK(verify_egg(hand).pass);
    Egg built = conic_egg(F2);
    auto as_set = [](std::vector<Subspace> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(as_set(hand.elements) == as_set(built.elements));
    CHECK(as_set(hand.tangents) == as_set(built.tangents));
}

TEST_CASE("structure JSON round trip") {
    IncidenceStructure is = build_te(conic_egg(F2));
    json j = structure_to_json(is);
    IncidenceStructure back = structure_from_json(j);
    CHECK(back.kind == is.kind);
    CHECK(back.point_types == is.point_types);
    CHECK(back.line_types == is.line_types);
    CHECK(back.lines == is.lines);
    REQUIRE(back.params.has_value());
    CHECK(*back.params == *is.params);
    // byte-determinism of the export
    CHECK(structure_to_json(build_te(conic_egg(F2))).dump() == j.dump());
}

TEST_CASE("minimum-weight report JSON") {
    LinearCode fano =
        code_from_matrix(incidence_matrix_pg(ProjectiveSpace(F2, 2), 1).rows, 2);
    MinWeightReport rep = min_weight_sweep(fano, 3);
    json j = report_to_json(rep);
    CHECK(j["status"] == "found");
    CHECK(j["d"] == 3);
    CHECK(j["complete"] == true);
    CHECK(j["words"].size() == 7);
    CHECK(j["words"][0].size() == 2); // [support, values]
}

TEST_CASE("repair profile JSON") {
    RepairProfile prof = lrc_profile(build_te(conic_egg(F2)), 2);
    json j = profile_to_json(prof);
    CHECK(j["gq"]["p"] == 2);
    CHECK(j["gq"]["s"] == 2);
    CHECK(j["r"] == 2);
    CHECK(j["a"] == 3);
    CHECK(j["tight_r"] == true);
    CHECK(j["per_symbol"].size() == 15);
}

TEST_CASE("alist exact format") {
    std::vector<std::vector<std::uint8_t>> m = {{1, 1, 0}, {0, 1, 1}};
    std::string a = to_alist(m);
    CHECK(a ==
          "3 2\n"
          "2 2\n"
          "1 2 1\n"
          "2 2\n"
          "1\n"
          "1 2\n"
          "2\n"
          "1 2\n"
          "2 3\n");
    CHECK(from_alist(a) == m);
}

TEST_CASE("alist round trips byte-identically") {
    IncidenceStructure is = build_classical(GqKind::W3, F2);
    BlockMatrix m = incidence_matrix(is, MatrixOrdering::canonical);
    std::string a = to_alist(m.rows);
    auto parsed = from_alist(a);
    CHECK(parsed == m.rows);
    CHECK(to_alist(parsed) == a);
}

TEST_CASE("alist rejects malformed input") {
    CHECK_THROWS_AS(from_alist("3"), std::invalid_argument);
    CHECK_THROWS_AS(from_alist("3 2\n2 2\n1 2 1\n2 2\n9\n"), std::invalid_argument);
    // row/column list disagreement
    CHECK_THROWS_AS(
        from_alist("3 2\n2 2\n1 2 1\n2 2\n1\n1 2\n2\n1 3\n2 3\n"),
        std::invalid_argument);
}

TEST_CASE("csv round trip") {
    std::vector<std::vector<std::uint8_t>> m = {{0, 1, 2}, {2, 2, 0}};
    CHECK(to_csv(m) == "0,1,2\n2,2,0\n");
    CHECK(from_csv(to_csv(m)) == m);
}

TEST_CASE("code JSON export") {
    LinearCode c = code_from_matrix({{1, 1, 0}, {0, 1, 1}}, 2);
    json j = code_to_json(c, c.gen_rows);
    CHECK(j["p"] == 2);
    CHECK(j["length"] == 3);
    CHECK(j["k"] == 2);
    CHECK(j["rows"].size() == 2);
}
