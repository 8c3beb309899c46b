#include "afinv/errors.hpp"
#include "afinv/io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace afinv;
using afinv::io::Json;
using afinv::testing::by_label;
using afinv::testing::z4_diagram;

TEST_CASE("group and subgroup documents") {
    const auto g = io::group_from_json(Json::parse(R"({"cyclic_factors":[4]})"));
    CHECK(g == make_group({4}));
    CHECK(io::group_from_json(io::to_json(make_group({2, 6}))) == make_group({2, 6}));
    CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"factors":[4]})")), InvalidInput);
    CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"cyclic_factors":[0]})")), InvalidInput);

    const auto h = io::subgroup_from_json(g, Json::parse(R"({"generators":[[2]]})"));
    CHECK(h.elements() == std::vector<Elem>{0, 2});
    for (const auto& grp : testing::small_groups(12)) {
        for (const auto& s : subgroups(grp)) {
            CHECK(io::subgroup_from_json(grp, io::to_json(s)) == s);
        }
    }
}

TEST_CASE("character documents") {
    const auto g = make_group({4});
    const auto h = whole_group(g);
    const auto chi = io::character_from_json(h, Json::parse(R"({"theta":{"[1]":"1/4"}})"));
    CHECK(chi.theta(1) == Rational(1, 4));
    CHECK(io::character_from_json(h, Json::parse(R"({"[1]":"3/4"})")).theta(2) == Rational(1, 2));
    CHECK_THROWS_AS(io::character_from_json(h, Json::parse(R"({"[2]":"1/2"})")), InvalidInput);
    CHECK_THROWS_AS(io::character_from_json(h, Json::parse(R"({"[1]":"1/3"})")), InvalidInput);
    for (const auto& c : dual_characters(h)) {
        CHECK(io::character_from_json(h, io::to_json(c)) == c);
    }
}

TEST_CASE("bimodule documents") {
    const auto g = make_group({4});
    const auto t = fusion_table(g);
    const auto s = io::bimodule_from_json(
        g, Json::parse(R"({"source_generators":[[2]],"target_generators":[[2]],"coset_rep":[1],"character":{"[2]":"1/2"}})"));
    CHECK(t->label(t->index_of(s)) == "M_{2-2,1}^sign");
    CHECK(io::bimodule_index_from_json(*t, Json::parse(R"({"label":"M_{3-3}^chi2"})")) ==
          by_label(*t, "M_{3-3}^chi2"));
    CHECK_THROWS_AS(io::bimodule_index_from_json(*t, Json::parse(R"({"label":"M_{9-9}"})")), InvalidInput);
    for (const auto& grp : testing::small_groups(8)) {
        const auto table = fusion_table(grp);
        for (const auto& b : table->simples()) {
            CHECK(io::bimodule_from_json(grp, io::to_json(b)) == b);
        }
    }
}

TEST_CASE("fusion table export") {
    const auto t = fusion_table(make_group({4}));
    const auto j = io::to_json(*t);
    CHECK(j["simples"].size() == 22);
    const auto key = std::to_string(by_label(*t, "M_{1-3}")) + "," + std::to_string(by_label(*t, "M_{3-1}"));
    CHECK(j["products"][key].size() == 4);
    CHECK(j["products"].size() == t->product_count());
}

TEST_CASE("matrix and K0 documents") {
    const auto sys = io::system_from_json(Json::parse(R"({"rows":[[2,2],[2,2]],"labels":["a","b"]})"));
    CHECK(sys.matrix == IntMatrix{{2, 2}, {2, 2}});
    CHECK(sys.labels == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[[1,2],[3]]")), InvalidInput);
    CHECK_THROWS_AS(io::system_from_json(Json::parse("[[1,2]]")), InvalidInput);

    const auto big = io::matrix_from_json(Json::parse(R"([["123456789012345678901234567890"]])"));
    CHECK(io::matrix_from_json(io::to_json(big)) == big);

    for (const auto& m : {IntMatrix{{2, 2}, {2, 2}}, IntMatrix{{4, 0}, {0, 4}}, IntMatrix{{1, 1}, {1, 0}}}) {
        const auto d = stationary_k0(StationarySystem{m, {}});
        const auto j = io::to_json(d);
        CHECK(j["variant"] == d.variant_name());
        const auto back = io::k0_from_json(j);
        CHECK(back.matrix == d.matrix);
        CHECK(back.variant_name() == d.variant_name());
    }
    const auto rank_one = io::to_json(stationary_k0(StationarySystem{IntMatrix{{2, 2}, {2, 2}}, {}}));
    CHECK(rank_one["lambda"] == 4);
    CHECK(rank_one["primes"] == Json::parse("[2]"));
    CHECK(rank_one["scale"] == "1");
}

TEST_CASE("diagram documents") {
    const auto t = fusion_table(make_group({4}));
    for (char name : {'F', 'G', 'H', 'E'}) {
        const auto d = z4_diagram(name);
        const auto back = io::diagram_from_json(io::to_json(d, *t));
        CHECK(back.levels == d.levels);
        CHECK(back.edges.size() == d.edges.size());
        for (std::size_t n = 0; n < d.edges.size(); ++n) {
            REQUIRE(back.edges[n].size() == d.edges[n].size());
            for (std::size_t i = 0; i < d.edges[n].size(); ++i) {
                CHECK(back.edges[n][i].bimodule == d.edges[n][i].bimodule);
                CHECK(back.edges[n][i].multiplicity == d.edges[n][i].multiplicity);
            }
        }
    }
    const auto shorthand = io::diagram_from_json(Json::parse(R"({
        "group": {"cyclic_factors": [4]},
        "vertex": {"generators": [[2]]},
        "edge": [{"bimodule": {"source_generators": [[2]], "target_generators": [[2]], "coset_rep": [0],
                               "character": {"[2]": "0"}}, "multiplicity": 2}],
        "generator_weights": [1, 1]})"));
    CHECK(shorthand.levels == std::vector<std::vector<std::size_t>>{{1}, {1}});
    CHECK(shorthand.edges[0][0].multiplicity == 2);
    CHECK_THROWS_AS(io::diagram_from_json(Json::parse(R"({
        "group": {"cyclic_factors": [4]},
        "vertex": {"generators": [[2]]},
        "edge": [{"bimodule": {"label": "M_{1-1,0}"}}]})")),
                    InvalidInput);
}

TEST_CASE("invariant and verdict documents round-trip") {
    for (char name : {'F', 'G', 'H', 'E'}) {
        const auto inv = compute_invariant(z4_diagram(name));
        const auto j = io::to_json(inv);
        const auto back = io::invariant_from_json(j);
        CHECK(back == inv);
        CHECK(io::to_json(back).dump() == j.dump());
    }
    const auto f = compute_invariant(z4_diagram('F'));
    const auto g = compute_invariant(z4_diagram('G'));
    const auto e = compute_invariant(z4_diagram('E'));
    for (const auto& v : {compare(f, g), compare(e, f)}) {
        const auto j = io::to_json(v, f);
        const auto back = io::verdict_from_json(j, f);
        CHECK(back.kind == v.kind);
        CHECK(back.witness == v.witness);
        CHECK(io::to_json(back, f).dump() == j.dump());
    }
    CHECK(io::to_json(compare(f, g), f).dump() ==
          R"({"verdict":"equivalent","witness":{"Q1":"1","Q2":"1/2","Q3":"1/2"}})");
}

TEST_CASE("fractions") {
    CHECK(io::rational_from_json(Json("3/6")) == Rational(1, 2));
    CHECK(io::rational_from_json(Json(4)) == 4);
    CHECK(io::rational_json(Rational(-2, 4)) == "-1/2");
    CHECK_THROWS_AS(io::rational_from_json(Json(0.5)), InvalidInput);
}
