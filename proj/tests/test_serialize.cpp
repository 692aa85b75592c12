#include "polydual/serialize.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace polydual;
using namespace testsupport;

TEST_CASE("rational JSON round trip") {
    for (Rat r : {Rat(0), Rat(5), Rat(-4, 3), Rat(1, 3), Rat(-3, 2)}) {
        CHECK(rat_from_json(to_json(r)) == r);
    }
    CHECK(to_json(Rat(7)).is_number_integer());
    CHECK(to_json(Rat(-4, 3)).get<std::string>() == "-4/3");
}

TEST_CASE("polytope JSON round trip") {
    for (const auto& p : {make_cube(), fixture_weight_polytope(CaseName::Q16),
                          fixture_newton_polytope(CaseName::S16)}) {
        Json j = to_json(p);
        CHECK(j.contains("facets"));  // mandatory on output
        Json reparsed = Json::parse(j.dump(2));
        CHECK(lattice_polytope_from_json(reparsed) == p);

        // facets are optional on input and recomputed
        Json vertices_only;
        vertices_only["vertices"] = j["vertices"];
        CHECK(lattice_polytope_from_json(vertices_only) == p);
    }
    CHECK_THROWS_AS(lattice_polytope_from_json(Json{{"points", 3}}), std::invalid_argument);
}

TEST_CASE("rational polytope JSON keeps exact fractions") {
    Json j = to_json(polar_dual(fixture_newton_polytope(CaseName::Q16)));
    bool found = false;
    for (const auto& v : j["vertices"])
        if (v[0].is_string() && v[0].get<std::string>() == "-4/3") found = true;
    CHECK(found);
}

TEST_CASE("report JSON is stable and complete") {
    DualityReport report = verify_polytope_duality(CaseName::Q16);
    Json j = to_json(report);
    CHECK(j["case"] == "Q16");
    CHECK(j["verdict"] == "no duality");
    CHECK(j["dual_edge_counts"]["total"] == 7);
    CHECK(j["dual_edge_counts"]["interior"] == 5);
    CHECK(j["dual_edge_counts"]["stated"] == 5);
    CHECK(j["dual_edge_counts"]["stated_matches_convention"] == "interior");
    CHECK(j["targets"].size() == 2);
    for (const auto& t : j["targets"]) CHECK(t["verdict"] == "no duality");
    CHECK(j["intermediates"].size() == 5);
    for (const auto& inter : j["intermediates"])
        for (const auto& e : inter["embeddings"]) CHECK(e["result"] == "exhausted: none");

    // deterministic serialization
    CHECK(j.dump(2) == to_json(verify_polytope_duality(CaseName::Q16)).dump(2));
}
