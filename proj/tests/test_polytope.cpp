#include "support.hpp"

#include <doctest.h>

using namespace polydual;
using namespace testsupport;

TEST_CASE("hull of the unit simplex") {
    LatticePolytope p = unit_simplex();
    CHECK(p.vertices() == std::vector<Vec3>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(p.facets().size() == 4);
    CHECK_FALSE(polytope_invariant_violation(p));
}

TEST_CASE("hull reproduces the reference vertex lists") {
    // the six degree-21 monomial images spanning the weight polytope
    LatticePolytope q = hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {-1, 2, -1}, {4, -3, -3}});
    CHECK(q.vertices() ==
          std::vector<Vec3>{{-1, 2, -1}, {0, -1, 1}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {4, -3, -3}});

    // the eight S16 vertices plus midpoints and duplicates collapse back
    std::vector<Vec3> pts = fixture(CaseName::S16).weight_vertices;
    std::vector<Vec3> expected = pts;
    std::sort(expected.begin(), expected.end());
    pts.push_back({2, -1, -1});  // midpoint of (1,0,0)-(3,-2,-2)
    pts.push_back({0, 0, 0});
    pts.push_back(pts.front());
    CHECK(hull(pts).vertices() == expected);
}

TEST_CASE("hull rejects degenerate input") {
    CHECK_THROWS_AS(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), DegenerateInputError);
    CHECK_THROWS_AS(hull({{0, 0, 0}, {1, 2, 3}}), DegenerateInputError);
}

TEST_CASE("polar dual of the cube is the octahedron") {
    RationalPolytope dual = polar_dual(make_cube());
    LatticePolytope octa = make_octahedron();
    std::vector<Vec3Q> expect;
    for (const auto& v : octa.vertices()) expect.push_back(to_rat3(v));
    CHECK(dual.vertices() == expect);
    CHECK(dual.all_vertices_integral());
    CHECK_FALSE(dual_invariant_violation(dual));
}

TEST_CASE("polar dual needs the origin strictly inside") {
    CHECK_THROWS_AS(polar_dual(unit_simplex()), OriginNotInteriorError);
}

TEST_CASE("Newton polytope duals expose the rational vertices") {
    RationalPolytope dq = polar_dual(fixture_newton_polytope(CaseName::Q16));
    Vec3Q witness_q{Rat(-4, 3), Rat(-1), Rat(1, 3)};
    CHECK(std::count(dq.vertices().begin(), dq.vertices().end(), witness_q) == 1);
    CHECK_FALSE(dq.all_vertices_integral());

    RationalPolytope ds = polar_dual(fixture_newton_polytope(CaseName::S16));
    Vec3Q witness_s{Rat(-3, 2), Rat(0), Rat(-1)};
    CHECK(std::count(ds.vertices().begin(), ds.vertices().end(), witness_s) == 1);
}

TEST_CASE("dual of the dual returns the original") {
    for (const auto& p : {make_cube(), fixture_weight_polytope(CaseName::Q16),
                          fixture_newton_polytope(CaseName::S16)}) {
        RationalPolytope back = polar_dual(polar_dual(p));
        std::vector<Vec3Q> expect;
        for (const auto& v : p.vertices()) expect.push_back(to_rat3(v));
        CHECK(back.vertices() == expect);
    }
}

TEST_CASE("dual faces of the obstructing edges") {
    const CaseFixture& q16 = fixture(CaseName::Q16);
    LatticePolytope df = fixture_newton_polytope(CaseName::Q16);
    Face gamma = face_of(df, {q16.gamma[0], q16.gamma[1]});
    CHECK(gamma.dimension == 1);
    Face star = dual_face(df, gamma);
    CHECK(star.dimension == 1);
    CHECK(star.vertices == std::vector<Vec3Q>{to_rat3({2, 0, -1}), to_rat3({8, 6, 5})});

    const CaseFixture& s16 = fixture(CaseName::S16);
    LatticePolytope df2 = fixture_newton_polytope(CaseName::S16);
    Face star2 = dual_face(df2, face_of(df2, {s16.gamma[0], s16.gamma[1]}));
    CHECK(star2.vertices == std::vector<Vec3Q>{to_rat3({1, 0, -1}), to_rat3({6, 5, 4})});
}

TEST_CASE("cube facet dualizes to the opposite octahedron vertex") {
    LatticePolytope cube = make_cube();
    Face top = face_of(cube, {{-1, -1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, 1}});
    CHECK(top.dimension == 2);
    Face dual = dual_face(cube, top);
    CHECK(dual.dimension == 0);
    CHECK(dual.vertices == std::vector<Vec3Q>{to_rat3({0, 0, -1})});
}

TEST_CASE("non-faces are rejected") {
    LatticePolytope cube = make_cube();
    // facet diagonal: both points on one facet, but they span no face
    CHECK_THROWS_AS(face_of(cube, {{-1, -1, 1}, {1, 1, 1}}), NotAFaceError);
    // opposite corners share no facet
    CHECK_THROWS_AS(face_of(cube, {{-1, -1, -1}, {1, 1, 1}}), NotAFaceError);
    // not a vertex at all
    CHECK_THROWS_AS(face_of(cube, {{0, 0, 1}}), NotAFaceError);
}

TEST_CASE("reflexivity verdicts") {
    CHECK(is_reflexive(make_cube()).reflexive());
    CHECK(is_reflexive(fixture_weight_polytope(CaseName::Q16)).reflexive());
    CHECK(is_reflexive(fixture_weight_polytope(CaseName::S16)).reflexive());

    ReflexivityVerdict nq = is_reflexive(fixture_newton_polytope(CaseName::Q16));
    CHECK(nq.outcome == ReflexivityOutcome::rational_dual_vertex);
    CHECK(nq.witness == Vec3Q{Rat(-4, 3), Rat(-1), Rat(1, 3)});

    ReflexivityVerdict ns = is_reflexive(fixture_newton_polytope(CaseName::S16));
    CHECK(ns.outcome == ReflexivityOutcome::rational_dual_vertex);
    CHECK(ns.witness == Vec3Q{Rat(-3, 2), Rat(0), Rat(-1)});

    // origin on the boundary: failure witnessed by the origin itself
    ReflexivityVerdict simplex = is_reflexive(unit_simplex());
    CHECK(simplex.outcome == ReflexivityOutcome::interior_point_failure);
    CHECK(simplex.witness == to_rat3({0, 0, 0}));

    // doubled cube: plenty of non-origin interior points
    LatticePolytope big = apply_map(make_cube(), {Vec3{2, 0, 0}, Vec3{0, 2, 0}, Vec3{0, 0, 2}});
    ReflexivityVerdict bigv = is_reflexive(big);
    CHECK(bigv.outcome == ReflexivityOutcome::interior_point_failure);
    CHECK(bigv.witness != to_rat3({0, 0, 0}));
}

TEST_CASE("lattice point enumeration") {
    CHECK(lattice_points(unit_simplex()) ==
          std::vector<Vec3>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(interior_lattice_points(unit_simplex()).empty());

    LatticePolytope cube = make_cube();
    CHECK(lattice_points(cube).size() == 27);
    CHECK(interior_lattice_points(cube) == std::vector<Vec3>{{0, 0, 0}});

    const CaseFixture& q16 = fixture(CaseName::Q16);
    LatticePolytope dw = fixture_weight_polytope(CaseName::Q16);
    std::vector<Vec3> pts = lattice_points(dw);
    // one lattice point per degree-d monomial: an independent count
    CHECK(pts.size() == degree_monomials(q16.weights).size());
    for (const auto& v : q16.weight_vertices)
        CHECK(std::binary_search(pts.begin(), pts.end(), v));
    CHECK(std::binary_search(pts.begin(), pts.end(), Vec3{0, 0, 0}));
    CHECK(std::binary_search(pts.begin(), pts.end(), Vec3{2, -2, -1}));
    CHECK(interior_lattice_points(dw) == std::vector<Vec3>{{0, 0, 0}});

    CHECK(lattice_points(dw) == lattice_points_oracle(dw));
}

TEST_CASE("edge enumeration with point counts") {
    std::vector<EdgeInfo> simplex_edges = edges(unit_simplex());
    CHECK(simplex_edges.size() == 6);
    for (const auto& e : simplex_edges) {
        CHECK(e.total_points == 2);
        CHECK(e.interior_points == 0);
    }

    std::vector<EdgeInfo> cube_edges = edges(make_cube());
    CHECK(cube_edges.size() == 12);
    for (const auto& e : cube_edges) CHECK(e.total_points == 3);

    LatticePolytope dw = fixture_weight_polytope(CaseName::Q16);
    bool found = false;
    for (const auto& e : edges(dw))
        if (e.a == Vec3{1, 0, 0} && e.b == Vec3{4, -3, -3}) {
            found = true;
            CHECK(e.total_points == 4);
            CHECK(e.interior_points == 2);
            auto [total, interior] = segment_counts_oracle(e.a, e.b);
            CHECK(total == 4);
            CHECK(interior == 2);
        }
    CHECK(found);
}

TEST_CASE("polytope containment") {
    LatticePolytope dw = fixture_weight_polytope(CaseName::Q16);
    LatticePolytope df = fixture_newton_polytope(CaseName::Q16);
    CHECK(contains_polytope(dw, df));
    CHECK_FALSE(contains_polytope(df, dw));  // (1,0,0) violates a Newton facet
    CHECK_FALSE(df.contains(Vec3{1, 0, 0}));
    CHECK(contains_polytope(dw, dw));
    CHECK(contains_polytope(make_cube(), polar_dual(make_cube())));  // octahedron inside the cube
}
