// Shared fixtures, generators, and independent oracles for the test suites.
// Oracles here deliberately avoid the production code paths they check:
// point membership goes through hull extension rather than facet inequalities,
// and segment counts come from a bounding-box scan rather than gcd arithmetic.
#pragma once

#include "polydual/search.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace testsupport {

using namespace polydual;

inline LatticePolytope make_cube() {
    std::vector<Vec3> pts;
    for (Int x : {-1, 1})
        for (Int y : {-1, 1})
            for (Int z : {-1, 1}) pts.push_back({x, y, z});
    return hull(pts);
}

inline LatticePolytope make_octahedron() {
    return hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

inline LatticePolytope unit_simplex() {
    return hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

inline LatticePolytope fixture_weight_polytope(CaseName c) {
    const CaseFixture& fix = fixture(c);
    return weight_polytope(fix.weights, fix.basis);
}

inline LatticePolytope fixture_newton_polytope(CaseName c) {
    const CaseFixture& fix = fixture(c);
    return newton_polytope(parse_polynomial(fix.projective_text), fix.weights, fix.basis);
}

// ---- independent oracles -------------------------------------------------

// Membership via hull extension: q lies in P iff adding q leaves the vertex
// set unchanged. Independent of P's facet data.
inline bool hull_membership_oracle(const LatticePolytope& p, const Vec3& q) {
    std::vector<Vec3> pts = p.vertices();
    pts.push_back(q);
    return hull(pts).vertices() == p.vertices();
}

// Lattice points of P by bounding-box scan + hull-extension membership.
inline std::vector<Vec3> lattice_points_oracle(const LatticePolytope& p) {
    Vec3 lo = p.vertices().front(), hi = lo;
    for (const auto& v : p.vertices())
        for (int i = 0; i < 3; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::vector<Vec3> out;
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y)
            for (Int z = lo[2]; z <= hi[2]; ++z)
                if (hull_membership_oracle(p, {x, y, z})) out.push_back({x, y, z});
    return out;
}

// Lattice points on the closed segment [u, v] by direct enumeration:
// collinearity via a vanishing cross product plus betweenness via dot signs.
inline std::pair<Int, Int> segment_counts_oracle(const Vec3& u, const Vec3& v) {
    Vec3 lo = u, hi = u;
    for (int i = 0; i < 3; ++i) {
        lo[i] = std::min(u[i], v[i]);
        hi[i] = std::max(u[i], v[i]);
    }
    Int total = 0, interior = 0;
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y)
            for (Int z = lo[2]; z <= hi[2]; ++z) {
                Vec3 q{x, y, z};
                if (!is_zero3(cross3(sub3(q, u), sub3(v, u)))) continue;
                ++total;
                if (q != u && q != v) ++interior;
            }
    return {total, interior};
}

// All-subsets brute-force sandwich enumeration (the completeness oracle for
// the production closure BFS; same contract, independent search strategy).
inline std::vector<LatticePolytope> enumerate_oracle(const LatticePolytope& lower,
                                                     const LatticePolytope& upper) {
    std::vector<Vec3> lower_pts = lattice_points(lower);
    std::vector<Vec3> upper_pts = lattice_points(upper);
    std::vector<Vec3> outside;
    std::set_difference(upper_pts.begin(), upper_pts.end(), lower_pts.begin(), lower_pts.end(),
                        std::back_inserter(outside));
    if (outside.size() > 20) throw std::runtime_error("oracle subset space too large");
    std::map<std::vector<Vec3>, LatticePolytope> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << outside.size()); ++mask) {
        std::vector<Vec3> pts = lower_pts;
        for (std::size_t b = 0; b < outside.size(); ++b)
            if (mask & (std::size_t{1} << b)) pts.push_back(outside[b]);
        LatticePolytope poly = hull(std::move(pts));
        std::vector<Vec3> key = lattice_points(poly);
        if (found.count(key)) continue;
        if (is_reflexive(poly).reflexive()) found.emplace(std::move(key), std::move(poly));
    }
    std::vector<LatticePolytope> out;
    for (auto& [key, poly] : found) out.push_back(poly);
    return out;
}

// ---- structural invariants ------------------------------------------------

// Full combinatorial validation of a produced polytope; returns a diagnostic
// message on the first violation, nullopt when everything holds.
inline std::optional<std::string> polytope_invariant_violation(const LatticePolytope& p) {
    if (p.vertices().size() < 4) return "fewer than 4 vertices";
    if (!std::is_sorted(p.vertices().begin(), p.vertices().end())) return "vertices not sorted";
    if (std::adjacent_find(p.vertices().begin(), p.vertices().end()) != p.vertices().end())
        return "duplicate vertices";
    if (p.facets().size() < 4) return "fewer than 4 facets";
    for (const auto& f : p.facets()) {
        if (is_zero3(f.normal)) return "zero facet normal";
        if (content3(f.normal) != 1) return "non-primitive facet normal";
        int incident = 0;
        for (const auto& v : p.vertices()) {
            Int s = dot3(f.normal, v);
            if (s < -f.offset) return "vertex violates facet " + str(f.normal);
            if (s == -f.offset) ++incident;
        }
        if (incident < 3) return "facet supported by fewer than 3 vertices";
    }
    for (const auto& v : p.vertices()) {
        std::vector<Vec3> active;
        for (const auto& f : p.facets())
            if (dot3(f.normal, v) == -f.offset) active.push_back(f.normal);
        if (rank3(active) != 3) return "vertex " + str(v) + " has active-normal rank < 3";
    }
    std::size_t v = p.vertices().size(), e = edges(p).size(), f = p.facets().size();
    if (v + f != e + 2)
        return "Euler relation fails: V=" + std::to_string(v) + " E=" + std::to_string(e) +
               " F=" + std::to_string(f);
    return std::nullopt;
}

// Dual polytope consistency: every dual vertex satisfies every dual facet,
// and each is supported by at least three of the other kind.
inline std::optional<std::string> dual_invariant_violation(const RationalPolytope& d) {
    for (const auto& f : d.facets())
        for (const auto& v : d.vertices())
            if (dot3q(f.normal, v) < -f.offset) return "dual vertex " + str(v) + " violates a dual facet";
    for (const auto& f : d.facets()) {
        int incident = 0;
        for (const auto& v : d.vertices())
            if (dot3q(f.normal, v) == -f.offset) ++incident;
        if (incident < 3) return "dual facet supported by fewer than 3 dual vertices";
    }
    return std::nullopt;
}

// ---- randomized generators -------------------------------------------------

inline Int rand_int(std::mt19937& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline Mat3 random_unimodular(std::mt19937& rng) {
    Mat3 u{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    for (int step = 0; step < 8; ++step) {
        int i = static_cast<int>(rand_int(rng, 0, 2));
        int j = static_cast<int>(rand_int(rng, 0, 2));
        if (i == j) {
            std::swap(u[i], u[(j + 1) % 3]);  // row swap: det sign flips, still +-1
            continue;
        }
        Int c = rand_int(rng, -2, 2);
        for (int k = 0; k < 3; ++k) u[i][k] = checked_add(u[i][k], checked_mul(c, u[j][k]));
    }
    return u;
}

inline LatticePolytope apply_map(const LatticePolytope& p, const Mat3& u, const Vec3& t = {0, 0, 0}) {
    std::vector<Vec3> pts;
    for (const auto& v : p.vertices()) pts.push_back(add3(mat_vec(u, v), t));
    return hull(pts);
}

// Random full-dimensional lattice polytope with the origin strictly interior.
inline LatticePolytope random_polytope(std::mt19937& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Vec3> pts;
        int n = static_cast<int>(rand_int(rng, 4, 8));
        for (int i = 0; i < n; ++i)
            pts.push_back({rand_int(rng, -3, 3), rand_int(rng, -3, 3), rand_int(rng, -3, 3)});
        try {
            LatticePolytope p = hull(pts);
            if (std::all_of(p.facets().begin(), p.facets().end(),
                            [](const LatticeFacet& f) { return f.offset > 0; }))
                return p;
        } catch (const DegenerateInputError&) {
        }
    }
    // The rejection loop essentially never exhausts; fall back deterministically.
    return make_octahedron();
}

inline WeightSystem random_weight_system(std::mt19937& rng) {
    for (;;) {
        std::array<Int, 4> w{rand_int(rng, 1, 12), rand_int(rng, 1, 12), rand_int(rng, 1, 12),
                             rand_int(rng, 1, 12)};
        std::sort(w.begin(), w.end());
        try {
            return WeightSystem::create(w[0], w[1], w[2], w[3]);
        } catch (const std::invalid_argument&) {
        }
    }
}

inline std::string to_text(const std::vector<Vec3>& pts) {
    std::string out;
    for (const auto& p : pts) out += str(p) + " ";
    return out;
}

}  // namespace testsupport
