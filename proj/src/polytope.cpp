#include "polydual/polytope.hpp"

#include <algorithm>
#include <set>

namespace polydual {

namespace {

bool facet_satisfied(const Vec3& normal, Int offset, const Vec3& p, bool strict) {
    Int v = dot3(normal, p);
    return strict ? v > checked_neg(offset) : v >= checked_neg(offset);
}

bool on_facet(const LatticeFacet& f, const Vec3& p) { return dot3(f.normal, p) == checked_neg(f.offset); }

int affine_rank(const std::vector<Vec3>& pts) {
    if (pts.empty()) return -1;
    std::vector<Vec3> diffs;
    diffs.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub3(pts[i], pts[0]));
    return rank3(diffs);
}

// Primitive normal direction of a rational vector plus the positive scale g
// with v = g * normal. Used to turn dual vertices into facet data.
std::pair<Vec3, Rat> primitive_direction(const Vec3Q& v) {
    Int l = lcm_int(lcm_int(v[0].den(), v[1].den()), v[2].den());
    Vec3 scaled{checked_mul(v[0].num(), div_exact(l, v[0].den())),
                checked_mul(v[1].num(), div_exact(l, v[1].den())),
                checked_mul(v[2].num(), div_exact(l, v[2].den()))};
    Int g = content3(scaled);
    if (g == 0) throw InternalInconsistencyError("primitive direction of the zero vector");
    return {primitive3(scaled), Rat(g, l)};
}

}  // namespace

bool LatticePolytope::contains(const Vec3& p) const {
    for (const auto& f : facets_)
        if (!facet_satisfied(f.normal, f.offset, p, false)) return false;
    return true;
}

bool LatticePolytope::contains(const Vec3Q& p) const {
    for (const auto& f : facets_)
        if (dot3q(f.normal, p) < Rat(checked_neg(f.offset))) return false;
    return true;
}

bool LatticePolytope::strictly_contains(const Vec3& p) const {
    for (const auto& f : facets_)
        if (!facet_satisfied(f.normal, f.offset, p, true)) return false;
    return true;
}

bool RationalPolytope::contains(const Vec3Q& p) const {
    for (const auto& f : facets_)
        if (dot3q(f.normal, p) < -f.offset) return false;
    return true;
}

bool RationalPolytope::all_vertices_integral() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const Vec3Q& v) { return is_integral3(v); });
}

LatticePolytope hull(std::vector<Vec3> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (affine_rank(points) < 3)
        throw DegenerateInputError("hull input does not affinely span 3-space");

    // Every supporting plane through three input points is a facet candidate;
    // sizes here are tiny, so the cubic scan is the simplest exact route.
    std::set<std::pair<Vec3, Int>> facet_set;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec3 a = sub3(points[j], points[i]);
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec3 nv = cross3(a, sub3(points[k], points[i]));
                if (is_zero3(nv)) continue;
                nv = primitive3(nv);
                Int h = dot3(nv, points[i]);
                bool above = false, below = false;
                for (const auto& p : points) {
                    Int s = dot3(nv, p);
                    if (s > h) above = true;
                    else if (s < h) below = true;
                    if (above && below) break;
                }
                if (above && below) continue;
                if (!above)
                    facet_set.insert({neg3(nv), h});  // all points on <nv,x> <= h
                else
                    facet_set.insert({nv, checked_neg(h)});
            }
        }
    }

    LatticePolytope poly;
    for (const auto& [normal, offset] : facet_set) poly.facets_.push_back({normal, offset});

    // A point of the hull is a vertex iff its active facet normals span 3-space.
    for (const auto& p : points) {
        std::vector<Vec3> active;
        for (const auto& f : poly.facets_)
            if (on_facet(f, p)) active.push_back(f.normal);
        if (active.size() >= 3 && rank3(active) == 3) poly.vertices_.push_back(p);
    }
    std::sort(poly.vertices_.begin(), poly.vertices_.end());
    return poly;
}

RationalPolytope polar_dual(const LatticePolytope& p) {
    RationalPolytope dual;
    for (const auto& f : p.facets()) {
        if (f.offset <= 0)
            throw OriginNotInteriorError("polar dual requires the origin strictly inside the polytope");
        dual.vertices_.push_back({Rat(f.normal[0], f.offset), Rat(f.normal[1], f.offset), Rat(f.normal[2], f.offset)});
    }
    for (const auto& v : p.vertices()) {
        Int g = content3(v);
        dual.facets_.push_back({primitive3(v), Rat(1, g)});
    }
    std::sort(dual.vertices_.begin(), dual.vertices_.end());
    std::sort(dual.facets_.begin(), dual.facets_.end());
    return dual;
}

RationalPolytope polar_dual(const RationalPolytope& p) {
    RationalPolytope dual;
    for (const auto& f : p.facets()) {
        if (!(f.offset > Rat(0)))
            throw OriginNotInteriorError("polar dual requires the origin strictly inside the polytope");
        dual.vertices_.push_back({Rat(f.normal[0]) / f.offset, Rat(f.normal[1]) / f.offset, Rat(f.normal[2]) / f.offset});
    }
    for (const auto& v : p.vertices()) {
        auto [normal, scale] = primitive_direction(v);
        dual.facets_.push_back({normal, Rat(1) / scale});
    }
    std::sort(dual.vertices_.begin(), dual.vertices_.end());
    std::sort(dual.facets_.begin(), dual.facets_.end());
    return dual;
}

LatticePolytope as_lattice(const RationalPolytope& p) {
    LatticePolytope out;
    for (const auto& v : p.vertices()) out.vertices_.push_back(to_int3(v));
    for (const auto& f : p.facets()) {
        if (!f.offset.is_integer())
            throw InternalInconsistencyError("integral polytope with a fractional facet offset");
        out.facets_.push_back({f.normal, f.offset.num()});
    }
    std::sort(out.vertices_.begin(), out.vertices_.end());
    std::sort(out.facets_.begin(), out.facets_.end());
    return out;
}

Face face_of(const LatticePolytope& p, const std::vector<Vec3>& face_vertices) {
    if (face_vertices.empty()) throw NotAFaceError("empty vertex set");
    std::vector<Vec3> want = face_vertices;
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    for (const auto& v : want)
        if (!std::binary_search(p.vertices().begin(), p.vertices().end(), v))
            throw NotAFaceError("point " + str(v) + " is not a vertex of the polytope");

    std::vector<LatticeFacet> supporting;
    for (const auto& f : p.facets()) {
        bool all = true;
        for (const auto& v : want)
            if (!on_facet(f, v)) { all = false; break; }
        if (all) supporting.push_back(f);
    }
    if (supporting.empty()) throw NotAFaceError("vertex set is not contained in a proper face");

    std::vector<Vec3> spanned;
    for (const auto& v : p.vertices()) {
        bool all = true;
        for (const auto& f : supporting)
            if (!on_facet(f, v)) { all = false; break; }
        if (all) spanned.push_back(v);
    }
    if (spanned != want) throw NotAFaceError("vertex set does not span a face");

    Face face;
    face.dimension = affine_rank(want);
    for (const auto& v : want) face.vertices.push_back(to_rat3(v));
    return face;
}

Face dual_face(const LatticePolytope& p, const Face& f) {
    std::vector<Vec3> verts;
    for (const auto& v : f.vertices) verts.push_back(to_int3(v));
    Face checked = face_of(p, verts);  // validates; throws NotAFaceError
    if (checked.dimension != f.dimension)
        throw NotAFaceError("face dimension mismatch");

    Face dual;
    dual.dimension = 2 - f.dimension;
    for (const auto& facet : p.facets()) {
        bool all = true;
        for (const auto& v : verts)
            if (!on_facet(facet, v)) { all = false; break; }
        if (!all) continue;
        if (facet.offset <= 0)
            throw OriginNotInteriorError("dual face requires the origin strictly inside the polytope");
        dual.vertices.push_back({Rat(facet.normal[0], facet.offset), Rat(facet.normal[1], facet.offset),
                                 Rat(facet.normal[2], facet.offset)});
    }
    std::sort(dual.vertices.begin(), dual.vertices.end());
    return dual;
}

std::string str(ReflexivityOutcome o) {
    switch (o) {
        case ReflexivityOutcome::reflexive: return "reflexive";
        case ReflexivityOutcome::rational_dual_vertex: return "rational-dual-vertex";
        case ReflexivityOutcome::interior_point_failure: return "interior-point-failure";
    }
    return "?";
}

ReflexivityVerdict is_reflexive(const LatticePolytope& p) {
    const Vec3 origin{0, 0, 0};
    std::vector<Vec3> interior = interior_lattice_points(p);
    if (interior.size() != 1 || interior[0] != origin) {
        for (const auto& q : interior)
            if (q != origin)
                return {ReflexivityOutcome::interior_point_failure, to_rat3(q)};
        // The origin itself is not interior.
        return {ReflexivityOutcome::interior_point_failure, to_rat3(origin)};
    }
    for (const auto& f : p.facets()) {
        if (f.offset != 1)
            return {ReflexivityOutcome::rational_dual_vertex,
                    Vec3Q{Rat(f.normal[0], f.offset), Rat(f.normal[1], f.offset), Rat(f.normal[2], f.offset)}};
    }
    return {ReflexivityOutcome::reflexive, std::nullopt};
}

namespace {

std::vector<Vec3> scan_lattice_points(const LatticePolytope& p, bool strict) {
    Vec3 lo = p.vertices().front(), hi = lo;
    for (const auto& v : p.vertices()) {
        for (int i = 0; i < 3; ++i) {
            lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
            hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
        }
    }
    std::vector<Vec3> result;
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y)
            for (Int z = lo[2]; z <= hi[2]; ++z) {
                Vec3 q{x, y, z};
                if (strict ? p.strictly_contains(q) : p.contains(q)) result.push_back(q);
            }
    return result;  // scan order is ascending lexicographic already
}

}  // namespace

std::vector<Vec3> lattice_points(const LatticePolytope& p) { return scan_lattice_points(p, false); }

std::vector<Vec3> interior_lattice_points(const LatticePolytope& p) { return scan_lattice_points(p, true); }

std::vector<EdgeInfo> edges(const LatticePolytope& p) {
    std::vector<EdgeInfo> result;
    const auto& vs = p.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            // Two vertices are adjacent iff they lie on two distinct facets.
            int shared = 0;
            for (const auto& f : p.facets())
                if (on_facet(f, vs[i]) && on_facet(f, vs[j]) && ++shared >= 2) break;
            if (shared < 2) continue;
            Int len = lattice_length(vs[i], vs[j]);
            result.push_back({vs[i], vs[j], checked_add(len, 1), checked_sub(len, 1)});
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool contains_polytope(const LatticePolytope& p, const LatticePolytope& q) {
    return std::all_of(q.vertices().begin(), q.vertices().end(),
                       [&](const Vec3& v) { return p.contains(v); });
}

bool contains_polytope(const LatticePolytope& p, const RationalPolytope& q) {
    return std::all_of(q.vertices().begin(), q.vertices().end(),
                       [&](const Vec3Q& v) { return p.contains(v); });
}

}  // namespace polydual
