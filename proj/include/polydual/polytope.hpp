#pragma once

#include "polydual/linalg.hpp"

#include <optional>
#include <vector>

namespace polydual {

// Facet inequality <normal, x> >= -offset with a primitive integer normal.
// A lattice polytope with the origin interior is reflexive exactly when every
// offset equals 1, which is why the offset is kept explicit.
struct LatticeFacet {
    Vec3 normal{};
    Int offset = 0;

    friend auto operator<=>(const LatticeFacet&, const LatticeFacet&) = default;
};

struct RatFacet {
    Vec3 normal{};
    Rat offset;

    friend auto operator<=>(const RatFacet&, const RatFacet&) = default;
};

class RationalPolytope;

/// Full-dimensional 3-polytope with integral vertices. Vertices and facets are
/// canonically sorted; instances are immutable once built.
class LatticePolytope {
public:
    LatticePolytope() = default;  // empty placeholder; hull() builds real ones

    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<LatticeFacet>& facets() const { return facets_; }

    bool contains(const Vec3& p) const;
    bool contains(const Vec3Q& p) const;
    bool strictly_contains(const Vec3& p) const;

    friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

    friend LatticePolytope hull(std::vector<Vec3> points);
    friend LatticePolytope as_lattice(const RationalPolytope& p);

private:
    std::vector<Vec3> vertices_;
    std::vector<LatticeFacet> facets_;
};

/// Polytope with rational vertex data; arises as a polar dual. Same canonical
/// ordering conventions as LatticePolytope.
class RationalPolytope {
public:
    RationalPolytope() = default;

    const std::vector<Vec3Q>& vertices() const { return vertices_; }
    const std::vector<RatFacet>& facets() const { return facets_; }

    bool contains(const Vec3Q& p) const;
    bool all_vertices_integral() const;

    friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;

    friend RationalPolytope polar_dual(const LatticePolytope& p);
    friend RationalPolytope polar_dual(const RationalPolytope& p);

private:
    std::vector<Vec3Q> vertices_;
    std::vector<RatFacet> facets_;
};

/// Exact convex hull. Input points must affinely span 3-space
/// (DegenerateInputError otherwise); duplicates and non-extreme points are
/// dropped. Output is canonical: vertices and facets sorted.
LatticePolytope hull(std::vector<Vec3> points);

/// Polar dual {y : <y, x> >= -1 for all x in P}. Requires the origin strictly
/// interior (OriginNotInteriorError otherwise). Dual vertices are the facet
/// normals divided by their offsets; applying it twice returns the argument.
RationalPolytope polar_dual(const LatticePolytope& p);
RationalPolytope polar_dual(const RationalPolytope& p);

/// Reinterpret a rational polytope with integral vertices as a lattice
/// polytope. Throws InternalInconsistencyError when a vertex is fractional.
LatticePolytope as_lattice(const RationalPolytope& p);

/// Proper face, carried by its vertex set (rational to cover dual polytopes).
struct Face {
    int dimension = 0;
    std::vector<Vec3Q> vertices;

    friend bool operator==(const Face&, const Face&) = default;
};

/// The face of P spanned by exactly the given vertices; NotAFaceError if that
/// vertex set is not a face of P.
Face face_of(const LatticePolytope& p, const std::vector<Vec3>& face_vertices);

/// Dual face {y in P* : <y, x> = -1 for all x in F}. For a 3-polytope,
/// dim(dual) = 2 - dim(F).
Face dual_face(const LatticePolytope& p, const Face& f);

enum class ReflexivityOutcome { reflexive, rational_dual_vertex, interior_point_failure };

/// Witness is absent exactly for the reflexive outcome. For a rational dual
/// vertex it is that vertex; for an interior-point failure it is an interior
/// lattice point other than the origin, or the origin itself when the origin
/// is not interior.
struct ReflexivityVerdict {
    ReflexivityOutcome outcome = ReflexivityOutcome::reflexive;
    std::optional<Vec3Q> witness;

    bool reflexive() const { return outcome == ReflexivityOutcome::reflexive; }
};

std::string str(ReflexivityOutcome o);

ReflexivityVerdict is_reflexive(const LatticePolytope& p);

/// All lattice points of P (bounding-box scan filtered by the facet
/// inequalities), in ascending lexicographic order.
std::vector<Vec3> lattice_points(const LatticePolytope& p);

/// Lattice points satisfying every facet inequality strictly.
std::vector<Vec3> interior_lattice_points(const LatticePolytope& p);

/// Edge of a lattice polytope with its lattice-point counts under both
/// conventions (total on the closed segment, relative interior).
struct EdgeInfo {
    Vec3 a{}, b{};           // endpoints, a < b lexicographically
    Int total_points = 0;    // lattice_length + 1
    Int interior_points = 0; // lattice_length - 1

    friend auto operator<=>(const EdgeInfo&, const EdgeInfo&) = default;
};

std::vector<EdgeInfo> edges(const LatticePolytope& p);

/// True iff every vertex of Q satisfies every facet inequality of P.
bool contains_polytope(const LatticePolytope& p, const LatticePolytope& q);
bool contains_polytope(const LatticePolytope& p, const RationalPolytope& q);

}  // namespace polydual
