#pragma once

#include "polydual/search.hpp"

#include <json.hpp>

namespace polydual {

// Insertion-ordered JSON keeps every emitted document byte-stable across runs.
using Json = nlohmann::ordered_json;

// Rationals serialize as plain integers when integral, else as "num/den".
Json to_json(const Rat& r);
Json to_json(const Vec3& v);
Json to_json(const Vec3Q& v);
Json to_json(const Mat3& m);

/// {"vertices": [[x,y,z], ...], "facets": [{"normal": [...], "offset": o}, ...]}
/// Facets are optional on input (recomputed from the vertices); mandatory on output.
Json to_json(const LatticePolytope& p);
Json to_json(const RationalPolytope& p);
LatticePolytope lattice_polytope_from_json(const Json& j);

Json to_json(const ReflexivityVerdict& v);
Json to_json(const SegmentCensus& c);
Json to_json(const EmbeddingWitness& w);
Json to_json(const Face& f);
Json to_json(const WeightSystem& w);
Json to_json(const LatticeBasis& b);
Json to_json(const DualityReport& r);

Rat rat_from_json(const Json& j);
Vec3 vec3_from_json(const Json& j);

}  // namespace polydual
