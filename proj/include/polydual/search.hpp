#pragma once

#include "polydual/fixtures.hpp"
#include "polydual/newton.hpp"
#include "polydual/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polydual {

/// Enumeration instance: all reflexive lattice polytopes D with
/// lower <= D <= upper (inclusions are non-strict on both sides).
struct SandwichProblem {
    LatticePolytope lower;
    LatticePolytope upper;
};

/// Complete duplicate-free list, identified by lattice-point sets, in
/// deterministic (lexicographic point-set) order. Closure BFS over the lattice
/// points of `upper` outside `lower`, filtered by is_reflexive.
std::vector<LatticePolytope> enumerate_intermediate_reflexive(const SandwichProblem& prob);

struct SegmentWitness {
    Vec3 a{}, b{};
    friend auto operator<=>(const SegmentWitness&, const SegmentWitness&) = default;
};

/// Maximum lattice-point count over all segments between lattice points of
/// the polytope, under both counting conventions, with every witness segment
/// achieving the maximum. max_interior = max_total - 2 always: a segment of
/// lattice length L carries L + 1 total and L - 1 interior lattice points.
struct SegmentCensus {
    Int max_total = 0;
    Int max_interior = 0;
    std::vector<SegmentWitness> witnesses;
};

SegmentCensus segment_census(const LatticePolytope& p);

/// Certificate for "Q embeds into P": an origin-fixing unimodular map (plus a
/// lattice translation when the translation mode is enabled) carrying every
/// vertex of Q into P.
struct EmbeddingWitness {
    Mat3 map{};                        // determinant +-1
    Vec3 translation{0, 0, 0};         // zero unless translations were allowed
    std::vector<Vec3> image_vertices;  // images of Q's vertices, in Q's vertex order
};

/// Exhaustive search over all candidate unimodular maps; returns the first
/// witness in deterministic order, or nullopt as a proof of non-existence.
/// Q must have the origin strictly interior; P must contain the origin.
std::optional<EmbeddingWitness> find_unimodular_embedding(const LatticePolytope& q,
                                                          const LatticePolytope& p,
                                                          bool allow_translation = false);

/// Pipeline core shared by the case verifier and the synthetic control tests:
/// enumerate the sandwich, dualize every intermediate polytope, and run the
/// embedding search against each target.
struct PipelineResult {
    std::vector<LatticePolytope> intermediates;
    std::vector<LatticePolytope> duals;  // parallel to intermediates
    // embeddings[i][t]: witness for dual i into target t, if any
    std::vector<std::vector<std::optional<EmbeddingWitness>>> embeddings;
    std::vector<bool> target_no_duality;  // per target: no dual embeds
};

PipelineResult run_duality_pipeline(const SandwichProblem& prob,
                                    const std::vector<LatticePolytope>& targets);

struct TargetOutcome {
    std::string label;  // "statement" or "proof"
    WeightSystem weights;
    LatticeBasis basis;
    LatticePolytope polytope;
    SegmentCensus census;
    bool no_duality = false;
};

struct IntermediateOutcome {
    LatticePolytope polytope;
    LatticePolytope dual;
    bool gamma_is_edge = false;
    std::optional<Face> gamma_dual;
    Int gamma_dual_total = 0;
    Int gamma_dual_interior = 0;
    std::vector<std::optional<EmbeddingWitness>> embedding;  // parallel to targets
    std::vector<bool> census_obstruction;                    // parallel to targets
    bool in_reference_family = false;
};

/// Machine-checked certificate for one case. Every expected fixture value is
/// recomputed and compared; a mismatch raises FixtureMismatchError.
struct DualityReport {
    std::string case_name;
    WeightSystem weights;
    LatticeBasis basis;
    LatticePolytope weight_poly;
    LatticePolytope newton_poly;
    ReflexivityVerdict newton_verdict;
    std::vector<TargetOutcome> targets;  // [0] = statement, [1] = proof
    std::vector<IntermediateOutcome> intermediates;
    Int gamma_star_total = 0;
    Int gamma_star_interior = 0;
    Int stated_count = 0;
    std::string stated_count_convention;  // which convention the quoted count matches
    bool described_intermediates_all_found = false;
    std::vector<std::string> notes;
    bool no_duality = false;  // conjunction over targets

    DualityReport(WeightSystem w, LatticeBasis b) : weights(w), basis(b) {}
};

DualityReport verify_polytope_duality(CaseName c);

}  // namespace polydual
