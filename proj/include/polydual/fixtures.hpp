#pragma once

#include "polydual/linalg.hpp"

#include <utility>
#include <vector>

namespace polydual {

enum class CaseName { Q16, S16 };

CaseName case_from_string(const std::string& s);

/// Built-in data for one singularity case: the weight system, the reference
/// basis the published coordinates are expressed in, the defining polynomials,
/// and every expected value the pipeline cross-checks itself against.
struct CaseFixture {
    std::string name;
    WeightSystem weights;
    LatticeBasis basis;                 // reference basis ("--basis paper")
    std::string affine_text;            // three-variable singularity polynomial
    std::string projective_text;        // four-variable projectivisation

    std::vector<Vec3> weight_vertices;  // expected vertices of the weight polytope
    std::vector<std::pair<std::string, Vec3>> monomial_correspondence;
    std::vector<Vec3> newton_vertices;  // expected vertices of the Newton polytope
    Vec3Q newton_witness;               // rational dual vertex witnessing non-reflexivity
    std::vector<Vec3> newton_witness_face;  // face whose dual is that vertex

    std::array<Vec3, 2> gamma;          // the obstructing edge of the sandwich
    std::array<Vec3, 2> gamma_star;     // its dual edge
    Int stated_gamma_star_count = 0;    // count stated in the reference data

    // Intermediate reflexive polytopes of the reference family, as vertex
    // lists, under the resolved reading of the family clause.
    std::vector<std::vector<Vec3>> described_intermediates;

    // Vertex lists an alternative reading of the family clause suggests but
    // whose hulls are not reflexive; the verifier confirms the non-reflexivity
    // and surfaces it in the report notes instead of silently dropping it.
    std::vector<std::vector<Vec3>> described_nonreflexive;

    std::array<Int, 4> proof_target_weights{};  // the other case's weight system
};

const CaseFixture& fixture(CaseName c);

}  // namespace polydual
