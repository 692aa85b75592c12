#include "polydual/search.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace polydual {

std::vector<LatticePolytope> enumerate_intermediate_reflexive(const SandwichProblem& prob) {
    if (!contains_polytope(prob.upper, prob.lower))
        throw std::invalid_argument("sandwich lower bound is not contained in the upper bound");
    if (!is_reflexive(prob.upper).reflexive())
        throw std::invalid_argument("sandwich upper bound is not reflexive");

    const std::vector<Vec3> lower_pts = lattice_points(prob.lower);
    const std::vector<Vec3> upper_pts = lattice_points(prob.upper);
    std::vector<Vec3> outside;
    std::set_difference(upper_pts.begin(), upper_pts.end(), lower_pts.begin(), lower_pts.end(),
                        std::back_inserter(outside));

    // Grow the lower polytope one outside point at a time; every intermediate
    // polytope is the hull of lower plus a subset of outside points, so the
    // closure BFS reaches each one. States are keyed by lattice-point sets.
    std::map<std::vector<Vec3>, LatticePolytope> seen;
    std::deque<std::vector<Vec3>> queue;
    seen.emplace(lower_pts, prob.lower);
    queue.push_back(lower_pts);
    while (!queue.empty()) {
        std::vector<Vec3> pts = std::move(queue.front());
        queue.pop_front();
        for (const auto& p : outside) {
            if (std::binary_search(pts.begin(), pts.end(), p)) continue;
            std::vector<Vec3> grown = pts;
            grown.push_back(p);
            LatticePolytope poly = hull(std::move(grown));
            std::vector<Vec3> key = lattice_points(poly);
            if (seen.emplace(key, std::move(poly)).second) queue.push_back(std::move(key));
        }
    }

    std::vector<LatticePolytope> result;
    for (const auto& [pts, poly] : seen)
        if (is_reflexive(poly).reflexive()) result.push_back(poly);
    return result;
}

SegmentCensus segment_census(const LatticePolytope& p) {
    const std::vector<Vec3> pts = lattice_points(p);
    SegmentCensus census;
    Int best = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Int len = lattice_length(pts[i], pts[j]);
            if (len > best) {
                best = len;
                census.witnesses.clear();
            }
            if (len == best) census.witnesses.push_back({pts[i], pts[j]});
        }
    }
    census.max_total = checked_add(best, 1);
    census.max_interior = checked_sub(best, 1);
    std::sort(census.witnesses.begin(), census.witnesses.end());
    return census;
}

namespace {

// First triple of linearly independent vertices, as matrix columns.
std::array<std::size_t, 3> independent_vertex_triple(const std::vector<Vec3>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            for (std::size_t k = j + 1; k < verts.size(); ++k) {
                Mat3 cols{Vec3{verts[i][0], verts[j][0], verts[k][0]},
                          Vec3{verts[i][1], verts[j][1], verts[k][1]},
                          Vec3{verts[i][2], verts[j][2], verts[k][2]}};
                if (det3(cols) != 0) return {i, j, k};
            }
    throw InternalInconsistencyError("polytope vertices do not span 3-space");
}

}  // namespace

std::optional<EmbeddingWitness> find_unimodular_embedding(const LatticePolytope& q,
                                                          const LatticePolytope& p,
                                                          bool allow_translation) {
    const std::vector<Vec3>& qv = q.vertices();
    const auto [a, b, c] = independent_vertex_triple(qv);
    const Mat3 v_cols{Vec3{qv[a][0], qv[b][0], qv[c][0]},
                      Vec3{qv[a][1], qv[b][1], qv[c][1]},
                      Vec3{qv[a][2], qv[b][2], qv[c][2]}};
    const Int det_v = det3(v_cols);
    const Mat3 v_adj = adjugate3(v_cols);
    const std::array<Int, 3> contents{content3(qv[a]), content3(qv[b]), content3(qv[c])};

    const std::vector<Vec3> target_pts = lattice_points(p);
    std::vector<Vec3> translations{{0, 0, 0}};
    if (allow_translation) translations = interior_lattice_points(p);

    for (const auto& t : translations) {
        // Candidate images per slot: unimodular maps preserve the content of a
        // vector, so images of qv[s] - 0 must have matching content.
        std::array<std::vector<Vec3>, 3> cand;
        for (int s = 0; s < 3; ++s)
            for (const auto& pt : target_pts) {
                Vec3 d = sub3(pt, t);
                if (content3(d) == contents[static_cast<std::size_t>(s)]) cand[static_cast<std::size_t>(s)].push_back(d);
            }
        for (const auto& p1 : cand[0]) {
            for (const auto& p2 : cand[1]) {
                for (const auto& p3 : cand[2]) {
                    Mat3 img_cols{Vec3{p1[0], p2[0], p3[0]}, Vec3{p1[1], p2[1], p3[1]}, Vec3{p1[2], p2[2], p3[2]}};
                    if (checked_abs(det3(img_cols)) != checked_abs(det_v)) continue;
                    // U = img * adj(V) / det(V); accept only integral U.
                    Mat3 scaled = mat_mul(img_cols, v_adj);
                    Mat3 u;
                    bool integral = true;
                    for (int r = 0; r < 3 && integral; ++r)
                        for (int cc = 0; cc < 3; ++cc) {
                            if (scaled[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] % det_v != 0) {
                                integral = false;
                                break;
                            }
                            u[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
                                scaled[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] / det_v;
                        }
                    if (!integral) continue;
                    Int det_u = det3(u);
                    if (det_u != 1 && det_u != -1) continue;
                    std::vector<Vec3> images;
                    images.reserve(qv.size());
                    bool inside = true;
                    for (const auto& v : qv) {
                        Vec3 img = add3(mat_vec(u, v), t);
                        if (!p.contains(img)) {
                            inside = false;
                            break;
                        }
                        images.push_back(img);
                    }
                    if (!inside) continue;
                    return EmbeddingWitness{u, t, std::move(images)};
                }
            }
        }
    }
    return std::nullopt;
}

PipelineResult run_duality_pipeline(const SandwichProblem& prob,
                                    const std::vector<LatticePolytope>& targets) {
    PipelineResult result;
    result.intermediates = enumerate_intermediate_reflexive(prob);
    result.target_no_duality.assign(targets.size(), true);
    for (const auto& poly : result.intermediates) {
        LatticePolytope dual = as_lattice(polar_dual(poly));
        std::vector<std::optional<EmbeddingWitness>> row;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            row.push_back(find_unimodular_embedding(dual, targets[t]));
            if (row.back()) result.target_no_duality[t] = false;
        }
        result.duals.push_back(std::move(dual));
        result.embeddings.push_back(std::move(row));
    }
    return result;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw FixtureMismatchError(what);
}

std::string vertex_list(const std::vector<Vec3>& vs) {
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty()) out += ", ";
        out += str(v);
    }
    return out;
}

}  // namespace

DualityReport verify_polytope_duality(CaseName c) {
    const CaseFixture& fix = fixture(c);
    const WeightSystem& w = fix.weights;

    require(is_kernel_basis(w, fix.basis),
            fix.name + ": reference basis does not generate the kernel lattice of " + w.str());

    DualityReport report(w, fix.basis);
    report.case_name = fix.name;

    // Weight polytope and the monomial correspondences.
    report.weight_poly = weight_polytope(w, fix.basis);
    std::vector<Vec3> expected = fix.weight_vertices;
    std::sort(expected.begin(), expected.end());
    require(report.weight_poly.vertices() == expected,
            fix.name + ": weight polytope vertices " + vertex_list(report.weight_poly.vertices()) +
                " differ from expected " + vertex_list(expected));
    for (const auto& [mono_text, coord] : fix.monomial_correspondence) {
        WeightedPolynomial mono = parse_polynomial(mono_text);
        Vec3 got = monomial_to_lattice(mono.monomials.at(0), w, fix.basis);
        require(got == coord, fix.name + ": monomial " + mono_text + " maps to " + str(got) +
                                  ", expected " + str(coord));
    }

    // Newton polytope, its non-reflexivity witness, and the witness face.
    report.newton_poly = newton_polytope(parse_polynomial(fix.projective_text), w, fix.basis);
    expected = fix.newton_vertices;
    std::sort(expected.begin(), expected.end());
    require(report.newton_poly.vertices() == expected,
            fix.name + ": Newton polytope vertices " + vertex_list(report.newton_poly.vertices()) +
                " differ from expected " + vertex_list(expected));
    report.newton_verdict = is_reflexive(report.newton_poly);
    require(report.newton_verdict.outcome == ReflexivityOutcome::rational_dual_vertex,
            fix.name + ": Newton polytope verdict is " + str(report.newton_verdict.outcome) +
                ", expected rational-dual-vertex");
    require(report.newton_verdict.witness == fix.newton_witness,
            fix.name + ": non-reflexivity witness " + str(*report.newton_verdict.witness) +
                ", expected " + str(fix.newton_witness));
    Face witness_face = dual_face(report.newton_poly, face_of(report.newton_poly, fix.newton_witness_face));
    require(witness_face.dimension == 0 && witness_face.vertices == std::vector<Vec3Q>{fix.newton_witness},
            fix.name + ": dual of the witness face is not the expected rational vertex");

    // Both candidate targets: the case's own weight polytope (statement) and
    // the other case's (proof text); each in its own reference basis.
    CaseName other = (c == CaseName::Q16) ? CaseName::S16 : CaseName::Q16;
    const CaseFixture& other_fix = fixture(other);
    require(other_fix.weights.weights() == fix.proof_target_weights,
            fix.name + ": proof-target weight system mismatch");
    std::vector<TargetOutcome> targets;
    targets.push_back({"statement", w, fix.basis, report.weight_poly, SegmentCensus{}, false});
    targets.push_back({"proof", other_fix.weights, other_fix.basis,
                       weight_polytope(other_fix.weights, other_fix.basis), SegmentCensus{}, false});
    for (auto& target : targets) {
        require(is_reflexive(target.polytope).reflexive(),
                fix.name + ": target weight polytope for " + target.weights.str() + " is not reflexive");
        target.census = segment_census(target.polytope);
    }

    // Sandwich enumeration and the embedding searches.
    SandwichProblem prob{report.newton_poly, report.weight_poly};
    std::vector<LatticePolytope> target_polys{targets[0].polytope, targets[1].polytope};
    PipelineResult pipeline = run_duality_pipeline(prob, target_polys);
    require(!pipeline.intermediates.empty(), fix.name + ": sandwich enumeration is empty");

    // Lattice-point sets of the reference family's intermediates.
    std::vector<std::vector<Vec3>> described_keys;
    for (const auto& verts : fix.described_intermediates)
        described_keys.push_back(lattice_points(hull(verts)));
    std::vector<bool> described_found(described_keys.size(), false);

    const std::vector<Vec3> gamma_endpoints{fix.gamma[0], fix.gamma[1]};
    for (std::size_t i = 0; i < pipeline.intermediates.size(); ++i) {
        IntermediateOutcome inter;
        inter.polytope = pipeline.intermediates[i];
        inter.dual = pipeline.duals[i];
        inter.embedding = pipeline.embeddings[i];

        std::vector<Vec3> key = lattice_points(inter.polytope);
        for (std::size_t d = 0; d < described_keys.size(); ++d)
            if (described_keys[d] == key) {
                described_found[d] = true;
                inter.in_reference_family = true;
            }

        const auto edge_list = edges(inter.polytope);
        Vec3 ga = std::min(fix.gamma[0], fix.gamma[1]);
        Vec3 gb = std::max(fix.gamma[0], fix.gamma[1]);
        inter.gamma_is_edge = std::any_of(edge_list.begin(), edge_list.end(),
                                          [&](const EdgeInfo& e) { return e.a == ga && e.b == gb; });
        if (inter.gamma_is_edge) {
            inter.gamma_dual = dual_face(inter.polytope, face_of(inter.polytope, gamma_endpoints));
            std::vector<Vec3Q> expected_star{to_rat3(fix.gamma_star[0]), to_rat3(fix.gamma_star[1])};
            std::sort(expected_star.begin(), expected_star.end());
            require(inter.gamma_dual->vertices == expected_star,
                    fix.name + ": dual of the obstructing edge differs from the expected segment");
            Int len = lattice_length(fix.gamma_star[0], fix.gamma_star[1]);
            inter.gamma_dual_total = checked_add(len, 1);
            inter.gamma_dual_interior = checked_sub(len, 1);
            for (const auto& target : targets)
                inter.census_obstruction.push_back(inter.gamma_dual_total > target.census.max_total);
        } else {
            inter.census_obstruction.assign(targets.size(), false);
        }
        report.intermediates.push_back(std::move(inter));
    }

    report.described_intermediates_all_found =
        std::all_of(described_found.begin(), described_found.end(), [](bool x) { return x; });
    require(report.described_intermediates_all_found,
            fix.name + ": an intermediate polytope of the reference family was not enumerated");

    // Vertex lists an alternative reading of the family clause suggests but
    // which fail reflexivity: confirm the failure and surface it.
    for (const auto& verts : fix.described_nonreflexive) {
        ReflexivityVerdict verdict = is_reflexive(hull(verts));
        require(!verdict.reflexive(),
                fix.name + ": a vertex list recorded as non-reflexive is reflexive after all");
        report.notes.push_back(fix.name + ": hull of " + vertex_list(verts) + " is not reflexive (" +
                               str(verdict.outcome) + ", witness " + str(*verdict.witness) +
                               "); the family clause is read as an optional extra vertex");
    }

    // Counting-convention resolution for the dual edge.
    Int len = lattice_length(fix.gamma_star[0], fix.gamma_star[1]);
    report.gamma_star_total = checked_add(len, 1);
    report.gamma_star_interior = checked_sub(len, 1);
    report.stated_count = fix.stated_gamma_star_count;
    if (report.stated_count == report.gamma_star_interior)
        report.stated_count_convention = "interior";
    else if (report.stated_count == report.gamma_star_total)
        report.stated_count_convention = "total";
    else
        report.stated_count_convention = "neither";

    for (std::size_t t = 0; t < targets.size(); ++t) {
        targets[t].no_duality = pipeline.target_no_duality[t];
        report.notes.push_back("target " + targets[t].label + " " + targets[t].weights.str() + ": " +
                               (targets[t].no_duality ? "no dual embeds (exhaustive search)"
                                                      : "an embedding witness exists"));
    }

    // The reference argument needs a segment carrying the stated count to be
    // absent from the proof target; record under which convention that holds.
    {
        const SegmentCensus& census = targets[1].census;
        bool exists_total = report.stated_count <= census.max_total;
        bool exists_interior = report.stated_count <= census.max_interior;
        std::string claim;
        if (!exists_total && !exists_interior) claim = "holds under both conventions";
        else if (!exists_interior) claim = "holds under the interior reading only";
        else if (!exists_total) claim = "holds under the total reading only";
        else claim = "fails under both conventions";
        report.notes.push_back(
            "a segment carrying the stated count " + std::to_string(report.stated_count) + " in the proof target " +
            targets[1].weights.str() + ": " + (exists_total ? "exists" : "none") + " under the total convention, " +
            (exists_interior ? "exists" : "none") +
            " under the interior convention; the non-existence claim " + claim);
    }
    report.targets = std::move(targets);
    report.no_duality = pipeline.target_no_duality[0] && pipeline.target_no_duality[1];

    std::size_t extras = 0;
    for (const auto& inter : report.intermediates)
        if (!inter.in_reference_family) ++extras;
    if (extras > 0)
        report.notes.push_back(std::to_string(extras) +
                               " enumerated intermediate polytope(s) beyond the described family "
                               "(non-strict sandwich inclusions admit the upper bound itself)");
    report.notes.push_back("stated dual-edge count " + std::to_string(report.stated_count) +
                           " matches the " + report.stated_count_convention +
                           " convention (computed: " + std::to_string(report.gamma_star_total) +
                           " total, " + std::to_string(report.gamma_star_interior) + " interior)");
    return report;
}

}  // namespace polydual
