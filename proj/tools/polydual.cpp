// polydual: exact lattice-polytope toolkit for weighted projective K3 families.
//
// Subcommands cover every pipeline stage: weight and Newton polytopes, polar
// duals, reflexivity verdicts, sandwich enumeration, segment censuses,
// unimodular embedding searches, and the full per-case duality verification.
// All arithmetic is exact; identical invocations produce byte-identical output.

#include "polydual/search.hpp"
#include "polydual/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace polydual;

// Exit codes: 0 success, 2 input/parse errors, 3 fixture mismatches,
// 4 internal inconsistencies (including overflow).
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFixture = 3;
constexpr int kExitInternal = 4;

WeightSystem parse_weights(const std::string& text) {
    std::array<Int, 4> w{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t next = text.find(',', pos);
        std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            w[static_cast<std::size_t>(i)] = std::stoll(part);
        } catch (const std::exception&) {
            throw std::invalid_argument("weights must be four comma-separated integers, got '" + text + "'");
        }
        if (next == std::string::npos && i < 3)
            throw std::invalid_argument("weights must be four comma-separated integers, got '" + text + "'");
        pos = next + 1;
    }
    return WeightSystem::create(w[0], w[1], w[2], w[3]);
}

// Default ("auto"): the reference basis for the two built-in weight systems,
// the canonical kernel basis for everything else.
LatticeBasis select_basis(const WeightSystem& w, const std::string& which) {
    if (which == "canonical") return kernel_basis(w);
    if (which != "paper" && which != "auto")
        throw std::invalid_argument("--basis must be 'paper' or 'canonical'");
    for (CaseName c : {CaseName::Q16, CaseName::S16})
        if (fixture(c).weights == w) return fixture(c).basis;
    if (which == "auto") return kernel_basis(w);
    throw std::invalid_argument("--basis paper is only available for the built-in weight systems " +
                                fixture(CaseName::Q16).weights.str() + " and " +
                                fixture(CaseName::S16).weights.str());
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void write_output(const Json& j, const std::string& json_path) {
    std::string text = j.dump(2) + "\n";
    if (json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_path);
        if (!out) throw std::invalid_argument("cannot write '" + json_path + "'");
        out << text;
    }
}

// Common selector for commands operating on one polytope: either a weight
// system (weight polytope), a polynomial over a weight system (Newton
// polytope), or a JSON file with a vertex list.
struct PolytopeSource {
    std::string weights;
    std::string newton;
    std::string file;
    std::string basis = "auto";

    void attach(CLI::App* cmd, const std::string& prefix = "") {
        auto dash = [&](const std::string& name) { return "--" + (prefix.empty() ? name : prefix + "-" + name); };
        auto* w = cmd->add_option(dash("weights"), weights, "weight system w0,w1,w2,w3");
        auto* n = cmd->add_option(dash("newton"), newton, "polynomial whose Newton polytope to use");
        auto* f = cmd->add_option(dash("in"), file, "polytope JSON file ({\"vertices\": [[x,y,z], ...]})");
        cmd->add_option(dash("basis"), basis, "kernel basis: paper|canonical (default: paper for built-in systems, else canonical)");
        f->excludes(w);
        n->needs(w);
    }

    LatticePolytope build() const {
        if (!file.empty()) return lattice_polytope_from_json(load_json(file));
        if (weights.empty())
            throw std::invalid_argument("no polytope selected: pass --weights (optionally --newton) or --in");
        WeightSystem w = parse_weights(weights);
        LatticeBasis b = select_basis(w, basis);
        if (!newton.empty()) return newton_polytope(parse_polynomial(newton), w, b);
        return weight_polytope(w, b);
    }
};

void print_polytope_text(std::ostream& os, const LatticePolytope& p) {
    os << "vertices (" << p.vertices().size() << "):\n";
    for (const auto& v : p.vertices()) os << "  " << str(v) << "\n";
    os << "facets (" << p.facets().size() << "), as <normal, x> >= -offset:\n";
    for (const auto& f : p.facets()) os << "  normal " << str(f.normal) << "  offset " << f.offset << "\n";
}

void print_verdict_text(std::ostream& os, const ReflexivityVerdict& v) {
    os << "reflexivity: " << str(v.outcome);
    if (v.witness) os << "  witness " << str(*v.witness);
    os << "\n";
}

int cmd_polytope(const std::string& weights_text, const std::string& basis, const std::string& json_path) {
    WeightSystem w = parse_weights(weights_text);
    LatticeBasis b = select_basis(w, basis);
    LatticePolytope p = weight_polytope(w, b);
    ReflexivityVerdict verdict = is_reflexive(p);
    if (!json_path.empty()) {
        Json j;
        j["weight_system"] = to_json(w);
        j["basis"] = to_json(b);
        j["polytope"] = to_json(p);
        j["lattice_point_count"] = lattice_points(p).size();
        j["interior_lattice_points"] = Json::array();
        for (const auto& q : interior_lattice_points(p)) j["interior_lattice_points"].push_back(to_json(q));
        j["reflexivity"] = to_json(verdict);
        write_output(j, json_path);
        return kExitOk;
    }
    std::cout << "weight system " << w.str() << "\n"
              << "basis: e1 = " << str(b.e1) << ", e2 = " << str(b.e2) << ", e3 = " << str(b.e3) << "\n";
    print_polytope_text(std::cout, p);
    std::cout << "lattice points: " << lattice_points(p).size()
              << " (interior: " << interior_lattice_points(p).size() << ")\n";
    print_verdict_text(std::cout, verdict);
    return kExitOk;
}

int cmd_newton(const std::string& poly_text, const std::string& weights_text, const std::string& basis,
               const std::string& json_path) {
    WeightSystem w = parse_weights(weights_text);
    LatticeBasis b = select_basis(w, basis);
    WeightedPolynomial f = parse_polynomial(poly_text);
    LatticePolytope p = newton_polytope(f, w, b);
    ReflexivityVerdict verdict = is_reflexive(p);
    InvertibilityReport inv = is_invertible_polynomial(f);
    if (!json_path.empty()) {
        Json j;
        j["polynomial"] = to_string(f);
        j["weight_system"] = to_json(w);
        j["basis"] = to_json(b);
        j["invertibility"] = Json{{"kind", str(inv.kind)}, {"symmetric", inv.symmetric}};
        if (inv.determinant) j["invertibility"]["determinant"] = *inv.determinant;
        j["polytope"] = to_json(p);
        j["reflexivity"] = to_json(verdict);
        write_output(j, json_path);
        return kExitOk;
    }
    std::cout << "polynomial: " << to_string(f) << "\n"
              << "exponent matrix: " << str(inv.kind);
    if (inv.determinant) std::cout << " (det " << *inv.determinant << (inv.symmetric ? ", symmetric" : ", not symmetric") << ")";
    std::cout << "\n";
    print_polytope_text(std::cout, p);
    print_verdict_text(std::cout, verdict);
    return kExitOk;
}

int cmd_dual(const PolytopeSource& src, const std::string& json_path) {
    LatticePolytope p = src.build();
    RationalPolytope dual = polar_dual(p);
    if (!json_path.empty()) {
        write_output(to_json(dual), json_path);
        return kExitOk;
    }
    std::cout << "dual vertices (" << dual.vertices().size() << "):\n";
    for (const auto& v : dual.vertices()) std::cout << "  " << str(v) << "\n";
    std::cout << "dual facets (" << dual.facets().size() << "):\n";
    for (const auto& f : dual.facets())
        std::cout << "  normal " << str(f.normal) << "  offset " << f.offset.str() << "\n";
    return kExitOk;
}

int cmd_reflexive(const PolytopeSource& src, const std::string& json_path) {
    LatticePolytope p = src.build();
    ReflexivityVerdict verdict = is_reflexive(p);
    if (!json_path.empty()) {
        write_output(to_json(verdict), json_path);
        return kExitOk;
    }
    print_verdict_text(std::cout, verdict);
    return kExitOk;
}

int cmd_census(const PolytopeSource& src, const std::string& convention, const std::string& json_path) {
    LatticePolytope p = src.build();
    SegmentCensus census = segment_census(p);
    if (!json_path.empty()) {
        write_output(to_json(census), json_path);
        return kExitOk;
    }
    if (convention == "total" || convention == "both")
        std::cout << "max lattice points on a segment (total convention): " << census.max_total << "\n";
    if (convention == "interior" || convention == "both")
        std::cout << "max lattice points on a segment (interior convention): " << census.max_interior << "\n";
    std::cout << "witness segments:\n";
    for (const auto& wseg : census.witnesses)
        std::cout << "  " << str(wseg.a) << " -- " << str(wseg.b) << "\n";
    return kExitOk;
}

int cmd_enumerate(const std::string& case_name, const std::string& lower_file, const std::string& upper_file,
                  const std::string& json_path) {
    SandwichProblem prob;
    if (!case_name.empty()) {
        const CaseFixture& fix = fixture(case_from_string(case_name));
        prob.lower = newton_polytope(parse_polynomial(fix.projective_text), fix.weights, fix.basis);
        prob.upper = weight_polytope(fix.weights, fix.basis);
    } else {
        if (lower_file.empty() || upper_file.empty())
            throw std::invalid_argument("pass --case, or both --lower and --upper polytope files");
        prob.lower = lattice_polytope_from_json(load_json(lower_file));
        prob.upper = lattice_polytope_from_json(load_json(upper_file));
    }
    std::vector<LatticePolytope> list = enumerate_intermediate_reflexive(prob);
    if (!json_path.empty()) {
        Json j = Json::array();
        for (const auto& p : list) j.push_back(to_json(p));
        write_output(j, json_path);
        return kExitOk;
    }
    std::cout << list.size() << " intermediate reflexive polytope(s)\n";
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::cout << "[" << i << "] vertices:";
        for (const auto& v : list[i].vertices()) std::cout << " " << str(v);
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_embed(const PolytopeSource& sub, const PolytopeSource& target, bool allow_translation,
              const std::string& json_path) {
    LatticePolytope q = sub.build();
    LatticePolytope p = target.build();
    std::optional<EmbeddingWitness> witness = find_unimodular_embedding(q, p, allow_translation);
    if (!json_path.empty()) {
        Json j;
        j["result"] = witness ? "witness" : "exhausted: none";
        if (witness) j["witness"] = to_json(*witness);
        write_output(j, json_path);
        return kExitOk;
    }
    if (!witness) {
        std::cout << "no unimodular embedding exists (search exhausted)\n";
        return kExitOk;
    }
    std::cout << "embedding found:\n  matrix rows " << str(witness->map[0]) << " " << str(witness->map[1]) << " "
              << str(witness->map[2]) << "\n";
    if (!is_zero3(witness->translation)) std::cout << "  translation " << str(witness->translation) << "\n";
    std::cout << "  image vertices:";
    for (const auto& v : witness->image_vertices) std::cout << " " << str(v);
    std::cout << "\n";
    return kExitOk;
}

void print_report_text(std::ostream& os, const DualityReport& r, const std::string& convention,
                       const std::string& target_filter) {
    os << "case " << r.case_name << ", weight system " << r.weights.str() << "\n";
    os << "basis: e1 = " << str(r.basis.e1) << ", e2 = " << str(r.basis.e2) << ", e3 = " << str(r.basis.e3)
       << "\n\n";
    os << "weight polytope vertices:";
    for (const auto& v : r.weight_poly.vertices()) os << " " << str(v);
    os << "\nNewton polytope vertices:";
    for (const auto& v : r.newton_poly.vertices()) os << " " << str(v);
    os << "\nNewton polytope: " << str(r.newton_verdict.outcome);
    if (r.newton_verdict.witness) os << ", witness " << str(*r.newton_verdict.witness);
    os << "\n\n";

    os << r.intermediates.size() << " intermediate reflexive polytope(s):\n";
    for (std::size_t i = 0; i < r.intermediates.size(); ++i) {
        const auto& inter = r.intermediates[i];
        os << "[" << i << "]" << (inter.in_reference_family ? " (reference family)" : "") << " vertices:";
        for (const auto& v : inter.polytope.vertices()) os << " " << str(v);
        os << "\n    obstructing edge: " << (inter.gamma_is_edge ? "present" : "absent");
        if (inter.gamma_is_edge) {
            os << ", dual edge carries ";
            if (convention == "total") os << inter.gamma_dual_total << " (total)";
            else if (convention == "interior") os << inter.gamma_dual_interior << " (interior)";
            else os << inter.gamma_dual_total << " total / " << inter.gamma_dual_interior << " interior";
            os << " lattice points";
        }
        os << "\n";
        for (std::size_t t = 0; t < r.targets.size(); ++t) {
            if (target_filter != "both" && r.targets[t].label != target_filter) continue;
            os << "    into " << r.targets[t].label << " target " << r.targets[t].weights.str() << ": "
               << (inter.embedding[t] ? "EMBEDS" : "no embedding (exhausted)") << "\n";
        }
    }
    os << "\n";
    for (const auto& t : r.targets) {
        if (target_filter != "both" && t.label != target_filter) continue;
        os << "target " << t.label << " " << t.weights.str() << ": census max ";
        if (convention == "total") os << t.census.max_total << " (total)";
        else if (convention == "interior") os << t.census.max_interior << " (interior)";
        else os << t.census.max_total << " total / " << t.census.max_interior << " interior";
        os << ", verdict: " << (t.no_duality ? "no duality" : "duality holds") << "\n";
    }
    os << "\ndual edge counts: " << r.gamma_star_total << " total / " << r.gamma_star_interior
       << " interior; stated count " << r.stated_count << " matches the " << r.stated_count_convention
       << " convention\n";
    os << "notes:\n";
    for (const auto& n : r.notes) os << "  - " << n << "\n";
    os << "\nverdict: " << (r.no_duality ? "no duality" : "duality holds") << "\n";
}

int cmd_verify(const std::string& case_name, const std::string& json_path, const std::string& convention,
               const std::string& target_filter) {
    DualityReport report = verify_polytope_duality(case_from_string(case_name));
    if (!json_path.empty()) write_output(to_json(report), json_path);
    print_report_text(std::cout, report, convention, target_filter);
    bool ok = true;
    for (const auto& t : report.targets) {
        if (target_filter != "both" && t.label != target_filter) continue;
        ok = ok && t.no_duality;
    }
    return ok ? kExitOk : kExitFixture;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-polytope duality toolkit for weighted projective K3 families"};
    app.require_subcommand(1);

    std::string weights, basis = "auto", json_path, poly_text;
    std::string convention = "both", target_filter = "both", case_name;
    std::string lower_file, upper_file;
    bool allow_translation = false;
    PolytopeSource src, sub_src, target_src;

    auto* polytope_cmd = app.add_subcommand("polytope", "weight polytope of a weight system");
    polytope_cmd->add_option("weights", weights, "weight system w0,w1,w2,w3")->required();
    polytope_cmd->add_option("--basis", basis, "kernel basis: paper|canonical (default: paper for built-in systems, else canonical)");
    polytope_cmd->add_option("--json", json_path, "write JSON to PATH instead of text output");

    auto* newton_cmd = app.add_subcommand("newton", "Newton polytope of a weighted-homogeneous polynomial");
    newton_cmd->add_option("polynomial", poly_text, "polynomial, e.g. \"X^4*Z + Y^3 + X*Z^2\"")->required();
    newton_cmd->add_option("--weights", weights, "weight system w0,w1,w2,w3")->required();
    newton_cmd->add_option("--basis", basis, "kernel basis: paper|canonical (default: paper for built-in systems, else canonical)");
    newton_cmd->add_option("--json", json_path, "write JSON to PATH");

    auto* dual_cmd = app.add_subcommand("dual", "polar dual of a polytope");
    src.attach(dual_cmd);
    dual_cmd->add_option("--json", json_path, "write JSON to PATH");

    auto* reflexive_cmd = app.add_subcommand("reflexive", "reflexivity verdict for a polytope");
    src.attach(reflexive_cmd);
    reflexive_cmd->add_option("--json", json_path, "write JSON to PATH");

    auto* census_cmd = app.add_subcommand("census", "segment census of a polytope's lattice points");
    src.attach(census_cmd);
    census_cmd->add_option("--convention", convention, "lattice point counting: total|interior|both");
    census_cmd->add_option("--json", json_path, "write JSON to PATH");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "intermediate reflexive polytopes of a sandwich");
    enumerate_cmd->add_option("--case", case_name, "built-in case: Q16|S16");
    enumerate_cmd->add_option("--lower", lower_file, "lower polytope JSON file");
    enumerate_cmd->add_option("--upper", upper_file, "upper polytope JSON file");
    enumerate_cmd->add_option("--json", json_path, "write JSON to PATH");

    auto* embed_cmd = app.add_subcommand("embed", "search for a unimodular embedding of one polytope into another");
    sub_src.attach(embed_cmd, "sub");
    target_src.attach(embed_cmd, "target");
    embed_cmd->add_flag("--allow-translation", allow_translation, "also allow lattice translations");
    embed_cmd->add_option("--json", json_path, "write JSON to PATH");

    auto* verify_cmd = app.add_subcommand("verify", "full duality verification for a built-in case");
    verify_cmd->add_option("case", case_name, "Q16 or S16")->required();
    verify_cmd->add_option("--json", json_path, "also write the JSON certificate to PATH");
    verify_cmd->add_option("--convention", convention, "lattice point counting: total|interior|both");
    verify_cmd->add_option("--target", target_filter, "which target to judge: statement|proof|both");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInput;
    }

    try {
        if (polytope_cmd->parsed()) return cmd_polytope(weights, basis, json_path);
        if (newton_cmd->parsed()) return cmd_newton(poly_text, weights, basis, json_path);
        if (dual_cmd->parsed()) return cmd_dual(src, json_path);
        if (reflexive_cmd->parsed()) return cmd_reflexive(src, json_path);
        if (census_cmd->parsed()) return cmd_census(src, convention, json_path);
        if (enumerate_cmd->parsed()) return cmd_enumerate(case_name, lower_file, upper_file, json_path);
        if (embed_cmd->parsed()) return cmd_embed(sub_src, target_src, allow_translation, json_path);
        if (verify_cmd->parsed()) return cmd_verify(case_name, json_path, convention, target_filter);
    } catch (const FixtureMismatchError& e) {
        std::cerr << "fixture mismatch: " << e.what() << "\n";
        return kExitFixture;
    } catch (const OverflowError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NonRepresentableError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
