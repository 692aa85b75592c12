#include "polydual/serialize.hpp"

namespace polydual {

Json to_json(const Rat& r) {
    if (r.is_integer()) return r.num();
    return r.str();
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<Int>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    throw std::invalid_argument("expected an integer or \"num/den\" string");
}

Json to_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Vec3 vec3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-element array");
    return {j[0].get<Int>(), j[1].get<Int>(), j[2].get<Int>()};
}

Json to_json(const Vec3Q& v) { return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

Json to_json(const Mat3& m) { return Json::array({to_json(m[0]), to_json(m[1]), to_json(m[2])}); }

Json to_json(const LatticePolytope& p) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : p.vertices()) j["vertices"].push_back(to_json(v));
    j["facets"] = Json::array();
    for (const auto& f : p.facets())
        j["facets"].push_back(Json{{"normal", to_json(f.normal)}, {"offset", f.offset}});
    return j;
}

Json to_json(const RationalPolytope& p) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : p.vertices()) j["vertices"].push_back(to_json(v));
    j["facets"] = Json::array();
    for (const auto& f : p.facets())
        j["facets"].push_back(Json{{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
    return j;
}

LatticePolytope lattice_polytope_from_json(const Json& j) {
    if (!j.contains("vertices")) throw std::invalid_argument("polytope JSON lacks \"vertices\"");
    std::vector<Vec3> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(vec3_from_json(v));
    return hull(std::move(pts));  // facets are always recomputed
}

Json to_json(const ReflexivityVerdict& v) {
    Json j;
    j["outcome"] = str(v.outcome);
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

Json to_json(const SegmentCensus& c) {
    Json j;
    j["max_total"] = c.max_total;
    j["max_interior"] = c.max_interior;
    j["witnesses"] = Json::array();
    for (const auto& wseg : c.witnesses)
        j["witnesses"].push_back(Json::array({to_json(wseg.a), to_json(wseg.b)}));
    return j;
}

Json to_json(const EmbeddingWitness& w) {
    Json j;
    j["matrix"] = to_json(w.map);
    if (!is_zero3(w.translation)) j["translation"] = to_json(w.translation);
    j["image_vertices"] = Json::array();
    for (const auto& v : w.image_vertices) j["image_vertices"].push_back(to_json(v));
    return j;
}

Json to_json(const Face& f) {
    Json j;
    j["dimension"] = f.dimension;
    j["vertices"] = Json::array();
    for (const auto& v : f.vertices) j["vertices"].push_back(to_json(v));
    return j;
}

Json to_json(const WeightSystem& w) {
    return Json{{"weights", Json::array({w.w(0), w.w(1), w.w(2), w.w(3)})}, {"degree", w.degree()}};
}

Json to_json(const LatticeBasis& b) {
    auto vec4 = [](const Vec4& v) { return Json::array({v[0], v[1], v[2], v[3]}); };
    return Json::array({vec4(b.e1), vec4(b.e2), vec4(b.e3)});
}

Json to_json(const DualityReport& r) {
    Json j;
    j["case"] = r.case_name;
    j["weight_system"] = to_json(r.weights);
    j["basis"] = to_json(r.basis);
    j["weight_polytope"] = to_json(r.weight_poly);
    j["newton_polytope"] = to_json(r.newton_poly);
    j["newton_reflexivity"] = to_json(r.newton_verdict);

    j["targets"] = Json::array();
    for (const auto& t : r.targets) {
        Json tj;
        tj["label"] = t.label;
        tj["weight_system"] = to_json(t.weights);
        tj["basis"] = to_json(t.basis);
        tj["polytope"] = to_json(t.polytope);
        tj["census"] = to_json(t.census);
        tj["verdict"] = t.no_duality ? "no duality" : "duality holds";
        j["targets"].push_back(std::move(tj));
    }

    j["intermediates"] = Json::array();
    for (const auto& inter : r.intermediates) {
        Json ij;
        ij["polytope"] = to_json(inter.polytope);
        ij["dual"] = to_json(inter.dual);
        ij["in_reference_family"] = inter.in_reference_family;
        ij["obstructing_edge_present"] = inter.gamma_is_edge;
        if (inter.gamma_is_edge) {
            ij["obstructing_edge_dual"] = to_json(*inter.gamma_dual);
            ij["obstructing_edge_dual_counts"] =
                Json{{"total", inter.gamma_dual_total}, {"interior", inter.gamma_dual_interior}};
        }
        ij["embeddings"] = Json::array();
        for (std::size_t t = 0; t < inter.embedding.size(); ++t) {
            Json ej;
            ej["target"] = r.targets[t].label;
            if (inter.gamma_is_edge) ej["census_obstruction"] = static_cast<bool>(inter.census_obstruction[t]);
            if (inter.embedding[t]) {
                ej["result"] = "witness";
                ej["witness"] = to_json(*inter.embedding[t]);
            } else {
                ej["result"] = "exhausted: none";
            }
            ij["embeddings"].push_back(std::move(ej));
        }
        j["intermediates"].push_back(std::move(ij));
    }

    j["dual_edge_counts"] = Json{{"total", r.gamma_star_total},
                                 {"interior", r.gamma_star_interior},
                                 {"stated", r.stated_count},
                                 {"stated_matches_convention", r.stated_count_convention}};
    j["described_intermediates_all_found"] = r.described_intermediates_all_found;
    j["notes"] = r.notes;
    j["verdict"] = r.no_duality ? "no duality" : "duality holds";
    return j;
}

}  // namespace polydual
