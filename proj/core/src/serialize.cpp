#include "properclass/serialize.hpp"

#include <json.hpp>

namespace properclass {

using nlohmann::json;

namespace {

json homology_json(const HomologyResult& h) {
    json betti = json::array();
    json torsion = json::array();
    for (const auto& g : h.groups) {
        betti.push_back(g.betti);
        json t = json::array();
        for (const auto& d : g.torsion) {
            if (d.fits_slong_p())
                t.push_back(d.get_si());
            else
                t.push_back(d.get_str());
        }
        torsion.push_back(t);
    }
    return json{{"betti", betti}, {"torsion", torsion}};
}

}  // namespace

std::string homology_to_json(const HomologyResult& h) {
    json j = homology_json(h);
    j["schema"] = 1;
    return j.dump(2);
}

std::string category_to_json(const FiniteCategory& c) {
    json j;
    j["schema"] = 1;
    j["objects"] = c.objects;
    json morphisms = json::array();
    for (int m = 0; m < c.num_morphisms(); ++m)
        morphisms.push_back(json{{"id", m},
                                 {"src", c.mor_src[m]},
                                 {"dst", c.mor_dst[m]},
                                 {"label", c.mor_labels[m]},
                                 {"identity", c.is_identity(m)}});
    j["morphisms"] = morphisms;
    json comp = json::array();
    for (const auto& [key, gf] : c.comp) {
        int f = static_cast<int>(key >> 32);
        int g = static_cast<int>(key & 0xffffffffu);
        comp.push_back(json::array({f, g, gf}));
    }
    j["compositions"] = comp;
    return j.dump(2);
}

std::string complex_to_json(const SimplicialComplex& x) {
    json j;
    j["schema"] = 1;
    j["vertices"] = x.num_vertices;
    json simplices = json::array();
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices[k]) simplices.push_back(s);
    j["simplices"] = simplices;
    return j.dump(2);
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = json::parse(text);
    int nv = j.at("vertices").get<int>();
    std::vector<std::vector<int>> gens;
    for (const auto& s : j.at("simplices")) gens.push_back(s.get<std::vector<int>>());
    return SimplicialComplex::from_simplices(nv, gens);
}

namespace {

json report_json(const VerificationReport& r) {
    return json{{"id", r.id},
                {"claim", r.claim},
                {"computed", r.computed},
                {"verdict", r.verdict},
                {"seconds", r.seconds}};
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
    json j = report_json(r);
    j["schema"] = 1;
    return j.dump(2);
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    json items = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        items.push_back(report_json(r));
        if (r.verdict != "pass") ok = false;
    }
    return json{{"schema", 1}, {"suite", "paper"}, {"passed", ok}, {"items", items}}.dump(2);
}

std::string nullification_report_to_json(const NullificationReport& r) {
    json j;
    j["schema"] = 1;
    j["group"] = r.group;
    j["refinement"] = r.refinement;
    j["claim"] = r.claim;
    j["homology"] = homology_json(r.model_homology);
    j["expected_betti"] = r.expected_betti;
    j["homology_matches"] = r.homology_matches;
    j["pi1"] = json{{"model_abelianization", r.pi1.left.to_string()},
                    {"quotient_abelianization", r.pi1.right.to_string()},
                    {"abelianizations_match", r.pi1.abelianizations_match},
                    {"orders_checked", r.pi1.orders_checked},
                    {"orders_match", r.pi1.orders_match}};
    if (r.pi1.left_order) j["pi1"]["model_order"] = *r.pi1.left_order;
    if (r.pi1.right_order) j["pi1"]["quotient_order"] = *r.pi1.right_order;
    if (r.normalizer_prediction_matches)
        j["normalizer_prediction_matches"] = *r.normalizer_prediction_matches;
    j["verdict"] = r.verdict;
    return j.dump(2);
}

std::string overcategory_report_to_json(const OvercategoryReport& r) {
    json j;
    j["schema"] = 1;
    j["sigma"] = r.sigma;
    j["objects"] = r.objects;
    j["cell_counts"] = r.cell_counts;
    j["homology"] = homology_json(r.homology);
    j["acyclic"] = r.acyclic;
    return j.dump(2);
}

}  // namespace properclass
