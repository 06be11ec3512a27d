// Command-line front end: builds orbit categories and orbit-space models,
// computes exact homology and fundamental-group data, and runs the full
// verification suite.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "properclass/colimits.hpp"
#include "properclass/comma.hpp"
#include "properclass/errors.hpp"
#include "properclass/euclidean.hpp"
#include "properclass/nerve.hpp"
#include "properclass/orbit.hpp"
#include "properclass/serialize.hpp"
#include "properclass/verify_suite.hpp"

using namespace properclass;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitResourceBound = 2;
constexpr int kExitBadInput = 3;

struct Output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text << std::endl;
        } else {
            std::ofstream out(path);
            if (!out) throw Error("cannot open output file: " + path);
            out << text << std::endl;
        }
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PermGroup load_perm_group(const std::string& name_or_file) {
    std::ifstream probe(name_or_file);
    if (probe.good()) return parse_perm_group(slurp(name_or_file));
    return catalogue_perm_group(name_or_file);
}

SimplicialComplex load_complex(const std::string& path) {
    std::string text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return complex_from_json(text);
    return parse_complex_text(text);
}

SimplicialMap load_map(const std::string& path) {
    // lines `v w`: source vertex, image vertex
    std::istringstream in(slurp(path));
    std::vector<std::pair<int, int>> pairs;
    int v, w;
    while (in >> v >> w) pairs.push_back({v, w});
    int max_v = -1;
    for (auto [a, b] : pairs) max_v = std::max(max_v, a);
    SimplicialMap map;
    map.vertex_image.assign(max_v + 1, -1);
    for (auto [a, b] : pairs) map.vertex_image[a] = b;
    for (int img : map.vertex_image)
        if (img < 0) throw ParseError("vertex map does not cover the source: " + path);
    return map;
}

int cmd_group(const std::string& name, bool subgroups, const std::string& format,
              const Output& out) {
    if (name.empty()) {
        std::ostringstream text;
        if (format == "json") {
            text << "{\"schema\":1,\"catalogue\":[";
            auto names = catalogue_perm_group_names();
            for (size_t i = 0; i < names.size(); ++i) text << (i ? "," : "") << "\"" << names[i] << "\"";
            text << "],\"euclidean\":[";
            auto eu = euclidean_catalogue_names();
            for (size_t i = 0; i < eu.size(); ++i) text << (i ? "," : "") << "\"" << eu[i] << "\"";
            text << "]}";
        } else {
            text << "finite groups:";
            for (const auto& n : catalogue_perm_group_names()) text << " " << n;
            text << "\neuclidean groups:";
            for (const auto& n : euclidean_catalogue_names()) text << " " << n;
        }
        out.write(text.str());
        return kExitOk;
    }
    PermGroup g = load_perm_group(name);
    std::ostringstream text;
    if (format == "json") {
        text << "{\"schema\":1,\"name\":\"" << name << "\",\"order\":" << g.order();
        if (subgroups) {
            auto subs = all_subgroups(g);
            text << ",\"subgroups\":[";
            for (size_t i = 0; i < subs.size(); ++i) text << (i ? "," : "") << subs[i].order();
            text << "]";
        }
        text << "}";
    } else {
        text << name << ": order " << g.order() << ", degree " << g.degree;
        if (subgroups) {
            auto subs = all_subgroups(g);
            text << "\nsubgroups (" << subs.size() << "):";
            for (const auto& s : subs) {
                text << "\n  order " << s.order() << ": {";
                for (size_t i = 0; i < s.elements.size(); ++i)
                    text << (i ? ", " : "") << s.elements[i].cycle_string();
                text << "}";
            }
        }
    }
    out.write(text.str());
    return kExitOk;
}

int cmd_orbitcat(const std::string& name, bool total, int fixed, int max_dim,
                 const std::string& emit_category, const std::string& format,
                 const Output& out) {
    PermGroup g = load_perm_group(name);
    StandardModel m = standard_model(g, finite_family(g));
    FiniteCategory fixed_cat;
    if (fixed >= 0) {
        if (fixed >= static_cast<int>(m.family.members.size()))
            throw ParseError("--fixed index out of range; the family has " +
                             std::to_string(m.family.members.size()) + " members");
        fixed_cat = fixed_subcategory(m.total.category, m.action, m.family.members[fixed]);
    }
    const FiniteCategory& cat =
        fixed >= 0 ? fixed_cat : (total ? m.total.category : m.orbit.category);
    if (!emit_category.empty()) {
        std::ofstream f(emit_category);
        if (!f) throw Error("cannot open output file: " + emit_category);
        f << category_to_json(cat) << std::endl;
    }
    HomologyResult h = homology_of_nerve(cat, max_dim);
    std::ostringstream text;
    if (format == "json") {
        std::ostringstream extra;
        extra << "{\"schema\":1,\"group\":\"" << name << "\",\"category\":\""
              << (fixed >= 0 ? "fixed" : (total ? "grothendieck" : "orbit"))
              << "\",\"objects\":" << cat.num_objects()
              << ",\"morphisms\":" << cat.num_morphisms()
              << ",\"homology\":" << homology_to_json(h) << "}";
        text << extra.str();
    } else {
        text << (fixed >= 0 ? "fixed-point subcategory over "
                            : (total ? "grothendieck construction over " : "orbit category of "))
             << name
             << ": " << cat.num_objects() << " objects, " << cat.num_morphisms()
             << " morphisms\nnerve homology (degrees 0-" << (max_dim - 1)
             << "): " << h.to_string();
        auto term = cat.terminal_object();
        if (term) text << "\nterminal object: " << cat.objects[*term];
        auto init = cat.initial_object();
        if (init) text << "\ninitial object: " << cat.objects[*init];
    }
    out.write(text.str());
    return kExitOk;
}

int cmd_bbar(const std::string& name, int refine, const std::string& emit_complex,
             const std::string& format, const Output& out) {
    EuclideanGroupSpec spec = catalogue_group(name);
    if (!emit_complex.empty()) {
        OrbifoldModel model = bbar_model(spec, refine);
        std::ofstream f(emit_complex);
        if (!f) throw Error("cannot open output file: " + emit_complex);
        f << complex_to_text(model.complex);
    }
    NullificationReport rep = nullification_report(spec, refine);
    if (format == "json") {
        out.write(nullification_report_to_json(rep));
    } else {
        std::ostringstream text;
        text << rep.claim << "\n";
        text << "model homology: " << rep.model_homology.to_string() << "\n";
        text << "pi1: model " << rep.pi1.left.to_string() << " vs torsion quotient "
             << rep.pi1.right.to_string();
        if (rep.pi1.orders_checked)
            text << " (orders " << *rep.pi1.left_order << " and " << *rep.pi1.right_order << ")";
        text << "\nverdict: " << rep.verdict;
        out.write(text.str());
    }
    return rep.verdict == "consistent" ? kExitOk : kExitVerificationFailure;
}

int cmd_colimit(const std::string& op, const std::vector<std::string>& inputs,
                const std::vector<std::string>& maps, int base1, int base2,
                const std::string& format, const Output& out) {
    SimplicialComplex result;
    if (op == "product") {
        if (inputs.size() != 2) throw ParseError("product needs two complexes");
        result = product_complex(load_complex(inputs[0]), load_complex(inputs[1]));
    } else if (op == "wedge") {
        if (inputs.size() != 2) throw ParseError("wedge needs two complexes");
        result = wedge_complex(load_complex(inputs[0]), base1, load_complex(inputs[1]), base2);
    } else if (op == "pushout") {
        if (inputs.size() != 3 || maps.size() != 2)
            throw ParseError("pushout needs A X Y and two vertex maps");
        result = pushout_complex(load_complex(inputs[0]), load_complex(inputs[1]),
                                 load_complex(inputs[2]), load_map(maps[0]), load_map(maps[1]));
    } else if (op == "telescope") {
        if (inputs.size() < 2 || maps.size() != inputs.size() - 1)
            throw ParseError("telescope needs n complexes and n-1 vertex maps");
        std::vector<SimplicialComplex> stages;
        std::vector<SimplicialMap> stage_maps;
        for (const auto& f : inputs) stages.push_back(load_complex(f));
        for (const auto& f : maps) stage_maps.push_back(load_map(f));
        result = telescope_complex(stages, stage_maps);
    } else {
        throw ParseError("unknown colimit operation: " + op);
    }
    HomologyResult h = homology(result);
    if (format == "json") {
        std::ostringstream text;
        text << "{\"schema\":1,\"op\":\"" << op << "\",\"complex\":" << complex_to_json(result)
             << ",\"homology\":" << homology_to_json(h) << "}";
        out.write(text.str());
    } else {
        std::ostringstream text;
        text << op << ": " << result.num_vertices << " vertices, "
             << result.total_simplices() << " simplices\nhomology: " << h.to_string();
        out.write(text.str());
    }
    return kExitOk;
}

int cmd_comma(const std::string& file, int sigma, int max_dim, long max_order,
              const std::string& format, const Output& out) {
    SimplicialComplex x = load_complex(file);
    if (sigma < 0 || sigma >= x.total_simplices())
        throw ParseError("--sigma out of range; the complex has " +
                         std::to_string(x.total_simplices()) + " simplices");
    OvercategoryReport rep = check_contractible_overcategory(x, sigma, max_dim, max_order);
    if (format == "json") {
        out.write(overcategory_report_to_json(rep));
    } else {
        std::ostringstream text;
        text << "overcategory at simplex " << sigma << ": " << rep.objects
             << " objects\nnerve cells:";
        for (long c : rep.cell_counts) text << " " << c;
        text << "\nhomology: " << rep.homology.to_string() << "\n"
             << (rep.acyclic ? "acyclic" : "not acyclic");
        out.write(text.str());
    }
    return kExitOk;
}

int cmd_verify(uint64_t seed, int jobs, int refine, const std::string& format,
               const Output& out) {
    SuiteOptions opts;
    opts.seed = seed;
    opts.jobs = jobs;
    opts.refinement = refine;
    std::vector<VerificationReport> reports = run_paper_suite(opts);
    if (format == "json") {
        out.write(reports_to_json(reports));
    } else {
        std::ostringstream text;
        for (const auto& r : reports) {
            text << r.id << " [" << r.verdict << "] (" << std::fixed << r.seconds << "s) "
                 << r.claim << "\n    " << r.computed << "\n";
        }
        text << (all_passed(reports) ? "suite passed" : "suite FAILED");
        out.write(text.str());
    }
    return all_passed(reports) ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite models of classifying spaces for proper actions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // group
    auto* group = app.add_subcommand("group", "catalogue listing and subgroup enumeration");
    std::string group_name;
    bool subgroups = false;
    group->add_option("--name", group_name, "catalogue name or group file");
    group->add_flag("--subgroups", subgroups, "enumerate all subgroups");

    // orbitcat
    auto* orbitcat = app.add_subcommand("orbitcat", "orbit category and its nerve homology");
    std::string oc_group;
    bool oc_total = false;
    int oc_fixed = -1;
    int oc_maxdim = 5;
    std::string emit_category;
    orbitcat->add_option("--group", oc_group, "catalogue name or group file")->required();
    orbitcat->add_flag("--grothendieck", oc_total, "use the total category instead");
    orbitcat->add_option("--fixed", oc_fixed,
                         "fixed-point subcategory of the total category for the k-th "
                         "family member");
    orbitcat->add_option("--max-dim", oc_maxdim, "nerve truncation dimension");
    orbitcat->add_option("--emit-category", emit_category, "write the category as JSON");

    // bbar
    auto* bbar = app.add_subcommand("bbar", "orbit-space model: homology and pi1 report");
    std::string bbar_group;
    std::string emit_complex;
    int refine = 3;
    bbar->add_option("--group", bbar_group, "euclidean catalogue name")->required();
    bbar->add_option("--refine", refine, "torus refinement level");
    bbar->add_option("--emit-complex", emit_complex, "write the orbit-space complex to a file");

    // colimit
    auto* colimit = app.add_subcommand("colimit", "product/wedge/pushout/telescope of complexes");
    std::string col_op;
    std::vector<std::string> col_inputs, col_maps;
    int base1 = 0, base2 = 0;
    colimit->add_option("--op", col_op, "product | wedge | pushout | telescope")->required();
    colimit->add_option("--inputs", col_inputs, "complex files")->required();
    colimit->add_option("--maps", col_maps, "vertex map files (pushout, telescope)");
    colimit->add_option("--base1", base1, "wedge basepoint in the first complex");
    colimit->add_option("--base2", base2, "wedge basepoint in the second complex");

    // comma
    auto* comma = app.add_subcommand("comma", "overcategory of the localized simplex category");
    std::string comma_file;
    int sigma = 0, comma_maxdim = 4;
    long comma_maxorder = 120;
    comma->add_option("--complex", comma_file, "complex file")->required();
    comma->add_option("--sigma", sigma, "global simplex index");
    comma->add_option("--max-dim", comma_maxdim, "nerve truncation dimension");
    comma->add_option("--max-group-order", comma_maxorder,
                      "bound for the fundamental group certificate");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "paper";
    uint64_t seed = 20240901;
    int jobs = 1;
    int verify_refine = 3;
    verify->add_option("--suite", suite, "suite name (paper)")
        ->check(CLI::IsMember({"paper"}));
    verify->add_option("--seed", seed, "seed for the randomized property items");
    verify->add_option("--jobs", jobs, "run suite items concurrently");
    verify->add_option("--refine", verify_refine, "torus refinement level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }
    Output out{out_path};

    try {
        if (group->parsed()) return cmd_group(group_name, subgroups, format, out);
        if (orbitcat->parsed())
            return cmd_orbitcat(oc_group, oc_total, oc_fixed, oc_maxdim, emit_category, format,
                                out);
        if (bbar->parsed()) return cmd_bbar(bbar_group, refine, emit_complex, format, out);
        if (colimit->parsed())
            return cmd_colimit(col_op, col_inputs, col_maps, base1, base2, format, out);
        if (comma->parsed())
            return cmd_comma(comma_file, sigma, comma_maxdim, comma_maxorder, format, out);
        if (verify->parsed()) return cmd_verify(seed, jobs, verify_refine, format, out);
    } catch (const SizeBoundExceeded& e) {
        std::cerr << "resource bound exceeded: " << e.what() << std::endl;
        return kExitResourceBound;
    } catch (const OrderBoundExceeded& e) {
        std::cerr << "resource bound exceeded: " << e.what() << std::endl;
        return kExitResourceBound;
    } catch (const ParseError& e) {
        std::cerr << "bad input: " << e.what() << std::endl;
        return kExitBadInput;
    } catch (const UnknownGroup& e) {
        std::cerr << "bad input: " << e.what() << std::endl;
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitVerificationFailure;
    }
    return kExitBadInput;
}
