#include "properclass/verify_suite.hpp"

#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "properclass/colimits.hpp"
#include "properclass/comma.hpp"
#include "properclass/euclidean.hpp"
#include "properclass/nerve.hpp"
#include "properclass/orbit.hpp"
#include "properclass/pi1.hpp"
#include "properclass/smith.hpp"

namespace properclass {

namespace {

struct ItemResult {
    std::string computed;
    bool pass = false;
    bool inconclusive = false;
};

using ItemFn = std::function<ItemResult(const SuiteOptions&)>;

struct Item {
    std::string id;
    std::string claim;
    ItemFn fn;
};

std::string betti_string(const HomologyResult& h, int up_to) {
    std::ostringstream out;
    out << "[";
    for (int d = 0; d <= up_to; ++d) {
        if (d) out << ",";
        out << h.at(d).betti;
        for (const auto& t : h.at(d).torsion) out << "+Z/" << t.get_str();
    }
    out << "]";
    return out.str();
}

bool reduced_trivial_through(const HomologyResult& h, int top) {
    if (h.at(0).betti != 1 || !h.at(0).torsion.empty()) return false;
    for (int d = 1; d <= top; ++d)
        if (!h.at(d).trivial()) return false;
    return true;
}

// ---- wallpaper and line-group items ----------------------------------------

ItemResult item_orbifold(const std::string& name, const std::vector<long>& want_betti,
                         bool check_pi1, const SuiteOptions& opt) {
    EuclideanGroupSpec spec = catalogue_group(name);
    OrbifoldModel model = bbar_model(spec, opt.refinement);
    HomologyResult h = homology(model.complex);
    bool ok = true;
    for (int d = 0; d <= 2; ++d) {
        long want = d < static_cast<int>(want_betti.size()) ? want_betti[d] : 0;
        if (h.at(d).betti != want || !h.at(d).torsion.empty()) ok = false;
    }
    ItemResult res;
    std::ostringstream out;
    out << "H(orbit space of " << name << ") = " << betti_string(h, 2);
    if (check_pi1) {
        auto order = enumerate_order(edge_path_presentation(model.complex), 100000);
        if (!order) {
            res.inconclusive = true;
            out << ", pi1 enumeration overflowed";
        } else {
            out << ", |pi1| = " << *order;
            if (*order != 1) ok = false;
        }
    }
    res.computed = out.str();
    res.pass = ok && !res.inconclusive;
    return res;
}

const std::vector<std::string>& finite_catalogue() {
    static const std::vector<std::string> names{"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4"};
    return names;
}

ItemResult item_a5(const SuiteOptions& opt) {
    ItemResult res;
    std::ostringstream out;
    bool ok = true;
    for (const std::string& name : finite_catalogue()) {
        PermGroup g = catalogue_perm_group(name);
        StandardModel m = standard_model(g, finite_family(g));
        bool terminal = m.orbit.category.terminal_object().has_value();
        HomologyResult ho = homology_of_nerve(m.orbit.category, opt.nerve_dim);
        HomologyResult hg = homology_of_nerve(m.total.category, opt.nerve_dim);
        bool acyclic_o = reduced_trivial_through(ho, opt.nerve_dim - 1);
        bool acyclic_g = reduced_trivial_through(hg, opt.nerve_dim - 1);
        if (!terminal || !acyclic_o || !acyclic_g) ok = false;
        out << name << ": orbit "
            << (acyclic_o ? "acyclic" : betti_string(ho, opt.nerve_dim - 1))
            << (terminal ? ", terminal object" : ", NO terminal object") << "; total "
            << (acyclic_g ? "acyclic" : betti_string(hg, opt.nerve_dim - 1)) << ". ";
    }
    res.computed = out.str();
    res.pass = ok;
    return res;
}

ItemResult item_a6(const SuiteOptions&) {
    ItemResult res;
    std::ostringstream out;
    bool ok = true;
    for (const std::string& name : finite_catalogue()) {
        PermGroup g = catalogue_perm_group(name);
        StandardModel m = standard_model(g, finite_family(g));
        int with_initial = 0;
        for (const Subgroup& k : m.family.members) {
            FiniteCategory fixed = fixed_subcategory(m.total.category, m.action, k);
            if (fixed.initial_object().has_value()) ++with_initial;
        }
        out << name << ": " << with_initial << "/" << m.family.members.size() << ". ";
        if (with_initial != static_cast<int>(m.family.members.size())) ok = false;
    }
    res.computed = out.str();
    res.pass = ok;
    return res;
}

ItemResult item_a7(const SuiteOptions&) {
    ItemResult res;
    std::ostringstream out;
    bool ok = true;
    for (const std::string& name : finite_catalogue()) {
        PermGroup g = catalogue_perm_group(name);
        StandardModel m = standard_model(g, finite_family(g));
        try {
            QuotientCategory q = quotient_category(m.total.category, m.action);
            CatFunctor iso = quotient_orbit_isomorphism(m, q);
            bool good = is_isomorphism(iso, q.category, m.orbit.category);
            out << name << ": " << (good ? "isomorphic" : "NOT isomorphic") << ". ";
            if (!good) ok = false;
        } catch (const Error& e) {
            out << name << ": " << e.what() << ". ";
            ok = false;
        }
    }
    res.computed = out.str();
    res.pass = ok;
    return res;
}

ItemResult item_a8(const SuiteOptions&) {
    ItemResult res;
    std::ostringstream out;
    bool ok = true;
    std::vector<std::pair<const char*, SimplicialComplex>> fixtures;
    fixtures.emplace_back("interval", fixture_interval(1));
    fixtures.emplace_back("circle", fixture_circle(3));
    fixtures.emplace_back("sphere", fixture_sphere());
    fixtures.emplace_back("rp2", fixture_rp2());
    fixtures.emplace_back("torus", fixture_torus());
    for (const auto& [name, x] : fixtures) {
        HomologyResult direct = homology(x);
        HomologyResult via = homology_of_nerve(simplex_category(x), x.dim() + 1);
        bool same = true;
        for (int d = 0; d <= 2; ++d)
            if (!(direct.at(d) == via.at(d))) same = false;
        out << name << ": " << (same ? "equal" : "DIFFERENT") << ". ";
        if (!same) ok = false;
    }
    res.computed = out.str();
    res.pass = ok;
    return res;
}

ItemResult item_a9(const SuiteOptions& opt) {
    ItemResult res;
    std::ostringstream out;
    bool ok = true;
    {
        HomologyResult h = homology(bbar_model(catalogue_group("Z"), opt.refinement).complex);
        bool good = h.at(0).betti == 1 && h.at(1).betti == 1 && h.at(1).torsion.empty();
        out << "Z: H1 = " << h.at(1).to_string() << ". ";
        if (!good) ok = false;
    }
    {
        HomologyResult h = homology(bbar_model(catalogue_group("Dinf"), opt.refinement).complex);
        out << "Dinf: " << (h.acyclic() ? "acyclic" : h.to_string()) << ". ";
        if (!h.acyclic()) ok = false;
    }
    for (const char* name : {"ZxZ3", "ZxZ5"}) {
        NullificationReport rep = nullification_report(catalogue_group(name), opt.refinement);
        bool good = rep.model_homology.at(1).betti == 1 &&
                    rep.model_homology.at(1).torsion.empty() && rep.pi1_consistent &&
                    rep.normalizer_prediction_matches.value_or(false);
        out << name << ": H1 = " << rep.model_homology.at(1).to_string() << ", pi1 "
            << (rep.pi1_consistent ? "matches B(G/T)" : "MISMATCH") << ". ";
        if (!good) ok = false;
    }
    res.computed = out.str();
    res.pass = ok;
    return res;
}

ItemResult item_a10(const SuiteOptions&) {
    ItemResult res;
    std::ostringstream out;
    bool ok = true;
    {
        SimplicialComplex p = product_complex(fixture_interval(1), fixture_interval(1));
        bool good = homology(p).acyclic();
        out << "product(interval,interval): " << (good ? "acyclic" : "NOT acyclic") << ". ";
        if (!good) ok = false;
    }
    {
        HomologyResult h = homology(product_complex(fixture_sphere(), fixture_sphere()));
        bool good = h.betti_vector() == std::vector<long>{1, 0, 2, 0, 1};
        for (const auto& g : h.groups)
            if (!g.torsion.empty()) good = false;
        out << "product(S2,S2): betti " << betti_string(h, 4) << ". ";
        if (!good) ok = false;
    }
    {
        HomologyResult h = homology(wedge_complex(fixture_sphere(), 0, fixture_point(), 0));
        bool good = h.at(2).betti == 1 && h.at(2).torsion.empty() && h.at(1).trivial();
        out << "wedge(S2,point): H2 = " << h.at(2).to_string() << ". ";
        if (!good) ok = false;
    }
    {
        SimplicialComplex a = SimplicialComplex::from_simplices(2, {{0}, {1}});
        SimplicialComplex z =
            pushout_complex(a, fixture_interval(1), fixture_interval(1), {{0, 1}}, {{0, 1}});
        HomologyResult h = homology(z);
        bool good = h.at(1).betti == 1 && h.at(1).torsion.empty();
        out << "pushout(two intervals over two points): H1 = " << h.at(1).to_string() << ". ";
        if (!good) ok = false;
    }
    {
        SimplicialComplex c = fixture_circle(4);
        SimplicialMap id{{0, 1, 2, 3}};
        HomologyResult h = homology(telescope_complex({c, c, c}, {id, id}));
        bool good = h.at(1).betti == 1 && h.at(1).torsion.empty() && h.at(2).trivial();
        out << "telescope(S1, 3 stages): H1 = " << h.at(1).to_string() << ". ";
        if (!good) ok = false;
    }
    res.computed = out.str();
    res.pass = ok;
    return res;
}

ItemResult item_a11(const SuiteOptions& opt) {
    ItemResult res;
    OrbifoldModel pmm = bbar_model(catalogue_group("pmm"), opt.refinement);
    OrbifoldModel dinf = bbar_model(catalogue_group("Dinf"), opt.refinement);
    SimplicialComplex prod = product_complex(dinf.complex, dinf.complex);
    HomologyResult hp = homology(pmm.complex);
    HomologyResult hq = homology(prod);
    bool ok = true;
    for (int d = 0; d <= 2; ++d)
        if (!(hp.at(d) == hq.at(d))) ok = false;
    std::ostringstream out;
    out << "H(orbit space of pmm) = " << betti_string(hp, 2)
        << ", H(product of two Dinf orbit spaces) = " << betti_string(hq, 2);
    res.computed = out.str();
    res.pass = ok;
    return res;
}

ItemResult item_a12(const SuiteOptions&) {
    ItemResult res;
    std::ostringstream out;
    bool ok = true;
    std::vector<std::pair<const char*, SimplicialComplex>> fixtures;
    fixtures.emplace_back("triangle", fixture_single_triangle());
    fixtures.emplace_back("rp2", fixture_rp2());
    fixtures.emplace_back("moore3", fixture_moore_z3());
    for (const auto& [name, x] : fixtures) {
        FiniteFundamentalGroupoid l = localize_simplex_category(x, 12);
        OvercategoryReport first = check_contractible_overcategory(l, 0, 4);
        bool all_acyclic = true;
        bool sigma_independent = true;
        for (int sigma = 1; sigma < l.simplices(); ++sigma) {
            OvercategoryReport rep = check_contractible_overcategory(l, sigma, 4);
            if (!rep.acyclic) all_acyclic = false;
            if (rep.cell_counts != first.cell_counts || !(rep.homology == first.homology))
                sigma_independent = false;
        }
        if (!first.acyclic) all_acyclic = false;
        out << name << ": overcategory H = " << first.homology.to_string() << ", "
            << (all_acyclic ? "acyclic" : "NOT acyclic") << ", sigma-"
            << (sigma_independent ? "independent" : "DEPENDENT") << ". ";
        if (!all_acyclic || !sigma_independent) ok = false;
    }
    res.computed = out.str();
    res.pass = ok;
    return res;
}

// ---- algebra oracles ---------------------------------------------------------

// independent gcd-elimination oracle, deliberately naive
std::vector<mpz_class> naive_snf(IntMatrix a) {
    std::vector<mpz_class> out;
    int t = 0;
    int n = std::min(a.rows(), a.cols());
    while (t < n) {
        int pr = -1, pc = -1;
        for (int i = t; i < a.rows() && pr < 0; ++i)
            for (int j = t; j < a.cols(); ++j)
                if (a.at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        bool again = true;
        while (again) {
            again = false;
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (int i = t + 1; i < a.rows(); ++i)
                    while (a.at(i, t) != 0) {
                        mpz_class q = a.at(i, t) / a.at(t, t);
                        a.add_row_multiple(i, t, -q);
                        if (a.at(i, t) != 0) {
                            a.swap_rows(i, t);
                            dirty = true;
                        }
                    }
                for (int j = t + 1; j < a.cols(); ++j)
                    while (a.at(t, j) != 0) {
                        mpz_class q = a.at(t, j) / a.at(t, t);
                        a.add_col_multiple(j, t, -q);
                        if (a.at(t, j) != 0) {
                            a.swap_cols(t, j);
                            dirty = true;
                        }
                    }
            }
            for (int i = t + 1; i < a.rows() && !again; ++i)
                for (int j = t + 1; j < a.cols(); ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        again = true;
                        break;
                    }
        }
        if (a.at(t, t) < 0) a.negate_row(t);
        out.push_back(a.at(t, t));
        ++t;
    }
    return out;
}

ItemResult item_a13(const SuiteOptions& opt) {
    ItemResult res;
    std::ostringstream out;
    bool ok = true;
    std::mt19937_64 rng(opt.seed);

    {
        std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
        int matches = 0;
        for (int trial = 0; trial < 500; ++trial) {
            IntMatrix m(dim(rng), dim(rng));
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
            SmithResult r = smith_normal_form(m);
            std::vector<mpz_class> nonzero;
            for (const mpz_class& d : r.diagonal())
                if (d != 0) nonzero.push_back(d);
            if (nonzero == naive_snf(m)) ++matches;
        }
        out << "snf vs oracle: " << matches << "/500. ";
        if (matches != 500) ok = false;
    }

    {
        std::uniform_int_distribution<int> nv(4, 8);
        int good = 0;
        for (int trial = 0; trial < 200; ++trial) {
            int v = nv(rng);
            std::uniform_int_distribution<int> pick(0, v - 1);
            std::vector<std::vector<int>> gens;
            for (int t = 0; t < v; ++t) gens.push_back({t});
            int triangles = 2 + static_cast<int>(rng() % 8);
            for (int t = 0; t < triangles; ++t) {
                int a = pick(rng), b = pick(rng), c = pick(rng);
                if (a == b || b == c || a == c) continue;
                gens.push_back({a, b, c});
            }
            SimplicialComplex x = SimplicialComplex::from_simplices(v, gens);
            ChainComplex cc = x.chain_complex();
            cc.validate();  // throws when the boundary condition fails
            HomologyResult h = homology(cc);
            long chi = 0;
            for (size_t d = 0; d < h.groups.size(); ++d)
                chi += (d % 2 == 0) ? h.groups[d].betti : -h.groups[d].betti;
            if (chi == x.euler_characteristic()) ++good;
        }
        out << "boundary and euler identities: " << good << "/200. ";
        if (good != 200) ok = false;
    }

    {
        int good = 0, total = 0;
        std::vector<SimplicialComplex> corpus{fixture_circle(4), fixture_sphere(), fixture_rp2(),
                                              fixture_torus(), fixture_moore_z3()};
        for (const SimplicialComplex& x : corpus) {
            ++total;
            Abelianization ab = abelianization(edge_path_presentation(x));
            HomologyResult h = homology(x);
            if (ab.rank == h.at(1).betti && ab.torsion == h.at(1).torsion) ++good;
        }
        out << "edge-path abelianization vs H1: " << good << "/" << total << ".";
        if (good != total) ok = false;
    }

    res.computed = out.str();
    res.pass = ok;
    return res;
}

std::vector<Item> build_items() {
    std::vector<Item> items;
    items.push_back({"A1",
                     "the orbit space of the plane under pmm is contractible (trivial reduced "
                     "homology in degrees 0-2, trivial fundamental group)",
                     [](const SuiteOptions& o) { return item_orbifold("pmm", {1, 0, 0}, true, o); }});
    items.push_back({"A2",
                     "the orbit space of the plane under p3 is a 2-sphere (H1 = 0, H2 = Z, "
                     "trivial fundamental group)",
                     [](const SuiteOptions& o) { return item_orbifold("p3", {1, 0, 1}, true, o); }});
    items.push_back({"A3", "the orbit space of the plane under p3m1 is contractible",
                     [](const SuiteOptions& o) { return item_orbifold("p3m1", {1, 0, 0}, true, o); }});
    items.push_back({"A4", "the orbit space for the even-word subgroup of pmm is a 2-sphere",
                     [](const SuiteOptions& o) { return item_orbifold("H_even", {1, 0, 1}, false, o); }});
    items.push_back({"A5",
                     "orbit-category and total-category nerves of the finite catalogue are "
                     "acyclic through degree 4, with a terminal object",
                     item_a5});
    items.push_back({"A6", "every fixed-point subcategory of the total category has an initial object",
                     item_a6});
    items.push_back({"A7",
                     "the quotient of the total category by the left action is the orbit "
                     "category, by an explicit isomorphism",
                     item_a7});
    items.push_back({"A8",
                     "homology is invariant under barycentric subdivision via the simplex "
                     "category, degrees 0-2",
                     item_a8});
    items.push_back({"A9",
                     "line groups: Z gives a circle, Dinf a point, Z x Z/p a circle whose "
                     "fundamental group matches B(G/T_p) = BZ",
                     item_a9});
    items.push_back({"A10", "colimit constructions: product, wedge, pushout, telescope", item_a10});
    items.push_back({"A11",
                     "the pmm orbit space has the homology of the product of two Dinf orbit spaces",
                     item_a11});
    items.push_back({"A12",
                     "every overcategory of the localized simplex category is connected and "
                     "acyclic through degree 3, independently of sigma",
                     item_a12});
    items.push_back({"A13",
                     "algebra oracles: random Smith forms match naive elimination; random "
                     "complexes satisfy boundary and Euler identities; edge-path "
                     "abelianization equals H1",
                     item_a13});
    return items;
}

}  // namespace

std::vector<std::string> paper_suite_items() {
    std::vector<std::string> ids;
    for (const Item& item : build_items()) ids.push_back(item.id);
    return ids;
}

std::vector<VerificationReport> run_paper_suite(const SuiteOptions& options) {
    std::vector<Item> items = build_items();
    std::vector<VerificationReport> reports(items.size());

    int jobs = std::max(1, options.jobs);
    std::mutex next_mutex;
    size_t next = 0;
    auto worker = [&]() {
        for (;;) {
            size_t mine;
            {
                std::lock_guard<std::mutex> lock(next_mutex);
                if (next >= items.size()) return;
                mine = next++;
            }
            const Item& item = items[mine];
            VerificationReport rep;
            rep.id = item.id;
            rep.claim = item.claim;
            auto t0 = std::chrono::steady_clock::now();
            try {
                ItemResult r = item.fn(options);
                rep.computed = r.computed;
                rep.verdict = r.pass ? "pass" : (r.inconclusive ? "inconclusive" : "fail");
            } catch (const std::exception& e) {
                rep.computed = std::string("error: ") + e.what();
                rep.verdict = "fail";
            }
            auto t1 = std::chrono::steady_clock::now();
            rep.seconds = std::chrono::duration<double>(t1 - t0).count();
            reports[mine] = std::move(rep);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict != "pass") return false;
    return !reports.empty();
}

}  // namespace properclass
