#include "properclass/comma.hpp"

#include <algorithm>
#include <sstream>

#include "properclass/errors.hpp"
#include "properclass/nerve.hpp"

namespace properclass {

FiniteFundamentalGroupoid localize_simplex_category(const SimplicialComplex& x,
                                                    long max_group_order) {
    if (!x.connected()) throw DisconnectedComplex("localization needs a connected complex");

    FiniteFundamentalGroupoid out;
    out.base = x;
    out.subdivision = barycentric_subdivision(x);

    EdgePathData edge_data = edge_path_data(out.subdivision, 0);
    // generous working budget: enumerations define redundant cosets
    long budget = std::max<long>(1000, 50 * max_group_order);
    CosetTable table = todd_coxeter(edge_data.presentation, {}, budget);
    if (table.status != CosetTable::Status::complete)
        throw InfiniteOrUncertifiedPi1("coset enumeration overflowed; fundamental group "
                                       "not certified finite");
    if (table.index() > max_group_order)
        throw InfiniteOrUncertifiedPi1("fundamental group larger than the requested bound");
    out.group = group_table(edge_data.presentation, table);

    // associativity of the certified multiplication table
    for (long a = 0; a < out.group.order; ++a)
        for (long b = 0; b < out.group.order; ++b)
            for (long c = 0; c < out.group.order; ++c)
                if (out.group.mult[out.group.mult[a][b]][c] !=
                    out.group.mult[a][out.group.mult[b][c]])
                    throw Error("certified group table is not associative");

    // class of each face inclusion: tree path to tau, the subdivision
    // edge (tau, sigma), tree path back from sigma
    auto trace = [&](const Word& w) {
        int c = 0;
        for (int letter : w) c = table.act(c, letter);
        return c;
    };
    for (int dt = 0; dt <= x.dim(); ++dt)
        for (const auto& tau : x.simplices[dt]) {
            int gt = simplex_global_index(x, tau);
            for (int ds = dt + 1; ds <= x.dim(); ++ds)
                for (const auto& sigma : x.simplices[ds]) {
                    if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end()))
                        continue;
                    int gs = simplex_global_index(x, sigma);
                    int e = out.subdivision.simplex_index({std::min(gt, gs), std::max(gt, gs)});
                    if (e < 0) throw Error("face pair missing from the subdivision");
                    Word loop = edge_data.tree_path(out.subdivision, gt);
                    loop.push_back(gt < gs ? e + 1 : -(e + 1));
                    Word back = invert_word(edge_data.tree_path(out.subdivision, gs));
                    loop.insert(loop.end(), back.begin(), back.end());
                    out.face_class[{gt, gs}] = trace(free_reduce(loop));
                }
        }

    // functoriality of the face classes on composable inclusions
    for (const auto& [pair1, h1] : out.face_class) {
        for (const auto& [pair2, h2] : out.face_class) {
            if (pair1.second != pair2.first) continue;
            auto it = out.face_class.find({pair1.first, pair2.second});
            if (it == out.face_class.end()) throw Error("face classes not closed");
            if (it->second != out.group.mult[h1][h2])
                throw Error("face classes are not functorial");
        }
    }
    return out;
}

FiniteCategory overcategory(const FiniteFundamentalGroupoid& groupoid, int sigma) {
    long n_simp = groupoid.simplices();
    if (sigma < 0 || sigma >= n_simp) throw Error("sigma out of range");
    long order = groupoid.group.order;

    FiniteCategory cat;
    auto obj = [&](long tau, long g) { return static_cast<int>(tau * order + g); };
    for (long tau = 0; tau < n_simp; ++tau)
        for (long g = 0; g < order; ++g) {
            std::ostringstream label;
            label << "(" << tau << ", g" << g << ")";
            cat.objects.push_back(label.str());
        }

    // identities
    std::vector<int> ids(cat.num_objects(), -1);
    std::vector<std::vector<int>> mor(cat.num_objects(),
                                      std::vector<int>(cat.num_objects(), -1));
    for (int o = 0; o < cat.num_objects(); ++o) {
        ids[o] = cat.add_morphism(o, o, "id");
        mor[o][o] = ids[o];
    }
    // one morphism per strict face inclusion and group element:
    // (tau, g) -> (tau', h^-1 g) for h the class of tau <= tau'
    for (const auto& [pair, h] : groupoid.face_class) {
        auto [gt, gs] = pair;
        for (long g = 0; g < order; ++g) {
            long target_g = groupoid.group.mult[groupoid.group.inverse[h]][g];
            int m = cat.add_morphism(obj(gt, g), obj(gs, target_g), "face");
            mor[obj(gt, g)][obj(gs, target_g)] = m;
        }
    }
    // composition: the poset structure makes composites unique
    for (int m1 = 0; m1 < cat.num_morphisms(); ++m1)
        for (int m2 = 0; m2 < cat.num_morphisms(); ++m2) {
            if (cat.mor_dst[m1] != cat.mor_src[m2]) continue;
            int composite = mor[cat.mor_src[m1]][cat.mor_dst[m2]];
            if (composite < 0) throw Error("overcategory composition missing");
            cat.set_composition(m1, m2, composite);
        }
    cat.finish(ids);

    // sanity: the object count identity over hom sets of the localization
    if (cat.num_objects() != n_simp * order) throw Error("overcategory object count wrong");
    (void)sigma;
    return cat;
}

OvercategoryReport check_contractible_overcategory(const FiniteFundamentalGroupoid& groupoid,
                                                   int sigma, int d) {
    OvercategoryReport rep;
    rep.sigma = sigma;
    FiniteCategory cat = overcategory(groupoid, sigma);
    rep.objects = cat.num_objects();
    TruncatedSimplicialSet nerve = nerve_truncated(cat, d);
    for (int k = 0; k <= d; ++k) rep.cell_counts.push_back(nerve.cell_count(k));
    rep.homology = homology(nerve.chain_complex(), Coefficients::integers(), d - 1);
    rep.acyclic = rep.homology.acyclic();
    return rep;
}

OvercategoryReport check_contractible_overcategory(const SimplicialComplex& x, int sigma, int d,
                                                   long max_group_order) {
    return check_contractible_overcategory(localize_simplex_category(x, max_group_order), sigma,
                                           d);
}

}  // namespace properclass
