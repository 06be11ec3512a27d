#include "properclass/orbit.hpp"

#include <algorithm>
#include <map>

namespace properclass {

std::vector<std::vector<Perm>> left_cosets(const PermGroup& group, const Subgroup& sub) {
    std::map<Perm, std::vector<Perm>> by_rep;  // min element -> coset
    for (const Perm& g : group.elements) {
        Perm rep = g;
        for (const Perm& h : sub.elements) rep = std::min(rep, g * h);
        by_rep[rep].push_back(g);
    }
    std::vector<std::vector<Perm>> out;
    out.reserve(by_rep.size());
    for (auto& [rep, coset] : by_rep) {
        std::sort(coset.begin(), coset.end());
        out.push_back(std::move(coset));
    }
    return out;
}

namespace {

bool conjugates_into(const Perm& g, const Subgroup& k, const Subgroup& h) {
    Perm ginv = g.inverse();
    for (const Perm& x : k.elements)
        if (!h.contains(ginv * x * g)) return false;
    return true;
}

}  // namespace

OrbitCategory orbit_category(const PermGroup& group, const FamilySpec& family,
                             const Limits& limits) {
    validate_family(group, family);

    OrbitCategory out;
    FiniteCategory& cat = out.category;
    int n = static_cast<int>(family.members.size());
    for (int i = 0; i < n; ++i)
        cat.objects.push_back("G/H" + std::to_string(i));

    // morphisms G/K -> G/H: transporter cosets, canonical representative first
    std::map<std::pair<int, std::vector<int>>, int> by_coset;  // (target H, coset) -> morphism
    long count = 0;
    for (int k = 0; k < n; ++k) {
        for (int h = 0; h < n; ++h) {
            const Subgroup& K = family.members[k];
            const Subgroup& H = family.members[h];
            std::vector<Perm> reps_seen;
            for (const Perm& g : group.elements) {
                if (!conjugates_into(g, K, H)) continue;
                Perm rep = g;
                for (const Perm& x : H.elements) rep = std::min(rep, g * x);
                if (std::find(reps_seen.begin(), reps_seen.end(), rep) != reps_seen.end())
                    continue;
                reps_seen.push_back(rep);
            }
            std::sort(reps_seen.begin(), reps_seen.end());
            for (const Perm& rep : reps_seen) {
                if (++count > limits.max_morphisms)
                    throw SizeBoundExceeded("orbit category exceeds morphism bound");
                cat.add_morphism(k, h, rep.cycle_string());
                out.mor_rep.push_back(rep);
            }
        }
    }

    // composition [w1];[w2] = [w1*w2], looked up by canonicalizing the coset
    auto canonical = [&](const Perm& g, int h) {
        Perm rep = g;
        for (const Perm& x : family.members[h].elements) rep = std::min(rep, g * x);
        return rep;
    };
    std::map<std::tuple<int, int, Perm>, int> find_mor;  // (src, dst, rep) -> id
    for (int m = 0; m < cat.num_morphisms(); ++m)
        find_mor[{cat.mor_src[m], cat.mor_dst[m], out.mor_rep[m]}] = m;
    for (int m1 = 0; m1 < cat.num_morphisms(); ++m1)
        for (int m2 = 0; m2 < cat.num_morphisms(); ++m2) {
            if (cat.mor_dst[m1] != cat.mor_src[m2]) continue;
            Perm rep = canonical(out.mor_rep[m1] * out.mor_rep[m2], cat.mor_dst[m2]);
            auto it = find_mor.find({cat.mor_src[m1], cat.mor_dst[m2], rep});
            if (it == find_mor.end()) throw Error("orbit category: composite missing");
            cat.set_composition(m1, m2, it->second);
        }

    std::vector<int> ids(n, -1);
    Perm e = Perm::identity(group.degree);
    for (int i = 0; i < n; ++i) {
        auto it = find_mor.find({i, i, canonical(e, i)});
        if (it == find_mor.end()) throw Error("orbit category: identity missing");
        ids[i] = it->second;
    }
    cat.finish(ids);
    return out;
}

CatValuedFunctor standard_coset_functor(const PermGroup& group, const FamilySpec& family,
                                        const OrbitCategory& orbit) {
    CatValuedFunctor f;
    f.source = orbit.category;

    std::vector<std::vector<std::vector<Perm>>> cosets;  // per subgroup
    for (const Subgroup& sub : family.members) cosets.push_back(left_cosets(group, sub));

    auto coset_index = [&](int h, const Perm& g) {
        for (size_t i = 0; i < cosets[h].size(); ++i)
            if (std::binary_search(cosets[h][i].begin(), cosets[h][i].end(), g))
                return static_cast<int>(i);
        throw Error("coset index not found");
    };

    // fibers: discrete categories on the coset sets
    for (size_t h = 0; h < family.members.size(); ++h) {
        FiniteCategory fiber;
        std::vector<int> ids;
        for (size_t c = 0; c < cosets[h].size(); ++c) {
            fiber.objects.push_back(cosets[h][c].front().cycle_string() + "H" + std::to_string(h));
            ids.push_back(fiber.add_morphism(static_cast<int>(c), static_cast<int>(c), "id"));
        }
        for (int c = 0; c < fiber.num_objects(); ++c) fiber.set_composition(ids[c], ids[c], ids[c]);
        fiber.finish(ids);
        f.fibers.push_back(std::move(fiber));
    }

    // morphism [w]: G/K -> G/H sends aK to (a*w)H
    for (int m = 0; m < orbit.category.num_morphisms(); ++m) {
        int k = orbit.category.mor_src[m];
        int h = orbit.category.mor_dst[m];
        CatValuedFunctor::FiberMap fm;
        for (size_t c = 0; c < cosets[k].size(); ++c) {
            int target = coset_index(h, cosets[k][c].front() * orbit.mor_rep[m]);
            fm.obj_map.push_back(target);
        }
        for (int o : fm.obj_map) fm.mor_map.push_back(f.fibers[h].identity[o]);
        f.on_mor.push_back(std::move(fm));
    }
    f.validate();
    return f;
}

StandardModel standard_model(const PermGroup& group, const FamilySpec& family,
                             const Limits& limits) {
    StandardModel model;
    model.group = group;
    model.family = family;
    model.orbit = orbit_category(group, family, limits);
    model.functor = standard_coset_functor(group, family, model.orbit);
    model.total = grothendieck(model.functor, limits);

    // left multiplication action on the total category
    std::vector<std::vector<std::vector<Perm>>> cosets;
    for (const Subgroup& sub : family.members) cosets.push_back(left_cosets(group, sub));
    auto coset_index = [&](int h, const Perm& g) {
        for (size_t i = 0; i < cosets[h].size(); ++i)
            if (std::binary_search(cosets[h][i].begin(), cosets[h][i].end(), g))
                return static_cast<int>(i);
        throw Error("coset index not found");
    };
    // object lookup per (subgroup, coset); a total-category morphism is
    // determined by its base morphism and its source
    std::map<std::pair<int, int>, int> obj_of;
    for (int o = 0; o < model.total.category.num_objects(); ++o)
        obj_of[model.total.object_parts[o]] = o;
    std::map<std::pair<int, int>, int> mor_of;  // (u, source object)
    for (int m = 0; m < model.total.category.num_morphisms(); ++m)
        mor_of[{model.total.morphism_parts[m].u, model.total.category.mor_src[m]}] = m;

    model.action.group = group;
    for (const Perm& g : group.elements) {
        CatFunctor functor;
        for (int o = 0; o < model.total.category.num_objects(); ++o) {
            auto [h, c] = model.total.object_parts[o];
            int c2 = coset_index(h, g * cosets[h][c].front());
            functor.obj_map.push_back(obj_of.at({h, c2}));
        }
        for (int m = 0; m < model.total.category.num_morphisms(); ++m) {
            int u = model.total.morphism_parts[m].u;
            int src2 = functor.obj_map[model.total.category.mor_src[m]];
            auto it = mor_of.find({u, src2});
            if (it == mor_of.end()) throw Error("action: translated morphism missing");
            functor.mor_map.push_back(it->second);
        }
        model.action.functors.push_back(std::move(functor));
    }
    model.action.validate(model.total.category);
    return model;
}

FiniteCategory fixed_subcategory(const FiniteCategory& category,
                                 const GroupActionOnCategory& action, const Subgroup& k) {
    std::vector<int> fixed;
    for (int o = 0; o < category.num_objects(); ++o) {
        bool ok = true;
        for (const Perm& g : k.elements) {
            int gi = action.group.element_index(g);
            if (gi < 0) throw Error("fixed_subcategory: element outside acting group");
            if (action.functors[gi].obj_map[o] != o) {
                ok = false;
                break;
            }
        }
        if (ok) fixed.push_back(o);
    }
    return category.full_subcategory(fixed);
}

CatFunctor quotient_orbit_isomorphism(const StandardModel& model,
                                      const QuotientCategory& quotient) {
    const FiniteCategory& q = quotient.category;
    CatFunctor f;
    f.obj_map.assign(q.num_objects(), -1);
    f.mor_map.assign(q.num_morphisms(), -1);
    for (int o = 0; o < model.total.category.num_objects(); ++o)
        f.obj_map[quotient.object_orbit[o]] = model.total.object_parts[o].first;
    for (int m = 0; m < model.total.category.num_morphisms(); ++m)
        f.mor_map[quotient.morphism_orbit[m]] = model.total.morphism_parts[m].u;
    if (!is_isomorphism(f, q, model.orbit.category))
        throw Error("quotient of the Grothendieck construction is not the orbit category");
    return f;
}

}  // namespace properclass
