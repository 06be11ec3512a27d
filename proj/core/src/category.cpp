#include "properclass/category.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace properclass {

int FiniteCategory::compose(int f, int g) const {
    auto it = comp.find(key(f, g));
    if (it == comp.end()) throw Error("composition undefined: morphisms not composable");
    return it->second;
}

int FiniteCategory::add_morphism(int src, int dst, std::string label) {
    mor_src.push_back(src);
    mor_dst.push_back(dst);
    mor_labels.push_back(std::move(label));
    return num_morphisms() - 1;
}

void FiniteCategory::set_composition(int f, int g, int gf) {
    comp[key(f, g)] = gf;
}

void FiniteCategory::finish(const std::vector<int>& identity_of_object) {
    identity = identity_of_object;
    hom.assign(num_objects(), std::vector<std::vector<int>>(num_objects()));
    for (int m = 0; m < num_morphisms(); ++m) hom[mor_src[m]][mor_dst[m]].push_back(m);
    validate();
}

void FiniteCategory::validate() const {
    if (static_cast<int>(identity.size()) != num_objects())
        throw Error("category: identity table size mismatch");
    for (int x = 0; x < num_objects(); ++x) {
        int id = identity[x];
        if (mor_src[id] != x || mor_dst[id] != x)
            throw Error("category: identity endpoints wrong");
    }
    // two-sided unit laws
    for (int m = 0; m < num_morphisms(); ++m) {
        if (compose(identity[mor_src[m]], m) != m)
            throw Error("category: left unit law fails");
        if (compose(m, identity[mor_dst[m]]) != m)
            throw Error("category: right unit law fails");
    }
    // composition defined exactly on composable pairs
    for (const auto& [k, gf] : comp) {
        int f = static_cast<int>(k >> 32);
        int g = static_cast<int>(k & 0xffffffffu);
        if (mor_dst[f] != mor_src[g]) throw Error("category: composition on non-composable pair");
        if (mor_src[gf] != mor_src[f] || mor_dst[gf] != mor_dst[g])
            throw Error("category: composite has wrong endpoints");
    }
    for (int f = 0; f < num_morphisms(); ++f)
        for (int g : hom_all_from(mor_dst[f]))
            if (comp.find(key(f, g)) == comp.end())
                throw Error("category: composition missing on composable pair");
    // associativity on all composable triples
    for (int f = 0; f < num_morphisms(); ++f)
        for (int g : hom_all_from(mor_dst[f])) {
            int gf = compose(f, g);
            for (int h : hom_all_from(mor_dst[g]))
                if (compose(gf, h) != compose(f, compose(g, h)))
                    throw Error("category: associativity fails");
        }
}

std::vector<int> FiniteCategory::hom_all_from(int obj) const {
    std::vector<int> out;
    for (int dst = 0; dst < num_objects(); ++dst)
        out.insert(out.end(), hom[obj][dst].begin(), hom[obj][dst].end());
    return out;
}

std::optional<int> FiniteCategory::initial_object() const {
    for (int o = 0; o < num_objects(); ++o) {
        bool ok = true;
        for (int c = 0; c < num_objects() && ok; ++c)
            if (hom[o][c].size() != 1) ok = false;
        if (ok) return o;
    }
    return std::nullopt;
}

std::optional<int> FiniteCategory::terminal_object() const {
    for (int o = 0; o < num_objects(); ++o) {
        bool ok = true;
        for (int c = 0; c < num_objects() && ok; ++c)
            if (hom[c][o].size() != 1) ok = false;
        if (ok) return o;
    }
    return std::nullopt;
}

FiniteCategory FiniteCategory::full_subcategory(const std::vector<int>& object_subset) const {
    FiniteCategory sub;
    std::vector<int> obj_new(num_objects(), -1);
    for (int o : object_subset) {
        obj_new[o] = sub.num_objects();
        sub.objects.push_back(objects[o]);
    }
    std::vector<int> mor_new(num_morphisms(), -1);
    for (int m = 0; m < num_morphisms(); ++m) {
        if (obj_new[mor_src[m]] < 0 || obj_new[mor_dst[m]] < 0) continue;
        mor_new[m] = sub.add_morphism(obj_new[mor_src[m]], obj_new[mor_dst[m]], mor_labels[m]);
    }
    for (const auto& [k, gf] : comp) {
        int f = static_cast<int>(k >> 32);
        int g = static_cast<int>(k & 0xffffffffu);
        if (mor_new[f] >= 0 && mor_new[g] >= 0)
            sub.set_composition(mor_new[f], mor_new[g], mor_new[gf]);
    }
    std::vector<int> ids;
    for (int o : object_subset) ids.push_back(mor_new[identity[o]]);
    sub.finish(ids);
    return sub;
}

void CatFunctor::validate(const FiniteCategory& source, const FiniteCategory& target) const {
    if (static_cast<int>(obj_map.size()) != source.num_objects() ||
        static_cast<int>(mor_map.size()) != source.num_morphisms())
        throw Error("functor: map size mismatch");
    for (int m = 0; m < source.num_morphisms(); ++m) {
        int fm = mor_map[m];
        if (target.mor_src[fm] != obj_map[source.mor_src[m]] ||
            target.mor_dst[fm] != obj_map[source.mor_dst[m]])
            throw Error("functor: endpoints not preserved");
    }
    for (int x = 0; x < source.num_objects(); ++x)
        if (mor_map[source.identity[x]] != target.identity[obj_map[x]])
            throw Error("functor: identities not preserved");
    for (const auto& [k, gf] : source.comp) {
        int f = static_cast<int>(k >> 32);
        int g = static_cast<int>(k & 0xffffffffu);
        if (target.compose(mor_map[f], mor_map[g]) != mor_map[gf])
            throw Error("functor: composition not preserved");
    }
}

void CatValuedFunctor::validate() const {
    source.validate();
    if (fibers.size() != source.objects.size() || on_mor.size() != source.mor_src.size())
        throw Error("cat-valued functor: shape mismatch");
    for (int m = 0; m < source.num_morphisms(); ++m) {
        CatFunctor f{on_mor[m].obj_map, on_mor[m].mor_map};
        f.validate(fibers[source.mor_src[m]], fibers[source.mor_dst[m]]);
    }
    // functoriality of the fiber maps
    for (int x = 0; x < source.num_objects(); ++x) {
        const FiberMap& idm = on_mor[source.identity[x]];
        for (int o = 0; o < fibers[x].num_objects(); ++o)
            if (idm.obj_map[o] != o) throw Error("cat-valued functor: identity fiber map wrong");
    }
    for (const auto& [k, gf] : source.comp) {
        int f = static_cast<int>(k >> 32);
        int g = static_cast<int>(k & 0xffffffffu);
        const FiberMap& mf = on_mor[f];
        const FiberMap& mg = on_mor[g];
        const FiberMap& mgf = on_mor[gf];
        for (size_t o = 0; o < mf.obj_map.size(); ++o)
            if (mg.obj_map[mf.obj_map[o]] != mgf.obj_map[o])
                throw Error("cat-valued functor: fiber maps not functorial");
    }
}

void GroupActionOnCategory::validate(const FiniteCategory& category) const {
    if (functors.size() != group.elements.size())
        throw Error("action: one functor per group element required");
    for (size_t i = 0; i < functors.size(); ++i) functors[i].validate(category, category);
    int id = group.element_index(Perm::identity(group.degree));
    for (int m = 0; m < category.num_morphisms(); ++m)
        if (functors[id].mor_map[m] != m) throw Error("action: identity element must act trivially");
    // left-action axiom: functor(g*h) = functor(g) after functor(h)
    for (size_t g = 0; g < group.elements.size(); ++g)
        for (size_t h = 0; h < group.elements.size(); ++h) {
            int gh = group.element_index(group.elements[g] * group.elements[h]);
            for (int m = 0; m < category.num_morphisms(); ++m)
                if (functors[gh].mor_map[m] != functors[g].mor_map[functors[h].mor_map[m]])
                    throw Error("action: composition not compatible");
        }
}

GrothendieckCategory grothendieck(const CatValuedFunctor& functor, const Limits& limits) {
    const FiniteCategory& base = functor.source;
    FiniteCategory total;

    // objects: pairs (d, x)
    std::vector<std::vector<int>> obj_of;  // [d][x] -> total object
    obj_of.resize(base.num_objects());
    for (int d = 0; d < base.num_objects(); ++d) {
        obj_of[d].resize(functor.fibers[d].num_objects());
        for (int x = 0; x < functor.fibers[d].num_objects(); ++x) {
            obj_of[d][x] = total.num_objects();
            total.objects.push_back("(" + base.objects[d] + ", " +
                                    functor.fibers[d].objects[x] + ")");
        }
    }

    // morphisms: pairs (u: d -> d', v: F(u)(x) -> x')
    struct MorData {
        int u, v, src_d, src_x;
    };
    std::vector<MorData> data;
    long count = 0;
    for (int u = 0; u < base.num_morphisms(); ++u) {
        int d = base.mor_src[u];
        int d2 = base.mor_dst[u];
        const auto& push = functor.on_mor[u];
        for (int x = 0; x < functor.fibers[d].num_objects(); ++x) {
            int fx = push.obj_map[x];
            for (int x2 = 0; x2 < functor.fibers[d2].num_objects(); ++x2) {
                for (int v : functor.fibers[d2].hom[fx][x2]) {
                    if (++count > limits.max_morphisms)
                        throw SizeBoundExceeded("grothendieck construction exceeds morphism bound");
                    total.add_morphism(obj_of[d][x], obj_of[d2][x2],
                                       "(" + base.mor_labels[u] + ", " +
                                           functor.fibers[d2].mor_labels[v] + ")");
                    data.push_back({u, v, d, x});
                }
            }
        }
    }

    // composite lookup: (u, v) pairs are found through this map
    std::map<std::tuple<int, int, int>, int> by_parts;  // (u, src object, v) -> m
    for (int m = 0; m < total.num_morphisms(); ++m)
        by_parts[{data[m].u, obj_of[data[m].src_d][data[m].src_x], data[m].v}] = m;

    // composition: (u2, v2) ∘ (u1, v1) = (u2∘u1, v2 ∘ F(u2)(v1))
    for (int m1 = 0; m1 < total.num_morphisms(); ++m1) {
        for (int m2 = 0; m2 < total.num_morphisms(); ++m2) {
            if (total.mor_dst[m1] != total.mor_src[m2]) continue;
            int u1 = data[m1].u, u2 = data[m2].u;
            int u = base.compose(u1, u2);
            int dst_d = base.mor_dst[u2];
            int pushed_v1 = functor.on_mor[u2].mor_map[data[m1].v];
            int v = functor.fibers[dst_d].compose(pushed_v1, data[m2].v);
            auto it = by_parts.find({u, total.mor_src[m1], v});
            if (it == by_parts.end()) throw Error("grothendieck: composite not found");
            total.set_composition(m1, m2, it->second);
        }
    }

    std::vector<int> ids;
    for (int d = 0; d < base.num_objects(); ++d)
        for (int x = 0; x < functor.fibers[d].num_objects(); ++x) {
            auto it = by_parts.find({base.identity[d], obj_of[d][x], functor.fibers[d].identity[x]});
            if (it == by_parts.end()) throw Error("grothendieck: identity not found");
            ids.push_back(it->second);
        }
    total.finish(ids);

    GrothendieckCategory out;
    out.category = std::move(total);
    for (int d = 0; d < base.num_objects(); ++d)
        for (int x = 0; x < functor.fibers[d].num_objects(); ++x)
            out.object_parts.push_back({d, x});
    for (const MorData& md : data) out.morphism_parts.push_back({md.u, md.v});
    return out;
}

QuotientCategory quotient_category(const FiniteCategory& category,
                                   const GroupActionOnCategory& action) {
    action.validate(category);

    // object orbits
    std::vector<int> obj_orbit(category.num_objects(), -1);
    int n_obj_orbits = 0;
    for (int o = 0; o < category.num_objects(); ++o) {
        if (obj_orbit[o] >= 0) continue;
        for (const CatFunctor& f : action.functors) obj_orbit[f.obj_map[o]] = n_obj_orbits;
        ++n_obj_orbits;
    }
    // morphism orbits
    std::vector<int> mor_orbit(category.num_morphisms(), -1);
    std::vector<int> orbit_rep;
    for (int m = 0; m < category.num_morphisms(); ++m) {
        if (mor_orbit[m] >= 0) continue;
        int idx = static_cast<int>(orbit_rep.size());
        orbit_rep.push_back(m);
        for (const CatFunctor& f : action.functors) mor_orbit[f.mor_map[m]] = idx;
    }

    FiniteCategory q;
    q.objects.resize(n_obj_orbits);
    for (int o = 0; o < category.num_objects(); ++o)
        if (q.objects[obj_orbit[o]].empty()) q.objects[obj_orbit[o]] = "[" + category.objects[o] + "]";
    for (size_t i = 0; i < orbit_rep.size(); ++i) {
        int rep = orbit_rep[i];
        q.add_morphism(obj_orbit[category.mor_src[rep]], obj_orbit[category.mor_dst[rep]],
                       "[" + category.mor_labels[rep] + "]");
    }

    // induced composition: all representative choices must agree
    for (size_t i = 0; i < orbit_rep.size(); ++i) {
        for (size_t j = 0; j < orbit_rep.size(); ++j) {
            if (q.mor_dst[i] != q.mor_src[j]) continue;
            int m1 = orbit_rep[i];
            int composite = -1;
            for (const CatFunctor& f : action.functors) {
                int m2 = f.mor_map[orbit_rep[j]];
                if (category.mor_src[m2] != category.mor_dst[m1]) continue;
                int c = mor_orbit[category.compose(m1, m2)];
                if (composite < 0) composite = c;
                else if (composite != c)
                    throw NonCompatibleAction("quotient composition is ill-defined");
            }
            if (composite < 0)
                throw NonCompatibleAction("no composable representative found");
            q.set_composition(static_cast<int>(i), static_cast<int>(j), composite);
        }
    }

    std::vector<int> ids(n_obj_orbits, -1);
    for (int o = 0; o < category.num_objects(); ++o)
        if (ids[obj_orbit[o]] < 0) ids[obj_orbit[o]] = mor_orbit[category.identity[o]];
    q.finish(ids);
    return QuotientCategory{std::move(q), std::move(obj_orbit), std::move(mor_orbit)};
}

bool is_isomorphism(const CatFunctor& f, const FiniteCategory& source,
                    const FiniteCategory& target) {
    f.validate(source, target);
    if (source.num_objects() != target.num_objects() ||
        source.num_morphisms() != target.num_morphisms())
        return false;
    std::set<int> objs(f.obj_map.begin(), f.obj_map.end());
    std::set<int> mors(f.mor_map.begin(), f.mor_map.end());
    return static_cast<int>(objs.size()) == source.num_objects() &&
           static_cast<int>(mors.size()) == source.num_morphisms();
}

}  // namespace properclass
