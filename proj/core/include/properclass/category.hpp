#ifndef PROPERCLASS_CATEGORY_HPP
#define PROPERCLASS_CATEGORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "properclass/config.hpp"
#include "properclass/errors.hpp"
#include "properclass/permgroup.hpp"

namespace properclass {

/// A finite category with an explicit composition table.
///
/// Morphisms are globally indexed; `hom[src][dst]` lists them per ordered
/// object pair. compose(f, g) is "g after f", defined exactly when
/// dst(f) == src(g). Identities are listed in `identity` per object.
struct FiniteCategory {
    std::vector<std::string> objects;
    std::vector<int> mor_src, mor_dst;
    std::vector<std::string> mor_labels;
    std::vector<int> identity;                       // per object
    std::vector<std::vector<std::vector<int>>> hom;  // [src][dst] -> morphisms
    std::unordered_map<uint64_t, int> comp;          // key(f,g) -> g∘f

    static uint64_t key(int f, int g) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(f)) << 32) |
               static_cast<uint32_t>(g);
    }

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_morphisms() const { return static_cast<int>(mor_src.size()); }
    bool is_identity(int m) const { return identity[mor_src[m]] == m; }
    int compose(int f, int g) const;  // g∘f
    std::vector<int> hom_all_from(int obj) const;

    /// Register a morphism; hom lists are rebuilt by finish().
    int add_morphism(int src, int dst, std::string label);
    void set_composition(int f, int g, int gf);
    /// Build hom lists and identity table (identities must be flagged
    /// through `identity_of`), then validate.
    void finish(const std::vector<int>& identity_of_object);

    /// Identity and associativity axioms, checked exhaustively.
    void validate() const;

    /// Object o with exactly one morphism o -> c for every c, if any.
    std::optional<int> initial_object() const;
    /// Object o with exactly one morphism c -> o for every c, if any.
    std::optional<int> terminal_object() const;

    /// Full subcategory on the given objects (indices into `objects`).
    FiniteCategory full_subcategory(const std::vector<int>& object_subset) const;
};

/// A functor between finite categories, stored as index maps.
struct CatFunctor {
    std::vector<int> obj_map;
    std::vector<int> mor_map;

    /// Functor axioms, checked exhaustively against the two categories.
    void validate(const FiniteCategory& source, const FiniteCategory& target) const;
};

/// A functor from a finite category into Cat: a finite category per
/// object, and an (object map, morphism map) between fibers per morphism.
struct CatValuedFunctor {
    FiniteCategory source;
    std::vector<FiniteCategory> fibers;  // per source object

    struct FiberMap {
        std::vector<int> obj_map;
        std::vector<int> mor_map;
    };
    std::vector<FiberMap> on_mor;  // per source morphism

    void validate() const;
};

/// A group acting on a finite category by automorphisms, one functor per
/// group element (indexed like PermGroup::elements). Left-action axiom:
/// the functor of g*h equals the functor of g applied after that of h.
struct GroupActionOnCategory {
    PermGroup group;
    std::vector<CatFunctor> functors;

    /// Identity element acts as identity; composition is compatible
    /// (checked on all pairs: catalogue groups are small).
    void validate(const FiniteCategory& category) const;
};

/// The Grothendieck construction: objects are pairs (d, x) with x in the
/// fiber over d, morphisms are pairs (u, v) with v: F(u)(x) -> x'.
/// Provenance of every object and morphism is kept for downstream
/// identifications.
struct GrothendieckCategory {
    FiniteCategory category;
    std::vector<std::pair<int, int>> object_parts;  // (base object, fiber object)
    struct MorParts {
        int u, v;
    };
    std::vector<MorParts> morphism_parts;
};

GrothendieckCategory grothendieck(const CatValuedFunctor& functor,
                                  const Limits& limits = Limits::defaults());

/// Quotient of a category by a group action: objects and morphisms are
/// orbits, composition is induced; throws NonCompatibleAction if the
/// induced composition is ill-defined.
struct QuotientCategory {
    FiniteCategory category;
    std::vector<int> object_orbit;    // original object -> quotient object
    std::vector<int> morphism_orbit;  // original morphism -> quotient morphism
};

QuotientCategory quotient_category(const FiniteCategory& category,
                                   const GroupActionOnCategory& action);

/// Check that a functor is an isomorphism of categories (bijective on
/// objects and morphisms, functor axioms hold).
bool is_isomorphism(const CatFunctor& f, const FiniteCategory& source,
                    const FiniteCategory& target);

}  // namespace properclass

#endif
