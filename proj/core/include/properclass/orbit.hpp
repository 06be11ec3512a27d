#ifndef PROPERCLASS_ORBIT_HPP
#define PROPERCLASS_ORBIT_HPP

#include "properclass/category.hpp"
#include "properclass/permgroup.hpp"

namespace properclass {

/// The orbit category of a group with respect to a family of subgroups.
///
/// One object per family member, labeled G/H. Morphisms G/K -> G/H are
/// the cosets gH of the transporter {g | g^-1 K g <= H}; each is stored
/// by its canonical representative (minimal element of the coset).
/// Composition of [w1]: G/K -> G/H and [w2]: G/H -> G/L is [w1*w2].
struct OrbitCategory {
    FiniteCategory category;
    std::vector<Perm> mor_rep;  // canonical coset representative per morphism
};

OrbitCategory orbit_category(const PermGroup& group, const FamilySpec& family,
                             const Limits& limits = Limits::defaults());

/// Left cosets of a subgroup, each as its sorted element list headed by
/// the canonical (minimal) representative; cosets sorted by representative.
std::vector<std::vector<Perm>> left_cosets(const PermGroup& group, const Subgroup& sub);

/// The coset-fiber functor on the orbit category: each G/H goes to the
/// discrete category on its cosets, each morphism [w] to the map
/// aH -> (a*w)L of coset sets.
CatValuedFunctor standard_coset_functor(const PermGroup& group, const FamilySpec& family,
                                        const OrbitCategory& orbit);

/// Everything needed to work with the Grothendieck construction of the
/// coset-fiber functor: the total category, the left G-action on it, and
/// provenance back to (subgroup, coset) pairs.
struct StandardModel {
    PermGroup group;
    FamilySpec family;
    OrbitCategory orbit;
    CatValuedFunctor functor;
    GrothendieckCategory total;
    GroupActionOnCategory action;  // left multiplication on cosets
};

StandardModel standard_model(const PermGroup& group, const FamilySpec& family,
                             const Limits& limits = Limits::defaults());

/// Full subcategory of the total category on the objects fixed by every
/// element of K.
FiniteCategory fixed_subcategory(const FiniteCategory& category,
                                 const GroupActionOnCategory& action, const Subgroup& k);

/// The canonical identification of the quotient of the Grothendieck
/// construction by the left action with the orbit category. Throws if the
/// candidate map fails to be an isomorphism.
CatFunctor quotient_orbit_isomorphism(const StandardModel& model,
                                      const QuotientCategory& quotient);

}  // namespace properclass

#endif
