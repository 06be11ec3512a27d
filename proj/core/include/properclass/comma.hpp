#ifndef PROPERCLASS_COMMA_HPP
#define PROPERCLASS_COMMA_HPP

#include <map>

#include "properclass/pi1.hpp"
#include "properclass/simplicial.hpp"
#include "properclass/todd_coxeter.hpp"

namespace properclass {

/// The localization of the simplex category of a complex X at all of its
/// morphisms: the fundamental groupoid of the subdivision, with objects
/// the simplices of X. Morphism sets are torsors over the fundamental
/// group, realized through spanning-tree normal forms: a morphism
/// tau -> sigma is (tree path) * (group element), and composition is
/// multiplication in the certified group table.
struct FiniteFundamentalGroupoid {
    SimplicialComplex base;         // X
    SimplicialComplex subdivision;  // sd X; vertex k = k-th simplex of X
    GroupTable group;               // pi1(X) via Todd-Coxeter on sd X
    /// class of each face inclusion (tau global index, sigma global
    /// index) as a group element
    std::map<std::pair<int, int>, int> face_class;

    long simplices() const { return base.total_simplices(); }
    long hom_size() const { return group.order; }
};

/// Certify pi1(X) finite of order at most max_group_order via a completed
/// coset enumeration on the edge-path presentation of the subdivision,
/// then build the groupoid. Throws InfiniteOrUncertifiedPi1 when the
/// enumeration overflows or the order exceeds the bound.
FiniteFundamentalGroupoid localize_simplex_category(const SimplicialComplex& x,
                                                    long max_group_order = 120);

/// The overcategory L↓sigma: objects are pairs (tau, morphism tau->sigma
/// in the localization); morphisms are face inclusions compatible with
/// the structure maps. sigma is a global simplex index of X.
FiniteCategory overcategory(const FiniteFundamentalGroupoid& groupoid, int sigma);

/// Acyclicity report for one overcategory: nerve cell counts, homology
/// through degree d-1, and the verdict that reduced homology vanishes.
struct OvercategoryReport {
    int sigma = 0;
    long objects = 0;
    std::vector<long> cell_counts;  // nerve cells, degrees 0..d
    HomologyResult homology;        // degrees 0..d-1
    bool acyclic = false;
};

OvercategoryReport check_contractible_overcategory(const FiniteFundamentalGroupoid& groupoid,
                                                   int sigma, int d = 4);
OvercategoryReport check_contractible_overcategory(const SimplicialComplex& x, int sigma,
                                                   int d = 4, long max_group_order = 120);

}  // namespace properclass

#endif
