#ifndef PROPERCLASS_NERVE_HPP
#define PROPERCLASS_NERVE_HPP

#include "properclass/category.hpp"
#include "properclass/homology.hpp"

namespace properclass {

/// The nerve of a category, truncated at a fixed dimension and stored by
/// its nondegenerate cells: an n-cell is a chain of n composable
/// non-identity morphisms. Face i of a chain composes the morphisms at
/// position i (or drops an end); a face whose composite collapses onto an
/// identity is recorded as -1 and contributes zero to normalized chains.
struct TruncatedSimplicialSet {
    int max_dim = 0;
    std::vector<long> counts;                 // cells per degree 0..max_dim
    std::vector<std::vector<int32_t>> cells;  // degree n: flat n-tuples of morphism ids
                                              // (degree 0: object ids)
    std::vector<std::vector<int32_t>> faces;  // degree n: flat (n+1)-tuples of cell
                                              // indices in degree n-1; -1 = collapsed

    long cell_count(int n) const {
        return (n >= 0 && n <= max_dim) ? counts[n] : 0;
    }

    /// Simplicial identities d_i d_j = d_{j-1} d_i (i < j) wherever both
    /// sides avoid collapse; throws on violation.
    void validate_identities() const;

    /// Normalized chain complex (collapsed faces contribute nothing).
    ChainComplex chain_complex() const;

    /// Alternating sum of cell counts over all stored degrees.
    long euler_characteristic() const;
};

/// Nondegenerate nerve cells of a finite category up to dimension d.
/// Throws SizeBoundExceeded when the chain count passes limits.max_cells.
TruncatedSimplicialSet nerve_truncated(const FiniteCategory& category, int d,
                                       const Limits& limits = Limits::defaults());

/// Elimination orders for the nerve's boundary matrices, derived from
/// the pairing a chain has with its extension along the unique morphism
/// out of an initial object (or into a terminal object). Empty when the
/// category has neither; purely a performance hint for the sparse engine.
std::vector<PivotPlan> cone_pivot_plans(const FiniteCategory& category,
                                        const TruncatedSimplicialSet& nerve);

/// Homology of the normalized chains of the truncated nerve. Degrees
/// 0..d-1 only: degree-d groups would need (d+1)-cells.
HomologyResult homology_of_nerve(const FiniteCategory& category, int d,
                                 Coefficients coeff = Coefficients::integers(),
                                 const Limits& limits = Limits::defaults());

}  // namespace properclass

#endif
