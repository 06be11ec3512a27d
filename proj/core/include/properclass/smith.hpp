#ifndef PROPERCLASS_SMITH_HPP
#define PROPERCLASS_SMITH_HPP

#include <utility>
#include <vector>

#include "properclass/intmatrix.hpp"

namespace properclass {

/// Suggested (row, column) elimination order for the sparse engine.
/// Every entry is validated before use, so a plan can only change the
/// amount of fill-in, never the result.
using PivotPlan = std::vector<std::pair<int, int>>;

/// U * M * V = D with U, V unimodular and D diagonal with divisibility
/// chain d1 | d2 | ... . The factorization is re-multiplied and the
/// determinants of U and V are checked before returning.
struct SmithResult {
    IntMatrix d, u, v;
    std::vector<mpz_class> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Rank and nontrivial invariant factors (those > 1, in divisibility
/// order) of an integer matrix, computed by sparse elimination on
/// unit pivots with a dense arbitrary-precision cleanup of the residue.
struct SmithInvariants {
    long rank = 0;
    std::vector<mpz_class> nontrivial;
};

SmithInvariants sparse_smith_invariants(const SparseIntMatrix& m,
                                        const PivotPlan* plan = nullptr);

/// Rank of the matrix over the prime field F_p.
long sparse_rank_mod_p(const SparseIntMatrix& m, long p, const PivotPlan* plan = nullptr);

}  // namespace properclass

#endif
