#ifndef PROPERCLASS_HOMOLOGY_HPP
#define PROPERCLASS_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "properclass/intmatrix.hpp"
#include "properclass/smith.hpp"

namespace properclass {

/// Chain complex of free abelian groups, given by its boundary matrices.
/// boundary[n] maps n-chains to (n-1)-chains for 1 <= n <= top degree;
/// boundary[0] is an unused placeholder so indices line up with degrees.
struct ChainComplex {
    std::vector<long> dims;                 // cells per degree, 0..top
    std::vector<SparseIntMatrix> boundary;  // size dims.size()

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }

    /// Shape consistency and the boundary condition d∘d = 0.
    /// Throws BoundaryConditionViolated.
    void validate() const;
};

/// Z or F_p coefficients.
struct Coefficients {
    long p = 0;  // 0 means integers
    static Coefficients integers() { return {0}; }
    static Coefficients mod(long prime) { return {prime}; }
};

struct HomologyGroup {
    long betti = 0;
    std::vector<mpz_class> torsion;  // entries > 1, divisibility order

    bool operator==(const HomologyGroup& rhs) const = default;
    bool trivial() const { return betti == 0 && torsion.empty(); }
    std::string to_string() const;
};

struct HomologyResult {
    std::vector<HomologyGroup> groups;  // index = degree

    bool operator==(const HomologyResult& rhs) const = default;
    const HomologyGroup& at(int degree) const;
    std::vector<long> betti_vector() const;
    std::string to_string() const;

    /// Reduced homology is trivial in all computed degrees
    /// (H_0 = Z and everything above vanishes).
    bool acyclic() const;
};

/// Homology of the complex by Smith normal form, degrees 0..up_to
/// (default: the top degree). Validates d∘d = 0 first. `pivot_plans`,
/// when given, suggests elimination orders per boundary degree.
HomologyResult homology(const ChainComplex& complex,
                        Coefficients coeff = Coefficients::integers(),
                        int up_to = -1,
                        const std::vector<PivotPlan>* pivot_plans = nullptr);

}  // namespace properclass

#endif
