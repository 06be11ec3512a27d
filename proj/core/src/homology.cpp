#include "properclass/homology.hpp"

#include <map>
#include <sstream>

#include "properclass/errors.hpp"
#include "properclass/smith.hpp"

namespace properclass {

void ChainComplex::validate() const {
    if (dims.size() != boundary.size())
        throw BoundaryConditionViolated("chain complex shape mismatch");
    for (size_t n = 1; n < dims.size(); ++n) {
        if (boundary[n].cols != dims[n] || boundary[n].rows != dims[n - 1])
            throw BoundaryConditionViolated("boundary matrix shape mismatch at degree " +
                                            std::to_string(n));
    }
    // d∘d = 0, checked column by column
    for (size_t n = 2; n < dims.size(); ++n) {
        const SparseIntMatrix& hi = boundary[n];
        const SparseIntMatrix& lo = boundary[n - 1];
        for (int j = 0; j < hi.cols; ++j) {
            std::map<int, long long> acc;
            for (auto [r, v] : hi.col[j])
                for (auto [r2, v2] : lo.col[r]) acc[r2] += v * v2;
            for (auto& [row, val] : acc)
                if (val != 0)
                    throw BoundaryConditionViolated("d∘d != 0 at degree " + std::to_string(n));
        }
    }
}

const HomologyGroup& HomologyResult::at(int degree) const {
    static const HomologyGroup zero;
    if (degree < 0 || degree >= static_cast<int>(groups.size())) return zero;
    return groups[degree];
}

std::vector<long> HomologyResult::betti_vector() const {
    std::vector<long> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back(g.betti);
    return out;
}

bool HomologyResult::acyclic() const {
    if (groups.empty()) return false;
    if (groups[0].betti != 1 || !groups[0].torsion.empty()) return false;
    for (size_t n = 1; n < groups.size(); ++n)
        if (!groups[n].trivial()) return false;
    return true;
}

std::string HomologyGroup::to_string() const {
    std::ostringstream out;
    if (betti == 0 && torsion.empty()) return "0";
    bool first = true;
    if (betti > 0) {
        out << "Z";
        if (betti > 1) out << "^" << betti;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) out << " + ";
        out << "Z/" << t.get_str();
        first = false;
    }
    return out.str();
}

std::string HomologyResult::to_string() const {
    std::ostringstream out;
    for (size_t n = 0; n < groups.size(); ++n) {
        if (n) out << ", ";
        out << "H" << n << "=" << groups[n].to_string();
    }
    return out.str();
}

HomologyResult homology(const ChainComplex& complex, Coefficients coeff, int up_to,
                        const std::vector<PivotPlan>* pivot_plans) {
    complex.validate();
    int top = complex.top_degree();
    if (up_to < 0 || up_to > top) up_to = top;

    // rank and torsion of each boundary map, each computed once
    std::vector<long> rank(top + 2, 0);
    std::vector<std::vector<mpz_class>> torsion(top + 2);
    for (int n = 1; n <= top; ++n) {
        const PivotPlan* plan = nullptr;
        if (pivot_plans && n < static_cast<int>(pivot_plans->size()))
            plan = &(*pivot_plans)[n];
        if (coeff.p == 0) {
            SmithInvariants inv = sparse_smith_invariants(complex.boundary[n], plan);
            rank[n] = inv.rank;
            torsion[n] = inv.nontrivial;
        } else {
            rank[n] = sparse_rank_mod_p(complex.boundary[n], coeff.p, plan);
        }
    }

    HomologyResult out;
    out.groups.resize(up_to + 1);
    for (int n = 0; n <= up_to; ++n) {
        long incoming = (n + 1 <= top) ? rank[n + 1] : 0;
        out.groups[n].betti = complex.dims[n] - rank[n] - incoming;
        if (coeff.p == 0 && n + 1 <= top) out.groups[n].torsion = torsion[n + 1];
    }
    return out;
}

}  // namespace properclass
