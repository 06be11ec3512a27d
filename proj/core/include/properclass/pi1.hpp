#ifndef PROPERCLASS_PI1_HPP
#define PROPERCLASS_PI1_HPP

#include <optional>

#include "properclass/nerve.hpp"
#include "properclass/presentation.hpp"
#include "properclass/simplicial.hpp"
#include "properclass/todd_coxeter.hpp"

namespace properclass {

/// Edge-path presentation of the fundamental group of a connected
/// complex: one generator per edge, tree edges (breadth-first from the
/// basepoint) as relators, one relator per triangle. The spanning tree
/// is kept so paths can be expressed in the generators.
struct EdgePathData {
    Presentation presentation;  // generator e_i per edge i
    int basepoint = 0;
    std::vector<char> edge_in_tree;
    std::vector<int> tree_parent;       // per vertex: previous vertex (-1 at base)
    std::vector<int> tree_parent_edge;  // per vertex: edge to the parent

    /// Word of the tree path base -> v in the edge generators.
    Word tree_path(const SimplicialComplex& complex, int v) const;
};

EdgePathData edge_path_data(const SimplicialComplex& complex, int basepoint = 0);
Presentation edge_path_presentation(const SimplicialComplex& complex, int basepoint = 0);

/// Same construction on the 2-skeleton of a truncated nerve: generators
/// are the nondegenerate 1-cells, relators come from 2-cells, with faces
/// collapsing onto identities contributing nothing.
Presentation edge_path_presentation(const TruncatedSimplicialSet& nerve);

/// Outcome of comparing two presentations of allegedly the same group:
/// abelianizations always; orders via coset enumeration when both
/// complete within budget.
struct Pi1Comparison {
    Abelianization left, right;
    bool abelianizations_match = false;
    std::optional<long> left_order, right_order;  // set when enumeration completes
    bool orders_checked = false;
    bool orders_match = false;  // meaningful when orders_checked

    bool consistent() const {
        return abelianizations_match && (!orders_checked || orders_match);
    }
};

Pi1Comparison compare_presentations(const Presentation& a, const Presentation& b,
                                    long max_cosets = 100000);

/// Order of the presented group if Todd-Coxeter completes on the trivial
/// subgroup within the budget (after Tietze simplification).
std::optional<long> enumerate_order(const Presentation& p, long max_cosets = 100000);

}  // namespace properclass

#endif
