#ifndef PROPERCLASS_SIMPLICIAL_HPP
#define PROPERCLASS_SIMPLICIAL_HPP

#include <string>
#include <vector>

#include "properclass/category.hpp"
#include "properclass/homology.hpp"

namespace properclass {

/// A finite abstract simplicial complex. Simplices are sorted vertex
/// tuples, listed per dimension in lexicographic order, downward closed.
struct SimplicialComplex {
    int num_vertices = 0;
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim][i] -> vertex tuple

    static SimplicialComplex from_simplices(int num_vertices,
                                            const std::vector<std::vector<int>>& generators);

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    long simplex_count(int k) const {
        return (k >= 0 && k <= dim()) ? static_cast<long>(simplices[k].size()) : 0;
    }
    long total_simplices() const;
    int simplex_index(const std::vector<int>& s) const;  // -1 if absent
    long euler_characteristic() const;
    bool connected() const;

    void validate() const;  // closure + no repeated vertices + sorted
    ChainComplex chain_complex() const;

    /// Edges as vertex pairs (dimension-1 simplices).
    const std::vector<std::vector<int>>& edges() const;
};

HomologyResult homology(const SimplicialComplex& complex,
                        Coefficients coeff = Coefficients::integers());

/// Barycentric subdivision. The k-th vertex of the result corresponds to
/// the k-th simplex of the input in (dimension, index) order; simplices
/// are the strictly increasing face chains.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex);

/// Global index of a simplex in the (dimension, index) order used by
/// barycentric_subdivision and simplex_category.
int simplex_global_index(const SimplicialComplex& complex, const std::vector<int>& s);

/// The poset category of simplices with one morphism per face inclusion,
/// oriented from faces to cofaces. Objects follow the same (dimension,
/// index) order as subdivision vertices; the nerve of this category is
/// the barycentric subdivision.
FiniteCategory simplex_category(const SimplicialComplex& complex);

/// Lift a vertex permutation along barycentric_subdivision: the input
/// permutation must be a simplicial automorphism.
std::vector<int> lift_to_subdivision(const SimplicialComplex& complex,
                                     const std::vector<int>& vertex_perm);

/// Quotient by a group of simplicial automorphisms, given as the full
/// element list of vertex permutations. Requires the action to be
/// regular: a simplex fixed setwise is fixed vertexwise, and no simplex
/// contains two distinct vertices of one orbit (either failure throws
/// NonRegularAction; subdividing twice always repairs it).
SimplicialComplex quotient_complex(const SimplicialComplex& complex,
                                   const std::vector<std::vector<int>>& group_elements);

// --- fixtures ------------------------------------------------------------

SimplicialComplex fixture_interval(int segments = 1);
SimplicialComplex fixture_circle(int vertices = 3);
SimplicialComplex fixture_single_triangle();      // solid 2-simplex
SimplicialComplex fixture_sphere();               // tetrahedron boundary
SimplicialComplex fixture_rp2();                  // 6-vertex projective plane
SimplicialComplex fixture_torus();                // 7-vertex torus
SimplicialComplex fixture_moore_z3();             // presentation complex of Z/3
SimplicialComplex fixture_point();

// --- exchange format ------------------------------------------------------

/// One simplex per line: `s v0 v1 ... vk`; blank lines and `#` comments
/// are skipped. Vertices are nonnegative integers.
SimplicialComplex parse_complex_text(const std::string& text);
std::string complex_to_text(const SimplicialComplex& complex);

}  // namespace properclass

#endif
