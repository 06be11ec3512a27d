#ifndef PROPERCLASS_COLIMITS_HPP
#define PROPERCLASS_COLIMITS_HPP

#include "properclass/simplicial.hpp"

namespace properclass {

/// A simplicial map given by its vertex images. Must send simplices to
/// simplices; pushout and telescope legs must also be injective.
struct SimplicialMap {
    std::vector<int> vertex_image;
};

void validate_simplicial(const SimplicialMap& map, const SimplicialComplex& source,
                         const SimplicialComplex& target);
void validate_injective(const SimplicialMap& map);

/// Product triangulated by staircase (shuffle) simplices on the ordered
/// vertex grid; vertex (a, b) has index a * Y.num_vertices + b.
SimplicialComplex product_complex(const SimplicialComplex& x, const SimplicialComplex& y);

/// Disjoint union with the two base vertices identified. Vertices of x
/// keep their indices; vertices of y follow, skipping base_y.
SimplicialComplex wedge_complex(const SimplicialComplex& x, int base_x,
                                const SimplicialComplex& y, int base_y);

/// Double mapping cylinder over a common source:
/// x <-f- a -g-> y, both legs injective and simplicial.
/// Vertices: x first, then y, then one prism layer is glued at each end.
SimplicialComplex pushout_complex(const SimplicialComplex& a, const SimplicialComplex& x,
                                  const SimplicialComplex& y, const SimplicialMap& f,
                                  const SimplicialMap& g);

/// Iterated mapping cylinder of stages[0] -> stages[1] -> ... with
/// injective simplicial maps between consecutive stages.
SimplicialComplex telescope_complex(const std::vector<SimplicialComplex>& stages,
                                    const std::vector<SimplicialMap>& maps);

}  // namespace properclass

#endif
