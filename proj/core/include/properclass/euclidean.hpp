#ifndef PROPERCLASS_EUCLIDEAN_HPP
#define PROPERCLASS_EUCLIDEAN_HPP

#include <array>
#include <optional>
#include <string>

#include "properclass/permgroup.hpp"
#include "properclass/pi1.hpp"
#include "properclass/presentation.hpp"
#include "properclass/simplicial.hpp"

namespace properclass {

/// Affine isometry in lattice coordinates: x -> M x + t with an integer
/// matrix and a rational translation. Dimension 1 uses the [0][0] entry.
struct Isometry {
    std::array<std::array<int, 2>, 2> matrix{{{1, 0}, {0, 1}}};
    std::array<mpq_class, 2> translation{0, 0};
};

/// Which equivariant triangulation of the torus a point group needs.
enum class GridStyle { MainDiagonal, AntiDiagonal, UnionJack };

/// A crystallographic line or wallpaper group: translation lattice Z^dim
/// plus a finite (abstract) point group represented by isometries of the
/// torus. The representation may be non-faithful (Z x Z/p acts through
/// its free factor).
struct EuclideanGroupSpec {
    std::string name;
    int dimension = 2;  // 1 or 2
    GridStyle grid = GridStyle::MainDiagonal;
    std::vector<Isometry> point_group;   // index 0 is the identity
    std::vector<std::vector<int>> mult;  // abstract multiplication, g then h
    Presentation presentation;
    std::vector<Isometry> generator_reps;  // affine image of each generator
    std::vector<Word> torsion_words;  // generate the torsion subgroup normally
    std::vector<long> expected_betti;  // claimed quotient homology, degrees 0..2
    std::string shape_label;           // e.g. "point", "S^2", "S^1", "torus"
    std::string nullification_label;   // which nullification the claim describes
    bool normalizer_entry = false;     // Z x Z/p entries

    /// Point-group closure, cocycle condition, identity placement.
    void validate() const;

    /// Presentation of the quotient by the subgroup generated by all
    /// torsion elements (torsion generator words adjoined as relators).
    Presentation torsion_quotient() const;
};

/// Catalogue: Z, Dinf, ZxZ<p> (also spelled ZxZp(<p>)), p1, pmm, p3,
/// p3m1, H_even. Throws UnknownGroup otherwise.
EuclideanGroupSpec catalogue_group(const std::string& name);
std::vector<std::string> euclidean_catalogue_names();

/// The quotient of the subdivided equivariant torus triangulation by the
/// point group: a finite model of the orbit space.
struct OrbifoldModel {
    SimplicialComplex complex;
    std::string group;
    int refinement = 3;
    int subdivisions = 2;
};

/// Triangulate the flat torus at the given refinement, subdivide twice
/// so the point-group action is regular, and quotient. Retries once at
/// refinement+1 if regularity still fails.
OrbifoldModel bbar_model(const EuclideanGroupSpec& spec, int refinement = 3);

/// The equivariant torus triangulation and the point-group action on its
/// vertices (before subdivision). Exposed for invariance checks.
struct EquivariantTorus {
    SimplicialComplex complex;
    std::vector<std::vector<int>> vertex_actions;  // per point-group element
};
EquivariantTorus equivariant_torus(const EuclideanGroupSpec& spec, int refinement);

/// Torsion data for finite permutation groups: every element has finite
/// order, so the quotient is trivial.
struct TorsionSubgroupInfo {
    std::vector<std::string> generator_names;  // human-readable generators of T
    Presentation quotient;
};
TorsionSubgroupInfo torsion_generated_subgroup(const PermGroup& group);
TorsionSubgroupInfo torsion_generated_subgroup(const EuclideanGroupSpec& spec);

/// Torsion is only decided for finite groups and the euclidean
/// catalogue; arbitrary presentations are refused.
TorsionSubgroupInfo torsion_generated_subgroup(const Presentation& presentation);

/// Whether a word evaluates to a finite-order isometry (a rotation, or a
/// reflection with no glide part) under the spec's affine representation.
/// The representation kernel (Z x Z/p) is handled by the catalogue data,
/// not by this predicate.
bool word_is_torsion(const EuclideanGroupSpec& spec, const Word& word);

/// Does the fundamental group of a model complex agree with the quotient
/// of the group by its torsion-generated subgroup? Abelianizations are
/// compared always, orders whenever both enumerations complete.
Pi1Comparison pi1_matches_torsion_quotient(const EuclideanGroupSpec& spec,
                                           const SimplicialComplex& model,
                                           long max_cosets = 50000);
/// Finite groups: the torsion quotient is trivial, the model is the
/// truncated orbit-category nerve.
Pi1Comparison pi1_matches_torsion_quotient(const PermGroup& group,
                                           const TruncatedSimplicialSet& model_nerve,
                                           long max_cosets = 50000);

/// Combined report: quotient homology, fundamental-group comparison with
/// the torsion quotient, and the B(G/T_p) prediction for normalizer
/// entries.
struct NullificationReport {
    std::string group;
    int refinement = 3;
    HomologyResult model_homology;
    std::vector<long> expected_betti;
    bool homology_matches = false;
    Pi1Comparison pi1;
    bool pi1_consistent = false;
    std::optional<bool> normalizer_prediction_matches;
    std::string verdict;  // "consistent" / "inconsistent" / "inconclusive"
    std::string claim;
};

NullificationReport nullification_report(const EuclideanGroupSpec& spec, int refinement = 3,
                                         long max_cosets = 50000);

}  // namespace properclass

#endif
