#ifndef PROPERCLASS_PERMGROUP_HPP
#define PROPERCLASS_PERMGROUP_HPP

#include <string>
#include <vector>

#include "properclass/config.hpp"
#include "properclass/errors.hpp"

namespace properclass {

/// A permutation on {0, ..., degree-1}, stored as its image vector.
/// Comparison is lexicographic on images, which fixes the canonical
/// element order used everywhere downstream.
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images) : img(std::move(images)) {}

    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int point) const { return img[point]; }

    /// (a * b) applies a first, then b.
    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    int order() const;

    bool is_identity() const;
    auto operator<=>(const Perm& rhs) const = default;

    /// Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; identity is "()".
    std::string cycle_string() const;
};

/// Parse 1-based cycle notation, e.g. "(1 2)(3 4)". Degree is the largest
/// point mentioned unless a larger one is forced by the caller.
Perm parse_cycles(const std::string& text, int degree_hint = 0);

/// A finite permutation group with its elements materialized in canonical
/// (lexicographic) order.
struct PermGroup {
    int degree = 1;
    std::vector<Perm> generators;
    std::vector<Perm> elements;  // sorted, closed, contains identity

    long order() const { return static_cast<long>(elements.size()); }
    bool contains(const Perm& p) const;
    int element_index(const Perm& p) const;  // -1 if absent
};

/// A subgroup, canonically represented by its sorted element list.
/// Two subgroups are equal iff the element lists are identical.
struct Subgroup {
    std::vector<Perm> elements;  // sorted, closed, contains identity

    long order() const { return static_cast<long>(elements.size()); }
    bool contains(const Perm& p) const;
    bool operator==(const Subgroup& rhs) const = default;
};

/// A family of subgroups, expected to be closed under conjugation and
/// under passing to subgroups.
struct FamilySpec {
    std::vector<Subgroup> members;  // sorted by (order, element list)

    int index_of(const Subgroup& sub) const;  // -1 if absent
};

/// Close a generating set under products. Deterministic element ordering.
/// Throws OrderBoundExceeded when the closure exceeds the configured bound.
PermGroup close_generators(const std::vector<Perm>& generators,
                           const Limits& limits = Limits::defaults());

/// Every subgroup, exactly once, sorted by (order, canonical element list).
/// Enumeration closes cyclic subgroups under pairwise join.
std::vector<Subgroup> all_subgroups(const PermGroup& group,
                                    const Limits& limits = Limits::defaults());

/// For finite groups the family of finite subgroups is all subgroups.
FamilySpec finite_family(const PermGroup& group,
                         const Limits& limits = Limits::defaults());

/// Check the FamilySpec closure invariants against the ambient group.
/// Throws InvalidFamily on failure.
void validate_family(const PermGroup& group, const FamilySpec& family);

/// Conjugate subgroup g^-1 H g, renormalized to canonical form.
Subgroup conjugate_subgroup(const Subgroup& sub, const Perm& g);

/// Built-in finite groups: Z1, Z2, Z3, Z4, Z5, Z6, Z2xZ2, S3, D4, A4.
PermGroup catalogue_perm_group(const std::string& name);
std::vector<std::string> catalogue_perm_group_names();

/// Load a group from the line format used by the CLI:
/// either a single line with a catalogue name, or one `perm: (1 2)(3 4)`
/// line per generator.
PermGroup parse_perm_group(const std::string& text);

}  // namespace properclass

#endif
