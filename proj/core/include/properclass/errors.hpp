#ifndef PROPERCLASS_ERRORS_HPP
#define PROPERCLASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace properclass {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Group closure or subgroup enumeration exceeded the configured order bound.
struct OrderBoundExceeded : Error {
    using Error::Error;
};

/// Torsion analysis asked for a group class the library does not decide.
struct UnsupportedGroupClass : Error {
    using Error::Error;
};

/// A family of subgroups fails conjugation- or subgroup-closure.
struct InvalidFamily : Error {
    using Error::Error;
};

/// A nerve or category construction would exceed the configured cell bound.
struct SizeBoundExceeded : Error {
    using Error::Error;
};

/// Quotient of a category by a group action has ill-defined composition.
struct NonCompatibleAction : Error {
    using Error::Error;
};

/// A simplicial group action is not regular enough to quotient; subdivide.
struct NonRegularAction : Error {
    using Error::Error;
};

/// Pushout/telescope legs must be injective on vertices.
struct NonInjectiveMap : Error {
    using Error::Error;
};

/// A chain complex violates the boundary condition d∘d = 0.
struct BoundaryConditionViolated : Error {
    using Error::Error;
};

/// Edge-path presentations require a connected complex.
struct DisconnectedComplex : Error {
    using Error::Error;
};

/// Localization requires a certified finite fundamental group.
struct InfiniteOrUncertifiedPi1 : Error {
    using Error::Error;
};

/// Name not present in the group catalogue.
struct UnknownGroup : Error {
    using Error::Error;
};

/// Malformed textual input (complex files, presentations, permutations).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace properclass

#endif
