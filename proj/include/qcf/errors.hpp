#pragma once

#include <stdexcept>
#include <string>

namespace qcf {

/// Root-finding bracket does not change sign.
struct NoBracketError : std::runtime_error {
    explicit NoBracketError(const std::string& what) : std::runtime_error(what) {}
};

/// Computed critical radii violate the required ordering; the potential
/// is outside the supported class.
struct OrderingViolatedError : std::runtime_error {
    explicit OrderingViolatedError(const std::string& what) : std::runtime_error(what) {}
};

/// Positions are not strictly increasing.
struct NotIncreasingError : std::runtime_error {
    explicit NotIncreasingError(const std::string& what) : std::runtime_error(what) {}
};

/// A lattice spacing is zero or negative.
struct NonPositiveStrainError : std::runtime_error {
    explicit NonPositiveStrainError(const std::string& what) : std::runtime_error(what) {}
};

/// External loads do not balance, so no conjugate potential exists.
struct ResultantNonzeroError : std::runtime_error {
    explicit ResultantNonzeroError(const std::string& what) : std::runtime_error(what) {}
};

/// A region recipe produced r_L >= r_U.
struct EmptyRegionError : std::runtime_error {
    explicit EmptyRegionError(const std::string& what) : std::runtime_error(what) {}
};

/// A run configuration failed to parse or validate.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcf
