#pragma once

#include <stdexcept>
#include <string>

namespace wignerff {

// Basis pair (E, F) admits no single w with f_i = w * dual(e)_i; such a pair
// cannot carry translationally covariant nets.
class NoSuchWError : public std::runtime_error {
public:
    explicit NoSuchWError(const std::string& what) : std::runtime_error(what) {}
};

// A phase-space linear map with det != 1 was passed where a unit-determinant
// map is required.
class NonUnitDeterminantError : public std::runtime_error {
public:
    explicit NonUnitDeterminantError(const std::string& what) : std::runtime_error(what) {}
};

// Per-striation probability sums deviate from 1 beyond the consistency
// tolerance of a tomographic reconstruction.
class InconsistentProbabilitiesError : public std::runtime_error {
public:
    explicit InconsistentProbabilitiesError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wignerff
