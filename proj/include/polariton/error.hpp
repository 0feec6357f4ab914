#pragma once

#include <stdexcept>
#include <string>

namespace polariton {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (ω ≤ 0, unbound mode, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Vanishing denominator: ς₂² = ς₁² in the surface-mode relation.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// A search found nothing to report (e.g. no interior loss minimum).
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Series, quadrature or finite-difference iteration failed to converge.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Argument on the branch cut of a multivalued function.
class BranchCutError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Spectral grid too small for the propagated pulse.
class GridError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Mode exists formally but its normalization is unphysical.
class NonphysicalModeError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace polariton
