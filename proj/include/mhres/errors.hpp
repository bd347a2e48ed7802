#ifndef MHRES_ERRORS_HPP
#define MHRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mhres {

// Base class for all domain-level failures; the CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact polynomial division was requested but the divisor does not divide.
struct NotDivisible : DomainError {
    using DomainError::DomainError;
};

// Explicit degree-vector family requested for data whose defects exceed the
// family's bound.
struct DefectTooLarge : DomainError {
    using DomainError::DomainError;
};

// Pure Bezout construction requested for data with a nonzero defect.
struct NonzeroDefect : DomainError {
    using DomainError::DomainError;
};

// Degree vector outside the preconditions of a matrix builder.
struct InvalidDegreeVector : DomainError {
    using DomainError::DomainError;
};

// Could not solve a coefficient to force a common root at the given point.
struct DegeneratePoint : DomainError {
    using DomainError::DomainError;
};

}  // namespace mhres

#endif
