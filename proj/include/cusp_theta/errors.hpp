#pragma once

#include <stdexcept>
#include <string>

namespace cusp_theta {

// Bad input: violated precondition, malformed file, failed invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument inside an exclusion zone (pole, cut, wrong half-plane).
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Quadrature budget exhausted, non-finite sample, unstable extraction.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cusp_theta
