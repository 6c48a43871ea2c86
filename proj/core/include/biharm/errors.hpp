#pragma once

#include <stdexcept>
#include <string>

namespace biharm {

// Bad input: mismatched sizes, out-of-range parameters, degenerate pivots.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation point outside the holomorphy domain of F (outside the set Pi).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Power series did not settle within the term cap.
class ConvergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

// Exact integer/rational arithmetic left its representable range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Operation not available for this kind of input (e.g. symbolic route on a transcendental F).
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace biharm
