#pragma once

#include <stdexcept>
#include <string>

namespace cwc {

/// Invalid (n, w, d, M) tuple, mismatched vector lengths and similar caller errors.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// d = 2w: every pair of codewords must be disjoint, the QUBO route does not apply.
class DegenerateCaseError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// An exact integer coefficient does not fit the 64-bit representation.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// The assumptions behind the solution-count lower bound do not hold.
class InapplicableBoundError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Zero solutions where at least one is required.
class NoSolutionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Memory / width guard exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bounded search ran out of queries without reaching its target.
class ExhaustionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cwc
