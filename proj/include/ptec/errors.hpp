#pragma once

#include <stdexcept>
#include <string>

namespace ptec {

struct EmptyDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidTripleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotOnCurveError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BadReductionPrimeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InsufficientGoodPrimesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FactorizationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Signals a broken internal invariant (a bug, not bad input); the CLI maps
// this to exit code 3.
struct InternalInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ptec
