#pragma once

#include <stdexcept>
#include <string>

namespace henon {

// Operands from different polynomial rings (variable count mismatch).
struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Leading term of the zero polynomial requested.
struct ZeroPolynomialError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A zero polynomial appeared in a divisor list.
struct ZeroDivisorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad user input (file contents, options). CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical solve failed after all retries.
struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cooperative cancellation was requested while a long computation ran.
struct CancelledError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace henon
