#pragma once

#include <stdexcept>

namespace sumset {

// An argument is outside an operation's domain (negative isqrt input,
// zero scale factor, excluded parameter value, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structured input fails a precondition (non-semi-magic matrix,
// unverified solution pair, unsupported shape, ...).
struct rejected_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// poly_square_root was given something that is not the square of an
// integer polynomial.
struct not_a_polynomial_square : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sumset
