#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgr {

using Coeff = std::int64_t;

/// Two operands live in different Grassmannians.
struct ContextMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed partition, subset or class text.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A 64-bit coefficient computation overflowed.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// The joint eigendecomposition could not separate dim R points.
struct DegenerateSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structure-constant file does not belong to the requested (k, n).
struct CacheMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
    return r;
}

}  // namespace qgr
