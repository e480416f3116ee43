#pragma once

#include <cstdint>
#include <stdexcept>

namespace toric {

// All lattice arithmetic runs on 64-bit signed integers. Overflow is a
// reported error, never wraparound: every product/sum that could leave the
// representable range goes through these helpers.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    return checked_sub(0, a);
}

// |a| as unsigned; well-defined for INT64_MIN too.
inline std::uint64_t uabs(Int a) {
    return a < 0 ? ~static_cast<std::uint64_t>(a) + 1u : static_cast<std::uint64_t>(a);
}

// |a| as Int; throws for INT64_MIN.
inline Int abs_checked(Int a) {
    return a < 0 ? checked_neg(a) : a;
}

} // namespace toric
