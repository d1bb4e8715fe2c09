#pragma once

#include <cstdint>
#include <limits>

#include "toricgen/errors.hpp"

namespace toricgen {

// All coordinate and matrix arithmetic in this project goes through these
// helpers: any overflow throws instead of wrapping. There is deliberately no
// floating-point path anywhere.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    if (a == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in negation");
    return -a;
}

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

// gcd of absolute values, gcd(0,0) = 0.
inline Int gcd_int(Int a, Int b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int lcm_int(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd_int(a, b), b);
}

// Division known to be exact; a non-zero remainder is a broken invariant,
// not bad input.
inline Int div_exact(Int a, Int b) {
    if (b == 0 || a % b != 0) throw std::logic_error("div_exact: inexact division");
    return a / b;
}

}  // namespace toricgen
