#pragma once

#include "polydual/errors.hpp"

namespace polydual {

// All coordinate arithmetic goes through these helpers so that an overflow
// surfaces as OverflowError instead of undefined behaviour.
using Int = long long;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

// Exact quotient; the remainder must vanish.
inline Int div_exact(Int a, Int b) {
    if (b == 0) throw InternalInconsistencyError("exact division by zero");
    if (a % b != 0) throw InternalInconsistencyError("inexact integer division");
    return a / b;
}

// Floor division (round toward minus infinity), used by normal-form reduction.
inline Int div_floor(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Nonnegative gcd; gcd(0, 0) = 0. Runs on magnitudes, so INT64_MIN is safe.
inline Int gcd_int(Int a, Int b) {
    unsigned long long x = a < 0 ? 0ULL - static_cast<unsigned long long>(a)
                                 : static_cast<unsigned long long>(a);
    unsigned long long y = b < 0 ? 0ULL - static_cast<unsigned long long>(b)
                                 : static_cast<unsigned long long>(b);
    while (y != 0) {
        unsigned long long t = x % y;
        x = y;
        y = t;
    }
    return static_cast<Int>(x);
}

inline Int lcm_int(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(div_exact(checked_abs(a), gcd_int(a, b)), checked_abs(b));
}

}  // namespace polydual
