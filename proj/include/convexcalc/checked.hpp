#pragma once

#include <cstdint>
#include <limits>

#include "convexcalc/errors.hpp"

namespace convexcalc {

// All slope arithmetic is semantically arbitrary-precision.  We use int64
// with explicit overflow checks; an overflow raises, it never wraps.
// Continued-fraction walks can grow entries quickly, so every add/mul that
// combines user-controlled values goes through these helpers.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("add");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("sub");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("mul");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw overflow_error("neg");
    return -a;
}

inline std::int64_t checked_abs(std::int64_t a) {
    return a < 0 ? checked_neg(a) : a;
}

// Exact sign of a*d - c*b without overflow (the 2x2 determinant that
// underlies every ordering predicate on slopes).
inline int det_sign(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(c) * b;
    if (det > 0) return 1;
    if (det < 0) return -1;
    return 0;
}

inline std::int64_t narrow_128(__int128 v, const char* op) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw overflow_error(op);
    return static_cast<std::int64_t>(v);
}

} // namespace convexcalc
