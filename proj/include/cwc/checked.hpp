#pragma once

#include <cstdint>
#include <string_view>

#include "cwc/errors.hpp"

namespace cwc {

// Exact integer helpers. Every operation throws OverflowError instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, std::string_view what = "addition")
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows int64");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b, std::string_view what = "subtraction")
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows int64");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, std::string_view what = "multiplication")
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows int64");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, int exponent, std::string_view what = "power")
{
    std::int64_t r = 1;
    for (int i = 0; i < exponent; ++i) r = checked_mul(r, base, what);
    return r;
}

/// binomial(n, k) with exact intermediate division; 0 when k > n or k < 0.
inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step
        __int128 t = static_cast<__int128>(r) * (n - k + i) / i;
        if (t > INT64_MAX) throw OverflowError("binomial overflows int64");
        r = static_cast<std::int64_t>(t);
    }
    return r;
}

inline std::int64_t factorial(int n)
{
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i, "factorial");
    return r;
}

/// Smallest b with 2^b >= v, for v >= 1.
inline int ceil_log2(std::int64_t v)
{
    int b = 0;
    while (b < 63 && (std::int64_t{1} << b) < v) ++b;
    return b;
}

} // namespace cwc
