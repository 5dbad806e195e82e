#pragma once

// Checked 64-bit integer helpers. Every closed-form evaluation in the library
// goes through these so that an overflow or an inexact division is reported,
// never silently rounded.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclocode/errors.hpp"

namespace cyclocode {

[[nodiscard]] inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw ConsistencyError("integer overflow in addition");
    return out;
}

[[nodiscard]] inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw ConsistencyError("integer overflow in multiplication");
    return out;
}

[[nodiscard]] inline std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

/// a / b, throwing ConsistencyError unless b divides a.
[[nodiscard]] inline std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what = "value") {
    if (b == 0 || a % b != 0) {
        throw ConsistencyError(std::string("non-integral ") + what + ": " + std::to_string(a) + "/" +
                               std::to_string(b));
    }
    return a / b;
}

[[nodiscard]] inline std::int64_t ipow(std::int64_t base, std::uint32_t e) {
    std::int64_t out = 1;
    for (std::uint32_t i = 0; i < e; ++i) out = checked_mul(out, base);
    return out;
}

[[nodiscard]] inline std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t x = 0;
    for (std::uint64_t bit = std::uint64_t{1} << 31; bit != 0; bit >>= 1) {
        const std::uint64_t y = x | bit;
        if (y * y <= n) x = y;
    }
    return x;
}

/// The integer k-th root of n when n is a perfect k-th power.
[[nodiscard]] inline std::optional<std::int64_t> exact_root(std::int64_t n, std::uint32_t k) {
    if (n < 0 || k == 0) return std::nullopt;
    std::int64_t lo = 0;
    std::int64_t hi = 1;
    while (ipow(hi, k) < n) hi *= 2;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (ipow(mid, k) < n) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (ipow(lo, k) != n) return std::nullopt;
    return lo;
}

[[nodiscard]] inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Non-negative residue of a mod m.
[[nodiscard]] inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

struct LinearFactor {
    std::int64_t slope = 1;  // coefficient of X
    std::int64_t offset = 0; // constant term
};

/// Expands prod_i (slope_i X + offset_i); coefficients constant term first.
[[nodiscard]] inline std::vector<std::int64_t> expand_linear_factors(std::span<const LinearFactor> factors) {
    std::vector<std::int64_t> poly{1};
    for (const LinearFactor& f : factors) {
        std::vector<std::int64_t> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] = checked_add(next[i], checked_mul(poly[i], f.offset));
            next[i + 1] = checked_add(next[i + 1], checked_mul(poly[i], f.slope));
        }
        poly = std::move(next);
    }
    return poly;
}

} // namespace cyclocode
