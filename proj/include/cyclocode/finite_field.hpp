#pragma once

/**
 * @file finite_field.hpp
 * @brief Table-driven arithmetic in GF(p) and GF(p^m).
 *
 * Elements of GF(p^m) = GF(p)[X]/(f) are encoded as a single integer index in
 * [0, p^m): base-p digit i of the index is the coefficient of X^i. Index 0 is
 * zero and index 1 is one. A FieldContext owns the modulus f, a primitive
 * element alpha and flat lookup tables (discrete log, antilog, trace), so
 * multiplication, trace and discrete log are O(1).
 *
 * Both f and alpha are pinned deterministically: f is the monic irreducible of
 * degree m with the smallest index encoding of its low coefficients, alpha is
 * the primitive element with the smallest index. Every quantity derived from
 * them (class labels, period indexing, codeword dumps) is reproducible.
 */

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cyclocode/errors.hpp"

namespace cyclocode {

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 22;

struct FieldParams {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t r = 0;

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// Coefficients mod p, constant term first. The zero polynomial is empty.
struct Polynomial {
    std::vector<std::uint32_t> coefficients;

    [[nodiscard]] bool is_zero() const { return coefficients.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coefficients.size()) - 1; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

struct Element {
    std::uint32_t index = 0;

    friend auto operator<=>(const Element&, const Element&) = default;
};

// ---------------------------------------------------------------------------
// Integer helpers

[[nodiscard]] inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Distinct prime factors in increasing order.
[[nodiscard]] inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Validates (p, m) and computes r = p^m with overflow detection.
[[nodiscard]] inline FieldParams make_field_params(std::uint64_t p, std::uint64_t m,
                                                   std::uint64_t cap = kDefaultFieldCap) {
    if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw ParameterError("extension degree m must be at least 1");
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (r > cap / p) {
            throw CapacityError("field size " + std::to_string(p) + "^" + std::to_string(m) +
                                " exceeds the cap of " + std::to_string(cap) + " elements");
        }
        r *= p;
    }
    if (r > std::numeric_limits<std::uint32_t>::max()) {
        throw CapacityError("field size does not fit in a 32-bit element index");
    }
    return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m),
            static_cast<std::uint32_t>(r)};
}

namespace detail {

using Coeffs = std::vector<std::uint32_t>;

inline void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic divisor.
inline Coeffs poly_rem(Coeffs a, const Coeffs& monic, std::uint32_t p) {
    trim(a);
    const std::size_t dm = monic.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                const std::uint64_t sub = lead * monic[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& modulus,
                          std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return poly_rem(std::move(prod), modulus, p);
}

inline Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& modulus, std::uint32_t p) {
    Coeffs acc{1};
    base = poly_rem(std::move(base), modulus, p);
    while (e > 0) {
        if (e & 1) acc = poly_mulmod(acc, base, modulus, p);
        e >>= 1;
        if (e > 0) base = poly_mulmod(base, base, modulus, p);
    }
    return acc;
}

inline Coeffs digits_of(std::uint64_t index, std::uint32_t p, std::uint32_t len) {
    Coeffs out(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return out;
}

inline std::uint32_t index_of(const Coeffs& c, std::uint32_t p) {
    std::uint64_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return static_cast<std::uint32_t>(idx);
}

} // namespace detail

/// Trial division against every monic polynomial of degree 1..deg/2.
[[nodiscard]] inline bool is_irreducible(const Polynomial& f, std::uint32_t p) {
    const int deg = f.degree();
    if (deg < 1) return false;
    if (f.coefficients.back() != 1) throw ParameterError("is_irreducible expects a monic polynomial");
    if (deg == 1) return true;
    for (int d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t tail = 0; tail < count; ++tail) {
            detail::Coeffs divisor = detail::digits_of(tail, p, static_cast<std::uint32_t>(d));
            divisor.push_back(1);
            if (detail::poly_rem(f.coefficients, divisor, p).empty()) return false;
        }
    }
    return true;
}

/// The monic irreducible polynomial of degree m over GF(p) whose low
/// coefficients (c_0, ..., c_{m-1}) have the smallest index encoding
/// sum c_i p^i. For (2, 6) this is X^6 + X + 1.
[[nodiscard]] inline Polynomial find_irreducible(std::uint32_t p, std::uint32_t m,
                                                 std::uint64_t cap = kDefaultFieldCap) {
    const FieldParams params = make_field_params(p, m, cap);
    for (std::uint64_t idx = 0; idx < params.r; ++idx) {
        Polynomial f{detail::digits_of(idx, p, m)};
        f.coefficients.push_back(1);
        if (is_irreducible(f, p)) return f;
    }
    throw ConsistencyError("no irreducible polynomial of degree " + std::to_string(m) + " found");
}

/// A fully built GF(p^m). Immutable after construction; safe to share across
/// threads.
class FieldContext {
public:
    static constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

    /// Builds the field. Throws ParameterError for a non-prime p or m = 0 and
    /// CapacityError when p^m exceeds @p cap.
    static FieldContext build(std::uint32_t p, std::uint32_t m, std::uint64_t cap = kDefaultFieldCap) {
        FieldContext ctx;
        ctx.params_ = make_field_params(p, m, cap);
        ctx.modulus_ = find_irreducible(p, m, cap);
        ctx.init_powers();
        ctx.build_exp_log_tables();
        ctx.build_trace_table();
        return ctx;
    }

    [[nodiscard]] const FieldParams& params() const { return params_; }
    [[nodiscard]] std::uint32_t p() const { return params_.p; }
    [[nodiscard]] std::uint32_t m() const { return params_.m; }
    [[nodiscard]] std::uint32_t r() const { return params_.r; }
    /// Order of the multiplicative group, r - 1.
    [[nodiscard]] std::uint32_t group_order() const { return params_.r - 1; }

    [[nodiscard]] const Polynomial& modulus() const { return modulus_; }
    [[nodiscard]] Element alpha() const { return alpha_; }

    [[nodiscard]] bool contains(Element x) const { return x.index < params_.r; }

    [[nodiscard]] Element zero() const { return {0}; }
    [[nodiscard]] Element one() const { return {1}; }

    [[nodiscard]] Element add(Element a, Element b) const {
        if (params_.p == 2) return {a.index ^ b.index};
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < params_.m; ++i) {
            const std::uint32_t da = (a.index / powers_[i]) % params_.p;
            const std::uint32_t db = (b.index / powers_[i]) % params_.p;
            out += ((da + db) % params_.p) * powers_[i];
        }
        return {out};
    }

    [[nodiscard]] Element negate(Element a) const {
        if (params_.p == 2) return a;
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < params_.m; ++i) {
            const std::uint32_t d = (a.index / powers_[i]) % params_.p;
            out += ((params_.p - d) % params_.p) * powers_[i];
        }
        return {out};
    }

    [[nodiscard]] Element sub(Element a, Element b) const { return add(a, negate(b)); }

    [[nodiscard]] Element mul(Element a, Element b) const {
        if (a.index == 0 || b.index == 0) return {0};
        std::uint32_t e = log_[a.index] + log_[b.index];
        if (e >= group_order()) e -= group_order();
        return {exp_[e]};
    }

    /// x^e for any e >= 0 (0^0 = 1).
    [[nodiscard]] Element pow(Element x, std::uint64_t e) const {
        if (e == 0) return one();
        if (x.index == 0) return zero();
        const std::uint64_t idx = (std::uint64_t{log_[x.index]} * (e % group_order())) % group_order();
        return {exp_[idx]};
    }

    /// alpha^j for any j >= 0.
    [[nodiscard]] Element exp(std::uint64_t j) const { return {exp_[j % group_order()]}; }

    [[nodiscard]] std::uint32_t discrete_log(Element x) const {
        if (x.index == 0) throw DomainError("discrete log of zero is undefined");
        if (!contains(x)) throw DomainError("element index out of range");
        return log_[x.index];
    }

    /// Tr(x) = x + x^p + ... + x^(p^(m-1)) as a residue in [0, p).
    [[nodiscard]] std::uint32_t trace(Element x) const { return trace_[x.index]; }

    [[nodiscard]] std::span<const std::uint32_t> trace_table() const { return trace_; }
    /// log_table()[x] for x != 0; entry 0 holds kNoLog.
    [[nodiscard]] std::span<const std::uint32_t> log_table() const { return log_; }
    [[nodiscard]] std::span<const std::uint32_t> antilog_table() const { return exp_; }

    /// Tr(alpha^j) for j in [0, 2(r-1)). The doubled length lets callers index
    /// with a sum of two exponents without reducing mod r - 1.
    [[nodiscard]] std::span<const std::uint32_t> trace_by_exponent() const { return trace_by_exp_; }

    /// Coefficients of x in the polynomial basis, constant term first, length m.
    [[nodiscard]] std::vector<std::uint32_t> coefficients(Element x) const {
        return detail::digits_of(x.index, params_.p, params_.m);
    }

    [[nodiscard]] Element from_coefficients(std::span<const std::uint32_t> c) const {
        if (c.size() > params_.m) throw ParameterError("too many coefficients for this field");
        std::uint64_t idx = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= params_.p) throw ParameterError("coefficient out of range");
            idx = idx * params_.p + c[i];
        }
        return {static_cast<std::uint32_t>(idx)};
    }

    /// Product through polynomial multiplication and reduction, bypassing the
    /// log tables. Slow; meant for cross-checks.
    [[nodiscard]] Element mul_by_polynomial(Element a, Element b) const {
        auto prod = detail::poly_mulmod(coefficients(a), coefficients(b), modulus_.coefficients,
                                        params_.p);
        return {detail::index_of(prod, params_.p)};
    }

private:
    FieldContext() = default;

    void init_powers() {
        powers_.assign(params_.m + 1, 1);
        for (std::uint32_t i = 1; i <= params_.m; ++i) powers_[i] = powers_[i - 1] * params_.p;
    }

    [[nodiscard]] bool has_full_order(std::uint32_t candidate,
                                      const std::vector<std::uint64_t>& factors) const {
        const auto& mod = modulus_.coefficients;
        const auto base = detail::digits_of(candidate, params_.p, params_.m);
        for (std::uint64_t q : factors) {
            auto y = detail::poly_powmod(base, group_order() / q, mod, params_.p);
            if (y.size() == 1 && y[0] == 1) return false;
        }
        return true;
    }

    void build_exp_log_tables() {
        const std::uint32_t order = group_order();
        const auto factors = prime_factors(order);
        alpha_ = {0};
        for (std::uint32_t c = 1; c < params_.r; ++c) {
            if (has_full_order(c, factors)) {
                alpha_ = {c};
                break;
            }
        }
        if (alpha_.index == 0) throw ConsistencyError("no primitive element found");

        exp_.assign(order, 0);
        log_.assign(params_.r, kNoLog);
        const auto& mod = modulus_.coefficients;
        const auto alpha_coeffs = detail::digits_of(alpha_.index, params_.p, params_.m);
        detail::Coeffs cur{1};
        for (std::uint32_t j = 0; j < order; ++j) {
            const std::uint32_t idx = detail::index_of(cur, params_.p);
            if (idx == 0 || log_[idx] != kNoLog) {
                throw ConsistencyError("alpha does not generate the multiplicative group");
            }
            exp_[j] = idx;
            log_[idx] = j;
            cur = detail::poly_mulmod(cur, alpha_coeffs, mod, params_.p);
        }
        if (!(cur.size() == 1 && cur[0] == 1)) {
            throw ConsistencyError("alpha^(r-1) != 1");
        }
    }

    void build_trace_table() {
        const std::uint32_t p = params_.p;
        const std::uint32_t m = params_.m;
        const auto& mod = modulus_.coefficients;
        // Trace of each basis monomial X^i, by summing its Frobenius orbit.
        std::vector<std::uint32_t> basis_trace(m, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            detail::Coeffs x(i + 1, 0);
            x[i] = 1;
            x = detail::poly_rem(std::move(x), mod, p);
            detail::Coeffs acc(m, 0);
            detail::Coeffs y = x;
            for (std::uint32_t j = 0; j < m; ++j) {
                for (std::size_t t = 0; t < y.size(); ++t) acc[t] = (acc[t] + y[t]) % p;
                y = detail::poly_powmod(y, p, mod, p);
            }
            for (std::uint32_t t = 1; t < m; ++t) {
                if (acc[t] != 0) throw ConsistencyError("trace left the prime field");
            }
            basis_trace[i] = acc[0];
        }
        // Tr(sum c_i X^i) = sum c_i Tr(X^i), filled in index order with a
        // base-p counter. Every digit touched by an increment moves by +1 or
        // by -(p-1), both of which are +1 mod p.
        trace_.assign(params_.r, 0);
        std::vector<std::uint32_t> digits(m, 0);
        std::uint32_t acc = 0;
        for (std::uint32_t idx = 0; idx < params_.r; ++idx) {
            trace_[idx] = acc;
            for (std::uint32_t i = 0; i < m; ++i) {
                acc = (acc + basis_trace[i]) % p;
                if (++digits[i] < p) break;
                digits[i] = 0;
            }
        }
        const std::uint32_t order = group_order();
        trace_by_exp_.resize(std::size_t{2} * order);
        for (std::uint32_t j = 0; j < order; ++j) {
            trace_by_exp_[j] = trace_[exp_[j]];
            trace_by_exp_[j + order] = trace_by_exp_[j];
        }
    }

    FieldParams params_{};
    Polynomial modulus_{};
    Element alpha_{};
    std::vector<std::uint32_t> powers_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> trace_;
    std::vector<std::uint32_t> trace_by_exp_;
};

} // namespace cyclocode
