#pragma once

// Floating-point cross-check of Gaussian periods through Gauss sums.
//
// chi^t(alpha^j) = exp(2 pi i t j / (r-1)) and psi(x) = zeta_p^Tr(x). A period
// of order N is recovered as
//     eta_k = (1/N) sum_{i<N} G(conj(chi)^(n i)) chi^(n i)(alpha^k),
// and psi itself as (1/(r-1)) sum_t G(chi^-t) chi^t(x). This module only
// verifies; the exact paths never touch floating point.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "cyclocode/errors.hpp"
#include "cyclocode/finite_field.hpp"

namespace cyclocode {

using Complex = std::complex<double>;

class CharacterSystem {
public:
    explicit CharacterSystem(const FieldContext& ctx) : ctx_(&ctx) {
        const std::uint32_t order = ctx.group_order();
        group_roots_.resize(order);
        for (std::uint32_t j = 0; j < order; ++j) {
            group_roots_[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / order);
        }
        additive_roots_.resize(ctx.p());
        for (std::uint32_t j = 0; j < ctx.p(); ++j) {
            additive_roots_[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / ctx.p());
        }
    }

    [[nodiscard]] const FieldContext& field() const { return *ctx_; }

    /// chi^t(x) for x != 0; t taken mod r - 1.
    [[nodiscard]] Complex chi(std::int64_t t, Element x) const {
        return chi_at_exponent(t, ctx_->discrete_log(x));
    }

    /// chi^t(alpha^j).
    [[nodiscard]] Complex chi_at_exponent(std::int64_t t, std::uint64_t j) const {
        const auto order = static_cast<std::int64_t>(ctx_->group_order());
        const std::int64_t tt = ((t % order) + order) % order;
        const auto jj = static_cast<std::int64_t>(j % static_cast<std::uint64_t>(order));
        // tt * jj < 2^44 for r <= 2^22
        return group_roots_[static_cast<std::size_t>((tt * jj) % order)];
    }

    /// psi(x) = zeta_p^Tr(x).
    [[nodiscard]] Complex psi(Element x) const { return additive_roots_[ctx_->trace(x)]; }

private:
    const FieldContext* ctx_;
    std::vector<Complex> group_roots_;
    std::vector<Complex> additive_roots_;
};

namespace detail {

/// Pairwise summation; order of additions depends only on the input length.
inline Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 32) {
        Complex s{};
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

} // namespace detail

/// G(chi^t) = sum over x != 0 of chi^t(x) psi(x).
[[nodiscard]] inline Complex gauss_sum(const CharacterSystem& sys, std::int64_t t) {
    const FieldContext& ctx = sys.field();
    const auto antilog = ctx.antilog_table();
    std::vector<Complex> terms(ctx.group_order());
    for (std::uint32_t j = 0; j < ctx.group_order(); ++j) {
        terms[j] = sys.chi_at_exponent(t, j) * sys.psi(Element{antilog[j]});
    }
    return detail::pairwise_sum(terms, 0, terms.size());
}

/// eta_k evaluated at the representative alpha^(k + N * shift) of C_k.
[[nodiscard]] inline std::vector<Complex> periods_via_gauss_sums(const CharacterSystem& sys, std::uint32_t N,
                                                                 std::uint64_t shift = 0) {
    const FieldContext& ctx = sys.field();
    if (N < 2 || ctx.group_order() % N != 0) throw ParameterError("N must divide r - 1");
    const std::int64_t n = ctx.group_order() / N;
    std::vector<Complex> gauss(N);
    for (std::uint32_t i = 0; i < N; ++i) gauss[i] = gauss_sum(sys, -n * i); // G(conj(chi)^(n i))
    std::vector<Complex> eta(N);
    for (std::uint32_t k = 0; k < N; ++k) {
        Complex acc{};
        const std::uint64_t exponent = k + std::uint64_t{N} * shift;
        for (std::uint32_t i = 0; i < N; ++i) acc += gauss[i] * sys.chi_at_exponent(n * i, exponent);
        eta[k] = acc / static_cast<double>(N);
    }
    return eta;
}

/// Maximum |psi(x) - (1/(r-1)) sum_t G(chi^-t) chi^t(x)| over sampled x != 0.
/// With sample_size >= r - 1 every nonzero x is checked; otherwise x = 1 plus
/// a fixed-seed random sample.
[[nodiscard]] inline double fourier_reconstruction_check(const CharacterSystem& sys, std::size_t sample_size) {
    const FieldContext& ctx = sys.field();
    const std::uint32_t order = ctx.group_order();
    std::vector<Complex> gauss(order);
    for (std::uint32_t t = 0; t < order; ++t) gauss[t] = gauss_sum(sys, -static_cast<std::int64_t>(t));

    std::vector<std::uint32_t> exponents;
    if (sample_size >= order) {
        exponents.resize(order);
        for (std::uint32_t j = 0; j < order; ++j) exponents[j] = j;
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::uint32_t> pick(0, order - 1);
        exponents.push_back(0);
        while (exponents.size() < sample_size) exponents.push_back(pick(rng));
    }

    double worst = 0.0;
    std::vector<Complex> terms(order);
    for (std::uint32_t j : exponents) {
        for (std::uint32_t t = 0; t < order; ++t) terms[t] = gauss[t] * sys.chi_at_exponent(t, j);
        const Complex rebuilt = detail::pairwise_sum(terms, 0, terms.size()) / static_cast<double>(order);
        worst = std::max(worst, std::abs(rebuilt - sys.psi(ctx.exp(j))));
    }
    return worst;
}

} // namespace cyclocode
