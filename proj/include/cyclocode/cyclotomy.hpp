#pragma once

// Cyclotomic classes C_k = alpha^k <alpha^N>, their trace distributions, and
// exact integer Gaussian periods.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclocode/errors.hpp"
#include "cyclocode/finite_field.hpp"
#include "cyclocode/integer_math.hpp"

namespace cyclocode {

struct ClassPartition {
    static constexpr std::uint32_t kNoClass = 0xffffffffu;

    std::uint32_t order = 0;      // N
    std::uint32_t class_size = 0; // n = (r - 1) / N
    /// class_of[x] = discrete_log(x) mod N; kNoClass for x = 0.
    std::vector<std::uint32_t> class_of;
    /// members[k] lists C_k in increasing element index.
    std::vector<std::vector<Element>> members;
};

/// True when N | (r - 1) / (p - 1), i.e. F_p^* lies inside C_0 and every
/// Gaussian period of order N is a rational integer.
[[nodiscard]] inline bool periods_are_integral(const FieldParams& params, std::uint32_t N) {
    if (N == 0 || (params.r - 1) % N != 0) return false;
    return ((params.r - 1) / (params.p - 1)) % N == 0;
}

[[nodiscard]] inline ClassPartition partition_classes(const FieldContext& ctx, std::uint32_t N) {
    if (N < 2) throw ParameterError("cyclotomic order N must be greater than 1");
    if (ctx.group_order() % N != 0) {
        throw ParameterError("N = " + std::to_string(N) + " does not divide r - 1 = " +
                             std::to_string(ctx.group_order()));
    }
    ClassPartition part;
    part.order = N;
    part.class_size = ctx.group_order() / N;
    part.class_of.assign(ctx.r(), ClassPartition::kNoClass);
    part.members.assign(N, {});
    for (auto& members : part.members) members.reserve(part.class_size);
    const auto log = ctx.log_table();
    for (std::uint32_t x = 1; x < ctx.r(); ++x) {
        const std::uint32_t k = log[x] % N;
        part.class_of[x] = k;
        part.members[k].push_back(Element{x});
    }
    return part;
}

/// counts(k, rho) = #{x in C_k : Tr(x) = rho}.
struct TraceDistribution {
    std::uint32_t order = 0;
    std::uint32_t p = 0;
    std::uint32_t class_size = 0;
    std::vector<std::uint64_t> table; // row-major, order x p

    [[nodiscard]] std::uint64_t count(std::uint32_t k, std::uint32_t rho) const {
        return table[std::size_t{k} * p + rho];
    }
};

[[nodiscard]] inline TraceDistribution trace_distribution(const FieldContext& ctx,
                                                          const ClassPartition& part) {
    TraceDistribution dist{part.order, ctx.p(), part.class_size, {}};
    dist.table.assign(std::size_t{part.order} * ctx.p(), 0);
    const auto trace = ctx.trace_table();
    for (std::uint32_t x = 1; x < ctx.r(); ++x) {
        ++dist.table[std::size_t{part.class_of[x]} * ctx.p() + trace[x]];
    }
    return dist;
}

/// Exact Gaussian periods eta_0, ..., eta_{N-1}; eta_k belongs to the class
/// of alpha^k for this context's alpha.
struct GaussianPeriods {
    std::vector<std::int64_t> eta;

    [[nodiscard]] std::uint32_t order() const { return static_cast<std::uint32_t>(eta.size()); }
    /// eta_{k mod N}; indices are cyclic.
    [[nodiscard]] std::int64_t at(std::int64_t k) const {
        const auto n = static_cast<std::int64_t>(eta.size());
        return eta[static_cast<std::size_t>(((k % n) + n) % n)];
    }

    friend bool operator==(const GaussianPeriods&, const GaussianPeriods&) = default;
};

/// eta_k = sum over x in C_k of zeta_p^Tr(x). When N | (r-1)/(p-1) the counts
/// of every nonzero trace value agree within a class, the zeta powers sum to
/// -1, and eta_k collapses to counts(k, 0) - counts(k, 1).
[[nodiscard]] inline GaussianPeriods gaussian_periods_exact(const FieldContext& ctx,
                                                            const ClassPartition& part) {
    if (!periods_are_integral(ctx.params(), part.order)) {
        throw ParameterError("N = " + std::to_string(part.order) + " does not divide (r-1)/(p-1) = " +
                             std::to_string(ctx.group_order() / (ctx.p() - 1)) +
                             "; Gaussian periods are not rational integers");
    }
    const TraceDistribution dist = trace_distribution(ctx, part);
    GaussianPeriods out;
    out.eta.resize(part.order);
    for (std::uint32_t k = 0; k < part.order; ++k) {
        const std::uint64_t nonzero = dist.count(k, 1);
        for (std::uint32_t rho = 2; rho < ctx.p(); ++rho) {
            if (dist.count(k, rho) != nonzero) {
                throw ConsistencyError("nonzero trace values are not uniform on class " +
                                       std::to_string(k));
            }
        }
        out.eta[k] = static_cast<std::int64_t>(dist.count(k, 0)) - static_cast<std::int64_t>(nonzero);
    }
    return out;
}

[[nodiscard]] inline GaussianPeriods gaussian_periods_exact(const FieldContext& ctx, std::uint32_t N) {
    return gaussian_periods_exact(ctx, partition_classes(ctx, N));
}

/// Coefficients of prod_k (X - eta_k), constant term first.
[[nodiscard]] inline std::vector<std::int64_t> period_polynomial(const GaussianPeriods& periods) {
    std::vector<LinearFactor> factors;
    factors.reserve(periods.eta.size());
    for (std::int64_t e : periods.eta) factors.push_back({1, checked_neg(e)});
    return expand_linear_factors(factors);
}

} // namespace cyclocode
