#pragma once

/**
 * @file verification.hpp
 * @brief The verification matrix: every cross-check between the exhaustive,
 *        exact-period, closed-form, explicit-theorem and Gauss-sum routes.
 *
 * Each check yields a CheckResult naming the check and the parameters
 * (p, m, N, I) it ran on, so a failing case can be reproduced directly.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclocode/character_check.hpp"
#include "cyclocode/closed_form.hpp"
#include "cyclocode/codes.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/finite_field.hpp"
#include "cyclocode/weight_enumerator.hpp"

namespace cyclocode {

inline constexpr double kGaussTolerance = 1e-6;

struct CheckResult {
    std::string check;
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t order = 0;
    ClassIndexSet indices;
    bool passed = false;
    std::string detail;
    std::vector<double> errors;
};

/// A published enumerator with uniform nonzero-symbol exponents, given as
/// (multiplicity, k_0, k_nonzero) triples.
struct ReferenceExample {
    struct Term {
        std::uint64_t multiplicity;
        std::uint32_t zero;
        std::uint32_t nonzero;
    };

    std::string name;
    std::uint32_t p;
    std::uint32_t m;
    std::uint32_t order;
    ClassIndexSet indices;
    std::uint64_t length;
    std::uint32_t dimension;
    std::uint64_t distance;
    std::vector<Term> terms;

    [[nodiscard]] CompleteWeightEnumerator expected() const {
        CompleteWeightEnumerator cwe(p);
        for (const Term& t : terms) {
            Composition c(p, t.nonzero);
            c[0] = t.zero;
            cwe.add(c, t.multiplicity);
        }
        return cwe;
    }
};

[[nodiscard]] inline const std::vector<ReferenceExample>& reference_examples() {
    static const std::vector<ReferenceExample> examples = {
        {"binary [21,6,8]", 2, 6, 3, {1}, 21, 6, 8, {{1, 21, 0}, {21, 13, 8}, {42, 9, 12}}},
        {"binary [42,6,20]", 2, 6, 3, {0, 1}, 42, 6, 20, {{1, 42, 0}, {42, 22, 20}, {21, 18, 24}}},
        {"ternary [20,4,12]", 3, 4, 4, {1}, 20, 4, 12, {{1, 20, 0}, {60, 8, 6}, {20, 2, 9}}},
        {"ternary [40,4,24]", 3, 4, 4, {0, 1}, 40, 4, 24, {{1, 40, 0}, {40, 16, 12}, {40, 10, 15}}},
        {"ternary [60,4,36]", 3, 4, 4, {0, 1, 2}, 60, 4, 36, {{1, 60, 0}, {20, 24, 18}, {60, 18, 21}}},
        {"quinary [156,4,112]", 5, 4, 4, {1}, 156, 4, 112,
         {{1, 156, 0}, {156, 44, 28}, {156, 32, 31}, {156, 28, 32}, {156, 20, 34}}},
        {"quinary [312,4,240]", 5, 4, 4, {1, 3}, 312, 4, 240, {{1, 312, 0}, {312, 72, 60}, {312, 52, 65}}},
        {"quinary [312,4,236]", 5, 4, 4, {0, 3}, 312, 4, 236,
         {{1, 312, 0}, {156, 76, 59}, {156, 64, 62}, {156, 60, 63}, {156, 48, 66}}},
        {"quinary [468,4,364]", 5, 4, 4, {0, 1, 2}, 468, 4, 364,
         {{1, 468, 0}, {156, 104, 91}, {156, 96, 93}, {156, 92, 94}, {156, 80, 97}}},
    };
    return examples;
}

namespace detail {

inline CheckResult make_check(std::string name, const FieldParams& params, std::uint32_t N,
                              ClassIndexSet indices = {}) {
    CheckResult c;
    c.check = std::move(name);
    c.p = params.p;
    c.m = params.m;
    c.order = N;
    c.indices = std::move(indices);
    return c;
}

inline std::string join(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

} // namespace detail

/// Enumerator and parameters of a published example through every route.
[[nodiscard]] inline std::vector<CheckResult> check_reference_example(const ReferenceExample& ex,
                                                                      unsigned workers = 1) {
    std::vector<CheckResult> out;
    const FieldContext ctx = FieldContext::build(ex.p, ex.m);
    const ClassPartition part = partition_classes(ctx, ex.order);
    const CompleteWeightEnumerator expected = ex.expected();

    const CompleteWeightEnumerator brute = brute_force_cwe(ctx, build_defining_set(part, ex.indices), workers);
    const CompleteWeightEnumerator formula =
        cwe_general_formula(ctx.params(), ex.order, ex.indices, gaussian_periods_exact(ctx, part));
    const CompleteWeightEnumerator theorem = cwe_theorem(ctx.params(), ex.order, ex.indices);

    const auto route = [&](const char* name, const CompleteWeightEnumerator& got) {
        auto c = detail::make_check(std::string("reference_example/") + name, ctx.params(), ex.order, ex.indices);
        c.passed = got == expected;
        c.detail = ex.name + (c.passed ? "" : ": got " + to_text(got) + ", expected " + to_text(expected));
        out.push_back(std::move(c));
    };
    route("brute", brute);
    route("formula", formula);
    route("theorem", theorem);

    auto c = detail::make_check("reference_example/parameters", ctx.params(), ex.order, ex.indices);
    const CodeSummary s = code_summary(brute, ex.p, ex.length);
    c.passed = s.length == ex.length && s.dimension == ex.dimension && s.min_distance == ex.distance;
    c.detail = ex.name + ": measured [" + std::to_string(s.length) + "," + std::to_string(s.dimension) + "," +
               std::to_string(s.min_distance) + "]";
    out.push_back(std::move(c));
    return out;
}

/// Period-level checks: sum = -1, closed form vs exact counting (as
/// multisets), period polynomial vs the factored form.
[[nodiscard]] inline std::vector<CheckResult> check_periods(const FieldContext& ctx, std::uint32_t N) {
    std::vector<CheckResult> out;
    const GaussianPeriods exact = gaussian_periods_exact(ctx, N);

    auto sum = detail::make_check("periods/sum", ctx.params(), N);
    std::int64_t total = 0;
    for (std::int64_t e : exact.eta) total += e;
    sum.passed = total == -1;
    sum.detail = "sum = " + std::to_string(total);
    out.push_back(std::move(sum));

    const ClosedFormPeriods closed = periods_closed_form(ctx.params(), N);
    auto sorted_exact = exact.eta;
    std::sort(sorted_exact.begin(), sorted_exact.end());
    auto multiset = detail::make_check("periods/closed_form_multiset", ctx.params(), N);
    multiset.passed = sorted_exact == closed.multiset();
    multiset.detail = "exact " + detail::join(exact.eta) + ", closed " + detail::join(closed.periods.eta) + " (" +
                      std::string(to_string(closed.case_tag)) + ")";
    out.push_back(std::move(multiset));

    auto poly = detail::make_check("periods/factored_polynomial", ctx.params(), N);
    const auto from_exact = period_polynomial(exact);
    const auto factored = factored_period_polynomial(ctx.params(), N);
    poly.passed = from_exact == factored;
    poly.detail = "expanded " + detail::join(from_exact) + ", factored " + detail::join(factored);
    out.push_back(std::move(poly));
    return out;
}

/// For every nonempty I: exhaustive enumeration equals the class-by-class
/// formula fed with exact periods and with closed-form periods, and the
/// explicit theorem where one applies. Theorem-covered codes are also checked
/// for dimension m in a separate theorem_dimension entry.
[[nodiscard]] inline std::vector<CheckResult> check_oracle_equivalence(const FieldContext& ctx, std::uint32_t N,
                                                                       unsigned workers = 1) {
    std::vector<CheckResult> out;
    const auto brute_all = brute_force_cwe_all_index_sets(ctx, N, workers);
    const GaussianPeriods exact = gaussian_periods_exact(ctx, N);
    const bool closed_available = has_closed_form(ctx.params(), N);
    GaussianPeriods closed;
    if (closed_available) closed = periods_closed_form(ctx.params(), N).periods;

    for (const auto& [indices, brute] : brute_all) {
        auto c = detail::make_check("oracle_equivalence", ctx.params(), N, indices);
        std::vector<std::string> mismatches;
        std::string compared = "brute=formula";
        if (cwe_general_formula(ctx.params(), N, indices, exact) != brute) mismatches.push_back("formula");
        if (closed_available) {
            compared += "=closed";
            if (cwe_general_formula(ctx.params(), N, indices, closed) != brute) mismatches.push_back("closed");
        }
        if (theorem_applies(ctx.params(), N, indices.size())) {
            compared += "=theorem";
            if (cwe_theorem(ctx.params(), N, indices) != brute) mismatches.push_back("theorem");
        }
        c.passed = mismatches.empty();
        if (c.passed) {
            c.detail = compared;
        } else {
            c.detail = "mismatch:";
            for (const auto& m : mismatches) c.detail += " " + m;
        }
        out.push_back(std::move(c));

        if (theorem_applies(ctx.params(), N, indices.size())) {
            auto dim = detail::make_check("theorem_dimension", ctx.params(), N, indices);
            const CodeSummary s = code_summary(brute, ctx.p(), brute.length());
            dim.passed = s.dimension == ctx.m();
            dim.detail = "dimension " + std::to_string(s.dimension) + ", m = " + std::to_string(ctx.m());
            out.push_back(std::move(dim));
        }
    }
    return out;
}

/// Gaussian periods recomputed from Gauss sums against the exact integers,
/// invariance under the choice of class representative, G(trivial) = -1 and
/// |G(chi^t)| = sqrt(r) for nontrivial chi^t.
[[nodiscard]] inline std::vector<CheckResult> check_gauss(const FieldContext& ctx, std::uint32_t N,
                                                          double tolerance = kGaussTolerance) {
    std::vector<CheckResult> out;
    const CharacterSystem sys(ctx);
    const GaussianPeriods exact = gaussian_periods_exact(ctx, N);

    const auto record = [&](const char* name, std::vector<double> errors) {
        auto c = detail::make_check(name, ctx.params(), N);
        double worst = 0.0;
        for (double e : errors) worst = std::max(worst, e);
        c.passed = worst < tolerance;
        c.errors = std::move(errors);
        c.detail = "max error " + std::to_string(worst);
        out.push_back(std::move(c));
    };

    const auto numeric = periods_via_gauss_sums(sys, N);
    std::vector<double> errors;
    for (std::uint32_t k = 0; k < N; ++k) {
        errors.push_back(std::max(std::abs(numeric[k].real() - static_cast<double>(exact.eta[k])),
                                  std::abs(numeric[k].imag())));
    }
    record("gauss/periods", errors);

    const auto shifted = periods_via_gauss_sums(sys, N, 1 + ctx.group_order() / (2 * N));
    errors.clear();
    for (std::uint32_t k = 0; k < N; ++k) errors.push_back(std::abs(shifted[k] - numeric[k]));
    record("gauss/representative_invariance", errors);

    record("gauss/trivial_character", {std::abs(gauss_sum(sys, 0) - Complex(-1.0, 0.0))});

    errors.clear();
    const double root = std::sqrt(static_cast<double>(ctx.r()));
    const std::int64_t n = ctx.group_order() / N;
    std::vector<std::int64_t> exponents{1};
    for (std::uint32_t i = 1; i < N; ++i) exponents.push_back(n * i);
    if (ctx.r() <= 512) {
        exponents.clear();
        for (std::uint32_t t = 1; t < ctx.group_order(); ++t) exponents.push_back(t);
    }
    for (std::int64_t t : exponents) errors.push_back(std::abs(std::abs(gauss_sum(sys, t)) - root));
    record("gauss/absolute_value", errors);
    return out;
}

/// Coset-representative codes of order 3 for J = {0} and J = {0, 1}.
[[nodiscard]] inline std::vector<CheckResult> check_coset_representatives(const FieldContext& ctx,
                                                                          unsigned workers = 1) {
    std::vector<CheckResult> out;
    for (const ClassIndexSet& cosets : {ClassIndexSet{0}, ClassIndexSet{0, 1}}) {
        const auto rep = coset_representative_code(ctx, cosets, workers);
        auto c = detail::make_check("coset_representatives", ctx.params(), 3, cosets);
        c.passed = rep.matches;
        if (rep.matches) {
            std::string wd;
            for (const auto& [w, f] : rep.representative_weights) {
                wd += (wd.empty() ? "" : ",") + std::to_string(w) + ":" + std::to_string(f);
            }
            c.detail = "weights {" + wd + "}";
        } else {
            c.detail = rep.failure;
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace cyclocode
