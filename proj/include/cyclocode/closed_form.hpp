#pragma once

/**
 * @file closed_form.hpp
 * @brief Closed-form Gaussian periods of order 3 and 4, and the complete
 *        weight enumerator formulas built on them.
 *
 * Two independent formula routes are provided:
 *
 *  - cwe_general_formula() takes any vector of integer Gaussian periods and
 *    assembles the enumerator class by class: for x in C_k the zero symbol
 *    occurs nl/p + (p-1)/p * S_k times and each nonzero symbol
 *    nl/p - S_k/p times, where S_k = sum_{i in I} eta_{k+i}.
 *
 *  - cwe_theorem() evaluates the explicit per-case expressions for N = 3
 *    (#I = 1, 2) and N = 4 (#I = 1, 2, 3) directly from p, m and the
 *    Diophantine parameters (s1, t1) or (u1, v1), without going through
 *    any period vector.
 *
 * All divisions are exact by theory and are asserted, never rounded.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclocode/codes.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/errors.hpp"
#include "cyclocode/finite_field.hpp"
#include "cyclocode/integer_math.hpp"
#include "cyclocode/weight_enumerator.hpp"

namespace cyclocode {

/// 4 r^(1/3) = s1^2 + 27 t1^2 with s1 = 1 (mod 3), gcd(s1, p) = 1, t1 >= 0.
struct DiophantineN3 {
    std::int64_t s1 = 0;
    std::int64_t t1 = 0;

    friend bool operator==(const DiophantineN3&, const DiophantineN3&) = default;
};

/// r^(1/2) = u1^2 + 4 v1^2 with u1 = 1 (mod 4), gcd(u1, p) = 1, v1 >= 0.
struct DiophantineN4 {
    std::int64_t u1 = 0;
    std::int64_t v1 = 0;

    friend bool operator==(const DiophantineN4&, const DiophantineN4&) = default;
};

namespace detail {

/// Every (a, b) with b >= 0, a^2 + weight*b^2 = target, a = 1 (mod modulus)
/// and gcd(a, p) = 1.
inline std::vector<std::pair<std::int64_t, std::int64_t>> search_norm_form(std::int64_t target,
                                                                           std::int64_t weight,
                                                                           std::int64_t modulus,
                                                                           std::int64_t p) {
    std::vector<std::pair<std::int64_t, std::int64_t>> found;
    for (std::int64_t b = 0; weight * b * b <= target; ++b) {
        const std::int64_t rest = target - weight * b * b;
        const auto a = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rest)));
        if (a * a != rest) continue;
        for (std::int64_t cand : {a, -a}) {
            if (mod_floor(cand, modulus) == 1 && gcd(cand, p) == 1) {
                if (std::find(found.begin(), found.end(), std::pair{cand, b}) == found.end()) {
                    found.emplace_back(cand, b);
                }
            }
        }
    }
    return found;
}

inline std::int64_t field_root(const FieldParams& params, std::uint32_t k, const char* what) {
    if (params.m % k != 0) {
        throw ParameterError(std::string(what) + " requires " + std::to_string(k) + " | m");
    }
    return ipow(params.p, params.m / k);
}

} // namespace detail

[[nodiscard]] inline DiophantineN3 solve_n3(const FieldParams& params) {
    if (params.p % 3 != 1) throw ParameterError("solve_n3 requires p = 1 (mod 3)");
    if (params.m % 3 != 0) throw ParameterError("solve_n3 requires m = 0 (mod 3) so that r is a cube");
    const std::int64_t c = detail::field_root(params, 3, "solve_n3");
    const auto found = detail::search_norm_form(4 * c, 27, 3, params.p);
    if (found.empty()) throw ConsistencyError("no representation 4c = s1^2 + 27 t1^2 found");
    if (found.size() > 1) throw ConsistencyError("representation 4c = s1^2 + 27 t1^2 is not unique");
    return {found[0].first, found[0].second};
}

[[nodiscard]] inline DiophantineN4 solve_n4(const FieldParams& params) {
    if (params.p % 4 != 1) throw ParameterError("solve_n4 requires p = 1 (mod 4)");
    if (params.m % 4 != 0) throw ParameterError("solve_n4 requires m = 0 (mod 4)");
    const std::int64_t root = detail::field_root(params, 2, "solve_n4");
    const auto found = detail::search_norm_form(root, 4, 4, params.p);
    if (found.empty()) throw ConsistencyError("no representation sqrt(r) = u1^2 + 4 v1^2 found");
    if (found.size() > 1) throw ConsistencyError("representation sqrt(r) = u1^2 + 4 v1^2 is not unique");
    return {found[0].first, found[0].second};
}

/// Which branch of the order-3 / order-4 period formulas applies.
enum class PeriodCase {
    kOrder3Split,            // p = 1 (mod 3), m = 0 (mod 3)
    kOrder3SemiPrimitiveM0,  // p = 2 (mod 3), m = 0 (mod 4)
    kOrder3SemiPrimitiveM2,  // p = 2 (mod 3), m = 2 (mod 4)
    kOrder4Split,            // p = 1 (mod 4), m = 0 (mod 4)
    kOrder4SemiPrimitiveM0,  // p = 3 (mod 4), m = 0 (mod 4)
    kOrder4SemiPrimitiveM2,  // p = 3 (mod 4), m = 2 (mod 4)
};

[[nodiscard]] inline std::string_view to_string(PeriodCase c) {
    switch (c) {
    case PeriodCase::kOrder3Split: return "N=3, p=1 (mod 3), m=0 (mod 3)";
    case PeriodCase::kOrder3SemiPrimitiveM0: return "N=3, p=2 (mod 3), m=0 (mod 4)";
    case PeriodCase::kOrder3SemiPrimitiveM2: return "N=3, p=2 (mod 3), m=2 (mod 4)";
    case PeriodCase::kOrder4Split: return "N=4, p=1 (mod 4), m=0 (mod 4)";
    case PeriodCase::kOrder4SemiPrimitiveM0: return "N=4, p=3 (mod 4), m=0 (mod 4)";
    case PeriodCase::kOrder4SemiPrimitiveM2: return "N=4, p=3 (mod 4), m=2 (mod 4)";
    }
    return "unknown";
}

/// Throws ParameterError naming the violated congruence when no closed form
/// covers (p, m, N).
[[nodiscard]] inline PeriodCase classify_period_case(const FieldParams& params, std::uint32_t N) {
    const std::uint32_t p = params.p;
    const std::uint32_t m = params.m;
    if (N == 3) {
        if (p % 3 == 1) {
            if (m % 3 != 0) throw ParameterError("N=3 with p = 1 (mod 3) requires m = 0 (mod 3)");
            return PeriodCase::kOrder3Split;
        }
        if (p % 3 == 2) {
            if (m % 2 != 0) throw ParameterError("N=3 with p = 2 (mod 3) requires m = 0 (mod 2)");
            return m % 4 == 0 ? PeriodCase::kOrder3SemiPrimitiveM0 : PeriodCase::kOrder3SemiPrimitiveM2;
        }
        throw ParameterError("N=3 requires p != 3 (3 never divides r - 1 for p = 3)");
    }
    if (N == 4) {
        if (p % 4 == 1) {
            if (m % 4 != 0) throw ParameterError("N=4 with p = 1 (mod 4) requires m = 0 (mod 4)");
            return PeriodCase::kOrder4Split;
        }
        if (p % 4 == 3) {
            if (m % 2 != 0) throw ParameterError("N=4 with p = 3 (mod 4) requires m = 0 (mod 2)");
            return m % 4 == 0 ? PeriodCase::kOrder4SemiPrimitiveM0 : PeriodCase::kOrder4SemiPrimitiveM2;
        }
        throw ParameterError("N=4 requires p odd (4 never divides (r-1)/(p-1) for p = 2)");
    }
    throw ParameterError("closed-form Gaussian periods are implemented only for N in {3, 4}, got N = " +
                         std::to_string(N));
}

[[nodiscard]] inline bool has_closed_form(const FieldParams& params, std::uint32_t N) {
    try {
        (void)classify_period_case(params, N);
        return true;
    } catch (const ParameterError&) {
        return false;
    }
}

struct ClosedFormPeriods {
    PeriodCase case_tag{};
    /// Periods in the labeling of the closed-form formulas; that labeling can
    /// differ from a given FieldContext's by the reflection k -> -k.
    GaussianPeriods periods;

    [[nodiscard]] std::vector<std::int64_t> multiset() const {
        auto out = periods.eta;
        std::sort(out.begin(), out.end());
        return out;
    }
};

[[nodiscard]] inline ClosedFormPeriods periods_closed_form(const FieldParams& params, std::uint32_t N) {
    ClosedFormPeriods out;
    out.case_tag = classify_period_case(params, N);
    auto& eta = out.periods.eta;
    const auto div = [](std::int64_t num, std::int64_t den) { return exact_div(num, den, "Gaussian period"); };
    switch (out.case_tag) {
    case PeriodCase::kOrder3Split: {
        const auto [s1, t1] = solve_n3(params);
        const std::int64_t c = detail::field_root(params, 3, "order-3 periods");
        eta = {div(-(1 - s1 * c), 3), div(-(2 + (s1 + 9 * t1) * c), 6), div(-(2 + (s1 - 9 * t1) * c), 6)};
        break;
    }
    case PeriodCase::kOrder3SemiPrimitiveM0: {
        const std::int64_t R = detail::field_root(params, 2, "order-3 periods");
        const std::int64_t rest = div(-(1 - R), 3);
        eta = {div(-(1 + 2 * R), 3), rest, rest};
        break;
    }
    case PeriodCase::kOrder3SemiPrimitiveM2: {
        const std::int64_t R = detail::field_root(params, 2, "order-3 periods");
        const std::int64_t rest = div(-(1 + R), 3);
        eta = {div(-(1 - 2 * R), 3), rest, rest};
        break;
    }
    case PeriodCase::kOrder4Split: {
        const auto [u1, v1] = solve_n4(params);
        const std::int64_t R = detail::field_root(params, 2, "order-4 periods");
        const std::int64_t q = detail::field_root(params, 4, "order-4 periods");
        eta = {div(-(1 + R + 2 * q * u1), 4), div(-(1 - R + 4 * q * v1), 4), div(-(1 + R - 2 * q * u1), 4),
               div(-(1 - R - 4 * q * v1), 4)};
        break;
    }
    case PeriodCase::kOrder4SemiPrimitiveM0: {
        const std::int64_t R = detail::field_root(params, 2, "order-4 periods");
        const std::int64_t rest = div(-(1 - R), 4);
        eta = {div(-(1 + 3 * R), 4), rest, rest, rest};
        break;
    }
    case PeriodCase::kOrder4SemiPrimitiveM2: {
        const std::int64_t R = detail::field_root(params, 2, "order-4 periods");
        const std::int64_t rest = div(-(1 + R), 4);
        eta = {div(-(1 - 3 * R), 4), rest, rest, rest};
        break;
    }
    }
    return out;
}

/// The period polynomial expanded from its known factorization
/// N^-N * prod_i (N X + 1 + a_i), coefficients constant term first. This uses
/// the factor constants a_i directly, not the period values.
[[nodiscard]] inline std::vector<std::int64_t> factored_period_polynomial(const FieldParams& params,
                                                                          std::uint32_t N) {
    const PeriodCase kase = classify_period_case(params, N);
    std::vector<std::int64_t> shifts; // a_i
    switch (kase) {
    case PeriodCase::kOrder3Split: {
        const auto [s1, t1] = solve_n3(params);
        const std::int64_t c = detail::field_root(params, 3, "order-3 factorization");
        shifts = {-s1 * c, exact_div((s1 + 9 * t1) * c, 2, "factor constant"),
                  exact_div((s1 - 9 * t1) * c, 2, "factor constant")};
        break;
    }
    case PeriodCase::kOrder3SemiPrimitiveM0: {
        const std::int64_t R = detail::field_root(params, 2, "order-3 factorization");
        shifts = {2 * R, -R, -R};
        break;
    }
    case PeriodCase::kOrder3SemiPrimitiveM2: {
        const std::int64_t R = detail::field_root(params, 2, "order-3 factorization");
        shifts = {-2 * R, R, R};
        break;
    }
    case PeriodCase::kOrder4Split: {
        const auto [u1, v1] = solve_n4(params);
        const std::int64_t R = detail::field_root(params, 2, "order-4 factorization");
        const std::int64_t q = detail::field_root(params, 4, "order-4 factorization");
        shifts = {R + 2 * q * u1, R - 2 * q * u1, -R + 4 * q * v1, -R - 4 * q * v1};
        break;
    }
    case PeriodCase::kOrder4SemiPrimitiveM0: {
        const std::int64_t R = detail::field_root(params, 2, "order-4 factorization");
        shifts = {3 * R, -R, -R, -R};
        break;
    }
    case PeriodCase::kOrder4SemiPrimitiveM2: {
        const std::int64_t R = detail::field_root(params, 2, "order-4 factorization");
        shifts = {-3 * R, R, R, R};
        break;
    }
    }
    std::vector<LinearFactor> factors;
    for (std::int64_t a : shifts) factors.push_back({static_cast<std::int64_t>(N), checked_add(1, a)});
    auto poly = expand_linear_factors(factors);
    const std::int64_t scale = ipow(N, N);
    for (auto& coeff : poly) coeff = exact_div(coeff, scale, "period polynomial coefficient");
    return poly;
}

namespace detail {

inline Composition uniform_composition(std::uint32_t p, std::int64_t zero_exp, std::int64_t nonzero_exp) {
    if (zero_exp < 0 || nonzero_exp < 0) throw ConsistencyError("negative exponent in weight enumerator");
    Composition c(p, static_cast<std::uint32_t>(nonzero_exp));
    c[0] = static_cast<std::uint32_t>(zero_exp);
    return c;
}

inline Composition zero_codeword(std::uint32_t p, std::int64_t length) {
    return uniform_composition(p, length, 0);
}

} // namespace detail

/// Class-by-class formula: CWE = w0^(nl) + n * sum_k w0^(nl/p + (p-1)/p S_k)
/// * prod_{rho != 0} w_rho^(nl/p - S_k/p), S_k = sum_{i in I} eta_{k+i}.
///
/// The terms count x in GF(r); like brute_force_cwe() the result is collapsed
/// to distinct codewords when x -> codeword is not injective.
///
/// @p periods must hold N integer periods. Feeding the exact periods of a
/// FieldContext keeps class indices aligned with that context; feeding
/// closed-form periods gives the same merged enumerator because every index
/// set of order 3 or 4 is a cyclic shift of its own reflection.
[[nodiscard]] inline CompleteWeightEnumerator cwe_general_formula(const FieldParams& params, std::uint32_t N,
                                                                  ClassIndexSet indices,
                                                                  const GaussianPeriods& periods) {
    if (N < 2 || (params.r - 1) % N != 0) throw ParameterError("N must divide r - 1");
    if (!periods_are_integral(params, N)) {
        throw ParameterError("the class-by-class formula needs N | (r-1)/(p-1)");
    }
    if (periods.order() != N) throw ParameterError("period vector length differs from N");
    indices = normalize_index_set(std::move(indices), N);
    const std::int64_t p = params.p;
    const std::int64_t n = (params.r - 1) / N;
    const std::int64_t length = n * static_cast<std::int64_t>(indices.size());

    CompleteWeightEnumerator cwe(params.p);
    cwe.add(detail::zero_codeword(params.p, length), 1);
    for (std::uint32_t k = 0; k < N; ++k) {
        std::int64_t s = 0;
        for (std::uint32_t i : indices) s = checked_add(s, periods.at(std::int64_t{k} + i));
        const std::int64_t zero_exp = exact_div(checked_add(length, checked_mul(p - 1, s)), p, "zero-symbol exponent");
        const std::int64_t nonzero_exp = exact_div(length - s, p, "nonzero-symbol exponent");
        cwe.add(detail::uniform_composition(params.p, zero_exp, nonzero_exp), static_cast<std::uint64_t>(n));
    }
    detail::collapse_kernel(cwe, static_cast<std::uint64_t>(length));
    return cwe;
}

namespace detail {

/// A theorem term: multiplier * n codewords with
///   zero exponent    = l n / p - (p-1) * bracket / (denominator * p)
///   nonzero exponent = l n / p + bracket / (denominator * p).
struct TheoremTerm {
    std::int64_t multiplier;
    std::int64_t bracket;
    std::int64_t denominator;
};

inline std::vector<TheoremTerm> theorem_terms(const FieldParams& params, std::uint32_t N,
                                              const ClassIndexSet& indices) {
    const PeriodCase kase = classify_period_case(params, N);
    const std::size_t l = indices.size();
    std::int64_t R = 0;
    std::int64_t q = 0;
    std::int64_t c = 0;
    if (params.m % 2 == 0) R = field_root(params, 2, "theorem");
    if (params.m % 4 == 0) q = field_root(params, 4, "theorem");
    if (params.m % 3 == 0) c = field_root(params, 3, "theorem");

    if (N == 3) {
        if (l == 1) {
            switch (kase) {
            case PeriodCase::kOrder3Split: {
                const auto [s1, t1] = solve_n3(params);
                return {{1, 1 - s1 * c, 3}, {1, 2 + (s1 + 9 * t1) * c, 6}, {1, 2 + (s1 - 9 * t1) * c, 6}};
            }
            case PeriodCase::kOrder3SemiPrimitiveM0: return {{2, 1 - R, 3}, {1, 1 + 2 * R, 3}};
            case PeriodCase::kOrder3SemiPrimitiveM2: return {{2, 1 + R, 3}, {1, 1 - 2 * R, 3}};
            default: break;
            }
        } else if (l == 2) {
            switch (kase) {
            case PeriodCase::kOrder3Split: {
                const auto [s1, t1] = solve_n3(params);
                return {{1, 4 - (s1 - 9 * t1) * c, 6}, {1, 2 + s1 * c, 3}, {1, 4 - (s1 + 9 * t1) * c, 6}};
            }
            case PeriodCase::kOrder3SemiPrimitiveM0: return {{2, 2 + R, 3}, {1, 2 * (1 - R), 3}};
            case PeriodCase::kOrder3SemiPrimitiveM2: return {{2, 2 - R, 3}, {1, 2 * (1 + R), 3}};
            default: break;
            }
        }
        throw ParameterError("no N=3 theorem covers #I = " + std::to_string(l) + " (covered: 1, 2)");
    }

    // N == 4
    if (l == 1) {
        switch (kase) {
        case PeriodCase::kOrder4Split: {
            const auto [u1, v1] = solve_n4(params);
            return {{1, 1 + R + 2 * q * u1, 4}, {1, 1 + R - 2 * q * u1, 4}, {1, 1 - R + 4 * q * v1, 4},
                    {1, 1 - R - 4 * q * v1, 4}};
        }
        case PeriodCase::kOrder4SemiPrimitiveM0: return {{3, 1 - R, 4}, {1, 1 + 3 * R, 4}};
        case PeriodCase::kOrder4SemiPrimitiveM2: return {{3, 1 + R, 4}, {1, 1 - 3 * R, 4}};
        default: break;
        }
    } else if (l == 2) {
        const bool opposite = indices[1] - indices[0] == 2; // {0,2} or {1,3}
        switch (kase) {
        case PeriodCase::kOrder4Split: {
            if (opposite) return {{2, 1 + R, 2}, {2, 1 - R, 2}};
            const auto [u1, v1] = solve_n4(params);
            return {{1, 1 + q * (u1 + 2 * v1), 2}, {1, 1 - q * (u1 + 2 * v1), 2}, {1, 1 + q * (u1 - 2 * v1), 2},
                    {1, 1 - q * (u1 - 2 * v1), 2}};
        }
        case PeriodCase::kOrder4SemiPrimitiveM0:
        case PeriodCase::kOrder4SemiPrimitiveM2: return {{2, 1 + R, 2}, {2, 1 - R, 2}};
        default: break;
        }
    } else if (l == 3) {
        switch (kase) {
        case PeriodCase::kOrder4Split: {
            const auto [u1, v1] = solve_n4(params);
            return {{1, 3 - R + 2 * q * u1, 4}, {1, 3 - R - 2 * q * u1, 4}, {1, 3 + R + 4 * q * v1, 4},
                    {1, 3 + R - 4 * q * v1, 4}};
        }
        case PeriodCase::kOrder4SemiPrimitiveM0: return {{3, 3 + R, 4}, {1, 3 * (1 - R), 4}};
        case PeriodCase::kOrder4SemiPrimitiveM2: return {{3, 3 - R, 4}, {1, 3 * (1 + R), 4}};
        default: break;
        }
    }
    throw ParameterError("no N=4 theorem covers #I = " + std::to_string(l) + " (covered: 1, 2, 3)");
}

} // namespace detail

/// True when cwe_theorem() has an explicit formula for (p, m, N, #I).
[[nodiscard]] inline bool theorem_applies(const FieldParams& params, std::uint32_t N, std::size_t index_count) {
    if (!has_closed_form(params, N) || !periods_are_integral(params, N)) return false;
    return (N == 3 && (index_count == 1 || index_count == 2)) ||
           (N == 4 && index_count >= 1 && index_count <= 3);
}

/// Evaluates the explicit enumerator for N = 3 (#I in {1, 2}) or N = 4
/// (#I in {1, 2, 3}).
[[nodiscard]] inline CompleteWeightEnumerator cwe_theorem(const FieldParams& params, std::uint32_t N,
                                                          ClassIndexSet indices) {
    if (N != 3 && N != 4) throw ParameterError("explicit enumerators exist only for N in {3, 4}");
    indices = normalize_index_set(std::move(indices), N);
    if (!periods_are_integral(params, N)) throw ParameterError("the explicit enumerators need N | (r-1)/(p-1)");
    const auto terms = detail::theorem_terms(params, N, indices);
    const std::int64_t p = params.p;
    const std::int64_t n = (params.r - 1) / N;
    const std::int64_t ln = n * static_cast<std::int64_t>(indices.size());

    CompleteWeightEnumerator cwe(params.p);
    cwe.add(detail::zero_codeword(params.p, ln), 1);
    for (const auto& t : terms) {
        const std::int64_t den = checked_mul(t.denominator, p);
        const std::int64_t scaled = checked_mul(ln, t.denominator);
        const std::int64_t zero_exp = exact_div(scaled - checked_mul(p - 1, t.bracket), den, "zero-symbol exponent");
        const std::int64_t nonzero_exp = exact_div(scaled + t.bracket, den, "nonzero-symbol exponent");
        cwe.add(detail::uniform_composition(params.p, zero_exp, nonzero_exp),
                static_cast<std::uint64_t>(checked_mul(t.multiplier, n)));
    }
    detail::collapse_kernel(cwe, static_cast<std::uint64_t>(ln));
    return cwe;
}

} // namespace cyclocode
