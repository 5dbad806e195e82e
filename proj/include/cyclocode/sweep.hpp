#pragma once

// Enumeration of the admissible parameter space for the order-3 and order-4
// formulas.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cyclocode/closed_form.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/finite_field.hpp"

namespace cyclocode {

struct SweepCase {
    FieldParams params;
    std::uint32_t order = 0; // N

    friend bool operator==(const SweepCase&, const SweepCase&) = default;
};

/// True when (p, m, N) has integral periods, classes of size n > 1, and a
/// closed form covering its congruence case.
[[nodiscard]] inline bool is_admissible(const FieldParams& params, std::uint32_t N) {
    if (!periods_are_integral(params, N)) return false;
    if ((params.r - 1) / N <= 1) return false;
    return has_closed_form(params, N);
}

/// Every admissible (p, m, N) with r <= max_r, ordered by (r, p, N).
[[nodiscard]] inline std::vector<SweepCase> admissible_cases(std::uint64_t max_r,
                                                             std::initializer_list<std::uint32_t> orders = {3, 4}) {
    if (max_r > kDefaultFieldCap) max_r = kDefaultFieldCap;
    std::vector<SweepCase> out;
    for (std::uint64_t p = 2; p <= max_r; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t r = p;
        for (std::uint32_t m = 1; r <= max_r; ++m, r *= p) {
            const FieldParams params{static_cast<std::uint32_t>(p), m, static_cast<std::uint32_t>(r)};
            for (std::uint32_t N : orders) {
                if (is_admissible(params, N)) out.push_back({params, N});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const SweepCase& a, const SweepCase& b) {
        if (a.params.r != b.params.r) return a.params.r < b.params.r;
        if (a.params.p != b.params.p) return a.params.p < b.params.p;
        return a.order < b.order;
    });
    return out;
}

} // namespace cyclocode
