#pragma once

/**
 * @file weight_enumerator.hpp
 * @brief Complete weight enumerators, code parameters and the Griesmer bound.
 *
 * A complete weight enumerator over GF(p) is stored as a map from a symbol
 * composition (k_0, ..., k_{p-1}), where k_j counts the coordinates equal to
 * w_j, to the number of codewords having that composition. Terms with equal
 * compositions are always merged.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cyclocode/errors.hpp"

namespace cyclocode {

using Composition = std::vector<std::uint32_t>;

struct CweTerm {
    Composition composition;
    std::uint64_t multiplicity = 0;

    friend bool operator==(const CweTerm&, const CweTerm&) = default;
};

class CompleteWeightEnumerator {
public:
    CompleteWeightEnumerator() = default;
    explicit CompleteWeightEnumerator(std::uint32_t p) : p_(p) {}

    [[nodiscard]] std::uint32_t p() const { return p_; }

    void add(const Composition& composition, std::uint64_t multiplicity) {
        if (multiplicity == 0) return;
        if (composition.size() != p_) {
            throw ParameterError("composition has " + std::to_string(composition.size()) +
                                 " symbols, expected " + std::to_string(p_));
        }
        const std::uint64_t len = std::accumulate(composition.begin(), composition.end(), std::uint64_t{0});
        if (!terms_.empty() && len != length()) {
            throw ConsistencyError("composition length " + std::to_string(len) +
                                   " differs from code length " + std::to_string(length()));
        }
        terms_[composition] += multiplicity;
    }

    void merge(const CompleteWeightEnumerator& other) {
        for (const auto& [composition, mult] : other.terms_) add(composition, mult);
    }

    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Code length, i.e. the common sum of every composition.
    [[nodiscard]] std::uint64_t length() const {
        if (terms_.empty()) return 0;
        const auto& c = terms_.begin()->first;
        return std::accumulate(c.begin(), c.end(), std::uint64_t{0});
    }

    /// Sum of multiplicities (number of codewords counted).
    [[nodiscard]] std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (const auto& [composition, mult] : terms_) sum += mult;
        return sum;
    }

    [[nodiscard]] std::uint64_t multiplicity(const Composition& c) const {
        const auto it = terms_.find(c);
        return it == terms_.end() ? 0 : it->second;
    }

    [[nodiscard]] const std::map<Composition, std::uint64_t>& terms() const { return terms_; }

    /// Terms by descending k_0 (zero codeword first), ties by lexicographic
    /// composition.
    [[nodiscard]] std::vector<CweTerm> sorted_terms() const {
        std::vector<CweTerm> out;
        out.reserve(terms_.size());
        for (const auto& [composition, mult] : terms_) out.push_back({composition, mult});
        std::stable_sort(out.begin(), out.end(), [](const CweTerm& a, const CweTerm& b) {
            if (a.composition[0] != b.composition[0]) return a.composition[0] > b.composition[0];
            return a.composition < b.composition;
        });
        return out;
    }

    /// Divides every multiplicity by @p factor; each must be divisible.
    void divide_multiplicities(std::uint64_t factor) {
        if (factor == 0) throw ParameterError("division by zero");
        for (auto& [composition, mult] : terms_) {
            if (mult % factor != 0) {
                throw ConsistencyError("multiplicity " + std::to_string(mult) + " not divisible by " +
                                       std::to_string(factor));
            }
            mult /= factor;
        }
    }

    friend bool operator==(const CompleteWeightEnumerator&, const CompleteWeightEnumerator&) = default;

private:
    std::uint32_t p_ = 0;
    std::map<Composition, std::uint64_t> terms_;
};

/// Paper-style monomial text, e.g. "w0^21 + 21*w0^13*w1^8 + 42*w0^9*w1^12".
/// When p >= 5 and all nonzero symbols share one exponent the product is
/// grouped as "(w1*w2*w3*w4)^60".
[[nodiscard]] inline std::string to_text(const CompleteWeightEnumerator& cwe) {
    const auto power = [](const std::string& base, std::uint64_t e) {
        return e == 1 ? base : base + "^" + std::to_string(e);
    };
    std::string out;
    for (const CweTerm& term : cwe.sorted_terms()) {
        if (!out.empty()) out += " + ";
        std::vector<std::string> factors;
        if (term.multiplicity != 1) factors.push_back(std::to_string(term.multiplicity));
        const auto& c = term.composition;
        if (c[0] > 0) factors.push_back(power("w0", c[0]));
        const bool uniform = c.size() >= 5 && c[1] > 0 &&
                             std::all_of(c.begin() + 1, c.end(), [&](std::uint32_t k) { return k == c[1]; });
        if (uniform) {
            std::string group = "(";
            for (std::size_t j = 1; j < c.size(); ++j) {
                if (j > 1) group += "*";
                group += "w" + std::to_string(j);
            }
            factors.push_back(power(group + ")", c[1]));
        } else {
            for (std::size_t j = 1; j < c.size(); ++j) {
                if (c[j] > 0) factors.push_back(power("w" + std::to_string(j), c[j]));
            }
        }
        if (factors.empty()) factors.push_back("1");
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) out += "*";
            out += factors[i];
        }
    }
    return out;
}

struct CodeSummary {
    std::uint64_t length = 0;
    std::uint32_t dimension = 0;
    std::uint64_t min_distance = 0;
    /// Hamming weight -> number of codewords.
    std::map<std::uint64_t, std::uint64_t> weight_distribution;

    friend bool operator==(const CodeSummary&, const CodeSummary&) = default;
};

/// [length, dimension, minimum distance] and the Hamming weight distribution.
/// The number of codewords must be an exact power of p.
[[nodiscard]] inline CodeSummary code_summary(const CompleteWeightEnumerator& cwe, std::uint32_t p,
                                              std::uint64_t length) {
    if (cwe.empty()) throw ParameterError("empty weight enumerator");
    if (cwe.length() != length) {
        throw ConsistencyError("enumerator length " + std::to_string(cwe.length()) +
                               " does not match code length " + std::to_string(length));
    }
    CodeSummary s;
    s.length = length;
    std::uint64_t count = cwe.total();
    while (count % p == 0 && count > 1) {
        count /= p;
        ++s.dimension;
    }
    if (count != 1) {
        throw ConsistencyError("codeword count " + std::to_string(cwe.total()) + " is not a power of " +
                               std::to_string(p));
    }
    for (const auto& [composition, mult] : cwe.terms()) {
        const std::uint64_t weight = length - composition[0];
        s.weight_distribution[weight] += mult;
        if (weight > 0 && (s.min_distance == 0 || weight < s.min_distance)) s.min_distance = weight;
    }
    return s;
}

struct GriesmerResult {
    std::uint64_t bound = 0;
    /// length == bound
    bool meets = false;
    /// No code of this length and dimension can have distance + 1, i.e. the
    /// Griesmer bound for (dimension, distance + 1) exceeds the length.
    bool distance_optimal = false;
};

/// sum_{i < dimension} ceil(distance / p^i)
[[nodiscard]] inline std::uint64_t griesmer_bound(std::uint32_t dimension, std::uint64_t distance,
                                                  std::uint32_t p) {
    std::uint64_t bound = 0;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < dimension; ++i) {
        bound += (distance + q - 1) / q;
        if (q <= distance) q *= p; // beyond this every term is ceil(d/q) = 1
    }
    return bound;
}

[[nodiscard]] inline GriesmerResult griesmer_check(std::uint64_t length, std::uint32_t dimension,
                                                   std::uint64_t distance, std::uint32_t p) {
    if (dimension < 1) throw ParameterError("Griesmer bound needs dimension >= 1");
    GriesmerResult g;
    g.bound = griesmer_bound(dimension, distance, p);
    g.meets = length == g.bound;
    g.distance_optimal = griesmer_bound(dimension, distance + 1, p) > length;
    return g;
}

} // namespace cyclocode
