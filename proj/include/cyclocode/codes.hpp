#pragma once

/**
 * @file codes.hpp
 * @brief Trace codes C_D = { (Tr(x d))_{d in D} : x in GF(r) } and their
 *        complete weight enumerators by exhaustive enumeration.
 *
 * The enumeration here is the ground truth every formula path is checked
 * against. It walks all r field elements x, forms the codeword through the
 * trace table and tallies its symbol composition; nothing about Gaussian
 * periods is assumed.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/errors.hpp"
#include "cyclocode/finite_field.hpp"
#include "cyclocode/weight_enumerator.hpp"

namespace cyclocode {

/// Indices I into the cyclotomic classes; sorted, distinct, each < N.
using ClassIndexSet = std::vector<std::uint32_t>;

/// Checks I is a nonempty subset of {0, ..., N-1} with no repeats and returns
/// it sorted.
[[nodiscard]] inline ClassIndexSet normalize_index_set(ClassIndexSet indices, std::uint32_t N) {
    if (indices.empty()) throw ParameterError("class index set I must be nonempty");
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        throw ParameterError("class index set I contains a repeated index");
    }
    if (indices.back() >= N) {
        throw ParameterError("class index " + std::to_string(indices.back()) + " is not below N = " +
                             std::to_string(N));
    }
    return indices;
}

struct DefiningSet {
    std::uint32_t order = 0;
    ClassIndexSet classes;
    /// Class-major, increasing element index within each class.
    std::vector<Element> elements;
};

/// D = union of C_i over i in I.
[[nodiscard]] inline DefiningSet build_defining_set(const ClassPartition& part, ClassIndexSet indices) {
    DefiningSet d;
    d.order = part.order;
    d.classes = normalize_index_set(std::move(indices), part.order);
    d.elements.reserve(std::size_t{part.class_size} * d.classes.size());
    for (std::uint32_t i : d.classes) {
        d.elements.insert(d.elements.end(), part.members[i].begin(), part.members[i].end());
    }
    return d;
}

[[nodiscard]] inline DefiningSet build_defining_set(const FieldContext& ctx, std::uint32_t N,
                                                    ClassIndexSet indices) {
    return build_defining_set(partition_classes(ctx, N), std::move(indices));
}

/// The codeword (Tr(x d))_{d in D}.
[[nodiscard]] inline std::vector<std::uint32_t> codeword(const FieldContext& ctx, Element x,
                                                         std::span<const Element> D) {
    std::vector<std::uint32_t> word;
    word.reserve(D.size());
    for (Element d : D) word.push_back(ctx.trace(ctx.mul(x, d)));
    return word;
}

namespace detail {

inline unsigned resolve_workers(unsigned workers, std::uint64_t jobs) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (jobs < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(jobs, 1));
    return workers;
}

/// Runs body(begin, end, slot) on [0, jobs) split into contiguous chunks, one
/// per worker.
template <typename Body>
void parallel_chunks(std::uint64_t jobs, unsigned workers, Body&& body) {
    workers = resolve_workers(workers, jobs);
    if (workers == 1) {
        body(std::uint64_t{0}, jobs, 0u);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = jobs * w / workers;
        const std::uint64_t end = jobs * (w + 1) / workers;
        pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    }
}

/// Turns a per-x tally into the enumerator of the code as a set: every
/// codeword is hit by the same number of x (the kernel size, read off the
/// zero codeword's count), so the multiplicities are divided by it.
inline void collapse_kernel(CompleteWeightEnumerator& cwe, std::uint64_t length) {
    Composition zero(cwe.p(), 0);
    zero[0] = static_cast<std::uint32_t>(length);
    const std::uint64_t kernel = cwe.multiplicity(zero);
    if (kernel == 0) throw ConsistencyError("zero codeword missing from enumeration");
    if (kernel > 1) cwe.divide_multiplicities(kernel);
}

} // namespace detail

/// Exhaustive complete weight enumerator of C_D for an arbitrary list D.
///
/// Every x in GF(r) is visited. When x -> codeword is not injective each
/// codeword is reached by the same number of x; multiplicities are divided by
/// that number so the result counts distinct codewords.
[[nodiscard]] inline CompleteWeightEnumerator brute_force_cwe(const FieldContext& ctx,
                                                              std::span<const Element> D,
                                                              unsigned workers = 1) {
    const std::uint32_t p = ctx.p();
    const std::uint32_t order = ctx.group_order();
    std::vector<std::uint32_t> d_logs;
    d_logs.reserve(D.size());
    std::uint32_t zeros_in_d = 0;
    for (Element d : D) {
        if (!ctx.contains(d)) throw ParameterError("defining set element outside the field");
        if (d.index == 0) {
            ++zeros_in_d;
        } else {
            d_logs.push_back(ctx.discrete_log(d));
        }
    }
    const auto trace_by_exp = ctx.trace_by_exponent();

    const unsigned used = detail::resolve_workers(workers, order);
    std::vector<CompleteWeightEnumerator> partial(used, CompleteWeightEnumerator(p));
    detail::parallel_chunks(order, used, [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
        Composition tally(p, 0);
        auto& acc = partial[slot];
        for (std::uint64_t a = begin; a < end; ++a) {
            std::fill(tally.begin(), tally.end(), 0);
            tally[0] = zeros_in_d;
            const std::uint32_t* row = trace_by_exp.data() + a;
            for (std::uint32_t b : d_logs) ++tally[row[b]];
            acc.add(tally, 1);
        }
    });

    CompleteWeightEnumerator cwe(p);
    Composition zero(p, 0);
    zero[0] = static_cast<std::uint32_t>(D.size());
    cwe.add(zero, 1); // x = 0
    for (const auto& part : partial) cwe.merge(part);
    detail::collapse_kernel(cwe, D.size());
    return cwe;
}

[[nodiscard]] inline CompleteWeightEnumerator brute_force_cwe(const FieldContext& ctx, const DefiningSet& D,
                                                              unsigned workers = 1) {
    return brute_force_cwe(ctx, std::span<const Element>(D.elements), workers);
}

/// All 2^N - 1 nonempty index sets of {0, ..., N-1}, ordered by bitmask.
[[nodiscard]] inline std::vector<ClassIndexSet> nonempty_index_sets(std::uint32_t N) {
    if (N == 0 || N > 16) throw ParameterError("index-set enumeration supports 1 <= N <= 16");
    std::vector<ClassIndexSet> out;
    for (std::uint32_t mask = 1; mask < (1u << N); ++mask) {
        ClassIndexSet s;
        for (std::uint32_t i = 0; i < N; ++i) {
            if (mask & (1u << i)) s.push_back(i);
        }
        out.push_back(std::move(s));
    }
    return out;
}

/// Exhaustive enumerators of C_D for every nonempty I at once.
///
/// The coordinates of a codeword split into one block per class, and the
/// composition of a union of blocks is the sum of the block compositions, so
/// one pass over x with per-class tallies serves all index sets. The result is
/// keyed by I and agrees with brute_force_cwe on each.
[[nodiscard]] inline std::map<ClassIndexSet, CompleteWeightEnumerator>
brute_force_cwe_all_index_sets(const FieldContext& ctx, std::uint32_t N, unsigned workers = 1) {
    const ClassPartition part = partition_classes(ctx, N);
    const std::uint32_t p = ctx.p();
    const std::uint32_t order = ctx.group_order();
    const std::uint32_t n = part.class_size;
    const auto sets = nonempty_index_sets(N);
    const auto trace_by_exp = ctx.trace_by_exponent();

    const unsigned used = detail::resolve_workers(workers, order);
    std::vector<std::vector<CompleteWeightEnumerator>> partial(
        used, std::vector<CompleteWeightEnumerator>(sets.size(), CompleteWeightEnumerator(p)));
    detail::parallel_chunks(order, used, [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
        std::vector<std::uint32_t> block(std::size_t{N} * p, 0); // block[i * p + rho]
        Composition comp(p, 0);
        auto& acc = partial[slot];
        for (std::uint64_t a = begin; a < end; ++a) {
            std::fill(block.begin(), block.end(), 0);
            // x = alpha^a, d = alpha^b with b in class b mod N
            const std::uint32_t* row = trace_by_exp.data() + a;
            for (std::uint32_t b = 0; b < order; b += N) {
                for (std::uint32_t i = 0; i < N; ++i) ++block[std::size_t{i} * p + row[b + i]];
            }
            for (std::size_t s = 0; s < sets.size(); ++s) {
                std::fill(comp.begin(), comp.end(), 0);
                for (std::uint32_t i : sets[s]) {
                    const std::uint32_t* src = block.data() + std::size_t{i} * p;
                    for (std::uint32_t rho = 0; rho < p; ++rho) comp[rho] += src[rho];
                }
                acc[s].add(comp, 1);
            }
        }
    });

    std::map<ClassIndexSet, CompleteWeightEnumerator> out;
    for (std::size_t s = 0; s < sets.size(); ++s) {
        const std::uint64_t length = std::uint64_t{n} * sets[s].size();
        CompleteWeightEnumerator cwe(p);
        Composition zero(p, 0);
        zero[0] = static_cast<std::uint32_t>(length);
        cwe.add(zero, 1);
        for (const auto& worker : partial) cwe.merge(worker[s]);
        detail::collapse_kernel(cwe, length);
        out.emplace(sets[s], std::move(cwe));
    }
    return out;
}

/// Hamming weight distribution of an enumerator.
[[nodiscard]] inline std::map<std::uint64_t, std::uint64_t> weight_distribution(
    const CompleteWeightEnumerator& cwe) {
    std::map<std::uint64_t, std::uint64_t> out;
    const std::uint64_t length = cwe.length();
    for (const auto& [composition, mult] : cwe.terms()) out[length - composition[0]] += mult;
    return out;
}

/// The coset-representative code of order 3: Dbar = union over j in J of
/// D_j = { alpha^(j + 3i) : 0 <= i < (r-1)/(3(p-1)) }, compared with the full
/// classes D = union over j in J of C_j.
struct CosetRepresentativeReport {
    ClassIndexSet cosets;
    std::vector<Element> representatives;
    /// Weight distribution of C_Dbar, enumerated directly.
    std::map<std::uint64_t, std::uint64_t> representative_weights;
    /// Weight distribution of C_D with every weight divided by p - 1.
    std::map<std::uint64_t, std::uint64_t> scaled_full_weights;
    /// Weight distribution of C_D as enumerated.
    std::map<std::uint64_t, std::uint64_t> full_weights;
    bool matches = false;
    std::string failure;
};

[[nodiscard]] inline CosetRepresentativeReport coset_representative_code(const FieldContext& ctx,
                                                                         ClassIndexSet cosets,
                                                                         unsigned workers = 1) {
    constexpr std::uint32_t kOrder = 3;
    if (!periods_are_integral(ctx.params(), kOrder)) {
        throw ParameterError("coset-representative codes need 3 | (r-1)/(p-1)");
    }
    cosets = normalize_index_set(std::move(cosets), kOrder);
    if (!(cosets == ClassIndexSet{0} || cosets == ClassIndexSet{0, 1})) {
        throw ParameterError("coset set J must be {0} or {0,1}");
    }
    CosetRepresentativeReport rep;
    rep.cosets = cosets;
    const std::uint32_t count = ctx.group_order() / (kOrder * (ctx.p() - 1));
    for (std::uint32_t j : cosets) {
        for (std::uint32_t i = 0; i < count; ++i) rep.representatives.push_back(ctx.exp(j + kOrder * i));
    }
    rep.representative_weights = weight_distribution(brute_force_cwe(ctx, rep.representatives, workers));

    const DefiningSet full = build_defining_set(ctx, kOrder, cosets);
    rep.full_weights = weight_distribution(brute_force_cwe(ctx, full, workers));
    rep.matches = true;
    for (const auto& [weight, freq] : rep.full_weights) {
        if (weight % (ctx.p() - 1) != 0) {
            rep.matches = false;
            rep.failure = "weight " + std::to_string(weight) + " not divisible by p - 1";
            break;
        }
        rep.scaled_full_weights[weight / (ctx.p() - 1)] += freq;
    }
    if (rep.matches && rep.scaled_full_weights != rep.representative_weights) {
        rep.matches = false;
        rep.failure = "scaled weight distribution differs from the representative code";
    }
    return rep;
}

} // namespace cyclocode
