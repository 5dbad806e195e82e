#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "cyclocode/finite_field.hpp"

using namespace cyclocode;

TEST(Primes, SmallValues) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(65521));
    EXPECT_FALSE(is_prime(65535));
    EXPECT_EQ(prime_factors(63), (std::vector<std::uint64_t>{3, 7}));
    EXPECT_EQ(prime_factors(624), (std::vector<std::uint64_t>{2, 3, 13}));
}

TEST(FieldParams, RejectsBadInput) {
    EXPECT_THROW((void)make_field_params(4, 2), ParameterError);
    EXPECT_THROW((void)make_field_params(2, 0), ParameterError);
    EXPECT_THROW((void)make_field_params(2, 23), CapacityError);
    EXPECT_THROW((void)make_field_params(3, 40), CapacityError);
    EXPECT_EQ(make_field_params(3, 4).r, 81u);
}

TEST(FindIrreducible, DegreeOne) {
    EXPECT_EQ(find_irreducible(2, 1).coefficients, (std::vector<std::uint32_t>{0, 1}));
}

// Values from tests/oracle/derive_values.py (independent trial division).
TEST(FindIrreducible, MatchesOracle) {
    EXPECT_EQ(find_irreducible(2, 6).coefficients, (std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1}));
    EXPECT_EQ(find_irreducible(3, 4).coefficients, (std::vector<std::uint32_t>{2, 1, 0, 0, 1}));
    EXPECT_EQ(find_irreducible(5, 4).coefficients, (std::vector<std::uint32_t>{2, 0, 0, 0, 1}));
}

TEST(FindIrreducible, ReducibleDetected) {
    // X^2 + 1 = (X+1)^2 over GF(2); over GF(3) it has no root, while X^2 + 2 = (X-1)(X+1).
    EXPECT_FALSE(is_irreducible(Polynomial{{1, 0, 1}}, 2));
    EXPECT_TRUE(is_irreducible(Polynomial{{1, 1, 1}}, 2));
    EXPECT_TRUE(is_irreducible(Polynomial{{1, 0, 1}}, 3));
    EXPECT_FALSE(is_irreducible(Polynomial{{2, 0, 1}}, 3));
}

TEST(FieldBuild, PrimitiveElement) {
    EXPECT_EQ(FieldContext::build(7, 1).alpha().index, 3u);
    const auto f2 = FieldContext::build(2, 1);
    EXPECT_EQ(f2.alpha().index, 1u);
    EXPECT_EQ(f2.discrete_log(Element{1}), 0u);
    EXPECT_EQ(FieldContext::build(2, 6).alpha().index, 2u);
    EXPECT_EQ(FieldContext::build(7, 3).alpha().index, 22u);
}

TEST(FieldBuild, LogTableIsBijective) {
    const auto ctx = FieldContext::build(2, 6);
    EXPECT_EQ(ctx.r(), 64u);
    std::set<std::uint32_t> seen;
    for (std::uint32_t x = 1; x < ctx.r(); ++x) seen.insert(ctx.discrete_log(Element{x}));
    EXPECT_EQ(seen.size(), 63u);
    EXPECT_EQ(*seen.rbegin(), 62u);
}

TEST(Arithmetic, IdentitiesAndGeneratorOrder) {
    const auto ctx = FieldContext::build(2, 6);
    for (std::uint32_t x = 0; x < ctx.r(); ++x) {
        EXPECT_EQ(ctx.mul(Element{x}, ctx.one()), Element{x});
        EXPECT_EQ(ctx.mul(Element{x}, ctx.zero()), ctx.zero());
    }
    EXPECT_EQ(ctx.mul(ctx.exp(62), ctx.exp(1)), ctx.one());
    EXPECT_THROW((void)ctx.discrete_log(ctx.zero()), DomainError);
    EXPECT_EQ(ctx.discrete_log(ctx.one()), 0u);
    EXPECT_EQ(ctx.discrete_log(ctx.alpha()), 1u);
}

TEST(Trace, OfOne) {
    EXPECT_EQ(FieldContext::build(2, 6).trace(Element{1}), 0u);
    EXPECT_EQ(FieldContext::build(3, 4).trace(Element{1}), 1u);
    EXPECT_EQ(FieldContext::build(3, 4).trace(Element{0}), 0u);
}

class FieldProperties : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldProperties, LogIsHomomorphism) {
    const auto ctx = FieldContext::build(GetParam().first, GetParam().second);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(1, ctx.r() - 1);
    for (int i = 0; i < 100; ++i) {
        const Element a{pick(rng)}, b{pick(rng)};
        EXPECT_EQ(ctx.discrete_log(ctx.mul(a, b)),
                  (ctx.discrete_log(a) + ctx.discrete_log(b)) % ctx.group_order());
    }
    for (std::uint32_t x = 1; x < ctx.r(); ++x) EXPECT_EQ(ctx.exp(ctx.discrete_log(Element{x})), Element{x});
}

TEST_P(FieldProperties, TableMultiplicationMatchesPolynomialProduct) {
    const auto ctx = FieldContext::build(GetParam().first, GetParam().second);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.r() - 1);
    for (int i = 0; i < 200; ++i) {
        const Element a{pick(rng)}, b{pick(rng)};
        EXPECT_EQ(ctx.mul(a, b), ctx.mul_by_polynomial(a, b));
    }
}

TEST_P(FieldProperties, AdditiveGroup) {
    const auto ctx = FieldContext::build(GetParam().first, GetParam().second);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.r() - 1);
    for (int i = 0; i < 200; ++i) {
        const Element a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
        EXPECT_EQ(ctx.sub(ctx.add(a, b), b), a);
        EXPECT_EQ(ctx.add(a, ctx.negate(a)), ctx.zero());
        EXPECT_EQ(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
    }
}

TEST_P(FieldProperties, TraceIsLinear) {
    const auto ctx = FieldContext::build(GetParam().first, GetParam().second);
    const std::uint32_t p = ctx.p();
    const auto check = [&](Element x, Element y) {
        EXPECT_EQ(ctx.trace(ctx.add(x, y)), (ctx.trace(x) + ctx.trace(y)) % p);
    };
    if (ctx.r() <= 1024) {
        for (std::uint32_t x = 0; x < ctx.r(); ++x)
            for (std::uint32_t y = 0; y < ctx.r(); ++y) check(Element{x}, Element{y});
    } else {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<std::uint32_t> pick(0, ctx.r() - 1);
        for (int i = 0; i < 20000; ++i) check(Element{pick(rng)}, Element{pick(rng)});
    }
}

TEST_P(FieldProperties, TraceIsBalanced) {
    const auto ctx = FieldContext::build(GetParam().first, GetParam().second);
    std::vector<std::uint32_t> hits(ctx.p(), 0);
    for (std::uint32_t x = 0; x < ctx.r(); ++x) ++hits[ctx.trace(Element{x})];
    for (std::uint32_t h : hits) EXPECT_EQ(h, ctx.r() / ctx.p());
}

TEST_P(FieldProperties, TraceMatchesFrobeniusSum) {
    const auto ctx = FieldContext::build(GetParam().first, GetParam().second);
    for (std::uint32_t xi = 0; xi < ctx.r(); xi += 1 + ctx.r() / 500) {
        Element acc = ctx.zero(), y{xi};
        for (std::uint32_t i = 0; i < ctx.m(); ++i) {
            acc = ctx.add(acc, y);
            y = ctx.pow(y, ctx.p());
        }
        ASSERT_LT(acc.index, ctx.p()); // lies in the prime field
        EXPECT_EQ(acc.index, ctx.trace(Element{xi}));
    }
}

TEST_P(FieldProperties, FrobeniusHasOrderM) {
    const auto ctx = FieldContext::build(GetParam().first, GetParam().second);
    for (std::uint32_t x = 0; x < ctx.r(); ++x) {
        Element y{x};
        for (std::uint32_t i = 0; i < ctx.m(); ++i) y = ctx.pow(y, ctx.p());
        EXPECT_EQ(y, Element{x});
    }
}

TEST_P(FieldProperties, ExponentTraceTableIsPeriodic) {
    const auto ctx = FieldContext::build(GetParam().first, GetParam().second);
    const auto t = ctx.trace_by_exponent();
    ASSERT_EQ(t.size(), 2u * ctx.group_order());
    for (std::uint32_t j = 0; j < t.size(); ++j) EXPECT_EQ(t[j], ctx.trace(ctx.exp(j)));
}

TEST_P(FieldProperties, CoefficientRoundTrip) {
    const auto ctx = FieldContext::build(GetParam().first, GetParam().second);
    for (std::uint32_t x = 0; x < ctx.r(); ++x) {
        const auto c = ctx.coefficients(Element{x});
        EXPECT_EQ(ctx.from_coefficients(c), Element{x});
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldProperties,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{2u, 6u}, std::pair{3u, 4u},
                                           std::pair{5u, 4u}, std::pair{7u, 3u}, std::pair{13u, 2u},
                                           std::pair{2u, 12u}));
