#include <gtest/gtest.h>

#include "cyclocode/weight_enumerator.hpp"

using namespace cyclocode;

TEST(Cwe, MergesAndSorts) {
    CompleteWeightEnumerator cwe(2);
    cwe.add({9, 12}, 21);
    cwe.add({21, 0}, 1);
    cwe.add({13, 8}, 21);
    cwe.add({9, 12}, 21);
    ASSERT_EQ(cwe.size(), 3u);
    EXPECT_EQ(cwe.total(), 64u);
    EXPECT_EQ(cwe.length(), 21u);
    const auto t = cwe.sorted_terms();
    EXPECT_EQ(t[0], (CweTerm{{21, 0}, 1}));
    EXPECT_EQ(t[1], (CweTerm{{13, 8}, 21}));
    EXPECT_EQ(t[2], (CweTerm{{9, 12}, 42}));
}

TEST(Cwe, RejectsMalformedTerms) {
    CompleteWeightEnumerator cwe(3);
    EXPECT_THROW(cwe.add({1, 2}, 1), ParameterError);
    cwe.add({4, 0, 0}, 1);
    EXPECT_THROW(cwe.add({1, 1, 1}, 1), ConsistencyError);
}

TEST(Cwe, TextForm) {
    CompleteWeightEnumerator bin(2);
    bin.add({21, 0}, 1);
    bin.add({13, 8}, 21);
    bin.add({9, 12}, 42);
    EXPECT_EQ(to_text(bin), "w0^21 + 21*w0^13*w1^8 + 42*w0^9*w1^12");

    CompleteWeightEnumerator ter(3);
    ter.add({20, 0, 0}, 1);
    ter.add({8, 6, 6}, 60);
    EXPECT_EQ(to_text(ter), "w0^20 + 60*w0^8*w1^6*w2^6");

    CompleteWeightEnumerator quin(5);
    quin.add({156, 0, 0, 0, 0}, 1);
    quin.add({44, 28, 28, 28, 28}, 156);
    EXPECT_EQ(to_text(quin), "w0^156 + 156*w0^44*(w1*w2*w3*w4)^28");
}

TEST(Summary, PublishedParameters) {
    CompleteWeightEnumerator a(2);
    a.add({21, 0}, 1);
    a.add({13, 8}, 21);
    a.add({9, 12}, 42);
    const auto s = code_summary(a, 2, 21);
    EXPECT_EQ(s.length, 21u);
    EXPECT_EQ(s.dimension, 6u);
    EXPECT_EQ(s.min_distance, 8u);
    EXPECT_EQ(s.weight_distribution.at(12), 42u);

    CompleteWeightEnumerator b(3);
    b.add({20, 0, 0}, 1);
    b.add({8, 6, 6}, 60);
    b.add({2, 9, 9}, 20);
    EXPECT_EQ(code_summary(b, 3, 20).dimension, 4u);
    EXPECT_EQ(code_summary(b, 3, 20).min_distance, 12u);
}

TEST(Summary, NonPowerCountIsInconsistent) {
    CompleteWeightEnumerator a(2);
    a.add({3, 0}, 1);
    a.add({1, 2}, 2);
    EXPECT_THROW((void)code_summary(a, 2, 3), ConsistencyError);
}

TEST(Griesmer, DirectSums) {
    const auto a = griesmer_check(21, 6, 8, 2);
    EXPECT_EQ(a.bound, 17u); // 8+4+2+1+1+1
    EXPECT_FALSE(a.meets);

    // 20+10+5+3+2+1 = 41; no [42,6,21] binary code exists since 21+11+6+3+2+1 = 44 > 42.
    const auto b = griesmer_check(42, 6, 20, 2);
    EXPECT_EQ(b.bound, 41u);
    EXPECT_FALSE(b.meets);
    EXPECT_TRUE(b.distance_optimal);

    EXPECT_TRUE(griesmer_check(7, 1, 7, 3).meets);
    EXPECT_THROW((void)griesmer_check(7, 0, 7, 3), ParameterError);
}

TEST(Griesmer, SimplexMeetsBound) {
    // Binary simplex [2^k - 1, k, 2^(k-1)].
    for (std::uint32_t k = 1; k < 12; ++k) {
        EXPECT_TRUE(griesmer_check((1u << k) - 1, k, 1u << (k - 1), 2).meets);
    }
}
