#include <gtest/gtest.h>

#include <set>

#include "legstir/codes.hpp"
#include "legstir/triangles.hpp"

using namespace legstir;
using S = CLSSymbol;

TEST(Codes, Validation) {
    EXPECT_TRUE(validate_code({S::X(), S::X(), S::A(1, 2)}));
    const auto bad = find_code_violation({S::X(), S::X(), S::A(1, 2), S::B(3)});
    ASSERT_TRUE(bad.has_value());
    EXPECT_EQ(bad->position, 3u);
    EXPECT_FALSE(validate_code({S::A(1, 2)}));
    EXPECT_FALSE(validate_code({}));
    EXPECT_FALSE(validate_code({S::X(), S::A(1, 1)}));
    EXPECT_FALSE(validate_code({S::X(), S::Bbar(0)}));
    EXPECT_EQ(count_x({S::X(), S::B(1), S::X()}), 2u);
}

TEST(Codes, TokenRoundTrip) {
    const CLSSequence seq = {S::X(), S::X(), S::A(2, 1), S::B(2), S::Bbar(1)};
    EXPECT_EQ(to_string(seq), "X,X,A(2,1),B(2),Bb(1)");
    EXPECT_EQ(parse_code("X, X, A(2,1), B(2), Bb(1)"), seq);
    EXPECT_THROW(parse_code("X,Q"), std::invalid_argument);
    EXPECT_THROW(parse_code("X,A(1)"), std::invalid_argument);
}

TEST(Codes, PhiExamples) {
    EXPECT_EQ(to_string(phi({S::X()})), "{1,1'}<>");
    EXPECT_EQ(to_string(phi({S::X(), S::X()})), "{1,1'}{2,2'}<>");
    EXPECT_EQ(to_string(phi(parse_code("X,X,A(2,1),B(2),Bb(1)"))), "{1,1',3',5'}{2,2',3,4}<4',5>");
    EXPECT_THROW(phi({S::B(1)}), std::invalid_argument);
}

TEST(Codes, PhiInverseExamples) {
    EXPECT_EQ(to_string(phi_inverse(parse_partition("{1,1'}<>"))), "X");
    EXPECT_EQ(to_string(phi_inverse(parse_partition("{1,1',3'}{2,2',3}<>"))), "X,X,A(2,1)");
    EXPECT_EQ(to_string(phi_inverse(parse_partition("{1,1'}{2,2',3}<3'>"))), "X,X,B(2)");
    EXPECT_THROW(phi_inverse(parse_partition("{1,1'}<2,2'>")), std::invalid_argument);
}

TEST(Codes, RoundTripOverAllCodes) {
    for (int n = 1; n <= 6; ++n) {
        std::set<LSPartition> images;
        std::size_t codes = 0;
        for_each_code(n, [&](const CLSSequence& seq) {
            ++codes;
            const LSPartition p = phi(seq);
            ASSERT_TRUE(validate(p)) << to_string(seq);
            ASSERT_EQ(p.block_count(), count_x(seq));
            ASSERT_EQ(phi_inverse(p), seq) << to_string(seq);
            images.insert(p);
        });
        EXPECT_EQ(images.size(), codes) << "phi not injective at n=" << n;
    }
}

TEST(Codes, RoundTripOverAllPartitions) {
    for (int n = 1; n <= 6; ++n)
        for_each_partition(n, [&](const LSPartition& p) {
            const CLSSequence seq = phi_inverse(p);
            ASSERT_TRUE(validate_code(seq)) << to_string(p);
            ASSERT_EQ(phi(seq), p) << to_string(p);
        });
}

TEST(Codes, Counts) {
    EXPECT_EQ(count_codes_exhaustive(3, 2), 8);
    EXPECT_EQ(count_codes_exhaustive(4, 2), 52);
    EXPECT_EQ(count_codes(4, 2), 52);
    EXPECT_EQ(count_codes(0, 0), 0);
    for (std::size_t n = 1; n <= 7; ++n) {
        EXPECT_EQ(count_codes(n, n), 1);
        for (std::size_t k = 1; k <= n; ++k)
            EXPECT_EQ(count_codes_exhaustive(static_cast<int>(n), k), ls(n, k)) << n << "," << k;
    }
    for (std::size_t n = 1; n <= 30; ++n)
        for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(count_codes(n, k), ls(n, k)) << n << "," << k;
}

TEST(Codes, PerStepChoices) {
    for (std::size_t t = 0; t <= 20; ++t) {
        EXPECT_EQ(non_x_choices(t), Int(t * t + t));
        EXPECT_EQ(non_x_choices(t), 2 * binomial(static_cast<long>(t) + 1, 2));
    }
    // with one X seen, the legal non-X symbols are B(1) and Bb(1)
    std::size_t seen = 0;
    for_each_code(2, [&](const CLSSequence& seq) { seen += seq[1].kind != S::Kind::x; });
    EXPECT_EQ(seen, 2u);
}
