#include <gtest/gtest.h>

#include "legstir/gamma.hpp"
#include "legstir/triangles.hpp"

using namespace legstir;

namespace {

Int C(long n, unsigned long k) { return binomial(n, k); }

// The nested sum written out as k literal loops (recursion depth = k).
Int nested_loops(long upper, std::size_t depth) {
    if (depth == 0) return 1;
    Int total = 0;
    for (long t = 1; t <= upper; ++t) total += C(t + 1, 2) * nested_loops(t, depth - 1);
    return total;
}

Int pow2(std::size_t k) { return Int(1) << static_cast<mp_bitcnt_t>(k); }

}  // namespace

TEST(Gamma, FirstRows) {
    EXPECT_EQ(gamma_poly(0), ZPoly({1}));
    EXPECT_EQ(gamma_poly(1), ZPoly::monomial(Int(1), 3));
    EXPECT_EQ(gamma_poly(2), ZPoly({0, 0, 0, 0, 1, 8, 10}));
    EXPECT_EQ(gamma_poly(3), ZPoly({0, 0, 0, 0, 0, 1, 34, 219, 448, 280}));
    EXPECT_EQ(gamma_coeff(3, 9), 280);
    EXPECT_EQ(gamma_coeff(3, 2), 0);
    EXPECT_EQ(gamma_coeff(2, 40), 0);
}

TEST(Gamma, DifferentialRecurrenceAgrees) {
    EXPECT_EQ(gamma_ode_step(gamma_poly(1), 1), gamma_poly(2));
    for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(gamma_poly_via_ode(k), gamma_poly(k)) << "k=" << k;
}

TEST(Gamma, PrintedAnchors) {
    for (long n = 1; n <= 40; ++n) {
        const auto un = static_cast<std::size_t>(n);
        EXPECT_EQ(ls(un + 1, un), 2 * C(n + 2, 3));
        EXPECT_EQ(ls(un + 2, un), 40 * C(n + 3, 6) + 32 * C(n + 3, 5) + 4 * C(n + 3, 4));
        EXPECT_EQ(ls(un + 2, un), 40 * C(n + 2, 6) + 72 * C(n + 2, 5) + 36 * C(n + 2, 4) + 4 * C(n + 2, 3));
        EXPECT_EQ(ls(un + 3, un),
                  8 * (280 * C(n + 4, 9) + 448 * C(n + 4, 8) + 219 * C(n + 4, 7) + 34 * C(n + 4, 6) + C(n + 4, 5)));
    }
}

TEST(Gamma, BinomialExpansionMatchesTriangle) {
    for (std::size_t k = 1; k <= 8; ++k)
        for (std::size_t n = 1; n <= 40; ++n) {
            EXPECT_EQ(ls_binomial_expansion(n, k), ls(n + k, n)) << n << "," << k;
            EXPECT_EQ(ls_diagonal(k, n), ls(n + k, n));
        }
    EXPECT_EQ(ls_binomial_expansion(5, 0), 1);
}

TEST(Gamma, NestedSumMatchesLiteralLoops) {
    for (std::size_t k = 0; k <= 5; ++k)
        for (long n = 1; n <= 12; ++n)
            EXPECT_EQ(ls_nested_sum(static_cast<std::size_t>(n), k), pow2(k) * nested_loops(n, k)) << n << "," << k;
    for (std::size_t k = 1; k <= 8; ++k)
        for (std::size_t n = 1; n <= 40; ++n) EXPECT_EQ(ls_nested_sum(n, k), ls(n + k, n)) << n << "," << k;
}

TEST(Gamma, FirstKindViaNegativeBinomials) {
    for (std::size_t k = 1; k <= 6; ++k)
        for (std::size_t n = k + 1; n <= 30; ++n) EXPECT_EQ(lc_expansion(n, k), lc(n - 1, n - k - 1)) << n << "," << k;
}

TEST(Gamma, ClosedForms) {
    for (std::size_t k = 1; k <= 12; ++k) {
        EXPECT_EQ(gamma_coeff(k, k + 2), 1);
        Int six_k = 1;
        for (std::size_t i = 0; i < k; ++i) six_k *= 6;
        EXPECT_EQ(gamma_coeff(k, 3 * k) * factorial(k) * six_k, factorial(3 * k));
        Int at_minus_one = factorial(k + 1) * factorial(k) / pow2(k);
        if (k % 2) at_minus_one = -at_minus_one;
        EXPECT_EQ(gamma_poly(k).eval(Int(-1)), at_minus_one);
    }
    const CheckReport r = closed_forms(12);
    EXPECT_TRUE(r.ok) << r.counterexample;
}

TEST(Gamma, SupportAndLeadingCoefficient) {
    EXPECT_TRUE(gamma_support(12).ok);
    for (std::size_t k = 0; k <= 6; ++k) {
        const CheckReport r = leading_coefficient_check(k);
        EXPECT_TRUE(r.ok) << r.counterexample;
    }
}

TEST(Gamma, BinomialProductIdentity) {
    for (unsigned long a = 0; a <= 8; ++a)
        for (long b = -4; b <= 8; ++b) {
            const CheckReport r = lemma_binomial_identity(a, b);
            EXPECT_TRUE(r.ok) << r.counterexample;
        }
    // pointwise, independent of the polynomial check
    for (long a = 0; a <= 6; ++a)
        for (long b = -3; b <= 6; ++b)
            for (long x = -5; x <= 15; ++x) {
                const auto ua = static_cast<unsigned long>(a);
                EXPECT_EQ(C(x - b, 2) * C(x, ua),
                          C(a + 2, 2) * C(x, ua + 2) + (a + 1) * (a - b) * C(x, ua + 1) + C(a - b, 2) * C(x, ua));
            }
}

TEST(Gamma, LeadingCoefficientOfDiagonal) {
    // 3k-th forward difference of n -> LS(n+k,n) equals (3k)!/(3^k k!)
    for (std::size_t k = 1; k <= 5; ++k) {
        std::vector<Int> vals;
        for (std::size_t n = 1; n <= 3 * k + 1; ++n) vals.push_back(ls(n + k, n));
        for (std::size_t d = 0; d < 3 * k; ++d)
            for (std::size_t i = 0; i + 1 < vals.size() - d; ++i) vals[i] = vals[i + 1] - vals[i];
        Int three_k = 1;
        for (std::size_t i = 0; i < k; ++i) three_k *= 3;
        EXPECT_EQ(vals[0] * three_k * factorial(k), factorial(3 * k)) << "k=" << k;
    }
}
