#include <gtest/gtest.h>

#include "legstir/triangles.hpp"

using namespace legstir;

TEST(LegendreStirling, KnownValues) {
    EXPECT_EQ(ls(2, 1), 2);
    EXPECT_EQ(ls(4, 2), 52);
    EXPECT_EQ(ls(0, 0), 1);
    EXPECT_EQ(ls(3, 5), 0);
    EXPECT_EQ(ls(5, 0), 0);
    IntTriangle t(IntFamily::legendre_stirling);
    EXPECT_EQ(t.row(4), (std::vector<Int>{0, 8, 52, 20, 1}));
}

TEST(LegendreStirling, ExplicitSum) {
    EXPECT_EQ(ls_explicit(3, 2), 8);
    EXPECT_EQ(ls_explicit(0, 0), 1);
    for (std::size_t n = 0; n <= 25; ++n)
        for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(ls_explicit(n, k), ls(n, k)) << n << "," << k;
}

TEST(LegendreStirling, VerticalRecurrence) {
    EXPECT_EQ(ls_vertical(3, 2), 8);
    EXPECT_EQ(ls_vertical(5, 5), 1);
    for (std::size_t n = 1; n <= 20; ++n) {
        Int pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n - 1);
        EXPECT_EQ(ls_vertical(n, 1), pow2);
    }
    for (std::size_t n = 1; n <= 25; ++n)
        for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(ls_vertical(n, j), ls(n, j)) << n << "," << j;
}

TEST(LegendreStirling, VerticalGeneratingFunction) {
    const QSeries one = vertical_gf(1, 5);
    for (std::size_t m = 0; m <= 5; ++m) EXPECT_EQ(one[m], Rat(Int(1) << static_cast<mp_bitcnt_t>(m)));
    EXPECT_EQ(vertical_gf(2, 3)[1], Rat(8));
    EXPECT_EQ(vertical_gf(3, 0)[0], Rat(1));
    for (std::size_t k = 1; k <= 12; ++k) EXPECT_TRUE(vertical_gf_check(k, 25 - std::min<std::size_t>(k, 25)).ok);
}

TEST(LegendreStirling, HorizontalIdentity) {
    EXPECT_EQ(ls(2, 1) * legendre_falling_basis(1) + ls(2, 2) * legendre_falling_basis(2), ZPoly({0, 0, 1}));
    for (std::size_t n = 0; n <= 25; ++n) {
        const CheckReport r = horizontal_identity_ls(n);
        EXPECT_TRUE(r.ok) << r.counterexample;
    }
}

TEST(LegendreStirling, EntriesNonnegativeWithFullSupport) {
    for (std::size_t n = 1; n <= 25; ++n)
        for (std::size_t k = 0; k <= n + 1; ++k) {
            const bool inside = k >= 1 && k <= n;
            EXPECT_EQ(ls(n, k) > 0, inside);
            EXPECT_EQ(lc(n, k) > 0, inside);
            EXPECT_GE(ls(n, k), 0);
        }
}

TEST(LegendreStirlingFirst, KnownValues) {
    EXPECT_EQ(lc(3, 2), 8);
    EXPECT_EQ(lc(4, 1), 144);
    EXPECT_EQ(lc(0, 0), 1);
    EXPECT_EQ(lc(4, 2), 108);
}

TEST(JacobiStirling, KnownValues) {
    EXPECT_EQ(js(3, 2), ZPoly({5, 3}));
    EXPECT_EQ(js(2, 2), ZPoly({1}));
    EXPECT_EQ(js(4, 2).eval(Int(1)), 52);
    EXPECT_EQ(jc(3, 1), ZPoly({4, 6, 2}));
    EXPECT_EQ(jc(3, 2), ZPoly({5, 3}));
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(jc(n, n), ZPoly({1}));
}

TEST(JacobiStirling, SpecializeToLegendreAtZEqualsOne) {
    for (std::size_t n = 0; n <= 25; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            EXPECT_EQ(js(n, k).eval(Int(1)), ls(n, k));
            EXPECT_EQ(jc(n, k).eval(Int(1)), lc(n, k));
        }
}

TEST(JacobiStirling, DegreeInZ) {
    for (std::size_t n = 1; n <= 25; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            EXPECT_EQ(js(n, k).degree(), n - k);
            EXPECT_EQ(jc(n, k).degree(), n - k);
        }
    EXPECT_EQ(js(4, 0).degree(), std::nullopt);
}

TEST(JacobiStirling, HorizontalIdentityAndDefiningProduct) {
    for (std::size_t n = 0; n <= 15; ++n) {
        const CheckReport h = horizontal_identity_js(n);
        EXPECT_TRUE(h.ok) << h.counterexample;
        const CheckReport p = jc_defining_product(n);
        EXPECT_TRUE(p.ok) << p.counterexample;
    }
}

TEST(IdentityReports, CarryDiagnostics) {
    CheckReport r;
    r.expect(true, "fine");
    r.expect(false, "first failure");
    r.expect(false, "second failure");
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.checked, 3u);
    EXPECT_EQ(r.counterexample, "first failure");
}

TEST(Triangles, MemoizedRowsAreStable) {
    IntTriangle t(IntFamily::legendre_stirling_first);
    const Int far = t.at(30, 7);
    for (std::size_t n = 0; n <= 30; ++n) t.row(n);
    EXPECT_EQ(t.at(30, 7), far);
    PolyTriangle p(PolyFamily::jacobi_stirling);
    EXPECT_EQ(p.at(3, 2), ZPoly({5, 3}));
    EXPECT_TRUE(p.at(2, 3).is_zero());
}
