#include "legstir/gamma.hpp"

#include <stdexcept>
#include <string>

#include "legstir/triangles.hpp"

namespace legstir {

namespace {

const Int& zero_int() {
    static const Int zero = 0;
    return zero;
}

Int pow2(std::size_t k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

}  // namespace

GammaTable::GammaTable() { rows_.push_back({Int(1)}); }

void GammaTable::grow_to(std::size_t k) {
    while (rows_.size() <= k) {
        const std::size_t kk = rows_.size() - 1;  // building row kk+1 from row kk
        const auto& prev = rows_.back();
        auto g = [&prev](long i) -> const Int& {
            return i >= 0 && static_cast<std::size_t>(i) < prev.size() ? prev[static_cast<std::size_t>(i)]
                                                                      : zero_int();
        };
        const long k_signed = static_cast<long>(kk);
        std::vector<Int> row(3 * (kk + 1) + 1);
        for (std::size_t i = 0; i < row.size(); ++i) {
            const long ii = static_cast<long>(i);
            Int v = binomial(ii - k_signed - 1, 2) * g(ii - 1);
            v += Int(ii - 1) * Int(ii - k_signed - 2) * g(ii - 2);
            v += binomial(ii - 1, 2) * g(ii - 3);
            row[i] = v;
        }
        rows_.push_back(std::move(row));
    }
}

const Int& GammaTable::at(std::size_t k, std::size_t i) {
    grow_to(k);
    return i < rows_[k].size() ? rows_[k][i] : zero_int();
}

const std::vector<Int>& GammaTable::row(std::size_t k) {
    grow_to(k);
    return rows_[k];
}

ZPoly GammaTable::poly(std::size_t k) { return ZPoly(row(k)); }

Int gamma_coeff(std::size_t k, std::size_t i) {
    thread_local GammaTable table;
    return table.at(k, i);
}

ZPoly gamma_poly(std::size_t k) {
    thread_local GammaTable table;
    return table.poly(k);
}

ZPoly gamma_ode_step(const ZPoly& gamma_k, std::size_t k) {
    const Int kk(k);
    const ZPoly x = ZPoly::variable();
    const ZPoly d1 = gamma_k.derivative();
    const ZPoly d2 = d1.derivative();
    // Everything doubled so the k(k+1)/2 and (1+x)^2 x^3 / 2 factors stay integral.
    const ZPoly a{Int(kk * (kk + 1)), Int(-2 * kk), Int(2)};
    const ZPoly b{Int(2 * kk), Int(2 * (kk - 2)), Int(-4)};
    const ZPoly c = ZPoly{1, 2, 1} * ZPoly::monomial(Int(1), 3);
    const ZPoly twice = a * x * gamma_k - b * x.shifted(1) * d1 + c * d2;
    std::vector<Int> half;
    for (const Int& coeff : twice.coeffs()) {
        if (!mpz_divisible_ui_p(coeff.get_mpz_t(), 2))
            throw std::logic_error("differential recurrence produced a non-integer coefficient");
        half.push_back(coeff / 2);
    }
    return ZPoly(std::move(half));
}

ZPoly gamma_poly_via_ode(std::size_t k) {
    if (k == 0) return ZPoly{1};
    ZPoly g = ZPoly::monomial(Int(1), 3);
    for (std::size_t j = 1; j < k; ++j) g = gamma_ode_step(g, j);
    return g;
}

Int ls_diagonal(std::size_t k, std::size_t n) { return ls(n + k, n); }

Int ls_binomial_expansion(std::size_t n, std::size_t k) {
    thread_local GammaTable table;
    const auto& row = table.row(k);
    const Int top(n + k + 1);
    Int sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) sum += row[i] * binomial(top, i);
    return pow2(k) * sum;
}

Int ls_nested_sum(std::size_t n, std::size_t k) {
    if (k == 0) return 1;
    // level[t] = C(t+1,2) * (sum of the previous level over 1..t). The first
    // level is C(t+1,2) alone. The answer sums the last level over 1..n.
    std::vector<Int> level(n + 1);
    for (std::size_t t = 1; t <= n; ++t) level[t] = binomial(Int(t + 1), 2);
    for (std::size_t depth = 2; depth <= k; ++depth) {
        std::vector<Int> next(n + 1);
        Int running = 0;
        for (std::size_t t = 1; t <= n; ++t) {
            running += level[t];
            next[t] = binomial(Int(t + 1), 2) * running;
        }
        level = std::move(next);
    }
    Int total = 0;
    for (std::size_t t = 1; t <= n; ++t) total += level[t];
    return pow2(k) * total;
}

Int lc_expansion(std::size_t n, std::size_t k) {
    thread_local GammaTable table;
    const auto& row = table.row(k);
    const Int top = Int(k + 1) - Int(n);
    Int sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) sum += row[i] * binomial(top, i);
    Int r = pow2(k) * sum;
    if (k % 2 == 1) r = -r;
    return r;
}

CheckReport closed_forms(std::size_t kmax) {
    CheckReport report;
    GammaTable table;
    for (std::size_t k = 1; k <= kmax; ++k) {
        const std::string tag = "k=" + std::to_string(k) + ": ";
        report.expect(table.at(k, k + 2) == 1, tag + "gamma(k,k+2) = " + table.at(k, k + 2).get_str());

        Int six_pow;
        mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, k);
        const Int top_expected = factorial(3 * k) / (factorial(k) * six_pow);
        report.expect(table.at(k, 3 * k) == top_expected,
                      tag + "gamma(k,3k) = " + table.at(k, 3 * k).get_str() + ", expected " + top_expected.get_str());

        Int at_minus_one = table.poly(k).eval(Int(-1));
        Int alt = factorial(k + 1) * factorial(k) / pow2(k);
        if (k % 2 == 1) alt = -alt;
        report.expect(at_minus_one == alt,
                      tag + "gamma_k(-1) = " + at_minus_one.get_str() + ", expected " + alt.get_str());

        Int three_pow;
        mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, k);
        const Rat leading = make_rat(pow2(k) * table.at(k, 3 * k), factorial(3 * k));
        const Rat leading_expected = make_rat(1, factorial(k) * three_pow);
        report.expect(leading == leading_expected,
                      tag + "leading coefficient " + leading.get_str() + ", expected " + leading_expected.get_str());
    }
    return report;
}

CheckReport gamma_support(std::size_t kmax) {
    CheckReport report;
    GammaTable table;
    for (std::size_t k = 1; k <= kmax; ++k) {
        for (std::size_t i = 0; i <= 3 * k + 3; ++i) {
            const Int& g = table.at(k, i);
            const bool inside = i >= k + 2 && i <= 3 * k;
            report.expect(inside ? g > 0 : g == 0, "gamma(" + std::to_string(k) + "," + std::to_string(i) +
                                                       ") = " + g.get_str() + (inside ? " not positive" : " outside support"));
        }
    }
    return report;
}

CheckReport leading_coefficient_check(std::size_t k) {
    CheckReport report;
    const std::size_t points = 3 * k + 2;
    std::vector<Int> diff;
    for (std::size_t n = 1; n <= points; ++n) diff.push_back(ls_diagonal(k, n));
    // After 3k rounds every entry is the 3k-th difference.
    for (std::size_t round = 0; round < 3 * k; ++round) {
        for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
        diff.pop_back();
    }
    const Int expected = pow2(k) * gamma_coeff(k, 3 * k);
    for (const Int& d : diff)
        report.expect(d == expected, "k=" + std::to_string(k) + ": 3k-th difference " + d.get_str() +
                                         ", expected 2^k gamma(k,3k) = " + expected.get_str());
    const Int last = diff.at(1) - diff.at(0);
    report.expect(last == 0, "k=" + std::to_string(k) + ": (3k+1)-st difference " + last.get_str() + " is nonzero");
    return report;
}

CheckReport lemma_binomial_identity(unsigned long a, long b) {
    CheckReport report;
    const QPoly x = QPoly::variable();
    const QPoly lhs = binomial_poly(x - QPoly::constant(Rat(b)), 2) * binomial_poly(x, a);
    const Int aa(a);
    const Int ab = aa - b;
    const QPoly rhs = Rat(binomial(aa + 2, 2)) * binomial_poly(x, a + 2) +
                      Rat(Int((aa + 1) * ab)) * binomial_poly(x, a + 1) + Rat(binomial(ab, 2)) * binomial_poly(x, a);
    report.expect(lhs == rhs, "a=" + std::to_string(a) + ", b=" + std::to_string(b) + ": lhs - rhs = " +
                                  to_string(lhs - rhs));
    return report;
}

}  // namespace legstir
