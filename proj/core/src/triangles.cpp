#include "legstir/triangles.hpp"

#include <stdexcept>
#include <string>

namespace legstir {

namespace {

const Int& zero_int() {
    static const Int zero = 0;
    return zero;
}

const ZPoly& zero_poly() {
    static const ZPoly zero;
    return zero;
}

std::string cell(std::size_t n, std::size_t k) {
    return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace

void IntTriangle::grow_to(std::size_t n) {
    while (rows_.size() <= n) {
        const std::size_t m = rows_.size();
        std::vector<Int> row(m + 1);
        if (m == 0) {
            row[0] = 1;
        } else {
            const auto& prev = rows_.back();
            for (std::size_t k = 1; k <= m; ++k) {
                Int weight = family_ == IntFamily::legendre_stirling
                                 ? Int(k) * Int(k + 1)
                                 : Int(m) * Int(m - 1);
                Int stay = k < m ? weight * prev[k] : Int(0);
                row[k] = prev[k - 1] + stay;
            }
        }
        rows_.push_back(std::move(row));
    }
}

const Int& IntTriangle::at(std::size_t n, std::size_t k) {
    if (k > n) return zero_int();
    grow_to(n);
    return rows_[n][k];
}

const std::vector<Int>& IntTriangle::row(std::size_t n) {
    grow_to(n);
    return rows_[n];
}

void PolyTriangle::grow_to(std::size_t n) {
    while (rows_.size() <= n) {
        const std::size_t m = rows_.size();
        std::vector<ZPoly> row(m + 1);
        if (m == 0) {
            row[0] = ZPoly{1};
        } else {
            const auto& prev = rows_.back();
            for (std::size_t k = 1; k <= m; ++k) {
                // k(k+z) or (m-1)(m-1+z)
                const Int a(family_ == PolyFamily::jacobi_stirling ? k : m - 1);
                ZPoly weight{Int(a * a), a};
                row[k] = prev[k - 1];
                if (k < m) row[k] += weight * prev[k];
            }
        }
        rows_.push_back(std::move(row));
    }
}

const ZPoly& PolyTriangle::at(std::size_t n, std::size_t k) {
    if (k > n) return zero_poly();
    grow_to(n);
    return rows_[n][k];
}

const std::vector<ZPoly>& PolyTriangle::row(std::size_t n) {
    grow_to(n);
    return rows_[n];
}

Int ls(std::size_t n, std::size_t k) {
    thread_local IntTriangle t(IntFamily::legendre_stirling);
    return t.at(n, k);
}

Int lc(std::size_t n, std::size_t k) {
    thread_local IntTriangle t(IntFamily::legendre_stirling_first);
    return t.at(n, k);
}

ZPoly js(std::size_t n, std::size_t k) {
    thread_local PolyTriangle t(PolyFamily::jacobi_stirling);
    return t.at(n, k);
}

ZPoly jc(std::size_t n, std::size_t k) {
    thread_local PolyTriangle t(PolyFamily::jacobi_stirling_first);
    return t.at(n, k);
}

Int ls_explicit(std::size_t n, std::size_t k) {
    Rat sum = 0;
    for (std::size_t r = 0; r <= k; ++r) {
        Int base = Int(r) * Int(r + 1);
        Int power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), n);  // 0^0 = 1
        Int num = Int(2 * r + 1) * power;
        if ((r + k) % 2 == 1) num = -num;
        sum += make_rat(num, factorial(r + k + 1) * factorial(k - r));
    }
    if (sum.get_den() != 1)
        throw std::logic_error("explicit sum for LS" + cell(n, k) + " is not an integer: " + sum.get_str());
    return sum.get_num();
}

Int ls_vertical(std::size_t n, std::size_t j) {
    if (j > n) return 0;
    // column[m] holds LS(m, c) for the current column c.
    std::vector<Int> column(n + 1);
    column[0] = 1;
    for (std::size_t c = 1; c <= j; ++c) {
        const Int ratio = Int(c) * Int(c + 1);
        std::vector<Int> next(n + 1);
        for (std::size_t row = c; row <= n; ++row) {
            Int acc = 0;
            Int power = 1;  // ratio^{row-m}, m descending from row
            for (std::size_t m = row; m >= c; --m) {
                acc += column[m - 1] * power;
                power *= ratio;
                if (m == c) break;
            }
            next[row] = acc;
        }
        column = std::move(next);
    }
    return column[n];
}

QSeries vertical_gf(std::size_t k, std::size_t order) {
    QSeries acc(std::vector<Rat>{Rat(1)}, order);
    for (std::size_t r = 1; r <= k; ++r) acc = series_mul(acc, series_geom(Int(r), order));
    return acc;
}

CheckReport vertical_gf_check(std::size_t k, std::size_t order) {
    CheckReport report;
    const QSeries gf = vertical_gf(k, order);
    for (std::size_t m = 0; m <= order; ++m) {
        const Int expected = ls(m + k, k);
        report.expect(gf[m] == Rat(expected),
                      "[x^" + std::to_string(m) + "] of vertical GF for k=" + std::to_string(k) + " is " +
                          gf[m].get_str() + ", LS" + cell(m + k, k) + " = " + expected.get_str());
    }
    return report;
}

CheckReport horizontal_identity_ls(std::size_t n) {
    CheckReport report;
    ZPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) rhs += ls(n, k) * legendre_falling_basis(k);
    const ZPoly lhs = ZPoly::monomial(Int(1), n);
    report.expect(lhs == rhs, "n=" + std::to_string(n) + ": x^n - rhs = " + to_string(lhs - rhs));
    return report;
}

CheckReport horizontal_identity_js(std::size_t n) {
    CheckReport report;
    ZzPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) rhs += ZzPoly::constant(js(n, k)) * falling_basis(k);
    const ZzPoly lhs = ZzPoly::monomial(ZPoly{1}, n);
    report.expect(lhs == rhs, "n=" + std::to_string(n) + ": x^n - rhs = " + to_string(lhs - rhs));
    return report;
}

CheckReport jc_defining_product(std::size_t n) {
    CheckReport report;
    ZzPoly product = ZzPoly::constant(ZPoly{1});
    for (std::size_t i = 0; i < n; ++i) {
        const Int ii(i);
        product *= ZzPoly{ZPoly{Int(ii * ii), ii}, ZPoly{1}};
    }
    for (std::size_t k = 0; k <= n; ++k) {
        const ZPoly expected = jc(n, k);
        report.expect(product.coeff(k) == expected,
                      "[x^" + std::to_string(k) + "] of product for n=" + std::to_string(n) + " is " +
                          to_string(product.coeff(k), 'z') + ", Jc" + cell(n, k) + " = " +
                          to_string(expected, 'z'));
    }
    report.expect(product.degree() == n, "product degree differs from n=" + std::to_string(n));
    return report;
}

}  // namespace legstir
