#include "legstir/algebra.hpp"

namespace legstir {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(const Int& n, unsigned long k) {
    Int num = 1;
    for (unsigned long j = 0; j < k; ++j) num *= n - j;
    Int q = num / factorial(k);
    return q;
}

Int binomial(long n, unsigned long k) { return binomial(Int(n), k); }

QPoly to_qpoly(const ZPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) v.emplace_back(c);
    return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::size_t dd = *den.degree();
    const Rat& lead = den.leading();
    std::vector<Rat> rem(num.coeffs().begin(), num.coeffs().end());
    if (rem.size() <= dd) return {QPoly{}, num};
    std::vector<Rat> quo(rem.size() - dd);
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / lead;
        quo[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeffs()[j];
    }
    rem.resize(dd);
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    Rat inv = 1 / x.leading();
    return inv * x;
}

ZPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return {};
    Int den_lcm = 1;
    for (const Rat& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    Int content = 0;
    for (const Rat& c : p.coeffs()) {
        Int scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        v.push_back(scaled);
    }
    if (v.back() < 0) content = -content;
    for (Int& c : v) c /= content;
    return ZPoly(std::move(v));
}

namespace {

template <class C, class F>
std::string render(std::span<const C> coeffs, char var, F&& coeff_str) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == C{}) continue;
        auto [negative, body, is_one] = coeff_str(coeffs[i]);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0 || !is_one) os << body;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

struct Piece {
    bool negative;
    std::string body;
    bool is_one;
};

}  // namespace

std::string to_string(const ZPoly& p, char var) {
    return render(p.coeffs(), var, [](const Int& c) {
        Int a = abs(c);
        return Piece{c < 0, a.get_str(), a == 1};
    });
}

std::string to_string(const QPoly& p, char var) {
    return render(p.coeffs(), var, [](const Rat& c) {
        Rat a = abs(c);
        std::string s = a.get_den() == 1 ? a.get_num().get_str() : "(" + a.get_str() + ")";
        return Piece{c < 0, s, a == 1};
    });
}

std::string to_string(const ZzPoly& p, char var, char inner) {
    return render(p.coeffs(), var, [inner](const ZPoly& c) {
        if (c.coeffs().size() == 1) {
            Int a = abs(c.coeff(0));
            return Piece{c.coeff(0) < 0, a.get_str(), a == 1};
        }
        return Piece{false, "(" + to_string(c, inner) + ")", false};
    });
}

std::string coeff_list(const ZPoly& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ',';
        s += p.coeffs()[i].get_str();
    }
    return s + "]";
}

QPoly binomial_poly(const QPoly& x, unsigned long k) {
    QPoly r = QPoly::constant(Rat(1));
    for (unsigned long j = 0; j < k; ++j) r *= x - QPoly::constant(Rat(static_cast<long>(j)));
    Rat inv = make_rat(1, factorial(k));
    return inv * r;
}

ZzPoly falling_basis(unsigned long k) {
    ZzPoly r = ZzPoly::constant(ZPoly{1});
    for (unsigned long i = 0; i < k; ++i) {
        const Int ii(static_cast<long>(i));
        // x - i^2 - i z
        ZPoly root{Int(ii * ii), ii};
        r *= ZzPoly{-root, ZPoly{1}};
    }
    return r;
}

ZPoly legendre_falling_basis(unsigned long k) {
    ZPoly r{1};
    for (unsigned long i = 0; i < k; ++i) {
        const Int ii(static_cast<long>(i));
        r *= ZPoly{Int(-ii * (ii + 1)), Int(1)};
    }
    return r;
}

QSeries::QSeries(std::vector<Rat> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

QSeries series_geom(const Int& r, std::size_t order) {
    const Rat ratio(r * (r + 1));
    std::vector<Rat> c(order + 1);
    Rat term = 1;
    for (std::size_t j = 0; j <= order; ++j) {
        c[j] = term;
        term *= ratio;
    }
    return QSeries(std::move(c), order);
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rat> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    return QSeries(std::move(c), n);
}

}  // namespace legstir
