#pragma once

// Exact arithmetic substrate: big integers and rationals (GMP), binomials with
// arbitrary integer upper argument, dense univariate polynomials over any
// exact coefficient ring, and fixed-order truncated power series.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legstir {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds a canonical rational num/den. Throws std::domain_error on den == 0.
Rat make_rat(const Int& num, const Int& den);

/// n! for small n.
Int factorial(unsigned long n);

/// n(n-1)...(n-k+1)/k! for any integer n, including negative n.
Int binomial(const Int& n, unsigned long k);
Int binomial(long n, unsigned long k);

/// Dense polynomial in one indeterminate. coeffs()[i] multiplies t^i.
///
/// The zero polynomial has no coefficients and degree() == std::nullopt
/// (the "minus infinity" degree). No trailing zero coefficient is ever kept.
template <class Coeff>
class Poly {
public:
    using coeff_type = Coeff;

    Poly() = default;
    explicit Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly constant(Coeff c) { return Poly(std::vector<Coeff>{std::move(c)}); }

    static Poly monomial(Coeff c, std::size_t power) {
        std::vector<Coeff> v(power + 1);
        v[power] = std::move(c);
        return Poly(std::move(v));
    }

    /// The indeterminate itself.
    static Poly variable() { return monomial(Coeff(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Index of the lowest nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!(coeffs_[i] == Coeff{})) return i;
        return std::nullopt;
    }

    std::span<const Coeff> coeffs() const { return coeffs_; }

    /// Coefficient of t^i; zero beyond the degree.
    Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff{}; }

    const Coeff& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Coeff> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d[i - 1] = coeffs_[i] * Coeff(static_cast<long>(i));
        return Poly(std::move(d));
    }

    /// Horner evaluation into any ring T that accepts Coeff by construction.
    template <class T>
    T eval(const T& at) const {
        T acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            T c(*it);
            acc = acc * at + c;
        }
        return acc;
    }

    /// Multiplies by t^shift.
    Poly shifted(std::size_t shift) const {
        if (is_zero()) return {};
        std::vector<Coeff> v(shift);
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v));
    }

    /// Divides by t^shift; the low coefficients must be zero.
    Poly unshifted(std::size_t shift) const {
        if (is_zero()) return {};
        for (std::size_t i = 0; i < std::min(shift, coeffs_.size()); ++i)
            if (!(coeffs_[i] == Coeff{}))
                throw std::domain_error("polynomial not divisible by requested power");
        if (shift >= coeffs_.size()) return {};
        return Poly(std::vector<Coeff>(coeffs_.begin() + static_cast<std::ptrdiff_t>(shift),
                                       coeffs_.end()));
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly{} - a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == Coeff{}) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Coeff& s, const Poly& p) {
        std::vector<Coeff> v(p.coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * p.coeffs_[i];
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Coeff{}) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

/// Integer polynomial in one indeterminate (used both for x and for z).
using ZPoly = Poly<Int>;
/// Rational polynomial.
using QPoly = Poly<Rat>;
/// Polynomial in x whose coefficients are integer polynomials in z.
using ZzPoly = Poly<ZPoly>;

QPoly to_qpoly(const ZPoly& p);

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);

/// Monic gcd over Q; gcd(0,0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Divides every coefficient by its content and fixes the sign so the leading
/// coefficient is positive. Returns an integer polynomial with the same roots.
ZPoly primitive_part(const QPoly& p);

/// Human-readable rendering, highest power first, e.g. "10x^2 + 8x + 1".
std::string to_string(const ZPoly& p, char var = 'x');
std::string to_string(const QPoly& p, char var = 'x');
std::string to_string(const ZzPoly& p, char var = 'x', char inner = 'z');

/// Coefficient list "[c0,c1,...]" (JSON array of integers).
std::string coeff_list(const ZPoly& p);

/// x(x-1)...(x-k+1)/k! as a rational polynomial in x.
QPoly binomial_poly(const QPoly& x, unsigned long k);

/// prod_{i=0}^{k-1} (x - i(z+i)) expanded in x over Z[z].
ZzPoly falling_basis(unsigned long k);

/// prod_{i=0}^{k-1} (x - i(i+1)); falling_basis(k) at z = 1.
ZPoly legendre_falling_basis(unsigned long k);

/// Truncated power series sum_{j<=N} c_j x^j with rational coefficients.
class QSeries {
public:
    /// All-zero series of order N.
    explicit QSeries(std::size_t order) : coeffs_(order + 1) {}
    QSeries(std::vector<Rat> coeffs, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const Rat> coeffs() const { return coeffs_; }
    const Rat& operator[](std::size_t j) const { return coeffs_.at(j); }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rat> coeffs_;
};

/// 1/(1 - r(r+1)x) truncated at order N.
QSeries series_geom(const Int& r, std::size_t order);

/// Product truncated at the smaller of the two orders.
QSeries series_mul(const QSeries& a, const QSeries& b);

}  // namespace legstir
