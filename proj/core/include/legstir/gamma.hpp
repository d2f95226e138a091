#pragma once

// Binomial-basis expansion of the Legendre-Stirling diagonals:
//
//   LS(n+k, n) = 2^k * sum_i gamma(k,i) * C(n+k+1, i),
//
// with gamma(k,i) supported on k+2 <= i <= 3k for k >= 1. The coefficient
// table is built from its three-term recurrence; the generating polynomials
// gamma_k(x) can also be produced by a second-order differential recurrence,
// which is kept as an independent cross-check.

#include <cstddef>
#include <vector>

#include "legstir/algebra.hpp"
#include "legstir/report.hpp"

namespace legstir {

/// Memoized gamma(k,i). Row k has entries for 0 <= i <= 3k.
class GammaTable {
public:
    GammaTable();

    const Int& at(std::size_t k, std::size_t i);
    const std::vector<Int>& row(std::size_t k);

    /// gamma_k(x) = sum_i gamma(k,i) x^i.
    ZPoly poly(std::size_t k);

private:
    void grow_to(std::size_t k);

    std::vector<std::vector<Int>> rows_;
};

/// Per-thread shared table.
Int gamma_coeff(std::size_t k, std::size_t i);
ZPoly gamma_poly(std::size_t k);

/// One step of the differential recurrence: gamma_{k+1} from gamma_k.
/// Throws std::logic_error if the result is not an integer polynomial.
ZPoly gamma_ode_step(const ZPoly& gamma_k, std::size_t k);

/// gamma_k(x) by iterating gamma_ode_step from the seeds gamma_0 = 1 and
/// gamma_1 = x^3.
ZPoly gamma_poly_via_ode(std::size_t k);

/// f_k(n) = LS(n+k, n), read from the triangle.
Int ls_diagonal(std::size_t k, std::size_t n);

/// 2^k sum_i gamma(k,i) C(n+k+1, i); equals 1 for k = 0.
Int ls_binomial_expansion(std::size_t n, std::size_t k);

/// 2^k sum_{t_k=1}^{n} C(t_k+1,2) sum_{t_{k-1}=1}^{t_k} C(t_{k-1}+1,2) ... sum_{t_1=1}^{t_2} C(t_1+1,2).
/// Empty product (k = 0) is 1.
Int ls_nested_sum(std::size_t n, std::size_t k);

/// (-1)^k 2^k sum_i gamma(k,i) C(-n+k+1, i), which should equal Lc(n-1, n-k-1).
Int lc_expansion(std::size_t n, std::size_t k);

/// gamma(k,k+2) = 1, gamma(k,3k) = (3k)!/(k! 6^k),
/// gamma_k(-1) = (-1)^k (k+1)! k! / 2^k and 2^k gamma(k,3k)/(3k)! = 1/(k! 3^k)
/// for 1 <= k <= kmax.
CheckReport closed_forms(std::size_t kmax);

/// Support and positivity: gamma(k,i) > 0 exactly on k+2 <= i <= 3k.
CheckReport gamma_support(std::size_t kmax);

/// LS(n+k,n) is a degree-3k polynomial in n: on n = 1..3k+2 its (3k+1)-st
/// forward difference vanishes and its 3k-th difference is 2^k gamma(k,3k).
CheckReport leading_coefficient_check(std::size_t k);

/// C(x-b,2) C(x,a) = C(a+2,2) C(x,a+2) + (a+1)(a-b) C(x,a+1) + C(a-b,2) C(x,a)
/// as polynomials in x.
CheckReport lemma_binomial_identity(unsigned long a, long b);

}  // namespace legstir
