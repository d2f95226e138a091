#pragma once

// Legendre-Stirling and Jacobi-Stirling triangles of both kinds, computed by
// their triangular recurrences, plus the alternative routes (explicit sum,
// vertical recurrence, generating functions) used to cross-check them.

#include <cstddef>
#include <vector>

#include "legstir/algebra.hpp"
#include "legstir/report.hpp"

namespace legstir {

enum class IntFamily {
    /// LS(n,k) = LS(n-1,k-1) + k(k+1) LS(n-1,k)
    legendre_stirling,
    /// Lc(n,k) = Lc(n-1,k-1) + n(n-1) Lc(n-1,k)
    legendre_stirling_first,
};

enum class PolyFamily {
    /// JS_n^k(z) = JS_{n-1}^{k-1}(z) + k(k+z) JS_{n-1}^k(z)
    jacobi_stirling,
    /// Jc_n^k(z) = Jc_{n-1}^{k-1}(z) + (n-1)(n-1+z) Jc_{n-1}^k(z)
    jacobi_stirling_first,
};

/// Memoized integer triangle. Rows are appended on demand and never
/// recomputed. Not synchronized: use one instance per thread.
class IntTriangle {
public:
    explicit IntTriangle(IntFamily family) : family_(family) {}

    IntFamily family() const { return family_; }

    /// Entry (n,k); zero outside 0 <= k <= n.
    const Int& at(std::size_t n, std::size_t k);
    const std::vector<Int>& row(std::size_t n);

private:
    void grow_to(std::size_t n);

    IntFamily family_;
    std::vector<std::vector<Int>> rows_;
};

/// Memoized triangle of integer polynomials in z.
class PolyTriangle {
public:
    explicit PolyTriangle(PolyFamily family) : family_(family) {}

    PolyFamily family() const { return family_; }

    const ZPoly& at(std::size_t n, std::size_t k);
    const std::vector<ZPoly>& row(std::size_t n);

private:
    void grow_to(std::size_t n);

    PolyFamily family_;
    std::vector<std::vector<ZPoly>> rows_;
};

// Convenience accessors backed by a per-thread table.
Int ls(std::size_t n, std::size_t k);
Int lc(std::size_t n, std::size_t k);
ZPoly js(std::size_t n, std::size_t k);
ZPoly jc(std::size_t n, std::size_t k);

/// Alternating sum sum_r (-1)^{r+k} (2r+1)(r^2+r)^n / ((r+k+1)!(k-r)!),
/// with 0^0 = 1. Throws std::logic_error if the sum is not an integer.
Int ls_explicit(std::size_t n, std::size_t k);

/// Column-by-column evaluation of LS(n,j) = sum_{m=j}^{n} LS(m-1,j-1) (j(j+1))^{n-m},
/// seeded only by LS(n,0) = [n == 0]. Requires 1 <= j <= n; returns 0 otherwise
/// except for (0,0).
Int ls_vertical(std::size_t n, std::size_t j);

/// prod_{r=1}^{k} 1/(1 - r(r+1)x), truncated at order N.
QSeries vertical_gf(std::size_t k, std::size_t order);

/// Coefficient of x^m in vertical_gf(k, N) equals LS(m+k, k) for m <= N.
CheckReport vertical_gf_check(std::size_t k, std::size_t order);

/// x^n == sum_k LS(n,k) prod_{i<k} (x - i(i+1)). On failure the report holds
/// the difference polynomial.
CheckReport horizontal_identity_ls(std::size_t n);

/// x^n == sum_k JS_n^k(z) prod_{i<k} (x - i(z+i)), compared in Z[z][x].
CheckReport horizontal_identity_js(std::size_t n);

/// prod_{i<n} (x + i(z+i)) == sum_k Jc_n^k(z) x^k, coefficient by coefficient.
CheckReport jc_defining_product(std::size_t n);

}  // namespace legstir
