#pragma once

// Exact real-root counting and isolation with Sturm chains over Q, and the
// certificate-producing check that gamma_k has only real zeros which
// (nearly) interlace with those of gamma_{k+1}.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "legstir/algebra.hpp"

namespace legstir {

/// A point of the extended rational line.
class Endpoint {
public:
    static Endpoint minus_infinity() { return Endpoint(Kind::minus_infinity, Rat(0)); }
    static Endpoint plus_infinity() { return Endpoint(Kind::plus_infinity, Rat(0)); }
    Endpoint(Rat value) : kind_(Kind::finite), value_(std::move(value)) {}
    Endpoint(long value) : Endpoint(Rat(value)) {}

    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_minus_infinity() const { return kind_ == Kind::minus_infinity; }
    bool is_plus_infinity() const { return kind_ == Kind::plus_infinity; }
    const Rat& value() const { return value_; }

private:
    enum class Kind { minus_infinity, finite, plus_infinity };
    Endpoint(Kind k, Rat v) : kind_(k), value_(std::move(v)) {}

    Kind kind_;
    Rat value_;
};

/// p, p', then negated remainders until the remainder vanishes.
class SturmChain {
public:
    /// Throws std::domain_error for the zero polynomial.
    explicit SturmChain(const QPoly& p);

    const std::vector<QPoly>& polys() const { return chain_; }
    const QPoly& base() const { return chain_.front(); }

    /// True iff the last chain element is a nonzero constant.
    bool square_free() const { return *chain_.back().degree() == 0; }

    /// Sign variations of the chain evaluated at x (zeros skipped).
    std::size_t variations(const Endpoint& x) const;

private:
    std::vector<QPoly> chain_;
};

SturmChain sturm_chain(const QPoly& p);

struct RootCount {
    std::size_t count = 0;
    /// Set when a finite endpoint is itself a root. The count is still exact
    /// for square-free input: it covers the half-open interval (lo, hi].
    bool lower_is_root = false;
    bool upper_is_root = false;
};

/// Distinct real roots in (lo, hi]. Requires lo < hi.
RootCount count_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi);

/// Open interval (lo, hi) with rational endpoints that are not roots.
struct RootInterval {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo < x && x < hi; }
    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

class NotSquareFree : public std::domain_error {
public:
    explicit NotSquareFree(const std::string& what) : std::domain_error(what) {}
};

/// 1 + max |a_i / a_n|; every real root lies strictly inside (-B, B).
Rat cauchy_bound(const QPoly& p);

/// One isolating interval per real root, in increasing order. Throws
/// NotSquareFree if gcd(p, p') is not constant, std::domain_error for p = 0.
std::vector<RootInterval> isolate_roots(const QPoly& p);

/// Halves an isolating interval, keeping the half that holds the root. The
/// split point is moved off any root of p so both endpoints stay non-roots.
RootInterval bisect(const SturmChain& chain, const RootInterval& iv);

/// Refines until the width is at most max_width.
RootInterval refine(const SturmChain& chain, RootInterval iv, const Rat& max_width);

/// q_k(x) = gamma_k(x) / x^{k+2}. Throws std::logic_error if x = 0 is not a
/// root of gamma_k of multiplicity exactly k+2.
ZPoly reduced_gamma(std::size_t k);

struct RootCertificate {
    std::size_t k = 0;
    ZPoly poly;                          ///< q_k
    std::vector<RootInterval> intervals; ///< increasing, pairwise disjoint
};

enum class Verdict { holds, fails, vacuous, inconclusive };

std::string to_string(Verdict v);

struct ConjectureResult {
    std::size_t k = 0;
    RootCertificate r;  ///< roots of q_k
    RootCertificate s;  ///< roots of q_{k+1}
    /// Merged intervals, ascending; labels like "s4", "r2".
    std::vector<std::string> merged_labels;
    /// Merged ascending pattern, e.g. "s r s s r s".
    std::string pattern;
    std::string expected_pattern;
    Verdict verdict = Verdict::fails;
    std::string detail;
};

/// The interlacing order the conjecture predicts, ascending, with labels
/// (s_{2k}, r_{2k-2}, s_{2k-1}, ..., r_k, s_{k+1}, s_k, r_{k-1}, ..., r_1, s_1).
std::vector<std::string> expected_order(std::size_t k);

/// Per-root bisection budget while separating the two root lists.
inline constexpr std::size_t refinement_budget = 256;

/// Checks, exactly: q_k and q_{k+1} are square-free, have 2k-2 and 2k real
/// roots, none nonnegative, and the merged root order matches
/// expected_order(k). k = 1 is vacuous (q_1 is constant) once q_2 passes.
ConjectureResult verify_conjecture(std::size_t k);

/// Sturm count of every certificate interval (should all be 1).
bool certificate_sound(const RootCertificate& cert);

}  // namespace legstir
