#pragma once

// Context-free grammars in the sense of formal derivations: a grammar maps
// letters to polynomials, and the induced derivation D acts on monomials by
// the Leibniz rule and on sums by linearity. Coefficients live in Z[z]; the
// coefficient indeterminate z is never a letter.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "legstir/algebra.hpp"
#include "legstir/report.hpp"

namespace legstir {

struct Letter {
    std::string family;
    std::optional<unsigned> index;

    Letter(std::string f) : family(std::move(f)) {}
    Letter(const char* f) : family(f) {}
    Letter(std::string f, unsigned i) : family(std::move(f)), index(i) {}

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

std::string to_string(const Letter& l);

/// Product of letters with positive exponents; the empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<const Letter, unsigned>> powers);

    unsigned exponent(const Letter& l) const;
    const std::map<Letter, unsigned>& powers() const { return powers_; }
    bool is_unit() const { return powers_.empty(); }
    unsigned total_degree() const;

    /// Divides out one copy of l (which must be present).
    Monomial without_one(const Letter& l) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::map<Letter, unsigned> powers_;
};

/// e.g. "a_2bc^2"; "1" for the unit.
std::string to_string(const Monomial& m);

/// Finite sum of monomials with coefficients in Z[z]. No zero coefficient is
/// stored.
class FormalPoly {
public:
    FormalPoly() = default;
    /// Single term.
    FormalPoly(Monomial m, ZPoly coeff = ZPoly{1});
    FormalPoly(const Letter& l) : FormalPoly(Monomial{{l, 1u}}) {}

    const std::map<Monomial, ZPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    ZPoly coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const ZPoly& coeff);

    FormalPoly& operator+=(const FormalPoly& o);
    friend FormalPoly operator+(FormalPoly a, const FormalPoly& b) { return a += b; }
    friend FormalPoly operator-(const FormalPoly& a, const FormalPoly& b);
    friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b);
    friend FormalPoly operator*(const ZPoly& s, const FormalPoly& p);
    friend bool operator==(const FormalPoly&, const FormalPoly&) = default;

private:
    std::map<Monomial, ZPoly> terms_;
};

/// Terms in decreasing monomial order, coefficients written in increasing
/// powers of z, e.g. "a_2bc^2+(1+z)a_1c".
std::string to_string(const FormalPoly& p);

class UnresolvedLetter : public std::runtime_error {
public:
    explicit UnresolvedLetter(const Letter& l)
        : std::runtime_error("no rule for letter " + to_string(l)), letter(l) {}
    Letter letter;
};

/// Substitution rules. A family rule is a function of the letter index, so
/// unbounded families such as a_j -> a_{j+1} b^j c need no table; it may
/// return nullopt for indices it does not cover.
class Grammar {
public:
    using FamilyRule = std::function<std::optional<FormalPoly>(std::optional<unsigned>)>;

    Grammar& rule(const Letter& l, FormalPoly image);
    Grammar& family_rule(const std::string& family, FamilyRule f);
    Grammar& constant(const Letter& l);

    /// The image of l, zero for constants. Throws UnresolvedLetter.
    FormalPoly image(const Letter& l) const;

private:
    std::map<Letter, FormalPoly> letters_;
    std::map<std::string, FamilyRule> families_;
    std::set<Letter> constants_;
};

/// The derivation induced by g.
FormalPoly derive(const Grammar& g, const FormalPoly& p);

/// Applies grammars[0], then grammars[1], ... to seed.
FormalPoly derive_seq(std::span<const Grammar> grammars, FormalPoly seed);

/// D^n(p) for a single grammar.
FormalPoly derive_n(const Grammar& g, FormalPoly p, std::size_t n);

/// {x -> xy, y -> y}
Grammar stirling2_grammar();
/// {x -> xy, y -> yz, z -> z^2}; this z is a letter, not the coefficient z.
Grammar stirling1_grammar();
/// a_j -> a_{j+1} b^j c for every j, b -> 2b, c -> (1+z)c.
Grammar js_grammar();
/// Step-k grammar: a -> (k-1)(k-1+z) a, b_j -> b_{j+1} for j < k.
Grammar jc_grammar(unsigned step);

/// D^n(x) = x sum_k S(n,k) y^k.
CheckReport check_stirling2(std::size_t n);
/// D^n(x) = x sum_k c(n,k) y^k z^{n-k}.
CheckReport check_stirling1(std::size_t n);
/// D^n(a_0) = sum_k JS_n^k(z) a_k b^{C(k,2)} c^k, with nothing else surviving.
CheckReport check_js_grammar(std::size_t n);
/// D_n...D_1(a b_0) = a sum_k Jc_n^k(z) b_k, with nothing else surviving.
CheckReport check_jc_grammar(std::size_t n);

}  // namespace legstir
