#include "legstir/grammar.hpp"

#include "legstir/triangles.hpp"

namespace legstir {

std::string to_string(const Letter& l) {
    return l.index ? l.family + "_" + std::to_string(*l.index) : l.family;
}

Monomial::Monomial(std::initializer_list<std::pair<const Letter, unsigned>> powers) {
    for (const auto& [letter, e] : powers)
        if (e > 0) powers_[letter] += e;
}

unsigned Monomial::exponent(const Letter& l) const {
    auto it = powers_.find(l);
    return it == powers_.end() ? 0 : it->second;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [l, e] : powers_) d += e;
    return d;
}

Monomial Monomial::without_one(const Letter& l) const {
    Monomial m = *this;
    auto it = m.powers_.find(l);
    if (it == m.powers_.end()) throw std::logic_error("letter " + to_string(l) + " not in monomial");
    if (--it->second == 0) m.powers_.erase(it);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (const auto& [l, e] : b.powers_) m.powers_[l] += e;
    return m;
}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (const auto& [l, e] : m.powers()) {
        s += to_string(l);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

FormalPoly::FormalPoly(Monomial m, ZPoly coeff) { add_term(m, coeff); }

ZPoly FormalPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ZPoly{} : it->second;
}

void FormalPoly::add_term(const Monomial& m, const ZPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FormalPoly operator-(const FormalPoly& a, const FormalPoly& b) {
    FormalPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
    FormalPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

FormalPoly operator*(const ZPoly& s, const FormalPoly& p) {
    FormalPoly r;
    for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
    return r;
}

namespace {

// Increasing powers of z without spaces: "1+z", "4+6z+2z^2", "-3z".
std::string coeff_str(const ZPoly& c) {
    std::string s;
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
        const Int& v = c.coeffs()[i];
        if (v == 0) continue;
        if (!s.empty()) s += v < 0 ? "-" : "+";
        else if (v < 0) s += "-";
        const Int a = abs(v);
        if (i == 0 || a != 1) s += a.get_str();
        if (i >= 1) s += "z";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace

std::string to_string(const FormalPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = coeff_str(c);
        const bool single = c.coeffs().size() == 1;
        bool negative = false;
        if (single && c.coeff(0) < 0) {
            negative = true;
            cs.erase(0, 1);
        }
        if (!out.empty()) out += negative ? "-" : "+";
        else if (negative) out += "-";
        if (m.is_unit()) {
            out += single ? cs : "(" + cs + ")";
        } else {
            if (!single) out += "(" + cs + ")";
            else if (cs != "1") out += cs;
            out += to_string(m);
        }
    }
    return out;
}

Grammar& Grammar::rule(const Letter& l, FormalPoly image) {
    letters_[l] = std::move(image);
    return *this;
}

Grammar& Grammar::family_rule(const std::string& family, FamilyRule f) {
    families_[family] = std::move(f);
    return *this;
}

Grammar& Grammar::constant(const Letter& l) {
    constants_.insert(l);
    return *this;
}

FormalPoly Grammar::image(const Letter& l) const {
    if (constants_.count(l)) return {};
    if (auto it = letters_.find(l); it != letters_.end()) return it->second;
    if (auto it = families_.find(l.family); it != families_.end())
        if (auto img = it->second(l.index)) return *img;
    throw UnresolvedLetter(l);
}

FormalPoly derive(const Grammar& g, const FormalPoly& p) {
    FormalPoly out;
    std::map<Letter, FormalPoly> images;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [l, e] : m.powers()) {
            auto it = images.find(l);
            if (it == images.end()) it = images.emplace(l, g.image(l)).first;
            const Monomial rest = m.without_one(l);
            const ZPoly scale = Int(e) * c;
            for (const auto& [im, ic] : it->second.terms()) out.add_term(rest * im, scale * ic);
        }
    }
    return out;
}

FormalPoly derive_seq(std::span<const Grammar> grammars, FormalPoly seed) {
    for (const Grammar& g : grammars) seed = derive(g, seed);
    return seed;
}

FormalPoly derive_n(const Grammar& g, FormalPoly p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) p = derive(g, p);
    return p;
}

Grammar stirling2_grammar() {
    Grammar g;
    g.rule("x", Monomial{{"x", 1u}, {"y", 1u}});
    g.rule("y", Monomial{{"y", 1u}});
    return g;
}

Grammar stirling1_grammar() {
    Grammar g;
    g.rule("x", Monomial{{"x", 1u}, {"y", 1u}});
    g.rule("y", Monomial{{"y", 1u}, {"z", 1u}});
    g.rule("z", Monomial{{"z", 2u}});
    return g;
}

Grammar js_grammar() {
    Grammar g;
    g.family_rule("a", [](std::optional<unsigned> j) -> std::optional<FormalPoly> {
        if (!j) return std::nullopt;
        return FormalPoly(Monomial{{Letter("a", *j + 1), 1u}, {"b", *j}, {"c", 1u}});
    });
    g.rule("b", FormalPoly(Monomial{{"b", 1u}}, ZPoly{2}));
    g.rule("c", FormalPoly(Monomial{{"c", 1u}}, ZPoly{1, 1}));
    return g;
}

Grammar jc_grammar(unsigned step) {
    if (step == 0) throw std::invalid_argument("Jc grammars are indexed from 1");
    const Int m(step - 1);
    Grammar g;
    g.rule("a", FormalPoly(Monomial{{"a", 1u}}, ZPoly{Int(m * m), m}));
    g.family_rule("b", [step](std::optional<unsigned> j) -> std::optional<FormalPoly> {
        if (!j || *j >= step) return std::nullopt;
        return FormalPoly(Letter("b", *j + 1));
    });
    return g;
}

namespace {

std::vector<std::vector<Int>> stirling_table(std::size_t n, bool first_kind) {
    std::vector<std::vector<Int>> t(n + 1, std::vector<Int>(n + 1));
    t[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= i; ++k) {
            const Int w = first_kind ? Int(i - 1) : Int(k);
            t[i][k] = t[i - 1][k - 1] + w * t[i - 1][k];
        }
    return t;
}

std::string at(std::size_t n, std::size_t k) {
    return "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": ";
}

// Every term of p must be one of the expected monomials.
void expect_only(CheckReport& report, const FormalPoly& p, const std::set<Monomial>& allowed, std::size_t n) {
    for (const auto& [m, c] : p.terms())
        report.expect(allowed.count(m) > 0,
                      "n=" + std::to_string(n) + ": unexpected term " + to_string(FormalPoly(m, c)));
}

}  // namespace

CheckReport check_stirling2(std::size_t n) {
    CheckReport report;
    const auto s = stirling_table(n, false);
    const FormalPoly d = derive_n(stirling2_grammar(), FormalPoly(Letter("x")), n);
    std::set<Monomial> allowed;
    for (std::size_t k = 0; k <= n; ++k) {
        const Monomial m{{"x", 1u}, {"y", static_cast<unsigned>(k)}};
        allowed.insert(m);
        const ZPoly expected = s[n][k] == 0 ? ZPoly{} : ZPoly{s[n][k]};
        report.expect(d.coefficient(m) == expected,
                      at(n, k) + "coefficient " + to_string(d.coefficient(m), 'z') + " != S(n,k) = " + s[n][k].get_str());
    }
    expect_only(report, d, allowed, n);
    return report;
}

CheckReport check_stirling1(std::size_t n) {
    CheckReport report;
    const auto c = stirling_table(n, true);
    const FormalPoly d = derive_n(stirling1_grammar(), FormalPoly(Letter("x")), n);
    std::set<Monomial> allowed;
    for (std::size_t k = 0; k <= n; ++k) {
        const Monomial m{{"x", 1u}, {"y", static_cast<unsigned>(k)}, {"z", static_cast<unsigned>(n - k)}};
        allowed.insert(m);
        const ZPoly expected = c[n][k] == 0 ? ZPoly{} : ZPoly{c[n][k]};
        report.expect(d.coefficient(m) == expected,
                      at(n, k) + "coefficient " + to_string(d.coefficient(m), 'z') + " != c(n,k) = " + c[n][k].get_str());
    }
    expect_only(report, d, allowed, n);
    return report;
}

CheckReport check_js_grammar(std::size_t n) {
    CheckReport report;
    const FormalPoly d = derive_n(js_grammar(), FormalPoly(Letter("a", 0)), n);
    std::set<Monomial> allowed;
    for (std::size_t k = 0; k <= n; ++k) {
        const auto kk = static_cast<unsigned>(k);
        const Monomial m{{Letter("a", kk), 1u}, {"b", kk * (kk - 1) / 2}, {"c", kk}};
        allowed.insert(m);
        const ZPoly expected = js(n, k);
        report.expect(d.coefficient(m) == expected, at(n, k) + "coefficient " + to_string(d.coefficient(m), 'z') +
                                                        " != JS = " + to_string(expected, 'z'));
    }
    expect_only(report, d, allowed, n);
    return report;
}

CheckReport check_jc_grammar(std::size_t n) {
    CheckReport report;
    std::vector<Grammar> steps;
    for (std::size_t k = 1; k <= n; ++k) steps.push_back(jc_grammar(static_cast<unsigned>(k)));
    const FormalPoly seed(Monomial{{"a", 1u}, {Letter("b", 0), 1u}});
    const FormalPoly d = derive_seq(steps, seed);
    std::set<Monomial> allowed;
    for (std::size_t k = 0; k <= n; ++k) {
        const Monomial m{{"a", 1u}, {Letter("b", static_cast<unsigned>(k)), 1u}};
        allowed.insert(m);
        const ZPoly expected = jc(n, k);
        report.expect(d.coefficient(m) == expected, at(n, k) + "coefficient " + to_string(d.coefficient(m), 'z') +
                                                        " != Jc = " + to_string(expected, 'z'));
    }
    expect_only(report, d, allowed, n);
    return report;
}

}  // namespace legstir
