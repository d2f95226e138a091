#include "legstir/realroots.hpp"

#include <algorithm>

#include "legstir/gamma.hpp"

namespace legstir {

SturmChain::SturmChain(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    QPoly next = p.derivative();
    while (!next.is_zero()) {
        chain_.push_back(next);
        const auto& prev = chain_[chain_.size() - 2];
        next = -divmod(prev, chain_.back()).second;
    }
}

namespace {

int sign_at(const QPoly& p, const Endpoint& x) {
    if (x.is_finite()) return sgn(p.eval(x.value()));
    const int lead = sgn(p.leading());
    if (x.is_plus_infinity()) return lead;
    return (*p.degree() % 2 == 0) ? lead : -lead;
}

bool less(const Endpoint& a, const Endpoint& b) {
    if (a.is_minus_infinity()) return !b.is_minus_infinity();
    if (a.is_plus_infinity()) return false;
    if (b.is_plus_infinity()) return true;
    if (b.is_minus_infinity()) return false;
    return a.value() < b.value();
}

}  // namespace

std::size_t SturmChain::variations(const Endpoint& x) const {
    std::size_t changes = 0;
    int last = 0;
    for (const QPoly& q : chain_) {
        const int s = sign_at(q, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

SturmChain sturm_chain(const QPoly& p) { return SturmChain(p); }

RootCount count_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi) {
    if (!less(lo, hi)) throw std::invalid_argument("count_roots needs lo < hi");
    RootCount rc;
    rc.lower_is_root = lo.is_finite() && chain.base().eval(lo.value()) == 0;
    rc.upper_is_root = hi.is_finite() && chain.base().eval(hi.value()) == 0;
    rc.count = chain.variations(lo) - chain.variations(hi);
    return rc;
}

Rat cauchy_bound(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
    Rat best = 0;
    const Rat lead = abs(p.leading());
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        Rat r = abs(p.coeffs()[i]) / lead;
        if (r > best) best = r;
    }
    return best + 1;
}

namespace {

// A point strictly inside (lo, hi) at which p does not vanish; the midpoint
// unless that is a root.
Rat split_point(const QPoly& p, const RootInterval& iv) {
    Rat mid = (iv.lo + iv.hi) / 2;
    Rat step = iv.width() / 4;
    while (p.eval(mid) == 0) {
        mid += step;
        step /= 2;
    }
    return mid;
}

void isolate(const SturmChain& chain, const RootInterval& iv, std::size_t count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back(iv);
        return;
    }
    const Rat mid = split_point(chain.base(), iv);
    const std::size_t left = count_roots(chain, iv.lo, mid).count;
    isolate(chain, {iv.lo, mid}, left, out);
    isolate(chain, {mid, iv.hi}, count - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
    const QPoly g = gcd(p, p.derivative());
    if (*g.degree() > 0) throw NotSquareFree("polynomial shares the factor " + to_string(g) + " with its derivative");
    const SturmChain chain(p);
    std::vector<RootInterval> out;
    if (*p.degree() == 0) return out;
    const Rat bound = cauchy_bound(p);
    const RootInterval all{-bound, bound};
    isolate(chain, all, count_roots(chain, all.lo, all.hi).count, out);
    return out;
}

RootInterval bisect(const SturmChain& chain, const RootInterval& iv) {
    const Rat mid = split_point(chain.base(), iv);
    if (count_roots(chain, iv.lo, mid).count == 1) return {iv.lo, mid};
    return {mid, iv.hi};
}

RootInterval refine(const SturmChain& chain, RootInterval iv, const Rat& max_width) {
    while (iv.width() > max_width) iv = bisect(chain, iv);
    return iv;
}

ZPoly reduced_gamma(std::size_t k) {
    const ZPoly g = gamma_poly(k);
    const std::size_t expected = k == 0 ? 0 : k + 2;
    if (g.valuation() != expected)
        throw std::logic_error("gamma_" + std::to_string(k) + " vanishes at 0 to order " +
                               std::to_string(g.valuation().value_or(0)) + ", expected " + std::to_string(expected));
    return g.unshifted(expected);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::vacuous: return "vacuous";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::vector<std::string> expected_order(std::size_t k) {
    if (k < 1) return {};
    auto s = [](std::size_t i) { return "s" + std::to_string(i); };
    auto r = [](std::size_t i) { return "r" + std::to_string(i); };
    std::vector<std::string> descending;
    for (std::size_t i = 1; i + 1 <= k; ++i) {
        descending.push_back(s(i));
        descending.push_back(r(i));
    }
    descending.push_back(s(k));
    descending.push_back(s(k + 1));
    for (std::size_t i = k; i + 2 <= 2 * k; ++i) {
        descending.push_back(r(i));
        descending.push_back(s(i + 2));
    }
    return {descending.rbegin(), descending.rend()};
}

bool certificate_sound(const RootCertificate& cert) {
    const SturmChain chain(to_qpoly(cert.poly));
    for (std::size_t i = 0; i < cert.intervals.size(); ++i) {
        const RootInterval& iv = cert.intervals[i];
        if (!(iv.lo < iv.hi)) return false;
        if (chain.base().eval(iv.lo) == 0 || chain.base().eval(iv.hi) == 0) return false;
        if (count_roots(chain, iv.lo, iv.hi).count != 1) return false;
        if (i > 0 && cert.intervals[i - 1].hi > iv.lo) return false;
    }
    return true;
}

namespace {

std::string pattern_of(const std::vector<std::string>& labels) {
    std::string p;
    for (const auto& l : labels) {
        if (!p.empty()) p += ' ';
        p += l.front();
    }
    return p;
}

// Checks degree, square-freeness, all-real and all-negative; fills cert.
bool certify(std::size_t k, RootCertificate& cert, std::string& detail) {
    cert.k = k;
    cert.poly = reduced_gamma(k);
    const QPoly q = to_qpoly(cert.poly);
    const std::size_t degree = k == 0 ? 0 : 2 * k - 2;
    const std::string name = "q_" + std::to_string(k);
    if (cert.poly.degree() != degree) {
        detail = name + " has degree " + std::to_string(cert.poly.degree().value_or(0));
        return false;
    }
    try {
        cert.intervals = isolate_roots(q);
    } catch (const NotSquareFree& e) {
        detail = name + " is not square-free: " + e.what();
        return false;
    }
    if (cert.intervals.size() != degree) {
        detail = name + " has " + std::to_string(cert.intervals.size()) + " real roots, degree " + std::to_string(degree);
        return false;
    }
    const SturmChain chain(q);
    if (q.eval(Rat(0)) == 0 || count_roots(chain, Endpoint(0), Endpoint::plus_infinity()).count != 0) {
        detail = name + " has a nonnegative root";
        return false;
    }
    return true;
}

}  // namespace

ConjectureResult verify_conjecture(std::size_t k) {
    if (k < 1) throw std::invalid_argument("verify_conjecture needs k >= 1");
    ConjectureResult res;
    res.k = k;
    if (!certify(k, res.r, res.detail) || !certify(k + 1, res.s, res.detail)) {
        res.verdict = Verdict::fails;
        return res;
    }

    const SturmChain r_chain(to_qpoly(res.r.poly));
    const SturmChain s_chain(to_qpoly(res.s.poly));
    std::vector<std::size_t> r_steps(res.r.intervals.size()), s_steps(res.s.intervals.size());

    struct Entry {
        bool is_r;
        std::size_t idx;
    };
    std::vector<Entry> merged;
    while (true) {
        merged.clear();
        for (std::size_t i = 0; i < res.r.intervals.size(); ++i) merged.push_back({true, i});
        for (std::size_t i = 0; i < res.s.intervals.size(); ++i) merged.push_back({false, i});
        auto iv = [&](const Entry& e) -> RootInterval& {
            return e.is_r ? res.r.intervals[e.idx] : res.s.intervals[e.idx];
        };
        std::sort(merged.begin(), merged.end(), [&](const Entry& a, const Entry& b) { return iv(a).lo < iv(b).lo; });

        bool overlapping = false;
        for (std::size_t m = 0; m + 1 < merged.size(); ++m) {
            if (iv(merged[m]).hi <= iv(merged[m + 1]).lo) continue;
            overlapping = true;
            for (const Entry& e : {merged[m], merged[m + 1]}) {
                std::size_t& steps = e.is_r ? r_steps[e.idx] : s_steps[e.idx];
                if (++steps > refinement_budget) {
                    res.verdict = Verdict::inconclusive;
                    res.detail = "refinement budget exhausted separating " + std::string(e.is_r ? "r" : "s") +
                                 " root " + std::to_string(e.idx);
                    return res;
                }
                iv(e) = bisect(e.is_r ? r_chain : s_chain, iv(e));
            }
            break;
        }
        if (!overlapping) break;
    }

    // Ascending position i in a list of N roots carries the descending label N - i.
    for (const Entry& e : merged) {
        const std::size_t n = e.is_r ? res.r.intervals.size() : res.s.intervals.size();
        res.merged_labels.push_back((e.is_r ? "r" : "s") + std::to_string(n - e.idx));
    }
    res.pattern = pattern_of(res.merged_labels);

    if (k == 1) {
        res.expected_pattern = res.pattern;
        res.verdict = Verdict::vacuous;
        res.detail = "q_1 is constant; q_2 has 2 distinct negative real roots";
        return res;
    }
    const auto expected = expected_order(k);
    res.expected_pattern = pattern_of(expected);
    if (res.merged_labels == expected) {
        res.verdict = Verdict::holds;
    } else {
        res.verdict = Verdict::fails;
        res.detail = "merged order differs from the predicted interlacing";
    }
    return res;
}

}  // namespace legstir
