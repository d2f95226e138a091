// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "legstir/codes.hpp"
#include "legstir/gamma.hpp"
#include "legstir/grammar.hpp"
#include "legstir/partitions.hpp"
#include "legstir/realroots.hpp"
#include "legstir/triangles.hpp"
#include "legstir_cli/bfile.hpp"

using namespace legstir;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome from(const CheckReport& r, const std::string& summary) {
    return {r.ok, r.ok ? summary + ", " + std::to_string(r.checked) + " checks" : r.counterexample};
}

Int C(long n, unsigned long k) { return binomial(n, k); }

Outcome four_way() {
    CheckReport r;
    for (std::size_t n = 0; n <= 25; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const Int v = ls(n, k);
            const std::string at = "LS(" + std::to_string(n) + "," + std::to_string(k) + "): ";
            r.expect(ls_explicit(n, k) == v, at + "explicit sum");
            r.expect(ls_vertical(n, k) == v, at + "vertical recurrence");
            r.expect(vertical_gf(k, n - k)[n - k] == Rat(v), at + "vertical generating function");
        }
    return from(r, "0<=k<=n<=25");
}

Outcome horizontal() {
    CheckReport r;
    for (std::size_t n = 0; n <= 25; ++n) r.merge(horizontal_identity_ls(n));
    for (std::size_t n = 0; n <= 15; ++n) {
        r.merge(horizontal_identity_js(n));
        r.merge(jc_defining_product(n));
    }
    return from(r, "LS n<=25, JS and Jc n<=15");
}

Outcome bijection() {
    CheckReport r;
    std::size_t codes = 0, parts = 0;
    for (int n = 1; n <= 6; ++n) {
        std::map<std::size_t, Int> by_k;
        for_each_code(n, [&](const CLSSequence& seq) {
            ++codes;
            const LSPartition p = phi(seq);
            r.expect(validate(p) && phi_inverse(p) == seq, to_string(seq) + " does not round-trip");
            r.expect(p.block_count() == count_x(seq), to_string(seq) + " changes the box count");
            by_k[count_x(seq)] += 1;
        });
        for_each_partition(n, [&](const LSPartition& p) {
            ++parts;
            r.expect(phi(phi_inverse(p)) == p, to_string(p) + " does not round-trip");
        });
        for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k)
            r.expect(by_k[k] == ls(n, k), "count at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
    r.expect(count_by_blocks(4) == std::map<std::size_t, Int>{{1, 8}, {2, 52}, {3, 20}, {4, 1}}, "row 4 counts");
    return from(r, std::to_string(codes) + " codes and " + std::to_string(parts) + " partitions round-tripped");
}

Outcome anchors() {
    CheckReport r;
    for (long n = 1; n <= 40; ++n) {
        const auto u = static_cast<std::size_t>(n);
        const std::string at = "n=" + std::to_string(n);
        r.expect(ls(u + 1, u) == 2 * C(n + 2, 3), at + ": LS(n+1,n)");
        r.expect(ls(u + 2, u) == 40 * C(n + 3, 6) + 32 * C(n + 3, 5) + 4 * C(n + 3, 4), at + ": LS(n+2,n)");
        r.expect(ls(u + 3, u) == 8 * (280 * C(n + 4, 9) + 448 * C(n + 4, 8) + 219 * C(n + 4, 7) +
                                      34 * C(n + 4, 6) + C(n + 4, 5)),
                 at + ": LS(n+3,n)");
    }
    return from(r, "LS(n+1,n), LS(n+2,n), LS(n+3,n) for n<=40");
}

Outcome binomial_basis() {
    CheckReport r;
    for (std::size_t k = 1; k <= 8; ++k)
        for (std::size_t n = 1; n <= 40; ++n) {
            const Int v = ls(n + k, n);
            const std::string at = "k=" + std::to_string(k) + ", n=" + std::to_string(n);
            r.expect(ls_binomial_expansion(n, k) == v, at + ": binomial expansion");
            r.expect(ls_nested_sum(n, k) == v, at + ": nested sum");
        }
    for (std::size_t k = 0; k <= 10; ++k)
        r.expect(gamma_poly_via_ode(k) == gamma_poly(k), "k=" + std::to_string(k) + ": differential recurrence");
    return from(r, "k<=8, n<=40; gamma rows k<=10");
}

Outcome first_kind() {
    CheckReport r;
    for (std::size_t k = 1; k <= 6; ++k)
        for (std::size_t n = k + 1; n <= 30; ++n)
            r.expect(lc_expansion(n, k) == lc(n - 1, n - k - 1), "k=" + std::to_string(k) + ", n=" + std::to_string(n));
    return from(r, "1<=k<=6, k+1<=n<=30");
}

Outcome closed_forms_and_oeis() {
    CheckReport r = closed_forms(12);
    const std::string dir = LEGSTIR_TEST_DATA;
    try {
        const auto a025035 = cli::read_bfile(dir + "/b025035.txt", "A025035");
        const auto a006472 = cli::read_bfile(dir + "/b006472.txt", "A006472");
        for (std::size_t k = 1; k <= 12; ++k) {
            const Int g = gamma_coeff(k, 3 * k);
            r.expect(a025035.at(Int(k)) == g, "A025035 term " + std::to_string(k));
            r.expect(a006472.at(Int(k + 1)) == Int(abs(gamma_poly(k).eval(Int(-1)))), "A006472 term " + std::to_string(k + 1));
        }
    } catch (const cli::BFileError& e) {
        r.fail(std::string("b-file: ") + e.what());
    }
    return from(r, "k<=12 with 12 terms of each b-file");
}

Outcome grammars() {
    CheckReport r;
    for (std::size_t n = 0; n <= 10; ++n) {
        r.merge(check_stirling2(n));
        r.merge(check_stirling1(n));
        r.merge(check_js_grammar(n));
        r.merge(check_jc_grammar(n));
    }
    const std::string shown = to_string(derive_n(js_grammar(), FormalPoly(Letter("a", 0)), 2));
    r.expect(shown == "a_2bc^2+(1+z)a_1c", "D_2D_1(a_0) printed as " + shown);
    return from(r, "n<=10; D_2D_1(a_0) = " + shown);
}

Outcome zstat() {
    CheckReport r;
    for (int n = 1; n <= 6; ++n)
        for (std::size_t k = 0; k <= static_cast<std::size_t>(n) + 1; ++k)
            r.expect(js_brute(n, k) == js(n, k), "n=" + std::to_string(n) + ", k=" + std::to_string(k));
    return from(r, "n<=6");
}

// Every listed value must share a certified interval with its root: each
// isolating interval is widened to cover the value and must still hold
// exactly one root and stay disjoint from its neighbours.
bool approximate_values_fit(const ConjectureResult& res, std::string& detail) {
    const std::vector<Rat> listed = {make_rat(-83, 100), make_rat(-645, 1000), make_rat(-525, 1000),
                                     make_rat(-23, 100), make_rat(-155, 1000), make_rat(-37, 1000)};
    if (res.merged_labels.size() != listed.size()) {
        detail = "merged list has " + std::to_string(res.merged_labels.size()) + " roots";
        return false;
    }
    const SturmChain r_chain(to_qpoly(res.r.poly)), s_chain(to_qpoly(res.s.poly));
    const Rat margin = make_rat(1, 10000000);
    std::vector<RootInterval> widened;
    double worst = 0;
    for (std::size_t i = 0; i < listed.size(); ++i) {
        const std::string& label = res.merged_labels[i];
        const bool is_r = label[0] == 'r';
        const RootCertificate& cert = is_r ? res.r : res.s;
        const SturmChain& chain = is_r ? r_chain : s_chain;
        const std::size_t idx = cert.intervals.size() - std::stoul(label.substr(1));
        const RootInterval tight = refine(chain, cert.intervals[idx], make_rat(1, 1000000));
        RootInterval w{std::min(tight.lo, listed[i]) - margin, std::max(tight.hi, listed[i]) + margin};
        if (chain.base().eval(w.lo) == 0 || chain.base().eval(w.hi) == 0 || count_roots(chain, w.lo, w.hi).count != 1) {
            detail = label + " cannot be certified around " + listed[i].get_str();
            return false;
        }
        if (!widened.empty() && widened.back().hi >= w.lo) {
            detail = label + " overlaps its neighbour once widened to " + listed[i].get_str();
            return false;
        }
        widened.push_back(w);
        const Rat mid = (tight.lo + tight.hi) / 2;
        worst = std::max(worst, std::abs(Rat(mid - listed[i]).get_d()));
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s%s=%.6f", i ? " " : "", label.c_str(), mid.get_d());
        detail += buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "; max deviation from listed values %.4f", worst);
    detail += buf;
    return true;
}

Outcome conjecture() {
    Outcome o;
    for (std::size_t k = 2; k <= 8; ++k) {
        const ConjectureResult res = verify_conjecture(k);
        const bool ok = res.verdict == Verdict::holds && certificate_sound(res.r) && certificate_sound(res.s) &&
                        res.r.intervals.size() == 2 * k - 2 && res.s.intervals.size() == 2 * k;
        if (!ok) return {false, "k=" + std::to_string(k) + ": " + to_string(res.verdict) + " " + res.detail};
        if (k == 2) {
            std::string detail;
            if (!approximate_values_fit(res, detail)) return {false, "k=2: " + detail};
            o.detail = "k=2..8 hold; k=2 roots " + detail;
        }
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    std::optional<double> limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "four-way LS agreement", 5.0, four_way},
        {2, "horizontal identities", 10.0, horizontal},
        {3, "bijection round trips", 30.0, bijection},
        {4, "printed anchors", std::nullopt, anchors},
        {5, "binomial-basis expansion", std::nullopt, binomial_basis},
        {6, "first kind via negative binomials", std::nullopt, first_kind},
        {7, "closed forms and OEIS", std::nullopt, closed_forms_and_oeis},
        {8, "grammar derivations", 60.0, grammars},
        {9, "z-statistic", std::nullopt, zstat},
        {10, "real-rootedness and interlacing", 600.0, conjecture},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s && secs > *c.limit_s) {
            o.ok = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(*c.limit_s)) + " s limit)";
        }
        failures += !o.ok;
        std::printf("%s criterion %2d  %-32s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
