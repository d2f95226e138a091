#include "legstir_cli/commands.hpp"

#include <chrono>
#include <map>

#include "legstir/codes.hpp"
#include "legstir/gamma.hpp"
#include "legstir/grammar.hpp"
#include "legstir/triangles.hpp"
#include "legstir_cli/bfile.hpp"

namespace legstir::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

json rat_json(const Rat& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

Rat rat_from_json(const json& j) {
    return make_rat(Int(j.at(0).get<std::string>()), Int(j.at(1).get<std::string>()));
}

json root_cert_json(const RootCertificate& c) {
    json intervals = json::array();
    for (const auto& iv : c.intervals) intervals.push_back({{"lo", rat_json(iv.lo)}, {"hi", rat_json(iv.hi)}});
    return {{"k", c.k}, {"poly", poly_json(c.poly)}, {"intervals", intervals}};
}

}  // namespace

json int_json(const Int& v) { return v.get_str(); }

json poly_json(const ZPoly& p) {
    json a = json::array();
    for (const Int& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

json certificate_json(const ConjectureResult& res) {
    return {{"k", res.k},
            {"verdict", to_string(res.verdict)},
            {"pattern", res.pattern},
            {"expected_pattern", res.expected_pattern},
            {"merged", res.merged_labels},
            {"detail", res.detail},
            {"r", root_cert_json(res.r)},
            {"s", root_cert_json(res.s)}};
}

RootCertificate certificate_from_json(const json& j) {
    RootCertificate c;
    c.k = j.at("k").get<std::size_t>();
    std::vector<Int> coeffs;
    for (const auto& v : j.at("poly")) coeffs.emplace_back(v.get<std::string>());
    c.poly = ZPoly(std::move(coeffs));
    for (const auto& iv : j.at("intervals")) c.intervals.push_back({rat_from_json(iv.at("lo")), rat_from_json(iv.at("hi"))});
    return c;
}

json partition_json(const LSPartition& p) {
    auto box = [](const Box& b) {
        json a = json::array();
        for (const Element& e : b) a.push_back({{"value", e.value}, {"barred", e.barred}});
        return a;
    };
    json boxes = json::array();
    for (const Box& b : p.boxes) boxes.push_back(box(b));
    return {{"n", p.n}, {"k", p.block_count()}, {"text", to_string(p)}, {"boxes", boxes}, {"zero_box", box(p.zero_box)}};
}

json report_json(const std::string& command, const json& parameters, const CheckReport& report,
                 const std::string& summary, double elapsed_ms) {
    return {{"command", command},
            {"parameters", parameters},
            {"ok", report.ok},
            {"checked", report.checked},
            {"counterexample", report.ok ? json(nullptr) : json(report.counterexample)},
            {"summary", summary},
            {"elapsed_ms", elapsed_ms}};
}

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
    const bool integer = opt.family == "ls" || opt.family == "lc";
    const bool polynomial = opt.family == "js" || opt.family == "jc";
    if (!integer && !polynomial) {
        err << "unknown family '" << opt.family << "' (expected ls, lc, js or jc)\n";
        return exit_usage;
    }
    if (opt.format != "csv" && opt.format != "json") {
        err << "unknown format '" << opt.format << "'\n";
        return exit_usage;
    }
    const std::size_t cap = integer ? table_cap_integer : table_cap_polynomial;
    if (opt.nmax > cap) {
        err << "nmax " << opt.nmax << " exceeds the cap of " << cap << " for family " << opt.family << "\n";
        return exit_usage;
    }

    std::optional<IntTriangle> ints;
    std::optional<PolyTriangle> polys;
    if (opt.family == "ls") ints.emplace(IntFamily::legendre_stirling);
    if (opt.family == "lc") ints.emplace(IntFamily::legendre_stirling_first);
    if (opt.family == "js") polys.emplace(PolyFamily::jacobi_stirling);
    if (opt.family == "jc") polys.emplace(PolyFamily::jacobi_stirling_first);

    if (opt.format == "csv") {
        out << "n,k,value\n";
        for (std::size_t n = 0; n <= opt.nmax; ++n)
            for (std::size_t k = 0; k <= n; ++k) {
                const std::string cell = integer ? ints->at(n, k).get_str() : coeff_list(polys->at(n, k));
                out << n << ',' << k << ',' << csv_quote(cell) << '\n';
            }
        return exit_ok;
    }

    json rows = json::array();
    for (std::size_t n = 0; n <= opt.nmax; ++n) {
        json row = json::array();
        for (std::size_t k = 0; k <= n; ++k)
            row.push_back(integer ? int_json(ints->at(n, k)) : poly_json(polys->at(n, k)));
        rows.push_back(row);
    }
    out << json{{"family", opt.family}, {"nmax", opt.nmax}, {"rows", rows}}.dump() << '\n';
    return exit_ok;
}

namespace {

CheckReport identities_at(std::size_t n) {
    CheckReport r;
    const std::string at = "n=" + std::to_string(n);
    for (std::size_t k = 0; k <= n; ++k) {
        const Int v = ls(n, k);
        const std::string cell = at + ", k=" + std::to_string(k) + ": ";
        r.expect(ls_explicit(n, k) == v, cell + "explicit sum differs from recurrence");
        if (k >= 1) {
            r.expect(ls_vertical(n, k) == v, cell + "vertical recurrence differs");
            r.expect(vertical_gf(k, n - k)[n - k] == Rat(v), cell + "vertical generating function differs");
        }
        r.expect(js(n, k).eval(Int(1)) == v, cell + "JS(1) differs from LS");
        r.expect(jc(n, k).eval(Int(1)) == lc(n, k), cell + "Jc(1) differs from Lc");
        if (k >= 1) {
            const auto want = std::optional<std::size_t>(n - k);
            r.expect(js(n, k).degree() == want, cell + "deg_z JS != n-k");
            r.expect(jc(n, k).degree() == want, cell + "deg_z Jc != n-k");
        }
    }
    r.merge(horizontal_identity_ls(n));
    r.merge(horizontal_identity_js(n));
    r.merge(jc_defining_product(n));
    return r;
}

CheckReport bijection_at(int n, std::size_t& round_trips) {
    CheckReport r;
    std::map<std::size_t, Int> code_counts;
    for_each_code(n, [&](const CLSSequence& code) {
        const LSPartition p = phi(code);
        const std::string tag = to_string(code) + ": ";
        r.expect(validate(p), tag + "phi produced an invalid partition " + to_string(p));
        r.expect(p.block_count() == count_x(code), tag + "box count differs from X count");
        r.expect(phi_inverse(p) == code, tag + "phi_inverse(phi(code)) != code");
        code_counts[count_x(code)] += 1;
    });
    std::map<std::size_t, Int> partition_counts;
    for_each_partition(n, [&](const LSPartition& p) {
        r.expect(phi(phi_inverse(p)) == p, to_string(p) + ": phi(phi_inverse(p)) != p");
        partition_counts[p.block_count()] += 1;
        ++round_trips;
    });
    for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
        const std::string cell = "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": ";
        r.expect(code_counts[k] == ls(n, k), cell + "code count " + code_counts[k].get_str() + " != LS");
        r.expect(partition_counts[k] == ls(n, k), cell + "partition count " + partition_counts[k].get_str() + " != LS");
    }
    return r;
}

}  // namespace

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    std::size_t cap = 0;
    std::size_t first = 1;
    if (opt.suite == "identities") {
        cap = identities_cap;
        first = 0;
    } else if (opt.suite == "bijection" || opt.suite == "zstat") {
        cap = static_cast<std::size_t>(max_enumeration_n);
    } else if (opt.suite == "grammar") {
        cap = grammar_cap;
    } else {
        err << "unknown suite '" << opt.suite << "' (expected identities, bijection, grammar or zstat)\n";
        return exit_usage;
    }
    if (opt.nmax > cap) {
        err << "nmax " << opt.nmax << " exceeds the cap of " << cap << " for suite " << opt.suite << "\n";
        return exit_usage;
    }

    bool all_ok = true;
    for (std::size_t n = first; n <= opt.nmax; ++n) {
        const auto t0 = Clock::now();
        CheckReport r;
        std::string summary;
        if (opt.suite == "identities") {
            r = identities_at(n);
            summary = "four LS routes, horizontal identities, Jc product and z=1 specializations";
        } else if (opt.suite == "bijection") {
            std::size_t trips = 0;
            r = bijection_at(static_cast<int>(n), trips);
            summary = std::to_string(trips) + " partitions round-tripped";
        } else if (opt.suite == "grammar") {
            r.merge(check_stirling2(n)).merge(check_stirling1(n)).merge(check_js_grammar(n)).merge(check_jc_grammar(n));
            summary = "Stirling, JS and Jc grammars";
        } else {
            for (std::size_t k = 0; k <= n; ++k) {
                const ZPoly brute = js_brute(static_cast<int>(n), k);
                r.expect(brute == js(n, k), "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": brute " +
                                                to_string(brute, 'z') + " != JS " + to_string(js(n, k), 'z'));
            }
            summary = "barred zero-box statistic matches JS coefficients";
        }
        all_ok = all_ok && r.ok;
        out << report_json("verify " + opt.suite, {{"n", n}}, r, summary, ms_since(t0)).dump() << '\n';
        if (!r.ok) {
            err << "verify " << opt.suite << " failed: " << r.counterexample << "\n";
            return exit_mismatch;
        }
    }
    return all_ok ? exit_ok : exit_mismatch;
}

int cmd_gamma(const GammaOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.kmax > gamma_cap) {
        err << "kmax " << opt.kmax << " exceeds the cap of " << gamma_cap << "\n";
        return exit_usage;
    }
    if (opt.format != "csv" && opt.format != "json") {
        err << "unknown format '" << opt.format << "'\n";
        return exit_usage;
    }
    GammaTable table;
    const auto t0 = Clock::now();
    const CheckReport closed = opt.kmax >= 1 ? closed_forms(opt.kmax) : CheckReport{};
    CheckReport expansion;
    for (std::size_t k = 0; k <= opt.kmax; ++k)
        for (std::size_t n = 1; n <= opt.expansion_nmax; ++n)
            expansion.expect(ls_binomial_expansion(n, k) == ls(n + k, n),
                             "k=" + std::to_string(k) + ", n=" + std::to_string(n) + ": expansion != LS(n+k,n)");
    CheckReport ode;
    for (std::size_t k = 0; k <= opt.kmax; ++k)
        ode.expect(gamma_poly_via_ode(k) == table.poly(k), "k=" + std::to_string(k) + ": differential recurrence row differs");
    const double elapsed = ms_since(t0);

    auto offset_of = [&table](std::size_t k) { return *table.poly(k).valuation(); };

    if (opt.format == "csv") {
        out << "k,offset,coeffs\n";
        for (std::size_t k = 0; k <= opt.kmax; ++k) {
            const ZPoly g = table.poly(k);
            out << k << ',' << offset_of(k) << ',' << csv_quote(coeff_list(g.unshifted(offset_of(k)))) << '\n';
        }
        auto line = [&out](const char* name, const CheckReport& r) {
            out << "# " << name << " ok=" << (r.ok ? 1 : 0) << " checked=" << r.checked;
            if (!r.ok) out << " counterexample=" << r.counterexample;
            out << '\n';
        };
        line("closed_forms", closed);
        line("expansion", expansion);
        line("differential_recurrence", ode);
    } else {
        json rows = json::array();
        for (std::size_t k = 0; k <= opt.kmax; ++k)
            rows.push_back({{"k", k}, {"offset", offset_of(k)}, {"coeffs", poly_json(table.poly(k).unshifted(offset_of(k)))}});
        const json params = {{"kmax", opt.kmax}, {"expansion_nmax", opt.expansion_nmax}};
        out << json{{"rows", rows},
                    {"closed_forms", report_json("gamma closed_forms", params, closed, "", elapsed)},
                    {"expansion", report_json("gamma expansion", params, expansion, "", elapsed)},
                    {"differential_recurrence", report_json("gamma ode", params, ode, "", elapsed)}}
                   .dump()
            << '\n';
    }
    return closed.ok && expansion.ok && ode.ok ? exit_ok : exit_mismatch;
}

int cmd_conjecture(const ConjectureOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.kmax > conjecture_cap) {
        err << "kmax " << opt.kmax << " exceeds the cap of " << conjecture_cap << "\n";
        return exit_usage;
    }
    if (opt.kmin < 1 || opt.kmin > opt.kmax) {
        err << "need 1 <= kmin <= kmax\n";
        return exit_usage;
    }
    bool failed = false, inconclusive = false;
    for (std::size_t k = opt.kmin; k <= opt.kmax; ++k) {
        const ConjectureResult res = verify_conjecture(k);
        out << certificate_json(res).dump() << '\n';
        failed = failed || res.verdict == Verdict::fails;
        inconclusive = inconclusive || res.verdict == Verdict::inconclusive;
        if (res.verdict == Verdict::fails || res.verdict == Verdict::inconclusive)
            err << "k=" << k << ": " << to_string(res.verdict) << ": " << res.detail << "\n";
    }
    if (failed) return exit_mismatch;
    return inconclusive ? exit_inconclusive : exit_ok;
}

int cmd_oeis(const OeisOptions& opt, std::ostream& out, std::ostream& err) {
    long default_offset = 0;
    std::function<Int(std::size_t)> expected;
    if (opt.id == "A025035") {
        // partitions of {1..3k} into blocks of size 3
        expected = [](std::size_t k) { return gamma_coeff(k, 3 * k); };
    } else if (opt.id == "A006472") {
        // product of the first k triangular numbers, stored at index k+1
        default_offset = 1;
        expected = [](std::size_t k) {
            Int v = gamma_poly(k).eval(Int(-1));
            return Int(abs(v));
        };
    } else {
        err << "unsupported sequence '" << opt.id << "' (expected A025035 or A006472)\n";
        return exit_usage;
    }
    const long offset = opt.offset.value_or(default_offset);

    BFile file;
    try {
        const bool remote = opt.source.rfind("http://", 0) == 0 || opt.source.rfind("https://", 0) == 0;
        file = remote ? fetch_bfile(opt.source, opt.id, opt.cache_dir.empty() ? default_cache_dir() : opt.cache_dir)
                      : read_bfile(opt.source, opt.id);
    } catch (const BFileError& e) {
        err << opt.id << ": " << e.what() << "\n";
        return exit_io;
    }

    json matched = json::array();
    for (std::size_t k = 1; k <= opt.count; ++k) {
        const Int index = Int(static_cast<long>(k)) + offset;
        const auto value = file.at(index);
        if (!value) {
            err << opt.id << ": b-file has no entry for index " << index.get_str() << " (k=" << k << ")\n";
            return exit_io;
        }
        const Int want = expected(k);
        if (*value != want) {
            err << opt.id << ": mismatch at index " << index.get_str() << ": b-file " << value->get_str()
                << ", computed " << want.get_str() << "\n";
            out << json{{"id", opt.id}, {"ok", false}, {"first_mismatch", index.get_str()}}.dump() << '\n';
            return exit_mismatch;
        }
        matched.push_back(want.get_str());
    }
    out << json{{"id", opt.id}, {"ok", true}, {"count", opt.count}, {"offset", offset}, {"values", matched}}.dump()
        << '\n';
    return exit_ok;
}

int cmd_partitions(const PartitionsOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.n < 1 || opt.n > max_enumeration_n) {
        err << "n must be between 1 and " << max_enumeration_n << "\n";
        return exit_usage;
    }
    if (opt.format != "text" && opt.format != "json") {
        err << "unknown format '" << opt.format << "'\n";
        return exit_usage;
    }
    json all = json::array();
    for_each_partition(opt.n, [&](const LSPartition& p) {
        if (opt.k && p.block_count() != *opt.k) return;
        const std::string code = to_string(phi_inverse(p));
        if (opt.format == "text") {
            out << to_string(p) << '\t' << code << '\n';
        } else {
            json j = partition_json(p);
            j["code"] = code;
            all.push_back(std::move(j));
        }
    });
    if (opt.format == "json") out << all.dump() << '\n';
    return exit_ok;
}

int cmd_phi(const PhiOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.code.has_value() == opt.partition.has_value()) {
        err << "give exactly one of --code or --partition\n";
        return exit_usage;
    }
    try {
        if (opt.code) {
            out << to_string(phi(parse_code(*opt.code))) << '\n';
        } else {
            out << to_string(phi_inverse(parse_partition(*opt.partition))) << '\n';
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

}  // namespace legstir::cli
