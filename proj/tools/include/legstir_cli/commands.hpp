#pragma once

// Subcommand implementations behind the legstir executable. Each command
// writes its results to `out`, diagnostics to `err`, and returns a process
// exit code.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "legstir/partitions.hpp"
#include "legstir/realroots.hpp"
#include "legstir/report.hpp"

namespace legstir::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 1,
    exit_inconclusive = 2,
    exit_io = 3,
    exit_usage = 4,
};

inline constexpr std::size_t table_cap_integer = 200;
inline constexpr std::size_t table_cap_polynomial = 60;
inline constexpr std::size_t gamma_cap = 20;
inline constexpr std::size_t conjecture_cap = 10;
inline constexpr std::size_t identities_cap = 60;
inline constexpr std::size_t grammar_cap = 20;

struct TableOptions {
    std::string family = "ls";  ///< ls | lc | js | jc
    std::size_t nmax = 10;
    std::string format = "csv";  ///< csv | json
};

struct VerifyOptions {
    std::string suite = "identities";  ///< identities | bijection | grammar | zstat
    std::size_t nmax = 5;
};

struct GammaOptions {
    std::size_t kmax = 3;
    std::string format = "json";
    /// Expansion-vs-triangle agreement is checked for 1 <= n <= this.
    std::size_t expansion_nmax = 40;
};

struct ConjectureOptions {
    std::size_t kmin = 1;
    std::size_t kmax = 3;
};

struct OeisOptions {
    std::string id;      ///< A025035 | A006472
    std::string source;  ///< file path or http(s) URL
    std::size_t count = 12;
    /// b-file index of the k = 1 term minus 1; defaults per sequence.
    std::optional<long> offset;
    std::string cache_dir;
};

struct PartitionsOptions {
    int n = 3;
    std::optional<std::size_t> k;
    std::string format = "text";  ///< text | json
};

struct PhiOptions {
    std::optional<std::string> code;       ///< encode: code -> partition
    std::optional<std::string> partition;  ///< decode: partition -> code
};

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_gamma(const GammaOptions& opt, std::ostream& out, std::ostream& err);
int cmd_conjecture(const ConjectureOptions& opt, std::ostream& out, std::ostream& err);
int cmd_oeis(const OeisOptions& opt, std::ostream& out, std::ostream& err);
int cmd_partitions(const PartitionsOptions& opt, std::ostream& out, std::ostream& err);
int cmd_phi(const PhiOptions& opt, std::ostream& out, std::ostream& err);

/// Big integers are always written as decimal strings.
nlohmann::json int_json(const legstir::Int& v);
nlohmann::json poly_json(const legstir::ZPoly& p);

/// {"k", "verdict", "pattern", "expected_pattern", "merged", "detail",
///  "r": {"k", "poly", "intervals": [{"lo": [num, den], "hi": [num, den]}]}, "s": {...}}
nlohmann::json certificate_json(const legstir::ConjectureResult& res);

/// Parses the intervals of one certificate back into exact rationals.
legstir::RootCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json partition_json(const legstir::LSPartition& p);

/// {"command", "parameters", "ok", "checked", "counterexample", "summary", "elapsed_ms"}
nlohmann::json report_json(const std::string& command, const nlohmann::json& parameters,
                           const legstir::CheckReport& report, const std::string& summary, double elapsed_ms);

}  // namespace legstir::cli
