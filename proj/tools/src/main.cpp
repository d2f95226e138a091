#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "legstir_cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace legstir::cli;

    CLI::App app{"Exact Legendre-Stirling / Jacobi-Stirling computations and checks"};
    app.require_subcommand(1);

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Print an LS, Lc, JS or Jc triangle");
    table_cmd->add_option("--family", table.family, "ls | lc | js | jc")->check(CLI::IsMember({"ls", "lc", "js", "jc"}));
    table_cmd->add_option("--nmax", table.nmax, "Last row");
    table_cmd->add_option("--format", table.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite; one JSON report per n");
    verify_cmd->add_option("suite", verify.suite, "identities | bijection | grammar | zstat")
        ->required()
        ->check(CLI::IsMember({"identities", "bijection", "grammar", "zstat"}));
    verify_cmd->add_option("--nmax", verify.nmax, "Largest n to check");

    GammaOptions gamma;
    auto* gamma_cmd = app.add_subcommand("gamma", "Binomial-basis coefficients gamma(k,i) with checks");
    gamma_cmd->add_option("--kmax", gamma.kmax, "Last row");
    gamma_cmd->add_option("--format", gamma.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    gamma_cmd->add_option("--expansion-nmax", gamma.expansion_nmax, "n range for the expansion check");

    ConjectureOptions conj;
    auto* conj_cmd = app.add_subcommand("conjecture", "Real-rootedness and interlacing certificates");
    conj_cmd->add_option("--kmin", conj.kmin, "First k");
    conj_cmd->add_option("--kmax", conj.kmax, "Last k");

    OeisOptions oeis;
    auto* oeis_cmd = app.add_subcommand("oeis", "Compare against an OEIS b-file");
    oeis_cmd->add_option("--id", oeis.id, "A025035 | A006472")->required();
    oeis_cmd->add_option("--source", oeis.source, "b-file path or http(s) URL")->required();
    oeis_cmd->add_option("--count", oeis.count, "Number of terms to compare");
    oeis_cmd->add_option("--offset", oeis.offset, "b-file index of the k=1 term, minus one");
    oeis_cmd->add_option("--cache-dir", oeis.cache_dir, "Download cache (default $LEGSTIR_CACHE_DIR)");

    PartitionsOptions parts;
    auto* parts_cmd = app.add_subcommand("partitions", "List Legendre-Stirling partitions with their codes");
    parts_cmd->add_option("--n", parts.n, "Size of the multiset")->required();
    parts_cmd->add_option("--k", parts.k, "Only partitions with k nonzero boxes");
    parts_cmd->add_option("--format", parts.format, "text | json")->check(CLI::IsMember({"text", "json"}));

    PhiOptions phi;
    auto* phi_cmd = app.add_subcommand("phi", "Map a code to its partition, or a partition to its code");
    phi_cmd->add_option("--code", phi.code, "e.g. \"X,X,A(2,1),B(2),Bb(1)\"");
    phi_cmd->add_option("--partition", phi.partition, "e.g. \"{1,1'}{2,2',3}<3'>\"");

    std::string out_path;
    app.add_option("--out", out_path, "Write results to this file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return exit_io;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (*table_cmd) return cmd_table(table, out, std::cerr);
    if (*verify_cmd) return cmd_verify(verify, out, std::cerr);
    if (*gamma_cmd) return cmd_gamma(gamma, out, std::cerr);
    if (*conj_cmd) return cmd_conjecture(conj, out, std::cerr);
    if (*oeis_cmd) return cmd_oeis(oeis, out, std::cerr);
    if (*parts_cmd) return cmd_partitions(parts, out, std::cerr);
    if (*phi_cmd) return cmd_phi(phi, out, std::cerr);
    return exit_usage;
}
