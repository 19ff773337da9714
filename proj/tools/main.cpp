#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"graph coloring complexes: neighborhood-complex homology and the discrete-Morse pipeline"};
    app.require_subcommand(1);

    chroma::cli::RunConfig config;
    chroma::cli::apply_env_caps(config, std::getenv("CHROMA_CAPS"));

    auto add_common = [&](CLI::App* cmd, bool with_source) {
        if (with_source) {
            cmd->add_option("--family", config.family, "built-in family (kn-exp)");
            cmd->add_option("--n", config.n, "family parameter n");
            cmd->add_option("--m", config.m, "family parameter m");
            cmd->add_option("--graph", config.graph_file, "graph file in the p/e/l text format");
        } else {
            cmd->add_option("--n", config.n, "parameter n");
            cmd->add_option("--m", config.m, "parameter m");
        }
        cmd->add_option("--max-dim", config.max_dim, "dimension bound");
        cmd->add_option("--coeff", config.coeff, "coefficients: z2 | z")
            ->check(CLI::IsMember({"z2", "z"}));
        cmd->add_option("--paths-cap", config.paths_cap, "alternating-path cap");
        cmd->add_option("--simplices-cap", config.simplices_cap, "simplex enumeration cap");
        cmd->add_option("--format", config.format, "output format: json | csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", config.out, "output path (default stdout)");
        cmd->add_option("--threads", config.threads, "worker threads inside library calls");
        cmd->add_option("--seed", config.seed, "seed for randomized suites");
    };

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers of a neighborhood complex");
    add_common(betti, true);

    CLI::App* verify = app.add_subcommand("verify", "verify the connectivity / homology claims");
    verify->add_option("--theorem", config.theorem, "main | thm1")->required();
    add_common(verify, false);

    CLI::App* morse = app.add_subcommand("morse", "mu-pipeline Morse report for the kn-exp family");
    add_common(morse, true);

    CLI::App* compare = app.add_subcommand("oracle-compare", "Morse pipeline vs brute force, side by side");
    add_common(compare, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : chroma::cli::kExitUsage;
    }

    if (betti->parsed()) return chroma::cli::cmd_betti(config, std::cerr);
    if (verify->parsed()) return chroma::cli::cmd_verify(config, std::cerr);
    if (morse->parsed()) return chroma::cli::cmd_morse(config, std::cerr);
    if (compare->parsed()) return chroma::cli::cmd_oracle_compare(config, std::cerr);
    return chroma::cli::kExitUsage;
}
