#ifndef CHROMA_TOOLS_CLI_HPP
#define CHROMA_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "chroma/limits.hpp"

namespace chroma::cli {

// Exit codes shared by every subcommand: 0 pass, 1 usage/input error,
// 2 inconclusive (cap exceeded), 3 check failure.
inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitCheckFailed = 3;

struct RunConfig {
    std::string family;      // "kn-exp" or empty
    int n = 0;
    int m = 0;
    std::string graph_file;  // alternative graph source
    int max_dim = 3;
    std::string coeff = "z2";  // z2 | z
    std::uint64_t simplices_cap = 2'000'000;
    std::uint64_t paths_cap = 1'000'000;
    std::uint64_t vertices_cap = 1'000'000;
    std::string theorem = "main";  // verify: main | thm1
    std::string format = "json";   // json | csv
    std::string out;               // empty = stdout
    int threads = 1;
    std::uint64_t seed = 0;

    SizeLimits limits() const;
};

// CHROMA_CAPS="simplices=S,paths=K,vertices=V" (any subset, comma list)
// seeds the default caps; explicit flags override.
void apply_env_caps(RunConfig& config, const char* env_value);

int cmd_betti(const RunConfig& config, std::ostream& diag);
int cmd_verify(const RunConfig& config, std::ostream& diag);
int cmd_morse(const RunConfig& config, std::ostream& diag);
int cmd_oracle_compare(const RunConfig& config, std::ostream& diag);

} // namespace chroma::cli

#endif
