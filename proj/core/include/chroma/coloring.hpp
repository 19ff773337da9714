#ifndef CHROMA_COLORING_HPP
#define CHROMA_COLORING_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chroma/complex.hpp"
#include "chroma/graph.hpp"
#include "chroma/homology.hpp"
#include "chroma/limits.hpp"
#include "chroma/morse.hpp"

namespace chroma {

// Fixes (n, m) and owns the reduced exponential graph together with its
// oracle-backed neighborhood complex and the vertex <-> map tables.
class ColoringContext {
public:
    ColoringContext(int n, int m, const SizeLimits& limits = {});

    int n() const { return n_; }
    int m() const { return m_; }
    const Graph& graph() const { return g_; }
    const SimplicialComplex& complex() const { return k_; }

    int constant_id(int color) const;            // vertex id of <color>
    bool is_constant(int vid) const { return vid < m_; }
    int color_of(int vid) const;                 // constants only
    const std::vector<int>& coordinate_values(int vid) const;  // color per coordinate
    std::optional<int> injective_id(const std::vector<int>& values) const;

    // Map notation: "{<2>,134}".
    std::string cell_to_string(const Simplex& s) const;

private:
    int n_, m_;
    Graph g_;
    SimplicialComplex k_;
    std::vector<std::vector<int>> values_;
    std::unordered_map<std::string, int> injective_by_key_;
};

// X_i, A_i = [m] minus the union of the other X_j, and the total image, all
// per the cell's vertices (constants contribute their color everywhere).
struct CellStats {
    std::vector<std::vector<int>> x;  // x[i] = sorted X_{i+1}
    std::vector<std::vector<int>> a;  // a[i] = sorted A_{i+1}
    std::vector<int> x_union;
};

CellStats cell_stats(const ColoringContext& ctx, const Simplex& s);

// Authoritative simplex test: a common neighbor must exist as an actual
// vertex of the reduced graph. (The per-coordinate A_i criterion agrees and
// is property-tested against this.)
bool is_simplex(const ColoringContext& ctx, const Simplex& s);

// The matching mu on the face poset of N(G): sigma is matched with
// sigma +- <i> at the least level i where the layered construction pairs
// them. Implemented as a memoized local recursion; the global S_i sets are
// never materialized, so status queries stay cheap even when the poset is
// astronomically large. Queries are safe from concurrent threads.
class MuOracle {
public:
    explicit MuOracle(std::shared_ptr<const ColoringContext> ctx);

    MatchStatus status(const Simplex& s) const;

    // Color index of the constant the cell is matched through, 0 if critical.
    int match_level(const Simplex& s) const;

    MatchingOracle as_oracle() const;  // shares this oracle's memo
    const ColoringContext& context() const { return *ctx_; }

private:
    struct Entry {
        int clear_below = 1;  // no match at any level < clear_below
        int level = 0;        // 0 until a match level is found
        bool up = false;
    };

    bool matched_below(const Simplex& s, int bound) const;
    Entry snapshot(const Simplex& s) const;
    void merge(const Simplex& s, const Entry& e) const;

    std::shared_ptr<const ColoringContext> ctx_;
    mutable std::mutex lock_;
    mutable std::unordered_map<Simplex, Entry, SimplexHash> memo_;
};

struct CriticalWitness {
    enum class Kind { ConstantOne, Exceptional, CaseOne };
    Kind kind = Kind::CaseOne;
    std::vector<int> z;  // CaseOne: injective z with z[k0] = 1 certifying the cell
    int k0 = -1;         // coordinate carrying color 1
};

struct CriticalCell {
    Simplex cell;
    CriticalWitness witness;
};

// Closed-form critical cells for m > n >= 3: <1>, {<2>,...,<m>}, and the
// Case-1 cells (all constants outside the z-image plus a compatible set of
// injective maps). Cells reachable through several z-vectors are emitted
// once with the lexicographically least witness.
std::vector<std::vector<CriticalCell>> enumerate_critical(const ColoringContext& ctx,
                                                          const SizeLimits& limits = {});

// The boundary block between critical (p+1)-cells and critical p-cells,
// with full path counts per column and the flattened path list.
struct IncidenceStructure {
    int p = 0;
    std::vector<Simplex> rows;  // critical p-cells
    std::vector<Simplex> cols;  // critical (p+1)-cells
    Gf2Matrix a;                // rows x cols, parity of path counts
    std::vector<std::vector<std::uint64_t>> path_counts;  // [col][row]
    std::vector<AlternatingPath> paths;
    CheckResult column_structure;  // two ones per column, zero for {<2>,...,<m>}
};

IncidenceStructure incidence_structure(const ColoringContext& ctx, const MuOracle& mu,
                                       const SizeLimits& limits = {});

// No cell matched at level 1 may appear inside any alternating path between
// critical cells.
CheckResult path_purity_check(const ColoringContext& ctx, const MuOracle& mu,
                              const std::vector<AlternatingPath>& paths);

struct CheckEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    int n = 0, m = 0;
    std::string regime;  // fold | disconnected | product | morse | refused
    int expected_conn = 0;
    BettiTable betti_z2;
    std::vector<CheckEntry> checks;
    bool inconclusive = false;
    std::string note;

    bool all_pass() const;
    std::string to_json() const;
    std::string to_csv() const;
};

// Homology-level verification of the connectivity value (m-n-1 for m >= n,
// m-3 otherwise), dispatched per regime. All checks are homological; no
// homotopy-group computation is attempted.
VerificationReport verify_main(int n, int m, const SizeLimits& limits = {});

// The (n, n+1) fixture: mu-pipeline Morse homology against the closed-form
// mod-2 Betti vector. Requires n >= 4; smaller n yields a refusing report.
VerificationReport verify_thm1(int n, const SizeLimits& limits = {});

} // namespace chroma

#endif
