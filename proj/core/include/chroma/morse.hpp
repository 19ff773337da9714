#ifndef CHROMA_MORSE_HPP
#define CHROMA_MORSE_HPP

#include <functional>
#include <string>
#include <vector>

#include "chroma/complex.hpp"
#include "chroma/gf2.hpp"
#include "chroma/homology.hpp"
#include "chroma/intmat.hpp"
#include "chroma/limits.hpp"

namespace chroma {

enum class MatchKind { Critical, MatchedUp, MatchedDown };

struct MatchStatus {
    MatchKind kind = MatchKind::Critical;
    Simplex partner;  // cofacet for MatchedUp, facet for MatchedDown

    static MatchStatus critical() { return {}; }
    static MatchStatus up(Simplex cofacet) { return {MatchKind::MatchedUp, std::move(cofacet)}; }
    static MatchStatus down(Simplex facet) { return {MatchKind::MatchedDown, std::move(facet)}; }
};

// Total, pure function on the nonempty simplices of a fixed complex.
using MatchingOracle = std::function<MatchStatus(const Simplex&)>;

// Structured pass/fail for the matching checks; a failure carries the
// offending cells rather than throwing.
struct CheckResult {
    bool ok = true;
    std::string message;
    std::vector<Simplex> witness;
};

// Involution, facet relation, and totality over all simplices of dimension
// <= max_dim; reports the first violation found.
CheckResult verify_matching(const SimplicialComplex& k, const MatchingOracle& m, int max_dim,
                            const SizeLimits& limits = {});

// Cycle detection per dimension layer on the matched-cell digraph
// (up-arcs x -> mu(x), down-arcs tau -> facets other than tau's partner).
// Call after verify_matching.
CheckResult verify_acyclic(const SimplicialComplex& k, const MatchingOracle& m, int max_dim,
                           const SizeLimits& limits = {});

// Critical cells grouped by dimension (lexicographic within each group).
std::vector<std::vector<Simplex>> critical_cells_scan(const SimplicialComplex& k,
                                                      const MatchingOracle& m, int max_dim,
                                                      const SizeLimits& limits = {});

// tau > y_1, mu(y_i) > y_{i+1}, mu(y_t) > sigma; t = 0 degenerates to direct
// incidence tau > sigma.
struct AlternatingPath {
    Simplex from;                                    // critical (d+1)-cell
    std::vector<std::pair<Simplex, Simplex>> steps;  // (y_i, mu(y_i)), all dimension d / d+1
    Simplex to;                                      // critical d-cell

    int length() const { return int(steps.size()); }
};

// Exhaustive depth-first enumeration of the alternating paths leaving a
// critical cell; each returned path ends at some critical cell one dimension
// down. Paths are re-validated against the invariants before returning.
std::vector<AlternatingPath> alternating_paths_from(const SimplicialComplex& k,
                                                    const MatchingOracle& m, const Simplex& tau,
                                                    const SizeLimits& limits = {});

// The paths from tau that end exactly at sigma.
std::vector<AlternatingPath> alternating_paths(const SimplicialComplex& k, const MatchingOracle& m,
                                               const Simplex& tau, const Simplex& sigma,
                                               const SizeLimits& limits = {});

// Parity of the path count from tau to sigma by memoized propagation over
// the matching digraph; never enumerates, so no path cap applies.
bool alternating_path_parity(const SimplicialComplex& k, const MatchingOracle& m,
                             const Simplex& tau, const Simplex& sigma);

// Morse boundary matrices over GF(2): result[i] maps critical i-cells (rows)
// to critical (i-1)-cells (columns); entries are alternating-path parities
// counted by memoized propagation, never by truncated enumeration.
std::vector<Gf2Matrix> morse_boundary_gf2(const SimplicialComplex& k, const MatchingOracle& m,
                                          const std::vector<std::vector<Simplex>>& critical,
                                          const SizeLimits& limits = {});

// Signed Morse boundary, w(c) = (-1)^t times the product of simplicial
// incidence numbers along the path. Optional mode: the pipeline itself only
// needs parities.
std::vector<IntMatrix> morse_boundary_signed(const SimplicialComplex& k, const MatchingOracle& m,
                                             const std::vector<std::vector<Simplex>>& critical,
                                             const SizeLimits& limits = {});

// Betti numbers of the Morse chain complex over GF(2).
BettiTable morse_betti_gf2(const SimplicialComplex& k, const MatchingOracle& m, int max_betti_dim,
                           bool reduced = false, const SizeLimits& limits = {});

// {"critical":{dim:count...},"boundary_ranks":[...],"betti":[...],
//  "acyclic":bool,"witness":...}
std::string morse_report_json(const SimplicialComplex& k, const MatchingOracle& m, int max_dim,
                              const SizeLimits& limits = {});

} // namespace chroma

#endif
