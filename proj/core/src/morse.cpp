#include "chroma/morse.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace chroma {

namespace {

bool is_facet_of(const Simplex& f, const Simplex& t) {
    if (f.dim() + 1 != t.dim()) return false;
    return std::includes(t.v.begin(), t.v.end(), f.v.begin(), f.v.end());
}

} // namespace

CheckResult verify_matching(const SimplicialComplex& k, const MatchingOracle& m, int max_dim,
                            const SizeLimits& limits) {
    SkeletonLevels levels = enumerate_simplices(k, max_dim, limits);
    for (const auto& lvl : levels.by_dim)
        for (const Simplex& s : lvl) {
            MatchStatus st = m(s);
            switch (st.kind) {
            case MatchKind::Critical:
                break;
            case MatchKind::MatchedUp: {
                if (!is_facet_of(s, st.partner))
                    return {false, "matched-up partner is not a cofacet of " + s.to_string(),
                            {s, st.partner}};
                if (!k.contains(st.partner))
                    return {false, "matched-up partner " + st.partner.to_string() +
                                       " is not a simplex of the complex",
                            {s, st.partner}};
                MatchStatus back = m(st.partner);
                if (back.kind != MatchKind::MatchedDown || !(back.partner == s))
                    return {false, "matching is not involutive at " + s.to_string(),
                            {s, st.partner}};
                break;
            }
            case MatchKind::MatchedDown: {
                if (!is_facet_of(st.partner, s))
                    return {false, "matched-down partner is not a facet of " + s.to_string(),
                            {s, st.partner}};
                MatchStatus back = m(st.partner);
                if (back.kind != MatchKind::MatchedUp || !(back.partner == s))
                    return {false, "matching is not involutive at " + s.to_string(),
                            {s, st.partner}};
                break;
            }
            }
        }
    return {};
}

CheckResult verify_acyclic(const SimplicialComplex& k, const MatchingOracle& m, int max_dim,
                           const SizeLimits& limits) {
    SkeletonLevels levels = enumerate_simplices(k, max_dim, limits);

    // Layer d: nodes are the matched-up d-cells; x -> y when y != x is a
    // facet of mu(x) and y is matched up. An alternating cycle would be a
    // directed cycle here.
    for (int d = 0; d < int(levels.by_dim.size()); ++d) {
        std::vector<Simplex> nodes;
        std::vector<Simplex> partners;
        std::unordered_map<Simplex, int, SimplexHash> id;
        for (const Simplex& s : levels.by_dim[d]) {
            MatchStatus st = m(s);
            if (st.kind == MatchKind::MatchedUp) {
                id.emplace(s, int(nodes.size()));
                nodes.push_back(s);
                partners.push_back(st.partner);
            }
        }
        if (nodes.empty()) continue;

        std::vector<std::vector<int>> next(nodes.size());
        std::vector<int> indeg(nodes.size(), 0);
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (const Simplex& f : facets_of(partners[i])) {
                if (f == nodes[i]) continue;
                auto it = id.find(f);
                if (it == id.end()) continue;
                next[i].push_back(it->second);
                ++indeg[it->second];
            }

        // Kahn's algorithm; a shortfall means some cells sit on or behind a
        // cycle.
        std::vector<int> stack;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (indeg[i] == 0) stack.push_back(int(i));
        std::size_t seen = stack.size();
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int nb : next[cur])
                if (--indeg[nb] == 0) {
                    stack.push_back(nb);
                    ++seen;
                }
        }
        if (seen == nodes.size()) continue;

        // Extract a concrete cycle with a colored DFS (back edge to a gray
        // node closes the cycle).
        std::vector<int> color(nodes.size(), 0);  // 0 new, 1 on stack, 2 done
        std::vector<int> chain;
        std::vector<Simplex> witness;
        auto dfs = [&](auto&& self, int cur) -> bool {
            color[cur] = 1;
            chain.push_back(cur);
            for (int nb : next[cur]) {
                if (color[nb] == 1) {
                    auto at = std::find(chain.begin(), chain.end(), nb);
                    for (auto it = at; it != chain.end(); ++it) {
                        witness.push_back(nodes[*it]);
                        witness.push_back(partners[*it]);
                    }
                    return true;
                }
                if (color[nb] == 0 && self(self, nb)) return true;
            }
            chain.pop_back();
            color[cur] = 2;
            return false;
        };
        for (std::size_t i = 0; i < nodes.size() && witness.empty(); ++i)
            if (color[i] == 0) dfs(dfs, int(i));
        return {false, "alternating cycle through " + std::to_string(witness.size() / 2) +
                           " matched pairs in dimension " + std::to_string(d),
                witness};
    }
    return {};
}

std::vector<std::vector<Simplex>> critical_cells_scan(const SimplicialComplex& k,
                                                      const MatchingOracle& m, int max_dim,
                                                      const SizeLimits& limits) {
    SkeletonLevels levels = enumerate_simplices(k, max_dim, limits);
    std::vector<std::vector<Simplex>> out(std::max(0, max_dim + 1));
    for (int d = 0; d < int(levels.by_dim.size()); ++d)
        for (const Simplex& s : levels.by_dim[d])
            if (m(s).kind == MatchKind::Critical) out[d].push_back(s);
    return out;
}

namespace {

void validate_path(const AlternatingPath& p, const SimplicialComplex& k, const MatchingOracle& m) {
    const Simplex* above = &p.from;  // cell whose facet starts/continues the path
    const Simplex* removed = nullptr;
    for (const auto& [y, mu_y] : p.steps) {
        if (!is_facet_of(y, *above)) throw std::logic_error("alternating path: facet step broken");
        if (removed && y == *removed) throw std::logic_error("alternating path: revisits removed cell");
        MatchStatus st = m(y);
        if (st.kind != MatchKind::MatchedUp || !(st.partner == mu_y))
            throw std::logic_error("alternating path: intermediate cell not matched up");
        removed = &y;
        above = &mu_y;
    }
    if (!is_facet_of(p.to, *above)) throw std::logic_error("alternating path: tail step broken");
    if (removed && p.to == *removed) throw std::logic_error("alternating path: ends on removed cell");
    if (m(p.to).kind != MatchKind::Critical) throw std::logic_error("alternating path: target not critical");
    (void)k;
}

} // namespace

std::vector<AlternatingPath> alternating_paths_from(const SimplicialComplex& k,
                                                    const MatchingOracle& m, const Simplex& tau,
                                                    const SizeLimits& limits) {
    if (m(tau).kind != MatchKind::Critical)
        throw std::invalid_argument("alternating paths start at a critical cell");
    if (tau.dim() < 1) return {};

    std::vector<AlternatingPath> out;
    std::vector<std::pair<Simplex, Simplex>> stack;  // (y_i, mu(y_i)) so far

    auto emit = [&](const Simplex& target) {
        if (out.size() >= limits.max_paths)
            throw cap_exceeded("alternating path cap " + std::to_string(limits.max_paths) +
                               " exceeded from " + tau.to_string());
        AlternatingPath p{tau, stack, target};
        validate_path(p, k, m);
        out.push_back(std::move(p));
    };

    // Descend through facets of the cell on top of the path; matched-up
    // facets extend the path, critical facets end it.
    auto descend = [&](auto&& self, const Simplex& above, const Simplex* removed) -> void {
        for (const Simplex& y : facets_of(above)) {
            if (removed && y == *removed) continue;
            MatchStatus st = m(y);
            if (st.kind == MatchKind::Critical) {
                emit(y);
            } else if (st.kind == MatchKind::MatchedUp) {
                stack.emplace_back(y, st.partner);
                self(self, st.partner, &y);
                stack.pop_back();
            }
        }
    };
    descend(descend, tau, nullptr);
    return out;
}

std::vector<AlternatingPath> alternating_paths(const SimplicialComplex& k, const MatchingOracle& m,
                                               const Simplex& tau, const Simplex& sigma,
                                               const SizeLimits& limits) {
    if (m(sigma).kind != MatchKind::Critical)
        throw std::invalid_argument("alternating paths end at a critical cell");
    if (sigma.dim() + 1 != tau.dim())
        throw std::invalid_argument("alternating paths connect adjacent dimensions");
    std::vector<AlternatingPath> all = alternating_paths_from(k, m, tau, limits);
    std::vector<AlternatingPath> out;
    for (auto& p : all)
        if (p.to == sigma) out.push_back(std::move(p));
    return out;
}

namespace {

// Parity of the number of alternating paths from each matched-up cell to
// every critical cell one dimension down, memoized over the acyclic digraph.
class ParityFlow {
public:
    ParityFlow(const SimplicialComplex& k, const MatchingOracle& m,
               const std::vector<Simplex>& targets)
        : k_(k), m_(m), width_(int(targets.size())) {
        for (std::size_t i = 0; i < targets.size(); ++i) target_id_.emplace(targets[i], int(i));
    }

    // Parity row for a critical cell tau of dimension d+1.
    BitRow from_critical(const Simplex& tau) {
        BitRow acc(width_);
        for (const Simplex& y : facets_of(tau)) accumulate(y, nullptr, acc);
        return acc;
    }

private:
    void accumulate(const Simplex& y, const Simplex* removed, BitRow& acc) {
        if (removed && y == *removed) return;
        MatchStatus st = m_(y);
        if (st.kind == MatchKind::Critical) {
            auto it = target_id_.find(y);
            if (it != target_id_.end()) {
                if (acc.test(it->second)) acc.reset(it->second);
                else acc.set(it->second);
            }
            return;
        }
        if (st.kind != MatchKind::MatchedUp) return;
        auto memo = memo_.find(y);
        if (memo == memo_.end()) {
            if (!in_progress_.insert(y).second)
                throw std::logic_error("parity flow hit a matching cycle at " + y.to_string());
            BitRow row(width_);
            for (const Simplex& f : facets_of(st.partner)) accumulate(f, &y, row);
            in_progress_.erase(y);
            memo = memo_.emplace(y, std::move(row)).first;
        }
        acc ^= memo->second;
    }

    const SimplicialComplex& k_;
    const MatchingOracle& m_;
    int width_;
    std::unordered_map<Simplex, int, SimplexHash> target_id_;
    std::unordered_map<Simplex, BitRow, SimplexHash> memo_;
    std::unordered_set<Simplex, SimplexHash> in_progress_;
};

} // namespace

bool alternating_path_parity(const SimplicialComplex& k, const MatchingOracle& m,
                             const Simplex& tau, const Simplex& sigma) {
    if (m(tau).kind != MatchKind::Critical || m(sigma).kind != MatchKind::Critical)
        throw std::invalid_argument("path parity is defined between critical cells");
    if (sigma.dim() + 1 != tau.dim())
        throw std::invalid_argument("path parity connects adjacent dimensions");
    ParityFlow flow(k, m, {sigma});
    return flow.from_critical(tau).test(0);
}

std::vector<Gf2Matrix> morse_boundary_gf2(const SimplicialComplex& k, const MatchingOracle& m,
                                          const std::vector<std::vector<Simplex>>& critical,
                                          const SizeLimits& limits) {
    (void)limits;
    static const std::vector<Simplex> no_cells;
    std::vector<Gf2Matrix> out;
    for (std::size_t d = 0; d < critical.size(); ++d) {
        const auto& rows = critical[d];
        const auto& cols = d > 0 ? critical[d - 1] : no_cells;
        Gf2Matrix mat(int(rows.size()), int(cols.size()));
        if (d > 0 && !rows.empty() && !cols.empty()) {
            ParityFlow flow(k, m, cols);
            for (std::size_t r = 0; r < rows.size(); ++r) mat.row(int(r)) = flow.from_critical(rows[r]);
        }
        out.push_back(std::move(mat));
    }
    return out;
}

namespace {

// Simplicial incidence number: sign of deleting the position of f in t.
int incidence_sign(const Simplex& t, const Simplex& f) {
    for (std::size_t pos = 0; pos < t.v.size(); ++pos)
        if (!f.contains_vertex(t.v[pos])) return pos % 2 == 0 ? 1 : -1;
    throw std::logic_error("incidence_sign: not a facet pair");
}

} // namespace

std::vector<IntMatrix> morse_boundary_signed(const SimplicialComplex& k, const MatchingOracle& m,
                                             const std::vector<std::vector<Simplex>>& critical,
                                             const SizeLimits& limits) {
    static const std::vector<Simplex> no_cells;
    std::vector<IntMatrix> out;
    for (std::size_t d = 0; d < critical.size(); ++d) {
        const auto& rows = critical[d];
        const auto& cols = d > 0 ? critical[d - 1] : no_cells;
        IntMatrix mat(int(rows.size()), int(cols.size()));
        if (d > 0 && !rows.empty() && !cols.empty()) {
            std::unordered_map<Simplex, int, SimplexHash> col_id;
            for (std::size_t c = 0; c < cols.size(); ++c) col_id.emplace(cols[c], int(c));
            for (std::size_t r = 0; r < rows.size(); ++r) {
                for (const AlternatingPath& p : alternating_paths_from(k, m, rows[r], limits)) {
                    auto it = col_id.find(p.to);
                    if (it == col_id.end()) continue;
                    // w(c) = (-1)^t [tau:y_1] [mu(y_t):sigma] prod [mu(y_i):y_i]
                    //        prod [mu(y_i):y_{i+1}]
                    int w = p.steps.size() % 2 == 0 ? 1 : -1;
                    const Simplex* above = &p.from;
                    const Simplex* entered = nullptr;
                    for (const auto& [y, mu_y] : p.steps) {
                        w *= incidence_sign(*above, y);      // [above : y]
                        w *= incidence_sign(mu_y, y);        // [mu(y) : y]
                        above = &mu_y;
                        entered = &y;
                    }
                    (void)entered;
                    w *= incidence_sign(*above, p.to);
                    mat.at(int(r), it->second) += w;
                }
            }
        }
        out.push_back(std::move(mat));
    }
    return out;
}

BettiTable morse_betti_gf2(const SimplicialComplex& k, const MatchingOracle& m, int max_betti_dim,
                           bool reduced, const SizeLimits& limits) {
    if (max_betti_dim < 0) throw std::invalid_argument("max_betti_dim must be >= 0");
    auto critical = critical_cells_scan(k, m, max_betti_dim + 1, limits);
    auto boundaries = morse_boundary_gf2(k, m, critical, limits);

    BettiTable out;
    out.coeff = Coefficients::Gf2;
    out.reduced = reduced;
    out.computed_up_to = max_betti_dim;
    for (int i = 0; i <= max_betti_dim; ++i) {
        long long count = static_cast<long long>(critical[i].size());
        long long rank_i = rank_gf2(boundaries[i]);
        long long rank_next = i + 1 < int(boundaries.size()) ? rank_gf2(boundaries[i + 1]) : 0;
        out.cell_counts.push_back(count);
        long long beta = count - rank_i - rank_next;
        if (reduced && i == 0 && count > 0) beta -= 1;
        out.betti.push_back(beta);
        out.torsion.emplace_back();
    }
    return out;
}

std::string morse_report_json(const SimplicialComplex& k, const MatchingOracle& m, int max_dim,
                              const SizeLimits& limits) {
    nlohmann::ordered_json j;
    CheckResult matching = verify_matching(k, m, max_dim, limits);
    CheckResult acyclic = matching.ok ? verify_acyclic(k, m, max_dim, limits) : CheckResult{false, "matching invalid", {}};

    auto critical = critical_cells_scan(k, m, max_dim, limits);
    nlohmann::ordered_json crit;
    for (std::size_t d = 0; d < critical.size(); ++d)
        crit[std::to_string(d)] = critical[d].size();
    j["critical"] = std::move(crit);

    // Boundary ranks and Morse Betti numbers only make sense for a valid
    // acyclic matching; the parity flow would chase a cycle otherwise.
    auto ranks = nlohmann::ordered_json::array();
    auto betti = nlohmann::ordered_json::array();
    if (matching.ok && acyclic.ok) {
        auto boundaries = morse_boundary_gf2(k, m, critical, limits);
        for (std::size_t d = 1; d < boundaries.size(); ++d) ranks.push_back(rank_gf2(boundaries[d]));
        if (max_dim >= 1) {
            BettiTable table = morse_betti_gf2(k, m, max_dim - 1, false, limits);
            for (long long b : table.betti) betti.push_back(b);
        }
    }
    j["boundary_ranks"] = std::move(ranks);
    j["betti"] = std::move(betti);

    j["acyclic"] = matching.ok && acyclic.ok;
    if (!matching.ok || !acyclic.ok) {
        const CheckResult& bad = matching.ok ? acyclic : matching;
        nlohmann::ordered_json w;
        w["message"] = bad.message;
        auto cells = nlohmann::ordered_json::array();
        for (const Simplex& s : bad.witness) cells.push_back(s.to_string());
        w["cells"] = std::move(cells);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j.dump();
}

} // namespace chroma
