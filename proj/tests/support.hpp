#ifndef CHROMA_TESTS_SUPPORT_HPP
#define CHROMA_TESTS_SUPPORT_HPP

// Shared fixtures and independent oracles for the test suites. Everything in
// here must stay independent of the library's fast paths: ranks are computed
// on plain int matrices, Smith forms via minor gcds, matchings via random
// collapses.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "chroma/complex.hpp"
#include "chroma/graph.hpp"
#include "chroma/morse.hpp"

namespace chroma::testsupport {

// ---- independent linear algebra oracles --------------------------------

// Plain schoolbook elimination over GF(2), no bit packing.
inline int naive_gf2_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][c] % 2 == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] % 2 == 0) continue;
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + m[row][k]) % 2;
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Determinant-divisor Smith form for tiny matrices: D_k = gcd of all k x k
// minors, d_k = D_k / D_{k-1}. Exponential, use only for dims <= 5 or so.
inline std::vector<long long> minor_gcd_snf(const std::vector<std::vector<long long>>& m) {
    const int rows = int(m.size());
    const int cols = rows ? int(m[0].size()) : 0;

    auto det = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        const int k = int(rs.size());
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        long long sum = 0;
        do {
            // permutation sign by inversion count
            int inv = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) ++inv;
            long long prod = inv % 2 ? -1 : 1;
            for (int i = 0; i < k; ++i) prod *= m[rs[i]][cs[perm[i]]];
            sum += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return sum;
    };

    auto gcd_of_minors = [&](int k) {
        long long g = 0;
        std::vector<int> rs(k), cs(k);
        auto choose = [&](auto&& self, std::vector<int>& out, int from, int limit, int need,
                          auto&& then) -> void {
            if (need == 0) {
                then();
                return;
            }
            for (int i = from; i <= limit - need; ++i) {
                out[int(out.size()) - need] = i;
                self(self, out, i + 1, limit, need - 1, then);
            }
        };
        choose(choose, rs, 0, rows, k, [&] {
            choose(choose, cs, 0, cols, k, [&] { g = std::gcd(g, det(rs, cs)); });
        });
        return g < 0 ? -g : g;
    };

    std::vector<long long> factors;
    long long prev = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        long long dk = gcd_of_minors(k);
        if (dk == 0) break;
        factors.push_back(dk / prev);
        prev = dk;
    }
    return factors;
}

// ---- graphs and graph helpers -------------------------------------------

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

// Brute-force isomorphism for small graphs (<= 8 vertices).
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    const int n = a.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u; v < n; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Identity-on-labels isomorphism: label sets coincide and the label-matching
// bijection carries adjacency across.
inline bool labeled_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (!a.has_labels() || !b.has_labels()) return false;
    std::map<std::string, int> of_b;
    for (int v = 0; v < b.vertex_count(); ++v) {
        if (!of_b.emplace(b.label(v).to_string(), v).second) return false;
    }
    std::vector<int> to_b(a.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) {
        auto it = of_b.find(a.label(v).to_string());
        if (it == of_b.end()) return false;
        to_b[v] = it->second;
    }
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = u; v < a.vertex_count(); ++v)
            if (a.adjacent(u, v) != b.adjacent(to_b[u], to_b[v])) return false;
    return true;
}

inline Graph random_graph(std::mt19937_64& rng, int max_vertices, double edge_p, double loop_p) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n = nv(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        if (coin(rng) < loop_p) g.add_edge(u, u);
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < edge_p) g.add_edge(u, v);
    }
    return g;
}

// ---- fixture complexes ---------------------------------------------------

// Boundary of the (m-1)-simplex: homotopy S^{m-2}.
inline SimplicialComplex sphere_boundary(int m) {
    std::vector<Simplex> facets;
    for (int skip = 0; skip < m; ++skip) {
        std::vector<int> f;
        for (int v = 0; v < m; ++v)
            if (v != skip) f.push_back(v);
        facets.emplace_back(std::move(f));
    }
    return SimplicialComplex::from_facets(m, std::move(facets));
}

// Six-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2_complex() {
    const int faces[10][3] = {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                              {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
    std::vector<Simplex> facets;
    for (const auto& f : faces) facets.emplace_back(std::vector<int>{f[0], f[1], f[2]});
    return SimplicialComplex::from_facets(6, std::move(facets));
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> nf(1, 8);
    std::uniform_int_distribution<int> fs(1, std::min(n, 5));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Simplex> facets;
    const int count = nf(rng);
    for (int i = 0; i < count; ++i) {
        std::set<int> verts;
        const int size = fs(rng);
        while (int(verts.size()) < size) verts.insert(pick(rng));
        facets.emplace_back(std::vector<int>(verts.begin(), verts.end()));
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

// ---- random acyclic matchings --------------------------------------------

using MatchingMap = std::unordered_map<Simplex, MatchStatus, SimplexHash>;

// Random collapse: repeatedly match a free pair (a cell with exactly one
// remaining cofacet) and remove it; when stuck, remove a random maximal cell
// as critical. The collapse order makes the matching acyclic by construction.
inline MatchingMap random_collapse_matching(const SimplicialComplex& k, int top_dim,
                                            std::mt19937_64& rng) {
    SkeletonLevels levels = enumerate_simplices(k, top_dim);
    std::vector<Simplex> all;
    for (const auto& lvl : levels.by_dim)
        for (const Simplex& s : lvl) all.push_back(s);

    std::set<Simplex> remaining(all.begin(), all.end());
    MatchingMap matching;

    auto remaining_cofacets = [&](const Simplex& s) {
        std::vector<Simplex> out;
        for (int x = 0; x < k.vertex_count(); ++x) {
            if (s.contains_vertex(x)) continue;
            Simplex t = s.with_vertex(x);
            if (remaining.count(t)) out.push_back(std::move(t));
        }
        return out;
    };

    while (!remaining.empty()) {
        std::vector<std::pair<Simplex, Simplex>> free_pairs;
        for (const Simplex& s : remaining) {
            auto cof = remaining_cofacets(s);
            if (cof.size() == 1) free_pairs.emplace_back(s, cof[0]);
        }
        if (!free_pairs.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, free_pairs.size() - 1);
            auto [down, up] = free_pairs[pick(rng)];
            matching[down] = MatchStatus::up(up);
            matching[up] = MatchStatus::down(down);
            remaining.erase(down);
            remaining.erase(up);
            continue;
        }
        std::vector<Simplex> maximal;
        for (const Simplex& s : remaining)
            if (remaining_cofacets(s).empty()) maximal.push_back(s);
        std::uniform_int_distribution<std::size_t> pick(0, maximal.size() - 1);
        const Simplex& chosen = maximal[pick(rng)];
        matching[chosen] = MatchStatus::critical();
        remaining.erase(chosen);
    }
    return matching;
}

inline MatchingOracle oracle_from(const MatchingMap& map) {
    return [&map](const Simplex& s) {
        auto it = map.find(s);
        if (it == map.end()) throw std::logic_error("oracle queried off-map: " + s.to_string());
        return it->second;
    };
}

} // namespace chroma::testsupport

#endif
