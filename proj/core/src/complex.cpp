#include "chroma/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace chroma {

Simplex::Simplex(std::vector<int> verts) : v(std::move(verts)) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] >= v[i + 1])
            throw std::invalid_argument("simplex vertices must be strictly increasing");
}

bool Simplex::contains_vertex(int x) const {
    return std::binary_search(v.begin(), v.end(), x);
}

Simplex Simplex::with_vertex(int x) const {
    Simplex out;
    out.v.reserve(v.size() + 1);
    auto pos = std::lower_bound(v.begin(), v.end(), x);
    if (pos != v.end() && *pos == x) throw std::invalid_argument("vertex already in simplex");
    out.v.insert(out.v.end(), v.begin(), pos);
    out.v.push_back(x);
    out.v.insert(out.v.end(), pos, v.end());
    return out;
}

Simplex Simplex::without_vertex(int x) const {
    auto pos = std::lower_bound(v.begin(), v.end(), x);
    if (pos == v.end() || *pos != x) throw std::invalid_argument("vertex not in simplex");
    Simplex out;
    out.v.reserve(v.size() - 1);
    out.v.insert(out.v.end(), v.begin(), pos);
    out.v.insert(out.v.end(), pos + 1, v.end());
    return out;
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i] + 1;
    }
    os << "}";
    return os.str();
}

std::vector<Simplex> facets_of(const Simplex& s) {
    if (s.dim() < 0) throw std::invalid_argument("the empty simplex has no facets");
    std::vector<Simplex> out;
    out.reserve(s.v.size());
    for (std::size_t drop = 0; drop < s.v.size(); ++drop) {
        Simplex f;
        f.v.reserve(s.v.size() - 1);
        for (std::size_t i = 0; i < s.v.size(); ++i)
            if (i != drop) f.v.push_back(s.v[i]);
        out.push_back(std::move(f));
    }
    return out;
}

BitRow common_neighbor_bits(const Graph& g, const Simplex& s) {
    BitRow acc = BitRow::all_set(g.vertex_count());
    for (int x : s.v) {
        g.check_vertex(x);
        acc &= g.neighbors(x);
    }
    return acc;
}

std::vector<int> common_neighbors(const Graph& g, const Simplex& s) {
    return common_neighbor_bits(g, s).to_vector();
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, std::vector<Simplex> facets) {
    SimplicialComplex k;
    k.vertex_count_ = vertex_count;
    k.backing_ = Backing::FacetList;
    // Drop duplicates and dominated facets.
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<BitRow> bits;
    for (const Simplex& f : facets) {
        BitRow b(vertex_count);
        for (int x : f.v) {
            if (x < 0 || x >= vertex_count) throw std::invalid_argument("facet vertex out of range");
            b.set(x);
        }
        bits.push_back(std::move(b));
    }
    std::vector<bool> keep(facets.size(), true);
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (i != j && keep[i] && keep[j] && bits[i].subset_of(bits[j]) && facets[i].v != facets[j].v) {
                keep[i] = false;
                break;
            }
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (!keep[i]) continue;
        k.facets_.push_back(std::move(facets[i]));
        k.facet_bits_.push_back(std::move(bits[i]));
    }
    return k;
}

SimplicialComplex SimplicialComplex::neighborhood(const Graph& g, Backing backing) {
    if (backing == Backing::Oracle) {
        SimplicialComplex k;
        k.vertex_count_ = g.vertex_count();
        k.backing_ = Backing::Oracle;
        k.graph_ = std::make_shared<Graph>(g);
        return k;
    }
    std::vector<Simplex> facets;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> nv = g.neighbors(v).to_vector();
        if (!nv.empty()) facets.emplace_back(std::move(nv));
    }
    return from_facets(g.vertex_count(), std::move(facets));
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (backing_ == Backing::Oracle) {
        if (s.dim() < 0) {
            for (int v = 0; v < graph_->vertex_count(); ++v)
                if (graph_->neighbors(v).any()) return true;
            return false;
        }
        return common_neighbor_bits(*graph_, s).any();
    }
    if (s.dim() < 0) return !facets_.empty();
    BitRow b(vertex_count_);
    for (int x : s.v) {
        if (x < 0 || x >= vertex_count_) return false;
        b.set(x);
    }
    for (const BitRow& f : facet_bits_)
        if (b.subset_of(f)) return true;
    return false;
}

std::vector<Simplex> SimplicialComplex::cofacets(const Simplex& s) const {
    if (!contains(s)) throw std::invalid_argument("cofacets of a non-member simplex");
    std::vector<Simplex> out;
    for (int x = 0; x < vertex_count_; ++x) {
        if (s.contains_vertex(x)) continue;
        Simplex t = s.with_vertex(x);
        if (contains(t)) out.push_back(std::move(t));
    }
    return out;
}

const std::vector<Simplex>& SimplicialComplex::facet_list() const {
    if (backing_ != Backing::FacetList)
        throw std::logic_error("facet_list on an oracle-backed complex");
    return facets_;
}

const Graph& SimplicialComplex::oracle_graph() const {
    if (backing_ != Backing::Oracle)
        throw std::logic_error("oracle_graph on a facet-backed complex");
    return *graph_;
}

std::string SimplicialComplex::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = vertex_count_;
    auto arr = nlohmann::ordered_json::array();
    for (const Simplex& f : facet_list()) {
        auto one = nlohmann::ordered_json::array();
        for (int x : f.v) one.push_back(x + 1);
        arr.push_back(std::move(one));
    }
    j["facets"] = std::move(arr);
    return j.dump();
}

std::size_t SkeletonLevels::total() const {
    std::size_t t = 0;
    for (const auto& lvl : by_dim) t += lvl.size();
    return t;
}

SkeletonLevels enumerate_simplices(const SimplicialComplex& k, int max_dim,
                                   const SizeLimits& limits) {
    SkeletonLevels out;
    out.max_dim = max_dim;
    if (max_dim < 0) return out;

    const bool oracle = k.backing() == SimplicialComplex::Backing::Oracle;
    const Graph* g = oracle ? &k.oracle_graph() : nullptr;

    std::size_t budget = limits.max_simplices;
    auto charge = [&](std::size_t n, int dim_reached) {
        if (n > budget)
            throw cap_exceeded("enumerate_simplices: simplex cap " +
                               std::to_string(limits.max_simplices) +
                               " exceeded at dimension " + std::to_string(dim_reached));
        budget -= n;
    };

    // Vertices. For neighborhood complexes these are the non-isolated ones.
    std::vector<Simplex> level;
    std::vector<BitRow> nbrs;  // oracle backing: running common-neighbor sets
    for (int v = 0; v < k.vertex_count(); ++v) {
        Simplex s(std::vector<int>{v});
        if (oracle) {
            const BitRow& row = g->neighbors(v);
            if (!row.any()) continue;
            level.push_back(std::move(s));
            nbrs.push_back(row);
        } else if (k.contains(s)) {
            level.push_back(std::move(s));
        }
    }
    charge(level.size(), 0);
    out.by_dim.push_back(level);

    for (int d = 1; d <= max_dim; ++d) {
        std::vector<Simplex> next;
        std::vector<BitRow> next_nbrs;

        // Extend parents [from, to) by larger vertices; the output stays in
        // parent order, so chunked workers concatenate deterministically.
        auto extend_range = [&](std::size_t from, std::size_t to, std::vector<Simplex>& out_s,
                                std::vector<BitRow>& out_n) {
            for (std::size_t i = from; i < to; ++i) {
                const Simplex& s = level[i];
                for (int v = s.v.back() + 1; v < k.vertex_count(); ++v) {
                    if (oracle) {
                        BitRow cn = nbrs[i];
                        cn &= g->neighbors(v);
                        if (!cn.any()) continue;
                        out_s.push_back(s.with_vertex(v));
                        out_n.push_back(std::move(cn));
                    } else {
                        Simplex t = s.with_vertex(v);
                        if (k.contains(t)) out_s.push_back(std::move(t));
                    }
                }
            }
        };

        const int workers = std::max(1, limits.threads);
        if (workers > 1 && level.size() >= 512) {
            std::vector<std::vector<Simplex>> part_s(workers);
            std::vector<std::vector<BitRow>> part_n(workers);
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) {
                std::size_t from = level.size() * w / workers;
                std::size_t to = level.size() * (w + 1) / workers;
                pool.emplace_back([&, w, from, to] { extend_range(from, to, part_s[w], part_n[w]); });
            }
            for (auto& t : pool) t.join();
            for (int w = 0; w < workers; ++w) {
                next.insert(next.end(), std::make_move_iterator(part_s[w].begin()),
                            std::make_move_iterator(part_s[w].end()));
                next_nbrs.insert(next_nbrs.end(), std::make_move_iterator(part_n[w].begin()),
                                 std::make_move_iterator(part_n[w].end()));
            }
        } else {
            extend_range(0, level.size(), next, next_nbrs);
        }

        charge(next.size(), d);
        out.by_dim.push_back(next);
        level = std::move(next);
        nbrs = std::move(next_nbrs);
        if (level.empty()) break;  // nothing above this dimension
    }
    while (int(out.by_dim.size()) <= max_dim) out.by_dim.emplace_back();
    return out;
}

std::string skeleton_to_json(const SkeletonLevels& levels, int vertex_count) {
    nlohmann::ordered_json j;
    j["vertices"] = vertex_count;
    j["max_dim"] = levels.max_dim;
    auto dims = nlohmann::ordered_json::array();
    for (const auto& lvl : levels.by_dim) {
        auto one = nlohmann::ordered_json::array();
        for (const Simplex& s : lvl) {
            auto sv = nlohmann::ordered_json::array();
            for (int x : s.v) sv.push_back(x + 1);
            one.push_back(std::move(sv));
        }
        dims.push_back(std::move(one));
    }
    j["skeleton"] = std::move(dims);
    return j.dump();
}

} // namespace chroma
