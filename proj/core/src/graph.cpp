#include "chroma/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chroma {

VertexLabel VertexLabel::constant(int x) {
    if (x < 1) throw std::invalid_argument("constant label color must be >= 1");
    VertexLabel l;
    l.kind = LabelKind::Constant;
    l.color = x;
    return l;
}

VertexLabel VertexLabel::map_string(std::vector<int> values) {
    std::set<int> seen(values.begin(), values.end());
    if (seen.size() != values.size())
        throw std::invalid_argument("map-string label entries must be pairwise distinct");
    for (int v : values)
        if (v < 1) throw std::invalid_argument("map-string label entries must be >= 1");
    VertexLabel l;
    l.kind = LabelKind::MapString;
    l.map = std::move(values);
    return l;
}

VertexLabel VertexLabel::plain(std::string text) {
    VertexLabel l;
    l.kind = LabelKind::Plain;
    l.name = std::move(text);
    return l;
}

std::string VertexLabel::to_string() const {
    switch (kind) {
    case LabelKind::Constant:
        return "<" + std::to_string(color) + ">";
    case LabelKind::MapString: {
        bool wide = false;
        for (int v : map)
            if (v > 9) wide = true;
        std::ostringstream os;
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (wide && i) os << '.';
            os << map[i];
        }
        return os.str();
    }
    case LabelKind::Plain:
        return name;
    }
    return {};
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(n_, BitRow(n_));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].set(v);
    adj_[v].set(u);
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
}

const BitRow& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0, loops = 0;
    for (int v = 0; v < n_; ++v) {
        twice += std::size_t(adj_[v].popcount());
        if (adj_[v].test(v)) ++loops;
    }
    return (twice - loops) / 2 + loops;
}

void Graph::set_label(int v, VertexLabel label) {
    check_vertex(v);
    if (labels_.empty()) labels_.assign(n_, VertexLabel{});
    labels_[v] = std::move(label);
}

const VertexLabel& Graph::label(int v) const {
    check_vertex(v);
    if (labels_.empty()) throw std::logic_error("graph has no labels");
    return labels_[v];
}

Graph Graph::remove_vertex(int u) const {
    check_vertex(u);
    Graph out(n_ - 1);
    auto new_id = [u](int v) { return v < u ? v : v - 1; };
    for (int v = 0; v < n_; ++v) {
        if (v == u) continue;
        for (int w = adj_[v].find_first(); w >= 0; w = adj_[v].find_next(w)) {
            if (w == u || w < v) continue;
            out.add_edge(new_id(v), new_id(w));
        }
    }
    if (!labels_.empty()) {
        for (int v = 0; v < n_; ++v)
            if (v != u) out.set_label(new_id(v), labels_[v]);
    }
    return out;
}

Graph complete_graph(int k) {
    if (k < 1) throw std::invalid_argument("complete_graph requires k >= 1");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph categorical_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng * nh);
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nh; ++x) {
            out.set_label(a * nh + x,
                          VertexLabel::plain("(" + std::to_string(a + 1) + "," + std::to_string(x + 1) + ")"));
            for (int b = 0; b < ng; ++b) {
                if (!g.adjacent(a, b)) continue;
                for (int y = 0; y < nh; ++y)
                    if (h.adjacent(x, y)) out.add_edge(a * nh + x, b * nh + y);
            }
        }
    return out;
}

namespace {

VertexLabel label_for_map(const std::vector<int>& f) {
    std::set<int> image(f.begin(), f.end());
    if (image.size() == 1) return VertexLabel::constant(f[0] + 1);
    if (image.size() == f.size()) {
        std::vector<int> vals(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) vals[i] = f[i] + 1;
        return VertexLabel::map_string(std::move(vals));
    }
    std::ostringstream os;
    bool wide = false;
    for (int v : f)
        if (v + 1 > 9) wide = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (wide && i) os << '.';
        os << f[i] + 1;
    }
    return VertexLabel::plain(os.str());
}

} // namespace

Graph exponential_graph(const Graph& h, const Graph& g, const SizeLimits& limits) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng == 0 || nh == 0) throw std::invalid_argument("exponential_graph requires nonempty graphs");

    std::uint64_t count = 1;
    for (int i = 0; i < ng; ++i) {
        count *= std::uint64_t(nh);
        if (count > limits.max_vertices)
            throw cap_exceeded("exponential_graph: |V(H)|^|V(G)| exceeds vertex cap " +
                               std::to_string(limits.max_vertices));
    }

    // Map ids are mixed radix with f(v0) most significant, so the id order is
    // the lexicographic order of the value strings.
    const int total = int(count);
    std::vector<std::vector<int>> maps(total, std::vector<int>(ng));
    for (int id = 0; id < total; ++id) {
        int rem = id;
        for (int i = ng - 1; i >= 0; --i) {
            maps[id][i] = rem % nh;
            rem /= nh;
        }
    }

    std::vector<std::pair<int, int>> edges;  // unordered, u <= v, loops included
    for (int u = 0; u < ng; ++u)
        for (int v = u; v < ng; ++v)
            if (g.adjacent(u, v)) edges.emplace_back(u, v);

    Graph out(total);
    for (int id = 0; id < total; ++id) out.set_label(id, label_for_map(maps[id]));

    for (int a = 0; a < total; ++a)
        for (int b = a; b < total; ++b) {
            bool ok = true;
            for (const auto& [u, v] : edges) {
                if (!h.adjacent(maps[a][u], maps[b][v]) || !h.adjacent(maps[a][v], maps[b][u])) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.add_edge(a, b);
        }
    return out;
}

std::optional<std::pair<Graph, int>> fold_step(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            if (g.neighbors(u).subset_of(g.neighbors(v)))
                return std::make_pair(g.remove_vertex(u), u);
        }
    return std::nullopt;
}

Graph fold_reduce(const Graph& g) {
    Graph cur = g;
    while (auto step = fold_step(cur)) cur = std::move(step->first);
    return cur;
}

Graph reduced_exponential(int n, int m, const SizeLimits& limits) {
    if (n < 2 || m < 2) throw std::invalid_argument("reduced_exponential requires n, m >= 2");

    std::uint64_t injective = 0;
    if (m >= n) {
        injective = 1;
        for (int i = 0; i < n; ++i) injective *= std::uint64_t(m - i);
    }
    if (std::uint64_t(m) + injective > limits.max_vertices)
        throw cap_exceeded("reduced_exponential: vertex count exceeds cap " +
                           std::to_string(limits.max_vertices));

    // Vertices: constants <1>..<m> first, then injective maps in lex order.
    // values[v][i] is the color (1-based) the map v assigns to coordinate i.
    std::vector<std::vector<int>> values;
    values.reserve(std::size_t(m) + injective);
    for (int x = 1; x <= m; ++x) values.emplace_back(std::vector<int>(n, x));
    if (m >= n) {
        std::vector<int> f(n, 0);
        std::vector<bool> used(m + 1, false);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                values.push_back(f);
                return;
            }
            for (int x = 1; x <= m; ++x) {
                if (used[x]) continue;
                used[x] = true;
                f[i] = x;
                self(self, i + 1);
                used[x] = false;
            }
        };
        rec(rec, 0);
    }

    const int total = int(values.size());
    Graph out(total);
    for (int v = 0; v < total; ++v) {
        if (v < m) out.set_label(v, VertexLabel::constant(v + 1));
        else out.set_label(v, VertexLabel::map_string(values[v]));
    }

    for (int a = 0; a < total; ++a)
        for (int b = a; b < total; ++b) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && values[a][i] == values[b][j]) {
                        ok = false;
                        break;
                    }
            if (ok) out.add_edge(a, b);
        }
    return out;
}

} // namespace chroma
