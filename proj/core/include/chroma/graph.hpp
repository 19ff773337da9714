#ifndef CHROMA_GRAPH_HPP
#define CHROMA_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/bitrow.hpp"
#include "chroma/limits.hpp"

namespace chroma {

// Vertex labels carry the map-notation of exponential-graph vertices:
// Constant(x) prints as <x>, MapString(a_1..a_n) as the digit string
// a_1a_2...a_n (dot-separated when a value exceeds 9). Plain is free text.
enum class LabelKind { Plain, Constant, MapString };

struct VertexLabel {
    LabelKind kind = LabelKind::Plain;
    int color = 0;             // Constant
    std::vector<int> map;      // MapString; entries pairwise distinct
    std::string name;          // Plain

    static VertexLabel constant(int x);
    static VertexLabel map_string(std::vector<int> values);
    static VertexLabel plain(std::string text);

    std::string to_string() const;
    bool operator==(const VertexLabel&) const = default;
};

// Finite undirected graph with loops. Adjacency is stored as one bit row per
// vertex; the diagonal bit is the loop and is never dropped by constructions.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const BitRow& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).popcount(); }
    std::size_t edge_count() const;  // loops count once

    bool has_labels() const { return !labels_.empty(); }
    void set_label(int v, VertexLabel label);
    const VertexLabel& label(int v) const;

    // Copy without vertex u; remaining vertices are reindexed in order and
    // keep their labels.
    Graph remove_vertex(int u) const;

    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<BitRow> adj_;
    std::vector<VertexLabel> labels_;  // empty when unlabeled
};

// K_k: all distinct pairs adjacent, no loops. Rejects k = 0.
Graph complete_graph(int k);

// Categorical product: (g,h) ~ (g',h') iff g ~ g' and h ~ h'.
// Vertex (g,h) has id g*|V(H)|+h and a plain "(g,h)" label (1-indexed).
Graph categorical_product(const Graph& g, const Graph& h);

// Exponential graph H^G on all set maps V(G) -> V(H); f ~ f' iff every edge
// v ~ v' of G (loops included) has f(v) ~ f'(v') in H. Maps are labeled
// Constant / MapString / Plain by their image. Guards |V(H)|^|V(G)|.
Graph exponential_graph(const Graph& h, const Graph& g, const SizeLimits& limits = {});

// First fold (u removed, smallest u then smallest witness v with
// N(u) included in N(v)), or nullopt when the graph is fold-free.
std::optional<std::pair<Graph, int>> fold_step(const Graph& g);

// Iterate fold_step to a fold-free graph. Deterministic via the tie-break.
Graph fold_reduce(const Graph& g);

// The fold of K_m^{K_n} built directly: m constant maps plus all injective
// maps [n] -> [m] (none when m < n), f ~ g iff f(i) != g(j) for all i != j.
// Requires n, m >= 2.
Graph reduced_exponential(int n, int m, const SizeLimits& limits = {});

} // namespace chroma

#endif
