#ifndef CHROMA_COMPLEX_HPP
#define CHROMA_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/limits.hpp"

namespace chroma {

// A simplex is a strictly increasing list of vertex ids. The empty simplex
// (dimension -1) is representable and sits at the bottom of the face poset.
struct Simplex {
    std::vector<int> v;

    Simplex() = default;
    explicit Simplex(std::vector<int> verts);
    static Simplex empty() { return Simplex{}; }

    int dim() const { return int(v.size()) - 1; }
    bool contains_vertex(int x) const;
    Simplex with_vertex(int x) const;
    Simplex without_vertex(int x) const;

    // 1-indexed presentation, e.g. {1,3,4}.
    std::string to_string() const;

    auto operator<=>(const Simplex&) const = default;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : s.v) {
            h ^= std::size_t(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Codimension-1 faces in the order obtained by deleting positions 0,1,2,...
std::vector<Simplex> facets_of(const Simplex& s);

// Common neighbors of a vertex set: { x : x ~ a for all a in S }.
// The empty set has every vertex as a common neighbor.
BitRow common_neighbor_bits(const Graph& g, const Simplex& s);
std::vector<int> common_neighbors(const Graph& g, const Simplex& s);

// Abstract simplicial complex with two interchangeable backings:
//  - FacetList: explicit maximal faces; membership is subset-of-a-facet.
//  - Oracle: a graph whose common-neighbor test answers membership, i.e. the
//    neighborhood complex without ever materializing its (possibly 2^28-face)
//    facet power sets.
class SimplicialComplex {
public:
    enum class Backing { FacetList, Oracle };

    static SimplicialComplex from_facets(int vertex_count, std::vector<Simplex> facets);
    static SimplicialComplex neighborhood(const Graph& g, Backing backing = Backing::FacetList);

    int vertex_count() const { return vertex_count_; }
    Backing backing() const { return backing_; }

    // Membership. The empty simplex is a member whenever the complex has any
    // vertex at all.
    bool contains(const Simplex& s) const;

    // All cofaces of codimension 1, in ascending order of the added vertex.
    // Rejects non-members (the empty simplex is allowed and yields the
    // 0-simplices).
    std::vector<Simplex> cofacets(const Simplex& s) const;

    const std::vector<Simplex>& facet_list() const;     // FacetList backing only
    const Graph& oracle_graph() const;                  // Oracle backing only

    // FacetList export: {"vertices": N, "facets": [[1-indexed ids]...]}.
    std::string to_json() const;

private:
    SimplicialComplex() = default;

    int vertex_count_ = 0;
    Backing backing_ = Backing::FacetList;
    std::vector<Simplex> facets_;
    std::vector<BitRow> facet_bits_;
    std::shared_ptr<const Graph> graph_;
};

// All simplices of dimension <= max_dim, grouped by dimension and sorted
// lexicographically within each group.
struct SkeletonLevels {
    int max_dim = -1;
    std::vector<std::vector<Simplex>> by_dim;  // by_dim[d] holds the d-simplices

    std::size_t total() const;
    long long count(int d) const {
        return d >= 0 && d < int(by_dim.size()) ? (long long)by_dim[d].size() : 0;
    }
};

// Fails with cap_exceeded (naming the dimension reached) rather than
// returning a truncated enumeration.
SkeletonLevels enumerate_simplices(const SimplicialComplex& k, int max_dim,
                                   const SizeLimits& limits = {});

// Oracle-backed export: enumerated skeleton with the dimension cap recorded.
std::string skeleton_to_json(const SkeletonLevels& levels, int vertex_count);

} // namespace chroma

#endif
