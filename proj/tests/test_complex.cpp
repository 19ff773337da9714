#include <doctest.h>

#include <random>

#include "chroma/coloring.hpp"
#include "chroma/complex.hpp"
#include "support.hpp"

using namespace chroma;
using namespace chroma::testsupport;

TEST_CASE("simplex basics") {
    Simplex s(std::vector<int>{0, 1, 2});
    CHECK(s.dim() == 2);
    CHECK(Simplex::empty().dim() == -1);
    CHECK_THROWS_AS(Simplex(std::vector<int>{1, 1}), std::invalid_argument);

    SUBCASE("facets in position order") {
        auto f = facets_of(s);
        REQUIRE(f.size() == 3);
        CHECK(f[0].v == std::vector<int>{1, 2});
        CHECK(f[1].v == std::vector<int>{0, 2});
        CHECK(f[2].v == std::vector<int>{0, 1});
    }
    SUBCASE("vertex facet is the empty simplex") {
        auto f = facets_of(Simplex(std::vector<int>{4}));
        REQUIRE(f.size() == 1);
        CHECK(f[0].dim() == -1);
    }
    SUBCASE("pair") {
        auto f = facets_of(Simplex(std::vector<int>{1, 6}));
        CHECK(f[0].v == std::vector<int>{6});
        CHECK(f[1].v == std::vector<int>{1});
    }
}

TEST_CASE("common neighbors") {
    Graph k3 = complete_graph(3);
    CHECK(common_neighbors(k3, Simplex(std::vector<int>{0, 1})) == std::vector<int>{2});
    CHECK(common_neighbors(k3, Simplex::empty()) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(common_neighbors(k3, Simplex(std::vector<int>{5})), std::invalid_argument);

    SUBCASE("reduced exponential example: {<1>,<2>} in (3,4)") {
        Graph g = reduced_exponential(3, 4);
        CHECK(g.vertex_count() == 28);
        auto cn = common_neighbors(g, Simplex(std::vector<int>{0, 1}));
        CHECK(cn == std::vector<int>{2, 3});  // exactly <3>, <4>
    }
}

TEST_CASE("neighborhood complexes") {
    SUBCASE("N(K_3) is the triangle boundary") {
        SimplicialComplex k = SimplicialComplex::neighborhood(complete_graph(3));
        REQUIRE(k.facet_list().size() == 3);
        CHECK(k.contains(Simplex(std::vector<int>{0, 1})));
        CHECK_FALSE(k.contains(Simplex(std::vector<int>{0, 1, 2})));
    }

    SUBCASE("N(C_4) has facets {1,3} and {2,4}") {
        SimplicialComplex k = SimplicialComplex::neighborhood(cycle_graph(4));
        REQUIRE(k.facet_list().size() == 2);
        CHECK(k.facet_list()[0].v == std::vector<int>{0, 2});
        CHECK(k.facet_list()[1].v == std::vector<int>{1, 3});
    }

    SUBCASE("constants-only reduced graph gives the simplex boundary") {
        Graph g = reduced_exponential(5, 4);  // m < n: K_4 on constants
        SimplicialComplex k = SimplicialComplex::neighborhood(g);
        CHECK(k.facet_list().size() == 4);
        for (const Simplex& f : k.facet_list()) CHECK(f.dim() == 2);
    }

    SUBCASE("edgeless graph yields the empty complex") {
        Graph g(3);
        SimplicialComplex k = SimplicialComplex::neighborhood(g);
        CHECK(enumerate_simplices(k, 2).total() == 0);
        SimplicialComplex o = SimplicialComplex::neighborhood(g, SimplicialComplex::Backing::Oracle);
        CHECK(enumerate_simplices(o, 2).total() == 0);
    }
}

TEST_CASE("oracle and facet backings agree on small subsets") {
    std::mt19937_64 rng(11);
    std::vector<Graph> corpus;
    for (int t = 0; t < 6; ++t) corpus.push_back(random_graph(rng, 9, 0.4, 0.2));
    corpus.push_back(reduced_exponential(3, 4));  // 28 vertices
    corpus.push_back(cycle_graph(7));

    for (const Graph& g : corpus) {
        SimplicialComplex facet = SimplicialComplex::neighborhood(g);
        SimplicialComplex oracle = SimplicialComplex::neighborhood(g, SimplicialComplex::Backing::Oracle);
        const int n = g.vertex_count();
        // all subsets of size <= 4 when n is small, sampled otherwise
        std::vector<Simplex> probes;
        if (n <= 12) {
            for (int mask = 1; mask < (1 << n); ++mask) {
                if (__builtin_popcount(unsigned(mask)) > 4) continue;
                std::vector<int> verts;
                for (int v = 0; v < n; ++v)
                    if (mask & (1 << v)) verts.push_back(v);
                probes.emplace_back(std::move(verts));
            }
        } else {
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int t = 0; t < 4000; ++t) {
                std::set<int> verts;
                int size = 1 + int(rng() % 4);
                while (int(verts.size()) < size) verts.insert(pick(rng));
                probes.emplace_back(std::vector<int>(verts.begin(), verts.end()));
            }
        }
        for (const Simplex& s : probes) CHECK(facet.contains(s) == oracle.contains(s));
    }
}

TEST_CASE("enumerate_simplices") {
    SUBCASE("triangle boundary skeleton") {
        SkeletonLevels levels = enumerate_simplices(sphere_boundary(3), 1);
        CHECK(levels.count(0) == 3);
        CHECK(levels.count(1) == 3);
    }

    SUBCASE("vertices of N(reduced_exponential(3,4))") {
        Graph g = reduced_exponential(3, 4);
        SimplicialComplex k = SimplicialComplex::neighborhood(g, SimplicialComplex::Backing::Oracle);
        SkeletonLevels levels = enumerate_simplices(k, 0);
        CHECK(levels.count(0) == 28);
    }

    SUBCASE("max_dim = -1 gives the empty grouping") {
        SkeletonLevels levels = enumerate_simplices(sphere_boundary(3), -1);
        CHECK(levels.by_dim.empty());
        CHECK(levels.total() == 0);
    }

    SUBCASE("0-simplices are the non-isolated vertices") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 8; ++t) {
            Graph g = random_graph(rng, 10, 0.3, 0.2);
            int non_isolated = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.neighbors(v).any()) ++non_isolated;
            SimplicialComplex k =
                SimplicialComplex::neighborhood(g, SimplicialComplex::Backing::Oracle);
            CHECK(enumerate_simplices(k, 0).count(0) == non_isolated);
        }
    }

    SUBCASE("cap exceeded fails loudly") {
        SizeLimits tight;
        tight.max_simplices = 10;
        Graph g = reduced_exponential(3, 4);
        SimplicialComplex k = SimplicialComplex::neighborhood(g, SimplicialComplex::Backing::Oracle);
        CHECK_THROWS_AS(enumerate_simplices(k, 2, tight), cap_exceeded);
    }

    SUBCASE("lexicographic order within each dimension") {
        SkeletonLevels levels = enumerate_simplices(rp2_complex(), 2);
        for (const auto& lvl : levels.by_dim) CHECK(std::is_sorted(lvl.begin(), lvl.end()));
    }

    SUBCASE("worker count does not change the enumeration") {
        Graph g = reduced_exponential(3, 4);
        SimplicialComplex k = SimplicialComplex::neighborhood(g, SimplicialComplex::Backing::Oracle);
        SizeLimits three;
        three.threads = 3;
        SkeletonLevels serial = enumerate_simplices(k, 4);
        SkeletonLevels pooled = enumerate_simplices(k, 4, three);
        REQUIRE(serial.by_dim.size() == pooled.by_dim.size());
        for (std::size_t d = 0; d < serial.by_dim.size(); ++d)
            CHECK(serial.by_dim[d] == pooled.by_dim[d]);
    }
}

TEST_CASE("cofacets") {
    SimplicialComplex k = sphere_boundary(3);
    SUBCASE("of a vertex") {
        auto c = k.cofacets(Simplex(std::vector<int>{0}));
        REQUIRE(c.size() == 2);
        CHECK(c[0].v == std::vector<int>{0, 1});
        CHECK(c[1].v == std::vector<int>{0, 2});
    }
    SUBCASE("of a facet: none") {
        SimplicialComplex c4 = SimplicialComplex::neighborhood(cycle_graph(4));
        CHECK(c4.cofacets(Simplex(std::vector<int>{0, 2})).empty());
    }
    SUBCASE("of the empty simplex: all vertices") {
        CHECK(k.cofacets(Simplex::empty()).size() == 3);
    }
    SUBCASE("non-member rejected") {
        CHECK_THROWS_AS(k.cofacets(Simplex(std::vector<int>{0, 1, 2})), std::invalid_argument);
    }
}

TEST_CASE("A_i criterion agrees with the common-neighbor test") {
    // Membership via nonempty A_i sets must match the authoritative scan on
    // reduced exponential graphs.
    std::mt19937_64 rng(23);
    for (auto [n, m] : {std::pair{3, 4}, {3, 5}, {2, 3}, {4, 5}}) {
        ColoringContext ctx(n, m);
        const Graph& g = ctx.graph();
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        for (int trial = 0; trial < 3000; ++trial) {
            std::set<int> verts;
            int size = 1 + int(rng() % 5);
            while (int(verts.size()) < size) verts.insert(pick(rng));
            Simplex s(std::vector<int>(verts.begin(), verts.end()));
            CellStats stats = cell_stats(ctx, s);
            bool all_nonempty = true;
            for (const auto& a : stats.a)
                if (a.empty()) all_nonempty = false;
            CHECK(is_simplex(ctx, s) == all_nonempty);
        }
    }
}

TEST_CASE("complex JSON export") {
    SimplicialComplex k = SimplicialComplex::neighborhood(cycle_graph(4));
    CHECK(k.to_json() == R"({"vertices":4,"facets":[[1,3],[2,4]]})");
    SkeletonLevels levels = enumerate_simplices(k, 1);
    CHECK(skeleton_to_json(levels, 4) ==
          R"({"vertices":4,"max_dim":1,"skeleton":[[[1],[2],[3],[4]],[[1,3],[2,4]]]})");
}
