#include <doctest.h>

#include <random>

#include "chroma/morse.hpp"
#include "support.hpp"

using namespace chroma;
using namespace chroma::testsupport;

namespace {

// Every cell avoiding the apex pairs with its cone; only {apex} survives.
MatchingMap cone_matching(const SimplicialComplex& k, int apex, int top_dim) {
    MatchingMap map;
    SkeletonLevels levels = enumerate_simplices(k, top_dim);
    for (const auto& lvl : levels.by_dim)
        for (const Simplex& s : lvl) {
            if (s.contains_vertex(apex)) {
                Simplex down = s.without_vertex(apex);
                if (down.dim() >= 0) map[s] = MatchStatus::down(down);
                else map[s] = MatchStatus::critical();
            } else {
                map[s] = MatchStatus::up(s.with_vertex(apex));
            }
        }
    return map;
}

MatchingOracle all_critical() {
    return [](const Simplex&) { return MatchStatus::critical(); };
}

SimplicialComplex full_triangle() {
    return SimplicialComplex::from_facets(3, {Simplex(std::vector<int>{0, 1, 2})});
}

} // namespace

TEST_CASE("verify_matching") {
    SimplicialComplex k = full_triangle();

    SUBCASE("cone matching is valid") {
        MatchingMap map = cone_matching(k, 0, 2);
        CHECK(verify_matching(k, oracle_from(map), 2).ok);
    }

    SUBCASE("two cells mapped to one partner fail with a witness") {
        MatchingMap map = cone_matching(k, 0, 2);
        // {1} and {2} both claim {1,2}; the involution breaks.
        map[Simplex(std::vector<int>{1})] = MatchStatus::up(Simplex(std::vector<int>{1, 2}));
        map[Simplex(std::vector<int>{2})] = MatchStatus::up(Simplex(std::vector<int>{1, 2}));
        map[Simplex(std::vector<int>{1, 2})] = MatchStatus::down(Simplex(std::vector<int>{1}));
        CheckResult r = verify_matching(k, oracle_from(map), 2);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.witness.empty());
    }

    SUBCASE("non-facet partner fails") {
        MatchingMap map = cone_matching(k, 0, 2);
        map[Simplex(std::vector<int>{1})] = MatchStatus::up(Simplex(std::vector<int>{0, 1, 2}));
        CheckResult r = verify_matching(k, oracle_from(map), 2);
        CHECK_FALSE(r.ok);
        CHECK(r.message.find("cofacet") != std::string::npos);
    }
}

TEST_CASE("verify_acyclic") {
    SUBCASE("empty matching passes") {
        CHECK(verify_acyclic(sphere_boundary(4), all_critical(), 2).ok);
    }

    SUBCASE("cyclic pairing around a square fails with the 4-cycle") {
        SimplicialComplex k = SimplicialComplex::from_facets(
            4, {Simplex(std::vector<int>{0, 1}), Simplex(std::vector<int>{1, 2}),
                Simplex(std::vector<int>{2, 3}), Simplex(std::vector<int>{0, 3})});
        MatchingMap map;
        auto pair_up = [&](std::vector<int> v, std::vector<int> e) {
            map[Simplex(v)] = MatchStatus::up(Simplex(e));
            map[Simplex(e)] = MatchStatus::down(Simplex(v));
        };
        pair_up({0}, {0, 1});
        pair_up({1}, {1, 2});
        pair_up({2}, {2, 3});
        pair_up({3}, {0, 3});
        CHECK(verify_matching(k, oracle_from(map), 1).ok);
        CheckResult r = verify_acyclic(k, oracle_from(map), 1);
        CHECK_FALSE(r.ok);
        CHECK(r.witness.size() == 8);  // 4 matched pairs around the cycle
    }

    SUBCASE("cone matching is acyclic") {
        SimplicialComplex k = full_triangle();
        MatchingMap map = cone_matching(k, 0, 2);
        CHECK(verify_acyclic(k, oracle_from(map), 2).ok);
    }
}

TEST_CASE("critical cell scans") {
    SUBCASE("empty matching leaves every cell critical") {
        auto crit = critical_cells_scan(sphere_boundary(3), all_critical(), 1);
        CHECK(crit[0].size() == 3);
        CHECK(crit[1].size() == 3);
    }
    SUBCASE("cone matching leaves one critical vertex") {
        SimplicialComplex k = full_triangle();
        MatchingMap map = cone_matching(k, 0, 2);
        auto crit = critical_cells_scan(k, oracle_from(map), 2);
        CHECK(crit[0].size() == 1);
        CHECK(crit[0][0].v == std::vector<int>{0});
        CHECK(crit[1].empty());
        CHECK(crit[2].empty());
    }
}

TEST_CASE("alternating paths") {
    SUBCASE("direct incidence is the single t=0 path") {
        SimplicialComplex k = sphere_boundary(3);
        auto paths = alternating_paths(k, all_critical(), Simplex(std::vector<int>{0, 1}),
                                       Simplex(std::vector<int>{1}));
        REQUIRE(paths.size() == 1);
        CHECK(paths[0].length() == 0);
        CHECK(paths[0].from.v == std::vector<int>{0, 1});
        CHECK(paths[0].to.v == std::vector<int>{1});
    }

    SUBCASE("path cap fails loudly") {
        SizeLimits tight;
        tight.max_paths = 1;
        SimplicialComplex k = sphere_boundary(3);
        CHECK_THROWS_AS(
            alternating_paths_from(k, all_critical(), Simplex(std::vector<int>{0, 1}), tight),
            cap_exceeded);
    }

    SUBCASE("source must be critical") {
        SimplicialComplex k = full_triangle();
        MatchingMap map = cone_matching(k, 0, 2);
        CHECK_THROWS_AS(
            alternating_paths_from(k, oracle_from(map), Simplex(std::vector<int>{1, 2})),
            std::invalid_argument);
    }
}

TEST_CASE("empty matching reproduces the simplicial boundary") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex k = random_complex(rng, 7);
        SkeletonLevels levels = enumerate_simplices(k, 7);
        int top = -1;
        for (int d = 0; d < int(levels.by_dim.size()); ++d)
            if (levels.count(d) > 0) top = d;
        if (top < 1) continue;
        auto crit = critical_cells_scan(k, all_critical(), top);
        auto morse = morse_boundary_gf2(k, all_critical(), crit);
        for (int i = 1; i <= top; ++i) {
            Gf2Matrix simplicial = boundary_matrix_gf2(levels, i, false);
            REQUIRE(morse[i].rows() == simplicial.rows());
            REQUIRE(morse[i].cols() == simplicial.cols());
            for (int r = 0; r < simplicial.rows(); ++r) CHECK(morse[i].row(r) == simplicial.row(r));
        }
    }
}

TEST_CASE("cone matching computes a point") {
    SimplicialComplex k = full_triangle();
    MatchingMap map = cone_matching(k, 0, 2);
    BettiTable b = morse_betti_gf2(k, oracle_from(map), 2);
    CHECK(b.betti == std::vector<long long>{1, 0, 0});
}

TEST_CASE("random collapse matchings: morse equals simplicial homology") {
    std::mt19937_64 rng(2024);
    int ran = 0;
    for (int trial = 0; trial < 60; ++trial) {
        SimplicialComplex k = random_complex(rng, 9);
        SkeletonLevels levels = enumerate_simplices(k, 9);
        int top = -1;
        for (int d = 0; d < int(levels.by_dim.size()); ++d)
            if (levels.count(d) > 0) top = d;
        if (top < 0) continue;
        MatchingMap map = random_collapse_matching(k, top, rng);
        MatchingOracle oracle = oracle_from(map);
        REQUIRE(verify_matching(k, oracle, top).ok);
        REQUIRE(verify_acyclic(k, oracle, top).ok);

        BettiTable simplicial = betti_gf2(levels, top, false);
        BettiTable morse = morse_betti_gf2(k, oracle, top);
        CAPTURE(trial);
        CHECK(morse.betti == simplicial.betti);

        // Euler conservation: matched pairs cancel.
        long long chi_cells = 0, chi_crit = 0;
        auto crit = critical_cells_scan(k, oracle, top);
        for (int d = 0; d <= top; ++d) {
            chi_cells += (d % 2 == 0 ? 1 : -1) * levels.count(d);
            chi_crit += (d % 2 == 0 ? 1 : -1) * (long long)crit[d].size();
        }
        CHECK(chi_cells == chi_crit);
        ++ran;
    }
    CHECK(ran >= 50);
}

TEST_CASE("memoized path parity agrees with full enumeration") {
    std::mt19937_64 rng(7777);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex k = random_complex(rng, 8);
        SkeletonLevels levels = enumerate_simplices(k, 8);
        int top = -1;
        for (int d = 0; d < int(levels.by_dim.size()); ++d)
            if (levels.count(d) > 0) top = d;
        if (top < 1) continue;
        MatchingMap map = random_collapse_matching(k, top, rng);
        MatchingOracle oracle = oracle_from(map);
        auto crit = critical_cells_scan(k, oracle, top);
        for (int d = 1; d <= top; ++d)
            for (const Simplex& tau : crit[d])
                for (const Simplex& sigma : crit[d - 1]) {
                    bool enumerated = alternating_paths(k, oracle, tau, sigma).size() % 2 == 1;
                    CHECK(alternating_path_parity(k, oracle, tau, sigma) == enumerated);
                }
    }
}

TEST_CASE("signed morse boundaries square to zero and reduce to the parity matrices") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        SimplicialComplex k = random_complex(rng, 8);
        SkeletonLevels levels = enumerate_simplices(k, 8);
        int top = -1;
        for (int d = 0; d < int(levels.by_dim.size()); ++d)
            if (levels.count(d) > 0) top = d;
        if (top < 1) continue;
        MatchingMap map = random_collapse_matching(k, top, rng);
        MatchingOracle oracle = oracle_from(map);
        auto crit = critical_cells_scan(k, oracle, top);
        auto signed_b = morse_boundary_signed(k, oracle, crit);
        auto parity_b = morse_boundary_gf2(k, oracle, crit);

        for (int i = 1; i <= top; ++i) {
            REQUIRE(signed_b[i].rows() == parity_b[i].rows());
            for (int r = 0; r < signed_b[i].rows(); ++r)
                for (int c = 0; c < signed_b[i].cols(); ++c) {
                    bool odd = signed_b[i].at(r, c) % 2 != 0;
                    CHECK(odd == parity_b[i].get(r, c));
                }
        }
        for (int i = 1; i + 1 <= top; ++i) {
            const IntMatrix& hi = signed_b[i + 1];
            const IntMatrix& lo = signed_b[i];
            for (int r = 0; r < hi.rows(); ++r)
                for (int c = 0; c < lo.cols(); ++c) {
                    BigInt sum = 0;
                    for (int y = 0; y < hi.cols(); ++y) sum += hi.at(r, y) * lo.at(y, c);
                    CHECK(sum == 0);
                }
        }
    }
}

TEST_CASE("morse report json shape") {
    SimplicialComplex k = full_triangle();
    MatchingMap map = cone_matching(k, 0, 2);
    std::string report = morse_report_json(k, oracle_from(map), 2);
    CHECK(report.find("\"critical\":{\"0\":1,\"1\":0,\"2\":0}") != std::string::npos);
    CHECK(report.find("\"acyclic\":true") != std::string::npos);
    CHECK(report.find("\"witness\":null") != std::string::npos);
}
