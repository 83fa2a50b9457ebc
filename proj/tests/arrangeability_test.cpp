#include <catch2/catch_amalgamated.hpp>

#include "sigmacol/arrangeability.hpp"
#include "sigmacol/families.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace sigmacol;
using fixtures::complete;
using fixtures::cycle;
using fixtures::edgeless;
using fixtures::path;
using fixtures::star;

TEST_CASE("arrangeability of a given ordering") {
    CHECK(arrangeability_of_ordering(edgeless(4), Ordering::identity(4)).k == 0);

    // star: with the center first no leaf has a later co-neighbor, so k = 0;
    // with the center last every leaf sees the earlier leaves through it
    Graph k13 = star(3);
    Ordering center_first = Ordering::identity(4);
    CHECK(arrangeability_of_ordering(k13, center_first).k == 0);
    CHECK(arrangeability_of_ordering(k13, center_first).k ==
          oracles::arr_of_perm(k13, center_first.perm()));
    Ordering center_last({1, 2, 3, 0});
    CHECK(arrangeability_of_ordering(k13, center_last).k == 2);
    CHECK(arrangeability_of_ordering(k13, center_last).k ==
          oracles::arr_of_perm(k13, center_last.perm()));

    SECTION("matches the definitional oracle on random orderings") {
        for (std::uint64_t seed = 1; seed < 8; ++seed) {
            auto g = gen_random_instance(9, 0.45, 0, seed).graph;
            Rng rng(seed);
            std::vector<int> perm(9);
            for (int i = 0; i < 9; ++i) perm[i] = i;
            for (int i = 8; i > 0; --i) std::swap(perm[i], perm[rng.range(0, i)]);
            CHECK(arrangeability_of_ordering(g, Ordering(perm)).k ==
                  oracles::arr_of_perm(g, perm));
        }
    }
}

TEST_CASE("exact arrangeability on frozen instances") {
    // values frozen from exhaustive enumeration over all orderings
    CHECK(oracles::brute_arrangeability(path(4)) == 0);
    CHECK(arrangeability_exact(path(4)).k == 0);
    CHECK(oracles::brute_arrangeability(complete(4)) == 2);
    CHECK(arrangeability_exact(complete(4)).k == 2);
    CHECK(arrangeability_exact(edgeless(6)).k == 0);
    CHECK(arrangeability_exact(cycle(4)).k == 1);

    CHECK_THROWS_AS(arrangeability_exact(edgeless(11)), cap_exceeded);
    CHECK(arrangeability_exact(edgeless(11), 12).k == 0);

    // cycles are 1-arrangeable but never 0-arrangeable
    for (int n : {4, 5, 6, 7}) {
        CHECK(arrangeability_exact(cycle(n)).k == 1);
        CHECK(oracles::brute_arrangeability(cycle(n)) == 1);
    }
    Graph k33 = fixtures::complete_bipartite(3, 3);
    CHECK(arrangeability_exact(k33).k == oracles::brute_arrangeability(k33));
}

TEST_CASE("exact arrangeability equals brute force on all 5-vertex graphs") {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) slots.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < 10; ++b)
            if (mask >> b & 1) edges.push_back(slots[b]);
        Graph g = Graph::from_edges(5, std::move(edges));
        REQUIRE(arrangeability_exact(g).k == oracles::brute_arrangeability(g));
    }
}

TEST_CASE("exact arrangeability equals brute force on random instances") {
    for (std::uint64_t seed = 20; seed < 32; ++seed) {
        auto g = gen_random_instance(7, 0.45, 0, seed).graph;
        auto cert = arrangeability_exact(g);
        CHECK(cert.k == oracles::brute_arrangeability(g));
        CHECK(arrangeability_of_ordering(g, cert.ordering).k == cert.k);
        CHECK(cert.k <= arrangeability_of_ordering(g, Ordering::identity(7)).k);
    }
}

TEST_CASE("certificate invariants") {
    for (std::uint64_t seed = 40; seed < 48; ++seed) {
        auto g = gen_random_instance(9, 0.5, 0, seed).graph;
        auto cert = arrangeability_exact(g);
        int k = cert.k;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int before = 0;
            for (int u : g.neighbors(v))
                if (cert.ordering.before(u, v)) ++before;
            CHECK(before <= k + 1); // also certifies (k+1)-degeneracy
        }
    }
}

TEST_CASE("heuristic ordering certificates") {
    // trees under the degeneracy ordering
    Graph tree = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}});
    auto cert = arrangeability_of_ordering(tree, heuristic_ordering(tree));
    CHECK(cert.k <= 1);
    CHECK(arrangeability_of_ordering(complete(4), heuristic_ordering(complete(4))).k == 2);
    CHECK(arrangeability_of_ordering(edgeless(5), heuristic_ordering(edgeless(5))).k == 0);
}

TEST_CASE("subdivided biclique arrangeability lower bound, desk scale") {
    // H_3 itself (15 vertices) is beyond the factorial cap; an induced
    // 9-vertex piece (an 8-cycle plus a pendant) already needs k >= 1,
    // and arrangeability is monotone under induced subgraphs.
    auto h3 = gen_subdivided_biclique(3).graph;
    auto piece = h3.induced({0, 1, 3, 4, 6, 7, 9, 10, 12});
    REQUIRE(piece.vertex_count() == 9);
    int k = arrangeability_exact(piece).k;
    CHECK(k == 1);
    CHECK(k >= (3 - 1) / 2);
    CHECK(oracles::brute_arrangeability(piece) == 1);

    SECTION("monotonicity under induced subgraphs, spot check") {
        for (std::uint64_t seed = 60; seed < 64; ++seed) {
            auto g = gen_random_instance(8, 0.5, 0, seed).graph;
            auto sub = g.induced({0, 1, 2, 3, 4, 5});
            CHECK(arrangeability_exact(sub).k <= arrangeability_exact(g).k);
        }
    }
}
