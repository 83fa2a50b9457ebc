#include <catch2/catch_amalgamated.hpp>

#include "sigmacol/arrangeability.hpp"
#include "sigmacol/families.hpp"
#include "sigmacol/max_density.hpp"
#include "sigmacol/sigma_coloring.hpp"
#include "sigmacol/star_coloring.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace sigmacol;
using fixtures::complete;
using fixtures::complete_bipartite;
using fixtures::cycle;
using fixtures::edgeless;
using fixtures::full_system;
using fixtures::path;

TEST_CASE("is_sigma_valid") {
    Graph p3 = path(3);
    auto s = NeighborhoodSystem::validated(p3, {{}, {0, 2}, {}}, 1);
    CHECK_FALSE(is_sigma_valid(p3, s, Coloring({0, 1, 0})));
    CHECK(is_sigma_valid(p3, s, Coloring({0, 1, 1}))); // need not be proper on G

    auto empty = NeighborhoodSystem::validated(p3, std::vector<std::vector<int>>(3), 1);
    CHECK(is_sigma_valid(p3, empty, Coloring({0, 0, 0})));

    SECTION("equivalent to properness on G_sigma") {
        for (std::uint64_t seed = 140; seed < 148; ++seed) {
            auto inst = gen_random_instance(8, 0.5, 3, seed);
            Graph gs = build_sigma_graph(inst.graph, *inst.system);
            Rng rng(seed ^ 5);
            for (int t = 0; t < 25; ++t) {
                std::vector<int> c(8);
                for (int v = 0; v < 8; ++v) c[v] = static_cast<int>(rng.below(4));
                Coloring col(c);
                CHECK(is_sigma_valid(inst.graph, *inst.system, col) == is_proper(gs, col));
            }
        }
    }
}

TEST_CASE("sigma_color_greedy") {
    SECTION("empty system uses one color") {
        Graph c4 = cycle(4);
        auto s = NeighborhoodSystem::validated(c4, std::vector<std::vector<int>>(4), 1);
        CHECK(sigma_color_greedy(c4, s).palette_size() == 1);
    }
    SECTION("K_4* canonical needs 4 colors") {
        auto inst = gen_subdivided_clique(4);
        auto c = sigma_color_greedy(inst.graph, *inst.system);
        CHECK(is_sigma_valid(inst.graph, *inst.system, c));
        CHECK(c.palette_size() == 4);
    }
    SECTION("S_4 needs 4 colors at depth 2") {
        auto inst = gen_star_example(4);
        auto c = sigma_color_greedy(inst.graph, *inst.system);
        CHECK(is_sigma_valid(inst.graph, *inst.system, c));
        CHECK(c.palette_size() == 4);
        CHECK(sigma_chromatic_exact(inst.graph, *inst.system) == 4);
    }
    SECTION("palette within floor(mad)+1 on random instances") {
        for (std::uint64_t seed = 1; seed < 13; ++seed) {
            auto inst = gen_random_instance(12, 0.45, 3, seed);
            auto c = sigma_color_greedy(inst.graph, *inst.system);
            CHECK(is_sigma_valid(inst.graph, *inst.system, c));
            CHECK(c.palette_size() <= mad_sigma(inst.graph, *inst.system).floor() + 1);
        }
    }
    SECTION("also_proper adds the base edges") {
        Graph p3 = path(3);
        auto s = NeighborhoodSystem::validated(p3, {{}, {0, 2}, {}}, 1);
        auto c = sigma_color_greedy(p3, s, true);
        CHECK(is_sigma_valid(p3, s, c));
        CHECK(is_proper(p3, c));
    }
}

TEST_CASE("sigma_color_via_star") {
    SECTION("empty system is trivially fine") {
        Graph p4 = path(4);
        auto s = NeighborhoodSystem::validated(p4, std::vector<std::vector<int>>(4), 1);
        auto star = star_chromatic_exact(p4);
        auto c = sigma_color_via_star(p4, s, star.coloring);
        CHECK(is_sigma_valid(p4, s, c));
        CHECK(c.palette_size() == 1);
    }
    SECTION("C_5 with the full system") {
        Graph c5 = cycle(5);
        auto s = full_system(c5);
        auto star = star_chromatic_exact(c5); // 4 colors
        REQUIRE(star.chi == 4);
        auto c = sigma_color_via_star(c5, s, star.coloring);
        CHECK(is_sigma_valid(c5, s, c));
        CHECK(c.palette_size() <= 4 * 4 * 2);
        CHECK(sigma_chromatic_exact(c5, s) == 3); // G_sigma is an odd cycle
    }
    SECTION("K_4* canonical needs at least 4 colors") {
        auto inst = gen_subdivided_clique(4);
        auto star = star_chromatic_exact(inst.graph, 12);
        auto c = sigma_color_via_star(inst.graph, *inst.system, star.coloring);
        CHECK(is_sigma_valid(inst.graph, *inst.system, c));
        CHECK(c.palette_size() >= 4);
        CHECK(c.palette_size() <=
              static_cast<long long>(star.chi) * star.chi * inst.system->rho());
    }
    SECTION("depth-2 systems are rejected") {
        auto inst = gen_star_example(4);
        auto star = star_chromatic_exact(inst.graph, 12);
        CHECK_THROWS_AS(sigma_color_via_star(inst.graph, *inst.system, star.coloring),
                        precondition_error);
    }
    SECTION("non-star base colorings are rejected") {
        Graph p4 = path(4);
        auto s = NeighborhoodSystem::validated(p4, std::vector<std::vector<int>>(4), 1);
        CHECK_THROWS_AS(sigma_color_via_star(p4, s, Coloring({0, 1, 0, 1})),
                        precondition_error);
    }
    SECTION("valid with bounded palette on random instances") {
        for (std::uint64_t seed = 20; seed < 32; ++seed) {
            auto inst = gen_random_instance(10, 0.4, 3, seed);
            auto star = star_chromatic_exact(inst.graph);
            auto c = sigma_color_via_star(inst.graph, *inst.system, star.coloring);
            CHECK(is_sigma_valid(inst.graph, *inst.system, c));
            int rho = inst.system->rho();
            long long bound = rho == 0 ? 1 : static_cast<long long>(star.chi) * star.chi * rho;
            CHECK(c.palette_size() <= bound);
        }
    }
}

TEST_CASE("sigma_color_product") {
    auto greedy_pair = [](const Graph& g, const NeighborhoodSystem& s) {
        return sigma_color_greedy(g, s);
    };
    SECTION("rho = 2 collapses to the pair colorer") {
        auto inst = gen_subdivided_clique(3);
        auto direct = sigma_color_greedy(inst.graph, *inst.system);
        auto product = sigma_color_product(inst.graph, *inst.system, greedy_pair);
        CHECK(product.values() == direct.values());
    }
    SECTION("empty system gets one color") {
        Graph c4 = cycle(4);
        auto s = NeighborhoodSystem::validated(c4, std::vector<std::vector<int>>(4), 1);
        CHECK(sigma_color_product(c4, s, greedy_pair).palette_size() == 1);
    }
    SECTION("rho = 3 random instances: valid and within k^3") {
        for (std::uint64_t seed = 40; seed < 52; ++seed) {
            auto inst = gen_random_instance(10, 0.5, 3, seed);
            if (inst.system->rho() != 3) continue;
            std::vector<int> palettes;
            auto c = sigma_color_product(inst.graph, *inst.system,
                                         [&](const Graph& g, const NeighborhoodSystem& s) {
                                             auto ci = sigma_color_greedy(g, s);
                                             palettes.push_back(ci.palette_size());
                                             return ci;
                                         });
            CHECK(is_sigma_valid(inst.graph, *inst.system, c));
            int k = 1;
            for (int p : palettes) k = std::max(k, p);
            CHECK(c.palette_size() <= k * k * k);
        }
    }
    SECTION("rho = 4 random instances: valid and within k^C(4,2)") {
        for (std::uint64_t seed = 55; seed < 70; ++seed) {
            auto inst = gen_random_instance(11, 0.6, 4, seed);
            if (inst.system->rho() != 4) continue;
            std::vector<int> palettes;
            auto c = sigma_color_product(inst.graph, *inst.system,
                                         [&](const Graph& g, const NeighborhoodSystem& s) {
                                             auto ci = sigma_color_greedy(g, s);
                                             palettes.push_back(ci.palette_size());
                                             return ci;
                                         });
            REQUIRE(palettes.size() == 6);
            CHECK(is_sigma_valid(inst.graph, *inst.system, c));
            long long k = 1;
            for (int p : palettes) k = std::max(k, static_cast<long long>(p));
            long long bound = 1;
            for (int i = 0; i < 6; ++i) bound *= k;
            CHECK(c.palette_size() <= bound);
        }
    }
}

TEST_CASE("sigma_chromatic_exact") {
    for (int n = 4; n <= 6; ++n) {
        auto inst = gen_subdivided_clique(n);
        CHECK(sigma_chromatic_exact(inst.graph, *inst.system, 40) == n);
    }
    for (int n = 4; n <= 6; ++n) {
        auto inst = gen_star_example(n);
        CHECK(sigma_chromatic_exact(inst.graph, *inst.system, 40) == n);
    }
    Graph p3 = path(3);
    auto empty = NeighborhoodSystem::validated(p3, std::vector<std::vector<int>>(3), 1);
    CHECK(sigma_chromatic_exact(p3, empty) == 1);

    SECTION("equals the raw predicate enumeration on small instances") {
        for (std::uint64_t seed = 60; seed < 72; ++seed) {
            auto inst = gen_random_instance(8, 0.5, 4, seed);
            CHECK(sigma_chromatic_exact(inst.graph, *inst.system) ==
                  oracles::brute_sigma_chromatic(inst.graph, *inst.system));
        }
    }
}

TEST_CASE("inequality chain on small instances") {
    for (std::uint64_t seed = 80; seed < 95; ++seed) {
        auto inst = gen_random_instance(9, 0.5, 3, seed);
        Graph gs = build_sigma_graph(inst.graph, *inst.system);
        int rho = inst.system->rho();
        int omega = clique_number_exact(gs).size;
        int chi = chromatic_number_exact(gs).chi;
        long long bound = mad_exact(gs).floor() + 1;
        CHECK(rho <= omega);
        CHECK(omega <= chi);
        CHECK(chi <= bound);
    }
}

TEST_CASE("theorem 2 degeneracy bound from exact arrangeability") {
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        auto inst = gen_random_instance(9, 0.45, 3, seed);
        int k = arrangeability_exact(inst.graph).k;
        Graph gs = build_sigma_graph(inst.graph, *inst.system);
        int degen = degeneracy_ordering(gs).degeneracy;
        CHECK(degen <= (2 * k + 1) * inst.system->rho());
    }
}

TEST_CASE("choosability check") {
    CHECK(choosability_check(complete(3), 3));
    CHECK_FALSE(choosability_check(complete(3), 2));
    CHECK(choosability_check(cycle(4), 2));
    CHECK_FALSE(choosability_check(cycle(5), 2));
    CHECK(choosability_check(cycle(5), 3));
    // theta graph K_{2,3} is 2-choosable, K_{2,4} is not
    CHECK(choosability_check(complete_bipartite(2, 3), 2));
    CHECK_FALSE(choosability_check(complete_bipartite(2, 4), 2));
    CHECK(choosability_check(complete_bipartite(2, 4), 3));
    CHECK(choosability_check(complete_bipartite(4, 4), 3));
    CHECK(choosability_check(edgeless(8), 1));

    CHECK_THROWS_AS(choosability_check(edgeless(9), 2), cap_exceeded);
    CHECK_THROWS_AS(choosability_check(complete(3), 5), cap_exceeded);

    SECTION("matches the definitional all-assignments oracle") {
        // every labeled graph on 3 vertices, k = 2
        for (std::uint32_t mask = 0; mask < 8; ++mask) {
            std::vector<std::pair<int, int>> e;
            if (mask & 1) e.emplace_back(0, 1);
            if (mask & 2) e.emplace_back(0, 2);
            if (mask & 4) e.emplace_back(1, 2);
            Graph g = Graph::from_edges(3, e);
            CHECK(choosability_check(g, 2) == oracles::brute_choosable(g, 2));
        }
        // structured and random 4-vertex graphs, k = 2
        std::vector<Graph> four = {path(4), cycle(4), complete(4), fixtures::star(3),
                                   Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}})};
        for (std::uint64_t seed = 300; seed < 304; ++seed)
            four.push_back(gen_random_instance(4, 0.5, 0, seed).graph);
        for (const auto& g : four)
            CHECK(choosability_check(g, 2) == oracles::brute_choosable(g, 2));
    }
    SECTION("ch sits between chi and floor(mad)+1") {
        for (std::uint64_t seed = 120; seed < 132; ++seed) {
            auto inst = gen_random_instance(8, 0.4, 3, seed);
            Graph gs = build_sigma_graph(inst.graph, *inst.system);
            int chi = chromatic_number_exact(gs).chi;
            if (chi > 4) continue;
            int ch = -1;
            for (int k = chi; k <= 4; ++k)
                if (choosability_check(gs, k)) {
                    ch = k;
                    break;
                }
            if (ch == -1) continue; // beyond the list cap
            CHECK(chi <= ch);
            CHECK(ch <= mad_exact(gs).floor() + 1);
        }
    }
}
