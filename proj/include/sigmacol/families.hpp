#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/neighborhood_system.hpp"
#include "sigmacol/rng.hpp"

namespace sigmacol {

/// Only values the underlying constructions assert (plus derivable
/// counts); -1 marks fields with no claim for the family.
struct InstanceStats {
    std::string family;
    int parameter = 0;
    int vertices = 0;
    int edges = 0;
    int rho = 0;
    int depth = 0; // 0 when the family carries no system
    int chi_sigma_lower = -1;
    int chi_sigma_upper = -1;
    int star_chromatic_upper = -1;
    int arrangeability_lower_twice = -1; // 2x the bound, to keep (n-1)/2 exact
};

struct GeneratedInstance {
    Graph graph;
    std::optional<NeighborhoodSystem> system;
    InstanceStats stats;
};

namespace detail {

inline int pair_slot(int i, int j, int n) { // lex index of pair (i<j) over 0..n-1
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

} // namespace detail

/// K_n*: the 1-subdivision of K_n with Σ(v) = N(v) on every degree-2
/// vertex. Branch vertices first (0..n-1), then subdividing vertices in
/// lexicographic edge order.
inline GeneratedInstance gen_subdivided_clique(int n) {
    if (n < 2) throw error("gen kstar: n must be >= 2");
    int subdividers = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> sets(n + subdividers);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int w = n + detail::pair_slot(i, j, n);
            edges.emplace_back(i, w);
            edges.emplace_back(j, w);
            sets[w] = {i, j};
        }
    Graph g = Graph::from_edges(n + subdividers, std::move(edges));
    auto system = NeighborhoodSystem::validated(g, std::move(sets), 1);
    InstanceStats stats{"kstar", n,  g.vertex_count(), g.edge_count(), system.rho(), 1,
                        n,       n,  -1,               -1};
    return {std::move(g), std::move(system), std::move(stats)};
}

/// H_n: the 1-subdivision of K_{n,n}. Left side 0..n-1, right side
/// n..2n-1, then subdividing vertices in lexicographic (left, right) order.
inline GeneratedInstance gen_subdivided_biclique(int n) {
    if (n < 1) throw error("gen biclique: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int w = 2 * n + i * n + j;
            edges.emplace_back(i, w);
            edges.emplace_back(n + j, w);
        }
    Graph g = Graph::from_edges(2 * n + n * n, std::move(edges));
    InstanceStats stats{"biclique", n, g.vertex_count(), g.edge_count(), 0, 0, -1, -1, 3,
                        n - 1};
    return {std::move(g), std::nullopt, std::move(stats)};
}

/// S_n: a star whose leaves are v_1..v_n and v_{i,j} for i<j, with
/// Σ(v_{i,j}) = {v_i, v_j}. A 2-neighborhood system on a tree.
inline GeneratedInstance gen_star_example(int n) {
    if (n < 2) throw error("gen star: n must be >= 2");
    int pairs = n * (n - 1) / 2;
    int total = 1 + n + pairs;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> sets(total);
    for (int v = 1; v < total; ++v) edges.emplace_back(0, v);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int w = n + 1 + detail::pair_slot(i - 1, j - 1, n);
            sets[w] = {i, j};
        }
    Graph g = Graph::from_edges(total, std::move(edges));
    auto system = NeighborhoodSystem::validated(g, std::move(sets), 2);
    InstanceStats stats{"star", n,  g.vertex_count(), g.edge_count(), system.rho(), 2,
                        n,      n,  -1,               -1};
    return {std::move(g), std::move(system), std::move(stats)};
}

struct SubdivisionEmbedding {
    std::vector<int> branch;                  // pattern vertex -> vertex of the subdivision
    std::vector<std::vector<int>> edge_paths; // per pattern edge, the full path
};

/// Subdivides edge i of h with per_edge[i] internal vertices. Pattern
/// vertices keep their ids; internal vertices are appended in edge order.
inline std::pair<Graph, SubdivisionEmbedding> gen_subdivision(const Graph& h,
                                                              const std::vector<int>& per_edge) {
    if (static_cast<int>(per_edge.size()) != h.edge_count())
        throw error("gen subdivision: need one count per edge");
    for (int c : per_edge)
        if (c < 0) throw error("gen subdivision: negative subdivision count");
    int next = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    SubdivisionEmbedding emb;
    emb.branch.resize(h.vertex_count());
    for (int i = 0; i < h.vertex_count(); ++i) emb.branch[i] = i;
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [u, v] = h.edges()[e];
        std::vector<int> path{u};
        for (int t = 0; t < per_edge[e]; ++t) path.push_back(next++);
        path.push_back(v);
        for (size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
        emb.edge_paths.push_back(std::move(path));
    }
    return {Graph::from_edges(next, std::move(edges)), std::move(emb)};
}

/// Plants the pattern's chromatic number into a depth-(2d+1) system of
/// ρ = 2: the midpoint of every edge path gets Σ = the path's two branch
/// endpoints. Paths must have 2..4d+2 edges.
inline NeighborhoodSystem encode_depth_d_system(const Graph& subdivided,
                                                const SubdivisionEmbedding& emb, int d) {
    if (d < 1) throw error("encode system: d must be >= 1");
    std::vector<std::vector<int>> sets(subdivided.vertex_count());
    for (const auto& path : emb.edge_paths) {
        int len = static_cast<int>(path.size()) - 1;
        if (len > 4 * d + 2)
            throw precondition_error("encode system: path of length " + std::to_string(len) +
                                     " too long for depth parameter d=" + std::to_string(d));
        if (len < 2)
            throw precondition_error("encode system: an edge path has no internal vertex");
        int mid = path[(len + 1) / 2];
        sets[mid] = {path.front(), path.back()};
    }
    return NeighborhoodSystem::validated(subdivided, std::move(sets), 2 * d + 1);
}

/// Erdős–Rényi graph with per-vertex Σ(v) a uniform subset of N(v) of size
/// at most rho_cap. Identical (n, edge_prob, rho_cap, seed) reproduce the
/// identical instance.
inline GeneratedInstance gen_random_instance(int n, double edge_prob, int rho_cap,
                                             std::uint64_t seed) {
    if (n < 0 || edge_prob < 0.0 || edge_prob > 1.0 || rho_cap < 0)
        throw error("gen random: bad parameters");
    Rng rng(seed);
    auto threshold = static_cast<std::uint64_t>(edge_prob * 4294967296.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<std::uint64_t>(rng.next() >> 32) < threshold) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, std::move(edges));
    std::vector<std::vector<int>> sets(n);
    for (int v = 0; v < n; ++v) {
        int take = rng.range(0, std::min(rho_cap, g.degree(v)));
        for (int idx : rng.sample(g.degree(v), take)) sets[v].push_back(g.neighbors(v)[idx]);
    }
    auto system = NeighborhoodSystem::validated(g, std::move(sets), 1);
    InstanceStats stats{"random", n,  g.vertex_count(), g.edge_count(), system.rho(), 1,
                        -1,       -1, -1,               -1};
    return {std::move(g), std::move(system), std::move(stats)};
}

} // namespace sigmacol
