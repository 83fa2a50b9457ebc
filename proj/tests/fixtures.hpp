#pragma once

#include <utility>
#include <vector>

#include "sigmacol/graph.hpp"
#include "sigmacol/neighborhood_system.hpp"

namespace fixtures {

using sigmacol::Graph;
using sigmacol::NeighborhoodSystem;

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edges(n, std::move(e));
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, std::move(e));
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

inline Graph edgeless(int n) { return Graph::from_edges(n, {}); }

/// Sigma(v) = N(v) for every vertex, depth 1.
inline NeighborhoodSystem full_system(const Graph& g) {
    std::vector<std::vector<int>> sets(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) sets[v] = g.neighbors(v);
    return NeighborhoodSystem::validated(g, std::move(sets), 1);
}

} // namespace fixtures
