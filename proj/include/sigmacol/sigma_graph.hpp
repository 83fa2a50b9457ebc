#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sigmacol/graph.hpp"
#include "sigmacol/neighborhood_system.hpp"

namespace sigmacol {

/// G_Σ plus a witness index: for every edge of G_Σ, the sorted list of
/// vertices w whose Σ(w) contains both endpoints. The clique-extraction
/// procedures need witness identity, not just the edge.
struct SigmaGraphData {
    Graph graph;
    std::vector<std::vector<int>> witnesses; // aligned with graph.edges()
};

/// Builds the auxiliary graph: u,v adjacent iff some w has {u,v} ⊆ Σ(w).
inline SigmaGraphData build_sigma_graph_data(const Graph& g, const NeighborhoodSystem& s) {
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int w = 0; w < g.vertex_count(); ++w) {
        const auto& set = s.sigma(w);
        for (size_t i = 0; i < set.size(); ++i)
            for (size_t j = i + 1; j < set.size(); ++j)
                by_pair[{set[i], set[j]}].push_back(w);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(by_pair.size());
    for (const auto& [pair, _] : by_pair) edges.push_back(pair);
    SigmaGraphData data{Graph::from_edges(g.vertex_count(), std::move(edges)), {}};
    data.witnesses.resize(data.graph.edge_count());
    for (auto& [pair, ws] : by_pair)
        data.witnesses[data.graph.edge_index(pair.first, pair.second)] = std::move(ws);
    return data;
}

inline Graph build_sigma_graph(const Graph& g, const NeighborhoodSystem& s) {
    return build_sigma_graph_data(g, s).graph;
}

} // namespace sigmacol
