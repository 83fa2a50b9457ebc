#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sigmacol/errors.hpp"

namespace sigmacol {

/// Simple undirected graph on dense 0-based vertex ids.
///
/// Immutable after construction. Adjacency lists and the edge list are
/// kept sorted, so edge indices are stable and membership tests are
/// binary searches. No self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
        if (n < 0) throw error("graph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n) throw error("graph: vertex id out of range");
            if (u == v) throw error("graph: self-loop at vertex " + std::to_string(u));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw error("graph: duplicate edge");
        Graph g(n);
        g.edges_ = std::move(edges);
        for (auto [u, v] : g.edges_) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        int other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::binary_search(nbrs.begin(), nbrs.end(), other);
    }

    /// Index of edge {u,v} in edges(), or -1 if absent.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    /// Subgraph induced by `keep` (ids remapped to 0..k-1 in the order of
    /// the sorted keep list). When `old_ids` is given it receives the map
    /// new id -> original id.
    Graph induced(std::vector<int> keep, std::vector<int>* old_ids = nullptr) const {
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        std::vector<int> newid(vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(keep.size()); ++i) newid[keep[i]] = i;
        std::vector<std::pair<int, int>> sub;
        for (auto [u, v] : edges_)
            if (newid[u] >= 0 && newid[v] >= 0) sub.emplace_back(newid[u], newid[v]);
        if (old_ids) *old_ids = keep;
        return from_edges(static_cast<int>(keep.size()), std::move(sub));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

} // namespace sigmacol
