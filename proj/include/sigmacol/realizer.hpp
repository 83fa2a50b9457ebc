#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/neighborhood_system.hpp"

namespace sigmacol {

/// One stored path per ordered witness pair (owner, member) with
/// member ∈ Σ(owner). The path runs from member to owner, as a vertex
/// sequence, and must be a path of G of length at most 2*depth.
struct RealizerPath {
    int owner;  // v with member ∈ Σ(v)
    int member; // u ∈ Σ(v)
    std::vector<int> path; // path[0] == member, path.back() == owner
};

class Realizer {
public:
    Realizer() = default;

    /// Validates every stored path against g: consecutive vertices
    /// adjacent, endpoints matching the pair, length <= 2*depth.
    Realizer(const Graph& g, std::vector<RealizerPath> paths, int depth)
        : paths_(std::move(paths)) {
        for (const auto& p : paths_) {
            if (p.path.empty() || p.path.front() != p.member || p.path.back() != p.owner)
                throw error("realizer: path endpoints do not match its pair");
            if (static_cast<int>(p.path.size()) - 1 > 2 * depth)
                throw error("realizer: path for (" + std::to_string(p.owner) + "," +
                            std::to_string(p.member) + ") longer than 2*depth");
            for (size_t i = 0; i + 1 < p.path.size(); ++i)
                if (!g.has_edge(p.path[i], p.path[i + 1]))
                    throw error("realizer: stored sequence is not a path of the graph");
        }
    }

    const std::vector<RealizerPath>& paths() const { return paths_; }

private:
    std::vector<RealizerPath> paths_;
};

namespace detail {

// BFS shortest path u -> v, deterministic: neighbors are scanned in
// ascending id order, so every vertex keeps its lowest-id parent.
inline std::vector<int> bfs_path(const Graph& g, int from, int to) {
    std::vector<int> parent(g.vertex_count(), -1);
    std::queue<int> q;
    parent[from] = from;
    q.push(from);
    while (!q.empty() && parent[to] == -1) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (parent[w] == -1) {
                parent[w] = u;
                q.push(w);
            }
    }
    std::vector<int> path;
    for (int x = to; x != from; x = parent[x]) path.push_back(x);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace detail

/// Default realizer: for each ordered witness pair, the BFS shortest path
/// from member to owner (distance <= depth <= 2*depth since
/// member ∈ N^depth(owner)).
inline Realizer default_realizer(const Graph& g, const NeighborhoodSystem& s) {
    std::vector<RealizerPath> paths;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : s.sigma(v))
            paths.push_back({v, u, detail::bfs_path(g, u, v)});
    return Realizer(g, std::move(paths), s.depth());
}

/// λ(R): the maximum, over vertices, of the number of paths containing it.
inline int realizer_complexity(const Realizer& r) {
    std::vector<int> count;
    for (const auto& p : r.paths())
        for (int x : p.path) {
            if (x >= static_cast<int>(count.size())) count.resize(x + 1, 0);
            ++count[x];
        }
    int lambda = 0;
    for (int c : count) lambda = std::max(lambda, c);
    return lambda;
}

} // namespace sigmacol
