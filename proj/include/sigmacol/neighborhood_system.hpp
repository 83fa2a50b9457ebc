#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/graph_algorithms.hpp"

namespace sigmacol {

/// A neighborhood system: for every vertex v a set Σ(v) contained in the
/// radius-d ball around v (minus v itself). The depth d is stored, not
/// inferred; the same sets can be valid at several depths.
class NeighborhoodSystem {
public:
    /// Fail-fast construction: throws naming the first offending vertex if
    /// some Σ(v) leaves the depth-d ball or contains v.
    static NeighborhoodSystem validated(const Graph& g, std::vector<std::vector<int>> sets,
                                        int depth) {
        NeighborhoodSystem s(normalize(g, std::move(sets)), depth);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (s.sigma_[v].empty()) continue;
            auto ball = neighborhood_at_depth(g, v, depth);
            for (int u : s.sigma_[v]) {
                if (u == v)
                    throw error("sigma: vertex " + std::to_string(v) + " contains itself");
                if (!std::binary_search(ball.begin(), ball.end(), u))
                    throw error("sigma: vertex " + std::to_string(u) +
                                " is outside the depth-" + std::to_string(depth) +
                                " ball of vertex " + std::to_string(v));
            }
        }
        return s;
    }

    /// Tolerant construction for generators: members outside the ball (and
    /// v itself) are dropped, and the number of dropped entries recorded.
    /// Returns (system, dropped-count); see clamped() below.
    static std::pair<NeighborhoodSystem, int> clamped(const Graph& g,
                                                      std::vector<std::vector<int>> sets,
                                                      int depth) {
        sets.resize(g.vertex_count());
        int dropped = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (sets[v].empty()) continue;
            auto ball = neighborhood_at_depth(g, v, depth);
            std::vector<int> kept;
            for (int u : sets[v]) {
                if (u != v && std::binary_search(ball.begin(), ball.end(), u))
                    kept.push_back(u);
                else
                    ++dropped;
            }
            sets[v] = std::move(kept);
        }
        return {NeighborhoodSystem(normalize(g, std::move(sets)), depth), dropped};
    }

    int depth() const { return depth_; }
    int vertex_count() const { return static_cast<int>(sigma_.size()); }
    const std::vector<int>& sigma(int v) const { return sigma_[v]; }
    const std::vector<std::vector<int>>& sets() const { return sigma_; }

    /// max_v |Σ(v)|; 0 for the all-empty system.
    int rho() const {
        int r = 0;
        for (const auto& s : sigma_) r = std::max(r, static_cast<int>(s.size()));
        return r;
    }

private:
    NeighborhoodSystem(std::vector<std::vector<int>> sets, int depth)
        : sigma_(std::move(sets)), depth_(depth) {
        if (depth_ < 1) throw error("sigma: depth must be >= 1");
    }

    static std::vector<std::vector<int>> normalize(const Graph& g,
                                                   std::vector<std::vector<int>> sets) {
        if (static_cast<int>(sets.size()) > g.vertex_count())
            throw error("sigma: more sets than vertices");
        sets.resize(g.vertex_count());
        for (auto& s : sets) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (int u : s)
                if (u < 0 || u >= g.vertex_count())
                    throw error("sigma: vertex id out of range");
        }
        return sets;
    }

    std::vector<std::vector<int>> sigma_;
    int depth_ = 1;
};

} // namespace sigmacol
