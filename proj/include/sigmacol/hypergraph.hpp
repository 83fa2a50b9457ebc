#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sigmacol/errors.hpp"

namespace sigmacol {

/// Hypergraph in which every pair of vertices lies in some hyperedge,
/// together with the chosen pair witness e_{u,v} (the lowest-index
/// hyperedge containing both). Fullness is validated at construction.
class FullHypergraph {
public:
    FullHypergraph(int n, std::vector<std::vector<int>> hyperedges)
        : n_(n), edges_(std::move(hyperedges)) {
        if (n_ < 0) throw error("hypergraph: negative vertex count");
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            if (e.empty() || std::adjacent_find(e.begin(), e.end()) != e.end())
                throw error("hypergraph: hyperedges must be non-empty sets");
            if (e.front() < 0 || e.back() >= n_)
                throw error("hypergraph: vertex id out of range");
        }
        pair_witness_.assign(static_cast<size_t>(n_) * n_, -1);
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            const auto& e = edges_[i];
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = a + 1; b < e.size(); ++b) {
                    int& slot = pair_witness_[static_cast<size_t>(e[a]) * n_ + e[b]];
                    if (slot == -1) slot = i;
                }
        }
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (pair_witness_[static_cast<size_t>(u) * n_ + v] == -1)
                    throw error("hypergraph: pair (" + std::to_string(u) + "," +
                                std::to_string(v) + ") not covered; not a full hypergraph");
    }

    int vertex_count() const { return n_; }
    int hyperedge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& hyperedges() const { return edges_; }

    int rank() const {
        size_t r = 0;
        for (const auto& e : edges_) r = std::max(r, e.size());
        return static_cast<int>(r);
    }

    /// Index of the chosen hyperedge e_{u,v}.
    int witness_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return pair_witness_[static_cast<size_t>(u) * n_ + v];
    }

private:
    int n_;
    std::vector<std::vector<int>> edges_;
    std::vector<int> pair_witness_;
};

/// True iff every pair of y is covered by a hyperedge meeting y in exactly
/// those two vertices (rank-2 fullness of the subhypergraph on y).
inline bool is_rank2_full_on(const FullHypergraph& h, const std::vector<int>& y) {
    std::vector<bool> in(h.vertex_count(), false);
    for (int v : y) {
        if (v < 0 || v >= h.vertex_count()) throw error("rank-2 check: vertex out of range");
        in[v] = true;
    }
    auto meets_in_two = [&](const std::vector<int>& e) {
        int hits = 0;
        for (int x : e)
            if (in[x]) ++hits;
        return hits == 2;
    };
    for (size_t i = 0; i < y.size(); ++i)
        for (size_t j = i + 1; j < y.size(); ++j) {
            int u = y[i], v = y[j];
            if (u == v) continue;
            // the chosen witness usually settles it
            if (meets_in_two(h.hyperedges()[h.witness_edge(u, v)])) continue;
            bool found = false;
            for (const auto& e : h.hyperedges()) {
                if (!std::binary_search(e.begin(), e.end(), u) ||
                    !std::binary_search(e.begin(), e.end(), v))
                    continue;
                if (meets_in_two(e)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    return true;
}

} // namespace sigmacol
