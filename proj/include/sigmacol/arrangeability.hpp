#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/graph_algorithms.hpp"
#include "sigmacol/ordering.hpp"

namespace sigmacol {

inline constexpr int kDefaultArrangeabilityCap = 10;

struct ArrangeabilityCertificate {
    Ordering ordering;
    int k;
    int worst_vertex; // lowest-id vertex achieving k, -1 on the empty graph
};

/// k of the given ordering: the maximum over v of the number of vertices
/// w before v having a common neighbor u with v that lies after v.
inline ArrangeabilityCertificate arrangeability_of_ordering(const Graph& g, const Ordering& o) {
    int n = g.vertex_count();
    if (o.size() != n) throw error("arrangeability: ordering size mismatch");
    int k = 0, worst = -1;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        std::vector<int> marked;
        for (int u : g.neighbors(v)) {
            if (!o.before(v, u)) continue;
            for (int w : g.neighbors(u))
                if (o.before(w, v) && !seen[w]) {
                    seen[w] = 1;
                    marked.push_back(w);
                }
        }
        if (static_cast<int>(marked.size()) > k) {
            k = static_cast<int>(marked.size());
            worst = v;
        }
        for (int w : marked) seen[w] = 0;
    }
    if (worst == -1 && n > 0) worst = 0; // every vertex ties at k = 0
    return {o, k, worst};
}

/// Degeneracy ordering as a practical stand-in; no optimality claim.
inline Ordering heuristic_ordering(const Graph& g) {
    return degeneracy_ordering(g).ordering;
}

/// Minimum k over all orderings, by branch-and-prune over prefixes.
///
/// The contribution of a vertex is fixed the moment it is appended (its
/// qualifying u are exactly its still-unplaced neighbors), so the partial k
/// of a prefix is exact and monotone, and a prefix whose k already reaches
/// the incumbent can be cut. A second pass pinned to the optimal k returns
/// the lexicographically smallest witness ordering.
inline ArrangeabilityCertificate arrangeability_exact(const Graph& g,
                                                      int cap = kDefaultArrangeabilityCap) {
    int n = g.vertex_count();
    if (n > cap)
        throw cap_exceeded("arrangeability oracle: " + std::to_string(n) +
                           " vertices exceeds cap " + std::to_string(cap));
    if (n == 0) return {Ordering(std::vector<int>{}), 0, -1};
    if (n > 25) throw cap_exceeded("arrangeability oracle limited to 25 vertices");

    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    auto contribution = [&](int x, std::uint32_t placed) {
        std::uint32_t reach = 0;
        std::uint32_t pending = adj[x] & ~placed;
        for (std::uint32_t s = pending; s; s &= s - 1) reach |= adj[__builtin_ctzll(s)];
        return __builtin_popcount(reach & placed);
    };

    int best_k = arrangeability_of_ordering(g, heuristic_ordering(g)).k;

    std::vector<int> prefix;
    prefix.reserve(n);
    std::function<void(std::uint32_t, int)> improve = [&](std::uint32_t placed, int partial) {
        if (static_cast<int>(prefix.size()) == n) {
            best_k = partial; // strictly better by the pruning rule
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (placed & (std::uint32_t{1} << x)) continue;
            int k2 = std::max(partial, contribution(x, placed));
            if (k2 >= best_k) continue;
            prefix.push_back(x);
            improve(placed | (std::uint32_t{1} << x), k2);
            prefix.pop_back();
        }
    };
    improve(0, 0);

    std::vector<int> witness;
    std::function<bool(std::uint32_t, int)> first = [&](std::uint32_t placed, int partial) {
        if (static_cast<int>(prefix.size()) == n) {
            witness = prefix;
            return true;
        }
        for (int x = 0; x < n; ++x) {
            if (placed & (std::uint32_t{1} << x)) continue;
            int k2 = std::max(partial, contribution(x, placed));
            if (k2 > best_k) continue;
            prefix.push_back(x);
            if (first(placed | (std::uint32_t{1} << x), k2)) return true;
            prefix.pop_back();
        }
        return false;
    };
    prefix.clear();
    first(0, 0);

    auto cert = arrangeability_of_ordering(g, Ordering(std::move(witness)));
    return cert;
}

} // namespace sigmacol
