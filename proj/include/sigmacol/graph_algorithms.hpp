#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "sigmacol/coloring.hpp"
#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/ordering.hpp"

namespace sigmacol {

// Default size caps for the exact oracles. All oracle entry points take the
// cap as a parameter so callers can raise it deliberately; exceeding a cap
// throws, it never degrades to an approximation.
inline constexpr int kDefaultChromaticCap = 24;
inline constexpr int kDefaultCliqueCap = 64;

struct DegeneracyResult {
    Ordering ordering;
    int degeneracy;
};

/// Repeatedly removes a minimum-degree vertex (lowest id on ties) and lists
/// the removal order reversed, so every vertex has at most `degeneracy`
/// neighbors earlier in the returned ordering.
inline DegeneracyResult degeneracy_ordering(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), removal;
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int degeneracy = 0;
    removal.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        degeneracy = std::max(degeneracy, deg[best]);
        gone[best] = true;
        removal.push_back(best);
        for (int u : g.neighbors(best))
            if (!gone[u]) --deg[u];
    }
    std::reverse(removal.begin(), removal.end());
    return {Ordering(std::move(removal)), degeneracy};
}

/// BFS ball of radius d around v, minus v itself. Requires d >= 1.
inline std::vector<int> neighborhood_at_depth(const Graph& g, int v, int d) {
    if (d < 1) throw error("neighborhood_at_depth: depth must be >= 1");
    if (v < 0 || v >= g.vertex_count()) throw error("neighborhood_at_depth: bad vertex");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    std::vector<int> ball;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] == d) continue;
        for (int w : g.neighbors(u))
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                ball.push_back(w);
                q.push(w);
            }
    }
    std::sort(ball.begin(), ball.end());
    return ball;
}

inline bool is_proper(const Graph& g, const Coloring& c) {
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

/// Greedy coloring along `order`: each vertex takes the smallest color not
/// used by an already-colored neighbor. Uses at most back-degree + 1 colors.
inline Coloring greedy_coloring(const Graph& g, const Ordering& order) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<char> used;
    for (int i = 0; i < n; ++i) {
        int v = order.at(i);
        used.assign(n + 1, 0);
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return Coloring(std::move(color));
}

struct CliqueResult {
    int size;
    std::vector<int> vertices;
};

namespace detail {

struct BronKerbosch {
    const std::vector<std::uint64_t>& adj;
    std::uint64_t best_mask = 0;
    int best = 0;

    static int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

    void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
            if (popcount(r) > best) {
                best = popcount(r);
                best_mask = r;
            }
            return;
        }
        if (popcount(r) + popcount(p) <= best) return;
        // pivot: vertex of P ∪ X covering the most of P, lowest id on ties
        int pivot = -1, cover = -1;
        for (std::uint64_t s = p | x; s; s &= s - 1) {
            int u = __builtin_ctzll(s);
            int c = popcount(p & adj[u]);
            if (c > cover) {
                cover = c;
                pivot = u;
            }
        }
        std::uint64_t cands = p & ~adj[pivot];
        while (cands) {
            int v = __builtin_ctzll(cands);
            std::uint64_t bit = std::uint64_t{1} << v;
            cands &= cands - 1;
            expand(r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    }
};

} // namespace detail

/// Maximum clique with witness, by Bron-Kerbosch with pivoting.
inline CliqueResult clique_number_exact(const Graph& g, int cap = kDefaultCliqueCap) {
    int n = g.vertex_count();
    if (n > cap || n > 64)
        throw cap_exceeded("clique oracle: " + std::to_string(n) + " vertices exceeds cap " +
                           std::to_string(std::min(cap, 64)));
    if (n == 0) return {0, {}};
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    detail::BronKerbosch bk{adj};
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    bk.expand(0, all, 0);
    std::vector<int> witness;
    for (std::uint64_t s = bk.best_mask; s; s &= s - 1) witness.push_back(__builtin_ctzll(s));
    return {bk.best, std::move(witness)};
}

struct ChromaticResult {
    int chi;
    Coloring coloring;
};

namespace detail {

// Backtracking k-colorability in vertex id order, lowest color first, with
// the usual "at most one fresh color" symmetry break.
inline bool decide_k_colorable(const Graph& g, int k, std::vector<int>& color) {
    int n = g.vertex_count();
    std::vector<int> assigned(n, -1);
    std::function<bool(int, int)> place = [&](int v, int maxused) -> bool {
        if (v == n) return true;
        int top = std::min(k - 1, maxused + 1);
        for (int c = 0; c <= top; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (u >= v) break; // neighbors sorted; later ones uncolored
                if (assigned[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assigned[v] = c;
            if (place(v + 1, std::max(maxused, c))) return true;
            assigned[v] = -1;
        }
        return false;
    };
    if (!place(0, -1)) return false;
    color = assigned;
    return true;
}

} // namespace detail

/// Minimum proper-coloring size with a deterministic witness. Branch and
/// bound between a Bron-Kerbosch clique lower bound and a degeneracy-greedy
/// upper bound; the witness search colors vertices in id order, lowest
/// color first.
inline ChromaticResult chromatic_number_exact(const Graph& g, int cap = kDefaultChromaticCap) {
    int n = g.vertex_count();
    if (n > cap)
        throw cap_exceeded("chromatic oracle: " + std::to_string(n) + " vertices exceeds cap " +
                           std::to_string(cap));
    if (n == 0) return {0, Coloring(std::vector<int>{})};
    int lb = clique_number_exact(g, std::max(cap, 64)).size;
    Coloring greedy = greedy_coloring(g, degeneracy_ordering(g).ordering);
    int ub = greedy.palette_size();
    for (int k = lb; k < ub; ++k) {
        std::vector<int> witness;
        if (detail::decide_k_colorable(g, k, witness)) return {k, Coloring(std::move(witness))};
    }
    // re-derive the ub witness through the same deterministic search
    std::vector<int> witness;
    detail::decide_k_colorable(g, ub, witness);
    return {ub, Coloring(std::move(witness))};
}

} // namespace sigmacol
