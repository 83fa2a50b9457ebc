#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/neighborhood_system.hpp"
#include "sigmacol/rational.hpp"
#include "sigmacol/sigma_graph.hpp"

namespace sigmacol {

namespace detail {

class Dinic {
public:
    explicit Dinic(int n) : graph_(n), level_(n), iter_(n) {}

    void add_edge(int from, int to, long long cap) {
        graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
        graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            long long f;
            while ((f = dfs(s, t, kInf)) > 0) flow += f;
        }
        return flow;
    }

    /// Vertices reachable from s in the residual network (the minimal
    /// source side of a minimum cut). Call after max_flow.
    std::vector<bool> source_side(int s) const {
        std::vector<bool> seen(graph_.size(), false);
        std::queue<int> q;
        seen[s] = true;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& e : graph_[v])
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = true;
                    q.push(e.to);
                }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        long long cap;
        int rev;
    };

    static constexpr long long kInf = 1LL << 60;

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& e : graph_[v])
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[v] + 1;
                    q.push(e.to);
                }
        }
        return level_[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
            Edge& e = graph_[v][i];
            if (e.cap > 0 && level_[v] < level_[e.to]) {
                long long d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    graph_[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    std::vector<std::vector<Edge>> graph_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

} // namespace detail

struct DensestSubgraph {
    Rational density; // |E(H)| / |V(H)| of the maximizer
    std::vector<int> vertices;
};

/// Exact maximum-density subgraph via Goldberg's flow construction.
///
/// For a guess g = a/b the network (capacities scaled by b) has min cut
/// n*m - 2*max_S(|E(S)| - g|S|), so a nonempty source side certifies a
/// subgraph denser than g. Binary search narrows the guess below the
/// 1/(n(n-1)) gap separating distinct achievable densities; the witness of
/// the last feasible probe is then the exact maximizer.
inline DensestSubgraph densest_subgraph(const Graph& g) {
    int n = g.vertex_count();
    long long m = g.edge_count();
    if (n > 400)
        throw cap_exceeded("densest subgraph: exact rational search limited to 400 vertices");
    if (m == 0) return {Rational(0), {}};
    Rational lo(0), hi(n);
    const Rational gap(1, static_cast<long long>(n) * std::max(1, n - 1));
    std::vector<int> best;
    while (hi - lo >= gap) {
        Rational mid = (lo + hi) / 2;
        long long a = mid.num(), b = mid.den();
        detail::Dinic net(n + 2);
        int source = n, sink = n + 1;
        for (int v = 0; v < n; ++v) {
            net.add_edge(source, v, m * b);
            net.add_edge(v, sink, m * b + 2 * a - static_cast<long long>(g.degree(v)) * b);
        }
        for (auto [u, v] : g.edges()) {
            net.add_edge(u, v, b);
            net.add_edge(v, u, b);
        }
        net.max_flow(source, sink);
        auto side = net.source_side(source);
        std::vector<int> subgraph;
        for (int v = 0; v < n; ++v)
            if (side[v]) subgraph.push_back(v);
        if (!subgraph.empty()) {
            lo = mid;
            best = std::move(subgraph);
        } else {
            hi = mid;
        }
    }
    long long inside = 0;
    std::vector<bool> in(n, false);
    for (int v : best) in[v] = true;
    for (auto [u, v] : g.edges())
        if (in[u] && in[v]) ++inside;
    return {Rational(inside, static_cast<long long>(best.size())), best};
}

/// Maximum average degree over all subgraphs, as an exact rational.
inline Rational mad_exact(const Graph& g) {
    return densest_subgraph(g).density * Rational(2);
}

/// mad(Σ): maximum average degree over subgraphs of G_Σ.
inline Rational mad_sigma(const Graph& g, const NeighborhoodSystem& s) {
    return mad_exact(build_sigma_graph(g, s));
}

} // namespace sigmacol
