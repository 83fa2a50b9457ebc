#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sigmacol/coloring.hpp"
#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/graph_algorithms.hpp"
#include "sigmacol/ordering.hpp"

namespace sigmacol {

inline constexpr int kDefaultStarCap = 12;
inline constexpr int kDefaultAcyclicCap = 12;

/// Proper, and no path on four vertices uses only two colors.
inline bool is_star_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    for (auto [w, x] : g.edges()) {
        // bichromatic u-w-x-y needs c(u)=c(x) and c(y)=c(w)
        for (int side = 0; side < 2; ++side) {
            int a = side ? x : w, b = side ? w : x;
            for (int u : g.neighbors(a)) {
                if (u == b || c[u] != c[b]) continue;
                for (int y : g.neighbors(b))
                    if (y != a && y != u && c[y] == c[a]) return false;
            }
        }
    }
    return true;
}

/// An orientation of G paired with a proper base coloring. arcs[i] is the
/// (tail, head) chosen for g.edges()[i].
struct InOrientation {
    Coloring coloring;
    std::vector<std::pair<int, int>> arcs;
};

/// True iff the base coloring is proper and every 2-colored path u-w-v has
/// both edges oriented toward the middle vertex w.
inline bool verify_in_orientation(const Graph& g, const InOrientation& io) {
    int n = g.vertex_count();
    if (io.coloring.size() != n || static_cast<int>(io.arcs.size()) != g.edge_count())
        throw error("in-orientation: size mismatch with graph");
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        auto [t, h] = io.arcs[i];
        if (!((t == u && h == v) || (t == v && h == u)))
            throw error("in-orientation: arc " + std::to_string(i) + " does not match its edge");
    }
    if (!is_proper(g, io.coloring)) return false;
    auto head_is = [&](int a, int b, int w) { // edge {a,b} oriented into w?
        return io.arcs[g.edge_index(a, b)].second == w;
    };
    const auto& c = io.coloring;
    for (int w = 0; w < n; ++w) {
        const auto& nbrs = g.neighbors(w);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                int u = nbrs[i], v = nbrs[j];
                if (c[u] != c[v]) continue;
                if (!head_is(u, w, w) || !head_is(v, w, w)) return false;
            }
    }
    return true;
}

/// Decision form of Observation 1's right-hand side: does any orientation
/// make (c, G⃗) a colored in-orientation? Each 2-colored path forces its two
/// edges; an orientation exists iff no edge is forced both ways.
inline bool exists_colored_in_orientation(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    int m = g.edge_count();
    std::vector<char> into_hi(m, 0), into_lo(m, 0); // edge (u,v), u < v
    for (int w = 0; w < g.vertex_count(); ++w) {
        const auto& nbrs = g.neighbors(w);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                if (c[nbrs[i]] != c[nbrs[j]]) continue;
                for (int u : {nbrs[i], nbrs[j]}) {
                    int idx = g.edge_index(u, w);
                    (w > u ? into_hi : into_lo)[idx] = 1;
                }
            }
    }
    for (int i = 0; i < m; ++i)
        if (into_hi[i] && into_lo[i]) return false;
    return true;
}

/// Observation 1, constructive direction: every bicolored component of a
/// star coloring is a star; orient each edge toward its star's center
/// (lower vertex id when the star is a single edge).
inline InOrientation orientation_from_star_coloring(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count()) throw error("orientation: coloring size mismatch");
    if (!is_star_coloring(g, c))
        throw precondition_error("orientation: not a star coloring");
    int n = g.vertex_count();
    int m = g.edge_count();
    // group edges by their (unordered) color pair
    std::vector<int> comp(n);
    std::vector<std::pair<int, int>> arcs(m, {-1, -1});
    std::vector<std::vector<int>> edges_by_pair;
    std::map<std::pair<int, int>, int> pair_id;
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges()[i];
        std::pair<int, int> key{std::min(c[u], c[v]), std::max(c[u], c[v])};
        auto [it, fresh] = pair_id.try_emplace(key, static_cast<int>(edges_by_pair.size()));
        if (fresh) edges_by_pair.emplace_back();
        edges_by_pair[it->second].push_back(i);
    }
    std::vector<int> parent(n);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::vector<int> deg(n, 0);
    for (const auto& component_edges : edges_by_pair) {
        std::vector<int> touched;
        for (int i : component_edges) {
            auto [u, v] = g.edges()[i];
            for (int x : {u, v})
                if (deg[x] == 0) {
                    parent[x] = x;
                    touched.push_back(x);
                }
            ++deg[u];
            ++deg[v];
        }
        for (int i : component_edges) {
            auto [u, v] = g.edges()[i];
            parent[find(u)] = find(v);
        }
        // center per DSU component: the vertex of degree >= 2, else lower id
        std::map<int, int> center;
        for (int x : touched) {
            int r = find(x);
            auto it = center.find(r);
            if (it == center.end())
                center[r] = x;
            else if (deg[x] >= 2)
                center[r] = x;
            else if (deg[it->second] < 2)
                it->second = std::min(it->second, x);
        }
        for (int i : component_edges) {
            auto [u, v] = g.edges()[i];
            int h = center[find(u)];
            arcs[i] = u == h ? std::make_pair(v, u) : std::make_pair(u, v);
        }
        for (int x : touched) deg[x] = 0;
    }
    return {c, std::move(arcs)};
}

/// Per-vertex color lists; every list non-empty, order meaningful (the
/// greedy picks the earliest feasible entry).
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    explicit ListAssignment(std::vector<std::vector<int>> ls) : lists(std::move(ls)) {
        for (const auto& l : lists)
            if (l.empty()) throw error("list assignment: empty list");
    }
};

namespace detail {

// P(v): vertices u before v that are adjacent to v, or joined to v by a
// path u-w-v with u before w.
inline std::vector<int> star_greedy_blockers(const Graph& g, const Ordering& o, int v) {
    std::vector<char> in(g.vertex_count(), 0);
    std::vector<int> out;
    for (int u : g.neighbors(v))
        if (o.before(u, v) && !in[u]) {
            in[u] = 1;
            out.push_back(u);
        }
    for (int w : g.neighbors(v))
        for (int u : g.neighbors(w))
            if (u != v && o.before(u, v) && o.before(u, w) && !in[u]) {
                in[u] = 1;
                out.push_back(u);
            }
    return out;
}

} // namespace detail

/// Greedy star coloring along `o` with a uniform palette {0..palette-1}
/// (palette <= 0 means unbounded): each vertex avoids every color seen on
/// P(v). Throws when the palette runs out, which signals that the list-size
/// precondition was violated.
inline Coloring greedy_star_coloring(const Graph& g, const Ordering& o, int palette = 0) {
    int n = g.vertex_count();
    if (o.size() != n) throw error("greedy star coloring: ordering size mismatch");
    std::vector<int> color(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = o.at(i);
        std::vector<char> used(n + 1, 0);
        for (int u : detail::star_greedy_blockers(g, o, v)) used[color[u]] = 1;
        int c = 0;
        while (c <= n && used[c]) ++c;
        if (palette > 0 && c >= palette)
            throw precondition_error("greedy star coloring: list exhausted at vertex " +
                                     std::to_string(v));
        color[v] = c;
    }
    return Coloring(std::move(color));
}

/// List variant: the earliest list entry not blocked by P(v).
inline Coloring greedy_star_coloring(const Graph& g, const Ordering& o,
                                     const ListAssignment& lists) {
    int n = g.vertex_count();
    if (o.size() != n || static_cast<int>(lists.lists.size()) != n)
        throw error("greedy star coloring: size mismatch");
    std::vector<int> color(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = o.at(i);
        auto blockers = detail::star_greedy_blockers(g, o, v);
        int chosen = -1;
        for (int cand : lists.lists[v]) {
            bool blocked = false;
            for (int u : blockers)
                if (color[u] == cand) {
                    blocked = true;
                    break;
                }
            if (!blocked) {
                chosen = cand;
                break;
            }
        }
        if (chosen < 0)
            throw precondition_error("greedy star coloring: list exhausted at vertex " +
                                     std::to_string(v));
        color[v] = chosen;
    }
    return Coloring(std::move(color));
}

namespace detail {

// Incremental legality for the star-coloring search: vertex v (just
// colored; all colored ids are < v) must not close a bichromatic P4.
inline bool star_extension_ok(const Graph& g, const std::vector<int>& c, int v) {
    for (int u : g.neighbors(v)) {
        if (u > v || c[u] < 0) continue;
        if (c[u] == c[v]) return false;
    }
    // v as an endpoint: v-w-x-y
    for (int w : g.neighbors(v)) {
        if (w > v || c[w] < 0) continue;
        for (int x : g.neighbors(w)) {
            if (x == v || x > v || c[x] != c[v]) continue;
            for (int y : g.neighbors(x))
                if (y != w && y != v && y < v && c[y] == c[w]) return false;
        }
    }
    // v in second position: u-v-x-y
    const auto& nbrs = g.neighbors(v);
    for (int u : nbrs) {
        if (u > v || c[u] < 0) continue;
        for (int x : nbrs) {
            if (x == u || x > v || c[x] != c[u]) continue;
            for (int y : g.neighbors(x))
                if (y != v && y != u && y < v && c[y] == c[v]) return false;
        }
    }
    return true;
}

inline bool decide_star_colorable(const Graph& g, int k, std::vector<int>& out) {
    int n = g.vertex_count();
    std::vector<int> c(n, -1);
    std::function<bool(int, int)> place = [&](int v, int maxused) -> bool {
        if (v == n) return true;
        int top = std::min(k - 1, maxused + 1);
        for (int col = 0; col <= top; ++col) {
            c[v] = col;
            if (star_extension_ok(g, c, v) && place(v + 1, std::max(maxused, col))) return true;
            c[v] = -1;
        }
        return false;
    };
    if (!place(0, -1)) return false;
    out = c;
    return true;
}

} // namespace detail

/// Minimum star-coloring palette with witness, by exhaustive search with
/// partial-violation pruning.
inline ChromaticResult star_chromatic_exact(const Graph& g, int cap = kDefaultStarCap) {
    int n = g.vertex_count();
    if (n > cap)
        throw cap_exceeded("star chromatic oracle: " + std::to_string(n) +
                           " vertices exceeds cap " + std::to_string(cap));
    if (n == 0) return {0, Coloring(std::vector<int>{})};
    int lb = clique_number_exact(g).size; // χ_s >= χ >= ω
    for (int k = std::max(1, lb);; ++k) {
        std::vector<int> witness;
        if (detail::decide_star_colorable(g, k, witness)) return {k, Coloring(std::move(witness))};
    }
}

namespace detail {

// Does the {a,b}-colored subgraph of the colored prefix contain a cycle?
inline bool bicolored_cycle(const Graph& g, const std::vector<int>& c, int a, int b) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int vertices = 0, edges = 0, comps = 0;
    for (int v = 0; v < n; ++v) {
        if (c[v] != a && c[v] != b) continue;
        ++vertices;
        if (comp[v] != -1) continue;
        ++comps;
        std::vector<int> stack{v};
        comp[v] = v;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (c[y] != a && c[y] != b) continue;
                if (x < y) ++edges;
                if (comp[y] == -1) {
                    comp[y] = v;
                    stack.push_back(y);
                }
            }
        }
    }
    return edges > vertices - comps; // a forest has exactly n - #components edges
}

inline bool decide_acyclic_colorable(const Graph& g, int k) {
    int n = g.vertex_count();
    std::vector<int> c(n, -1);
    std::function<bool(int, int)> place = [&](int v, int maxused) -> bool {
        if (v == n) return true;
        int top = std::min(k - 1, maxused + 1);
        for (int col = 0; col <= top; ++col) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (u < v && c[u] == col) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            c[v] = col;
            for (int b = 0; ok && b <= std::max(maxused, col); ++b)
                if (b != col && bicolored_cycle(g, c, col, b)) ok = false;
            if (ok && place(v + 1, std::max(maxused, col))) return true;
            c[v] = -1;
        }
        return false;
    };
    return place(0, -1);
}

} // namespace detail

/// Minimum palette of a proper coloring whose every 2-color union induces
/// a forest.
inline int acyclic_chromatic_exact(const Graph& g, int cap = kDefaultAcyclicCap) {
    int n = g.vertex_count();
    if (n > cap)
        throw cap_exceeded("acyclic chromatic oracle: " + std::to_string(n) +
                           " vertices exceeds cap " + std::to_string(cap));
    if (n == 0) return 0;
    int lb = clique_number_exact(g).size;
    for (int k = std::max(1, lb);; ++k)
        if (detail::decide_acyclic_colorable(g, k)) return k;
}

} // namespace sigmacol
