#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sigmacol/coloring.hpp"
#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/graph_algorithms.hpp"
#include "sigmacol/neighborhood_system.hpp"
#include "sigmacol/sigma_graph.hpp"
#include "sigmacol/star_coloring.hpp"

namespace sigmacol {

inline constexpr int kDefaultChoosabilityVertexCap = 8;
inline constexpr int kDefaultChoosabilityListCap = 4;

/// True iff any two vertices appearing together in some Σ(w) receive
/// different colors (equivalently: c is proper on G_Σ).
inline bool is_sigma_valid(const Graph& g, const NeighborhoodSystem& s, const Coloring& c) {
    if (c.size() != g.vertex_count()) throw error("sigma validity: coloring size mismatch");
    for (int w = 0; w < g.vertex_count(); ++w) {
        const auto& set = s.sigma(w);
        for (size_t i = 0; i < set.size(); ++i)
            for (size_t j = i + 1; j < set.size(); ++j)
                if (c[set[i]] == c[set[j]]) return false;
    }
    return true;
}

/// Greedy coloring of G_Σ in degeneracy order; uses at most
/// degeneracy(G_Σ)+1 <= ⌊mad(Σ)⌋+1 colors. With `also_proper` the edges of
/// G itself are added to the constraint graph first.
inline Coloring sigma_color_greedy(const Graph& g, const NeighborhoodSystem& s,
                                   bool also_proper = false) {
    Graph constraints = build_sigma_graph(g, s);
    if (also_proper) {
        std::set<std::pair<int, int>> merged(constraints.edges().begin(),
                                             constraints.edges().end());
        merged.insert(g.edges().begin(), g.edges().end());
        constraints = Graph::from_edges(
            g.vertex_count(), std::vector<std::pair<int, int>>(merged.begin(), merged.end()));
    }
    return greedy_coloring(constraints, degeneracy_ordering(constraints).ordering);
}

/// The two-level coloring pipeline behind χ(Σ) <= χ_s(G)²ρ(Σ).
///
/// From a star coloring c1 with k colors: build the colored in-orientation,
/// then the conflict graph G2 joining u,v whenever some w has both edges
/// oriented into it and u,v ∈ Σ(w). G2 has maximum degree at most k(ρ-1),
/// so a greedy c2 uses at most k(ρ-1)+1 colors, and (c1,c2) flattened with
/// stride kρ is a Σ-coloring with at most k²ρ colors.
inline Coloring sigma_color_via_star(const Graph& g, const NeighborhoodSystem& s,
                                     const Coloring& c1) {
    if (s.depth() != 1)
        throw precondition_error("sigma star pipeline: wrong depth " +
                                 std::to_string(s.depth()) + " (requires a depth-1 system)");
    InOrientation io = orientation_from_star_coloring(g, c1); // checks the star precondition
    int n = g.vertex_count();
    int rho = s.rho();
    if (rho == 0) return Coloring(std::vector<int>(n, 0));

    std::set<std::pair<int, int>> pairs;
    for (int w = 0; w < n; ++w) {
        std::vector<int> oriented_in;
        for (int u : s.sigma(w))
            if (io.arcs[g.edge_index(u, w)].second == w) oriented_in.push_back(u);
        for (size_t i = 0; i < oriented_in.size(); ++i)
            for (size_t j = i + 1; j < oriented_in.size(); ++j)
                pairs.emplace(std::min(oriented_in[i], oriented_in[j]),
                              std::max(oriented_in[i], oriented_in[j]));
    }
    Graph g2 = Graph::from_edges(n, std::vector<std::pair<int, int>>(pairs.begin(), pairs.end()));
    Coloring c2 = greedy_coloring(g2, degeneracy_ordering(g2).ordering);

    int k = c1.palette_size();
    long long stride = static_cast<long long>(k) * rho;
    std::vector<int> combined(n);
    for (int v = 0; v < n; ++v)
        combined[v] = static_cast<int>(c1[v] * stride + c2[v]);
    return Coloring(std::move(combined));
}

using PairColorer = std::function<Coloring(const Graph&, const NeighborhoodSystem&)>;

/// Pair-decomposition product coloring: split every Σ(v) into its pairs,
/// color each pair system with `pair_colorer`, and combine the colors
/// coordinate-wise. Palette at most k^C(ρ,2) for pair palettes of size k.
/// Systems with ρ < 2 carry no constraints and get a single color.
inline Coloring sigma_color_product(const Graph& g, const NeighborhoodSystem& s,
                                    const PairColorer& pair_colorer) {
    int n = g.vertex_count();
    int rho = s.rho();
    if (rho < 2) return Coloring(std::vector<int>(n, 0));
    int slots = rho * (rho - 1) / 2;
    std::vector<std::vector<std::vector<int>>> slot_sets(
        slots, std::vector<std::vector<int>>(n));
    for (int v = 0; v < n; ++v) {
        const auto& set = s.sigma(v); // sorted, so pair enumeration is lexicographic
        int slot = 0;
        for (size_t i = 0; i < set.size(); ++i)
            for (size_t j = i + 1; j < set.size(); ++j)
                slot_sets[slot++][v] = {set[i], set[j]};
    }
    std::vector<int> combined(n, 0);
    long long stride = 1;
    for (int i = 0; i < slots; ++i) {
        auto system = NeighborhoodSystem::validated(g, slot_sets[i], s.depth());
        Coloring ci = pair_colorer(g, system);
        if (ci.size() != n)
            throw error("sigma product coloring: pair colorer returned wrong size");
        int base = 0;
        for (int v = 0; v < n; ++v) base = std::max(base, ci[v] + 1);
        for (int v = 0; v < n; ++v) {
            long long value = combined[v] + stride * ci[v];
            if (value > (1LL << 30)) throw error("sigma product coloring: color overflow");
            combined[v] = static_cast<int>(value);
        }
        stride *= base;
    }
    return Coloring(std::move(combined));
}

/// χ(Σ) = χ(G_Σ), through the exact chromatic oracle.
inline int sigma_chromatic_exact(const Graph& g, const NeighborhoodSystem& s,
                                 int cap = kDefaultChromaticCap) {
    return chromatic_number_exact(build_sigma_graph(g, s), cap).chi;
}

namespace detail {

// L-colorability by backtracking in id order.
inline bool list_colorable(const std::vector<std::uint32_t>& adj,
                           const std::vector<std::vector<int>>& lists) {
    int n = static_cast<int>(adj.size());
    std::vector<int> chosen(n, -1);
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) return true;
        for (int c : lists[v]) {
            bool ok = true;
            for (std::uint32_t s = adj[v]; s; s &= s - 1) {
                int u = __builtin_ctz(s);
                if (u < v && chosen[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen[v] = c;
                if (place(v + 1)) return true;
                chosen[v] = -1;
            }
        }
        return false;
    };
    return place(0);
}

// Alon-Tarsi certificate: a nonzero coefficient of the graph polynomial on
// a monomial with all degrees <= k-1 proves ch <= k. Coefficients are
// tracked in a base-k array; monomials exceeding the degree cap can never
// come back down, so they are discarded as they appear.
inline bool alon_tarsi_certificate(const std::vector<std::uint32_t>& adj, int k) {
    int n = static_cast<int>(adj.size());
    long long size = 1;
    for (int i = 0; i < n; ++i) size *= k;
    std::vector<long long> coeff(size, 0), next(size, 0);
    coeff[0] = 1;
    std::vector<long long> place(n, 1);
    for (int i = 1; i < n; ++i) place[i] = place[i - 1] * k;
    for (int u = 0; u < n; ++u)
        for (std::uint32_t s = adj[u] & ~((std::uint32_t{1} << (u + 1)) - 1); s; s &= s - 1) {
            int v = __builtin_ctz(s);
            std::fill(next.begin(), next.end(), 0);
            for (long long idx = 0; idx < size; ++idx) {
                long long c = coeff[idx];
                if (c == 0) continue;
                int du = static_cast<int>(idx / place[u]) % k;
                int dv = static_cast<int>(idx / place[v]) % k;
                if (du + 1 < k) next[idx + place[u]] += c;
                if (dv + 1 < k) next[idx + place[v]] -= c;
            }
            coeff.swap(next);
        }
    for (long long c : coeff)
        if (c != 0) return true;
    return false;
}

struct ChoosabilitySearch {
    const std::vector<std::uint32_t>& adj; // core adjacency
    int n;
    int k;
    std::vector<std::vector<int>> lists;
    std::vector<int> order;                 // vertices of the current subset H
    std::vector<std::vector<int>> finish_at; // position -> vertices whose closed nbhd completes
    std::uint32_t subset = 0;

    // DFS over canonical list assignments on the subset. Colors are
    // introduced in increasing order; every color of every list must be
    // shared with some neighbor inside the subset (otherwise a smaller
    // subset would carry the bad assignment). Returns true if some complete
    // assignment is not colorable.
    bool bad_assignment(int pos, int maxc) {
        if (pos == static_cast<int>(order.size())) {
            std::vector<std::vector<int>> sub_lists(n);
            for (int v : order) sub_lists[v] = lists[v];
            std::vector<std::uint32_t> sub_adj(n, 0);
            for (int v : order) sub_adj[v] = adj[v] & subset;
            // restrict to subset ids (vertices outside have empty lists and
            // no edges; give them a dummy color so the search skips them)
            for (int v = 0; v < n; ++v)
                if (!(subset & (std::uint32_t{1} << v))) sub_lists[v] = {0};
            return !list_colorable(sub_adj, sub_lists);
        }
        int v = order[pos];
        std::vector<int> pool;
        for (int c = 0; c <= maxc; ++c) pool.push_back(c);
        // choose j existing colors and k-j fresh ones (fresh block is
        // canonical: maxc+1, maxc+2, ...)
        std::vector<int> pick;
        std::function<bool(int, int)> choose = [&](int from, int fresh) -> bool {
            if (static_cast<int>(pick.size()) + fresh == k) {
                lists[v] = pick;
                for (int t = 0; t < fresh; ++t) lists[v].push_back(maxc + 1 + t);
                if (obligations_hold(pos) && bad_assignment(pos + 1, maxc + fresh)) return true;
                lists[v].clear();
                return false;
            }
            for (int i = from; i < static_cast<int>(pool.size()); ++i) {
                pick.push_back(pool[i]);
                if (choose(i + 1, fresh)) return true;
                pick.pop_back();
            }
            return false;
        };
        for (int fresh = 0; fresh <= k; ++fresh)
            if (choose(0, fresh)) return true;
        lists[v].clear();
        return false;
    }

    // check the vertices whose closed neighborhood completed at `pos`
    bool obligations_hold(int pos) {
        for (int t : finish_at[pos + 1]) {
            for (int x : lists[t]) {
                bool shared = false;
                for (std::uint32_t s = adj[t] & subset; s && !shared; s &= s - 1)
                    if (std::find(lists[__builtin_ctz(s)].begin(), lists[__builtin_ctz(s)].end(),
                                  x) != lists[__builtin_ctz(s)].end())
                        shared = true;
                if (!shared) return false;
            }
        }
        return true;
    }
};

} // namespace detail

/// Tiny-instance decision "is ch(G) <= k".
///
/// Wins quickly in the common cases: vertices of degree < k peel away, the
/// identical-lists assignment rejects non-k-colorable cores, and an
/// Alon-Tarsi coefficient certifies most positive answers. The remaining
/// gap cases fall through to exhaustive adversary search over canonical
/// list assignments on induced subgraphs of minimum degree >= k.
inline bool choosability_check(const Graph& g_sigma, int k,
                               int vertex_cap = kDefaultChoosabilityVertexCap,
                               int list_cap = kDefaultChoosabilityListCap) {
    int n = g_sigma.vertex_count();
    if (n > vertex_cap || k > list_cap)
        throw cap_exceeded("choosability check: caps are " + std::to_string(vertex_cap) +
                           " vertices / lists of " + std::to_string(list_cap));
    if (k < 1) throw error("choosability check: k must be >= 1");

    // peel vertices that can always be colored last
    std::vector<int> alive;
    for (int v = 0; v < n; ++v) alive.push_back(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < alive.size(); ++i) {
            int v = alive[i];
            int deg = 0;
            for (int u : g_sigma.neighbors(v))
                if (std::find(alive.begin(), alive.end(), u) != alive.end()) ++deg;
            if (deg < k) {
                alive.erase(alive.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    if (alive.empty()) return true;

    std::vector<int> core_ids;
    Graph core = g_sigma.induced(alive, &core_ids);
    int cn = core.vertex_count();
    std::vector<std::uint32_t> adj(cn, 0);
    for (auto [u, v] : core.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }

    { // identical lists = plain k-colorability
        std::vector<int> ignore;
        if (!detail::decide_k_colorable(core, k, ignore)) return false;
    }
    if (detail::alon_tarsi_certificate(adj, k)) return true;

    // exhaustive: a bad assignment, if any, lives on an induced subgraph of
    // minimum degree >= k with every list color shared along an edge
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << cn); ++subset) {
        bool min_deg_ok = true;
        for (std::uint32_t s = subset; s && min_deg_ok; s &= s - 1)
            if (__builtin_popcount(adj[__builtin_ctz(s)] & subset) < k) min_deg_ok = false;
        if (!min_deg_ok) continue;
        detail::ChoosabilitySearch search{adj, cn, k, {}, {}, {}, subset};
        search.lists.assign(cn, {});
        for (std::uint32_t s = subset; s; s &= s - 1) search.order.push_back(__builtin_ctz(s));
        std::sort(search.order.begin(), search.order.end());
        search.finish_at.assign(search.order.size() + 1, {});
        for (int t : search.order) {
            int last_pos = 0;
            for (size_t p = 0; p < search.order.size(); ++p) {
                int v = search.order[p];
                if (v == t || (adj[t] & (std::uint32_t{1} << v)))
                    last_pos = static_cast<int>(p);
            }
            search.finish_at[last_pos + 1].push_back(t);
        }
        if (search.bad_assignment(0, -1)) return false;
    }
    return true;
}

} // namespace sigmacol
