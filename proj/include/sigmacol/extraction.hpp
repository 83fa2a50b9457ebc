#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/graph_algorithms.hpp"
#include "sigmacol/hypergraph.hpp"
#include "sigmacol/neighborhood_system.hpp"
#include "sigmacol/rng.hpp"
#include "sigmacol/sigma_graph.hpp"

namespace sigmacol {

/// ω(Σ) = ω(G_Σ), with a witness Σ-clique.
inline CliqueResult omega_sigma(const Graph& g, const NeighborhoodSystem& s,
                                int cap = kDefaultCliqueCap) {
    return clique_number_exact(build_sigma_graph(g, s), cap);
}

/// Every pair of c covered by some Σ(w)?
inline bool is_sigma_clique(const Graph& g, const NeighborhoodSystem& s,
                            const std::vector<int>& c) {
    std::vector<bool> in(g.vertex_count(), false);
    for (int v : c) {
        if (v < 0 || v >= g.vertex_count()) throw error("sigma clique: vertex out of range");
        in[v] = true;
    }
    std::map<std::pair<int, int>, bool> covered;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (c[i] != c[j]) covered[{std::min(c[i], c[j]), std::max(c[i], c[j])}] = false;
    for (int w = 0; w < g.vertex_count(); ++w) {
        const auto& set = s.sigma(w);
        for (size_t i = 0; i < set.size(); ++i)
            for (size_t j = i + 1; j < set.size(); ++j) {
                auto it = covered.find({set[i], set[j]});
                if (it != covered.end()) it->second = true;
            }
    }
    for (const auto& [pair, ok] : covered)
        if (!ok) return false;
    return true;
}

struct SigmaCliqueHypergraph {
    FullHypergraph hypergraph;       // on local ids 0..|c|-1
    std::vector<int> vertex_of;      // local id -> vertex of g
    std::vector<int> witness_of;     // hyperedge -> the first witnessing w
};

/// Views a Σ-clique as a full hypergraph: hyperedges are the traces
/// Σ(w) ∩ c of size >= 2, deduplicated keeping the first witness, in
/// increasing witness order.
inline SigmaCliqueHypergraph sigma_clique_to_hypergraph(const Graph& g,
                                                        const NeighborhoodSystem& s,
                                                        std::vector<int> c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (!is_sigma_clique(g, s, c))
        throw precondition_error("sigma clique to hypergraph: not a Σ-clique");
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) local[c[i]] = i;
    std::vector<std::vector<int>> hyperedges;
    std::vector<int> witness_of;
    std::map<std::vector<int>, int> dedupe;
    for (int w = 0; w < g.vertex_count(); ++w) {
        std::vector<int> trace;
        for (int u : s.sigma(w))
            if (local[u] >= 0) trace.push_back(local[u]);
        if (trace.size() < 2) continue;
        if (dedupe.try_emplace(trace, w).second) {
            hyperedges.push_back(trace);
            witness_of.push_back(w);
        }
    }
    return {FullHypergraph(static_cast<int>(c.size()), std::move(hyperedges)), std::move(c),
            std::move(witness_of)};
}

struct Rank2Extraction {
    std::vector<int> vertices; // >= n, rank-2 full
    int rounds;                // sampling rounds used
};

/// Randomized rank-2 extraction: sample a 2n-subset X, count pairs whose
/// chosen hyperedge meets X in more than two vertices, and once fewer
/// than n pairs are bad, delete one endpoint per bad pair. Any full
/// hypergraph of rank r on at least 4rn²+2 vertices admits this.
/// Deterministic under the seed; the retry cap only guards against bugs,
/// since a round succeeds with probability bounded away from zero.
inline Rank2Extraction extract_rank2_subhypergraph(const FullHypergraph& h, int n,
                                                   std::uint64_t seed, int retry_cap = 0) {
    if (n < 1) throw error("rank-2 extraction: n must be >= 1");
    long long threshold = 4LL * h.rank() * n * n + 2;
    if (h.vertex_count() < threshold)
        throw precondition_error("rank-2 extraction: too few vertices (" +
                                 std::to_string(h.vertex_count()) + " < 4rn^2+2 = " +
                                 std::to_string(threshold) + ")");
    if (retry_cap <= 0) retry_cap = 64 * 64;
    Rng rng(seed);
    int N = h.vertex_count();
    std::vector<bool> in(N, false);
    for (int round = 1; round <= retry_cap; ++round) {
        std::vector<int> x = rng.sample(N, 2 * n);
        for (int v : x) in[v] = true;
        std::vector<std::pair<int, int>> bad;
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = i + 1; j < x.size(); ++j) {
                const auto& e = h.hyperedges()[h.witness_edge(x[i], x[j])];
                int hits = 0;
                for (int y : e)
                    if (in[y]) ++hits;
                if (hits > 2) bad.emplace_back(x[i], x[j]);
            }
        if (static_cast<int>(bad.size()) < n) {
            std::vector<bool> deleted(N, false);
            for (auto [u, v] : bad) {
                if (deleted[u] || deleted[v]) continue;
                deleted[std::max(u, v)] = true;
            }
            std::vector<int> y;
            for (int v : x) {
                if (!deleted[v]) y.push_back(v);
                in[v] = false;
            }
            return {std::move(y), round};
        }
        for (int v : x) in[v] = false;
    }
    throw error("rank-2 extraction: sampling budget exhausted after " +
                std::to_string(retry_cap) + " rounds (likely a bug)");
}

struct SubdivisionExtraction {
    std::vector<int> branch;      // n vertices, ascending
    std::vector<int> subdividers; // C(n,2) witnesses, aligned with lex pairs of branch
};

/// From a Σ-clique of size >= 3n in a ρ=2 system, extracts a 1-subdivision
/// of K_n: the graph H on c joining pairs with an outside witness
/// Σ(w) = {u,v} misses at most |c| pairs, so the min-degree greedy on its
/// complement (Caro-Wei) reaches an H-clique of size |c|/3 >= n.
inline SubdivisionExtraction extract_subdivided_clique(const Graph& g,
                                                       const NeighborhoodSystem& s,
                                                       std::vector<int> c, int n) {
    if (n < 1) throw error("subdivision extraction: n must be >= 1");
    if (s.rho() != 2)
        throw precondition_error("subdivision extraction: wrong rho " +
                                 std::to_string(s.rho()) + " (requires exactly 2)");
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (!is_sigma_clique(g, s, c))
        throw precondition_error("subdivision extraction: not a Σ-clique");
    int size = static_cast<int>(c.size());
    if (size < 3 * n)
        throw precondition_error("subdivision extraction: clique too small (" +
                                 std::to_string(size) + " < 3n = " + std::to_string(3 * n) + ")");
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < size; ++i) local[c[i]] = i;

    // H-edges: pairs of c witnessed from outside c by Σ(w) = {u,v}
    std::map<std::pair<int, int>, int> outside_witness; // local pair -> lowest w
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (local[w] >= 0) continue;
        const auto& set = s.sigma(w);
        if (set.size() != 2 || local[set[0]] < 0 || local[set[1]] < 0) continue;
        outside_witness.try_emplace({local[set[0]], local[set[1]]}, w);
    }
    long long pairs = static_cast<long long>(size) * (size - 1) / 2;
    if (static_cast<long long>(outside_witness.size()) < pairs - size)
        throw precondition_error(
            "subdivision extraction: clique too small in effect; only " +
            std::to_string(outside_witness.size()) + " pairs have outside witnesses, " +
            "below the Turán threshold " + std::to_string(pairs - size));

    // Caro-Wei greedy independent set on the complement of H
    std::vector<std::vector<bool>> comp(size, std::vector<bool>(size, false));
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (!outside_witness.count({i, j})) comp[i][j] = comp[j][i] = true;
    std::vector<bool> removed(size, false);
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < n) {
        int best = -1, best_deg = size + 1;
        for (int i = 0; i < size; ++i) {
            if (removed[i]) continue;
            int deg = 0;
            for (int j = 0; j < size; ++j)
                if (!removed[j] && comp[i][j]) ++deg;
            if (deg < best_deg) {
                best_deg = deg;
                best = i;
            }
        }
        if (best == -1)
            throw precondition_error(
                "subdivision extraction: greedy ran out of vertices before reaching n");
        chosen.push_back(best);
        removed[best] = true;
        for (int j = 0; j < size; ++j)
            if (comp[best][j]) removed[j] = true;
    }
    std::sort(chosen.begin(), chosen.end());

    SubdivisionExtraction out;
    for (int i : chosen) out.branch.push_back(c[i]);
    for (size_t a = 0; a < chosen.size(); ++a)
        for (size_t b = a + 1; b < chosen.size(); ++b)
            out.subdividers.push_back(outside_witness.at({chosen[a], chosen[b]}));
    return out;
}

/// Do branch + subdividers form a 1-subdivision of a clique inside g?
/// (Each subdivider adjacent in g to both endpoints of its pair; all
/// vertices distinct.)
inline bool is_one_subdivision_of_clique(const Graph& g, const std::vector<int>& branch,
                                         const std::vector<int>& subdividers) {
    size_t b = branch.size();
    if (subdividers.size() != b * (b - 1) / 2) return false;
    std::vector<int> all = branch;
    all.insert(all.end(), subdividers.begin(), subdividers.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    size_t idx = 0;
    for (size_t i = 0; i < b; ++i)
        for (size_t j = i + 1; j < b; ++j, ++idx) {
            int w = subdividers[idx];
            if (!g.has_edge(w, branch[i]) || !g.has_edge(w, branch[j])) return false;
        }
    return true;
}

} // namespace sigmacol
