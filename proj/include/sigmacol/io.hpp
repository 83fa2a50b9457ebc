#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sigmacol/errors.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/ordering.hpp"

namespace sigmacol {

namespace detail {

// Strips comments (# to end of line) and returns the data lines together
// with their 1-based line numbers. Blank lines are skipped.
inline std::vector<std::pair<int, std::string>> data_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(lineno, line);
    }
    return out;
}

inline std::vector<long long> parse_ints(const std::string& s, int lineno) {
    std::istringstream iss(s);
    std::vector<long long> vals;
    std::string tok;
    while (iss >> tok) {
        try {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("line " + std::to_string(lineno) + ": expected integer, got '" +
                              tok + "'");
        }
    }
    return vals;
}

} // namespace detail

/// Graph text format: `n m` then exactly m lines `u v` with 0 <= u < v < n.
inline Graph parse_graph(std::istream& in) {
    auto lines = detail::data_lines(in);
    if (lines.empty()) throw parse_error("graph file: missing 'n m' header");
    auto header = detail::parse_ints(lines[0].second, lines[0].first);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw parse_error("line " + std::to_string(lines[0].first) + ": expected 'n m'");
    long long n = header[0], m = header[1];
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw parse_error("graph file: expected " + std::to_string(m) + " edge lines, found " +
                          std::to_string(lines.size() - 1));
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto [lineno, text] = lines[i];
        auto vals = detail::parse_ints(text, lineno);
        if (vals.size() != 2)
            throw parse_error("line " + std::to_string(lineno) + ": expected 'u v'");
        long long u = vals[0], v = vals[1];
        if (u < 0 || v >= n || u >= v)
            throw parse_error("line " + std::to_string(lineno) + ": edge must satisfy 0 <= u < v < n");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph::from_edges(static_cast<int>(n), std::move(edges));
    } catch (const error& e) {
        throw parse_error(std::string("graph file: ") + e.what());
    }
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

struct SigmaFile {
    int depth = 1;
    std::vector<std::vector<int>> sets; // indexed by vertex; absent vertices empty
};

/// Sigma text format: optional `depth d` header, then `v: u1 u2 ... uk`
/// lines. Vertices absent from the file get an empty set. Repeated `v:`
/// lines are an error. Ball membership is validated later, against a graph.
inline SigmaFile parse_sigma(std::istream& in, int n) {
    auto lines = detail::data_lines(in);
    SigmaFile file;
    file.sets.assign(n, {});
    std::vector<bool> seen(n, false);
    size_t start = 0;
    if (!lines.empty()) {
        std::istringstream iss(lines[0].second);
        std::string word;
        iss >> word;
        if (word == "depth") {
            auto rest = detail::parse_ints(lines[0].second.substr(lines[0].second.find("depth") + 5),
                                           lines[0].first);
            if (rest.size() != 1 || rest[0] < 1)
                throw parse_error("line " + std::to_string(lines[0].first) +
                                  ": expected 'depth d' with d >= 1");
            file.depth = static_cast<int>(rest[0]);
            start = 1;
        }
    }
    for (size_t i = start; i < lines.size(); ++i) {
        auto [lineno, text] = lines[i];
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw parse_error("line " + std::to_string(lineno) + ": expected 'v: u1 u2 ...'");
        auto left = detail::parse_ints(text.substr(0, colon), lineno);
        if (left.size() != 1 || left[0] < 0 || left[0] >= n)
            throw parse_error("line " + std::to_string(lineno) + ": bad vertex before ':'");
        int v = static_cast<int>(left[0]);
        if (seen[v])
            throw parse_error("line " + std::to_string(lineno) + ": repeated entry for vertex " +
                              std::to_string(v));
        seen[v] = true;
        auto members = detail::parse_ints(text.substr(colon + 1), lineno);
        std::vector<int> set;
        for (long long u : members) {
            if (u < 0 || u >= n)
                throw parse_error("line " + std::to_string(lineno) + ": vertex " +
                                  std::to_string(u) + " out of range");
            set.push_back(static_cast<int>(u));
        }
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            throw parse_error("line " + std::to_string(lineno) + ": duplicate member in set");
        file.sets[v] = std::move(set);
    }
    return file;
}

inline void write_sigma(std::ostream& out, const std::vector<std::vector<int>>& sets, int depth) {
    if (depth != 1) out << "depth " << depth << '\n';
    for (size_t v = 0; v < sets.size(); ++v) {
        if (sets[v].empty()) continue;
        out << v << ':';
        for (int u : sets[v]) out << ' ' << u;
        out << '\n';
    }
}

/// Ordering text format: one line of n space-separated vertex ids.
inline Ordering parse_ordering(std::istream& in, int n) {
    auto lines = detail::data_lines(in);
    if (lines.size() != 1)
        throw parse_error("ordering file: expected exactly one data line");
    auto vals = detail::parse_ints(lines[0].second, lines[0].first);
    if (static_cast<int>(vals.size()) != n)
        throw parse_error("ordering file: expected " + std::to_string(n) + " ids");
    std::vector<int> perm;
    for (long long v : vals) perm.push_back(static_cast<int>(v));
    try {
        return Ordering(std::move(perm));
    } catch (const error& e) {
        throw parse_error(std::string("ordering file: ") + e.what());
    }
}

/// List-assignment text format: `v: c1 c2 ... cm` per vertex; every vertex
/// of the graph must get a non-empty list.
inline std::vector<std::vector<int>> parse_lists(std::istream& in, int n) {
    auto lines = detail::data_lines(in);
    std::vector<std::vector<int>> lists(n);
    std::vector<bool> seen(n, false);
    for (auto [lineno, text] : lines) {
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw parse_error("line " + std::to_string(lineno) + ": expected 'v: c1 c2 ...'");
        auto left = detail::parse_ints(text.substr(0, colon), lineno);
        if (left.size() != 1 || left[0] < 0 || left[0] >= n)
            throw parse_error("line " + std::to_string(lineno) + ": bad vertex before ':'");
        int v = static_cast<int>(left[0]);
        if (seen[v])
            throw parse_error("line " + std::to_string(lineno) + ": repeated lists for vertex " +
                              std::to_string(v));
        seen[v] = true;
        for (long long c : detail::parse_ints(text.substr(colon + 1), lineno)) {
            if (c < 0)
                throw parse_error("line " + std::to_string(lineno) + ": negative color");
            lists[v].push_back(static_cast<int>(c));
        }
        if (lists[v].empty())
            throw parse_error("line " + std::to_string(lineno) + ": empty list for vertex " +
                              std::to_string(v));
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw parse_error("list file: no list for vertex " + std::to_string(v));
    return lists;
}

struct HypergraphFile {
    int n = 0;
    std::vector<std::vector<int>> hyperedges;
};

/// Hypergraph text format: `n m` then m lines, each a space-separated
/// vertex set. Fullness is validated by the FullHypergraph constructor.
inline HypergraphFile parse_hypergraph(std::istream& in) {
    auto lines = detail::data_lines(in);
    if (lines.empty()) throw parse_error("hypergraph file: missing 'n m' header");
    auto header = detail::parse_ints(lines[0].second, lines[0].first);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw parse_error("line " + std::to_string(lines[0].first) + ": expected 'n m'");
    HypergraphFile file;
    file.n = static_cast<int>(header[0]);
    long long m = header[1];
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw parse_error("hypergraph file: expected " + std::to_string(m) +
                          " hyperedge lines, found " + std::to_string(lines.size() - 1));
    for (size_t i = 1; i < lines.size(); ++i) {
        auto [lineno, text] = lines[i];
        std::vector<int> edge;
        for (long long v : detail::parse_ints(text, lineno)) {
            if (v < 0 || v >= file.n)
                throw parse_error("line " + std::to_string(lineno) + ": vertex " +
                                  std::to_string(v) + " out of range");
            edge.push_back(static_cast<int>(v));
        }
        if (edge.empty())
            throw parse_error("line " + std::to_string(lineno) + ": empty hyperedge");
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw parse_error("line " + std::to_string(lineno) + ": duplicate vertex in hyperedge");
        file.hyperedges.push_back(std::move(edge));
    }
    return file;
}

inline void write_hypergraph(std::ostream& out, int n,
                             const std::vector<std::vector<int>>& hyperedges) {
    out << n << ' ' << hyperedges.size() << '\n';
    for (const auto& e : hyperedges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

} // namespace sigmacol
