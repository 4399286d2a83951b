// Simple undirected graphs: bitset adjacency, deterministic G(n, n^{-alpha})
// sampling, edge-list text I/O, and factories for the small named graphs the
// test-suite and oracles refer to.
#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rgl/bitset.hpp"
#include "rgl/errors.hpp"
#include "rgl/rational.hpp"
#include "rgl/rng.hpp"

namespace rgl {

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, Bitset(n)) {}

    int n() const { return n_; }
    int m() const { return m_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bitset& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw VertexOutOfRange("loop edge " + std::to_string(u));
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++m_;
        }
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) e.emplace_back(u, v);
        return e;
    }

    // Relabel vertices: vertex i of the result is old vertex perm[i].
    Graph permuted(const std::vector<int>& perm) const {
        std::vector<int> inv(n_);
        for (int i = 0; i < n_; ++i) inv[perm[i]] = i;
        Graph g(n_);
        for (auto [u, v] : edges()) g.add_edge(inv[u], inv[v]);
        return g;
    }

    // Induced subgraph on the given vertices (kept in ascending order).
    Graph induced(const std::vector<int>& verts) const {
        Graph g(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRange(std::to_string(v));
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> rows_;
};

// --- deterministic sampling ------------------------------------------------

// G(n, p) with p = n^{-alpha}.  Each unordered pair {u,v} (u<v) draws one bit
// from mix64(seed, pair_index), so the edge set depends only on (n, alpha,
// seed) — never on evaluation order or thread count.
inline Graph gen_gnp(int n, const Rational& alpha, std::uint64_t seed) {
    if (alpha.num <= 0) throw AlphaOutOfRange("alpha must be positive, got " + alpha.str());
    Graph g(n);
    if (n <= 1) return g;
    double p = std::exp(-alpha.to_double() * std::log(static_cast<double>(n)));
    std::uint64_t pair_index = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++pair_index)
            if (unit_double(mix64(seed, pair_index)) < p) g.add_edge(u, v);
    return g;
}

// --- edge-list text format -------------------------------------------------
// Line 1: "n m"; then m lines "u v" with 0 <= u < v < n.  Blank lines and
// "#" comments are ignored.

inline Graph read_edge_list(std::istream& in) {
    auto next_line = [&in](std::string& line) {
        while (std::getline(in, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw SyntaxError("empty edge-list input");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw SyntaxError("bad edge-list header: " + line);
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line)) throw SyntaxError("expected " + std::to_string(m) + " edges");
        std::istringstream row(line);
        int u = -1, v = -1;
        if (!(row >> u >> v) || u < 0 || v <= u || v >= n)
            throw SyntaxError("bad edge line: " + line);
        g.add_edge(u, v);
    }
    return g;
}

inline Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// --- named small graphs ----------------------------------------------------

inline Graph path_graph(int k) {
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete_graph(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

inline Graph empty_graph(int k) { return Graph(k); }

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph cycle_graph(int k) {
    Graph g = path_graph(k);
    if (k >= 3) g.add_edge(0, k - 1);
    return g;
}

// K4 minus an edge: two triangles sharing an edge {0,1}.
inline Graph diamond_graph() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    return g;
}

// Two triangles sharing the single vertex 0.
inline Graph bowtie_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(3, 4);
    return g;
}

// The 9-vertex spider with legs of lengths 3, 3 and 2 hanging off vertex 0.
// This is the unique minimal tree on which the universal-vertex set formula
// (builtin mso_98) is satisfiable: take X = {0, 1, 4}.
inline Graph spider_332_tree() {
    Graph g(9);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(2, 3);  // leg of length 3
    g.add_edge(0, 4); g.add_edge(4, 5); g.add_edge(5, 6);  // leg of length 3
    g.add_edge(0, 7); g.add_edge(7, 8);                    // leg of length 2
    return g;
}

// Disjoint union, components in argument order.
inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.n();
    Graph g(n);
    int off = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(off + u, off + v);
        off += p.n();
    }
    return g;
}

} // namespace rgl
