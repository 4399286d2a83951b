// Structural queries on graphs: components, forestness, densities, subgraph
// embedding, canonical tree codes and automorphism counting.
#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "rgl/errors.hpp"
#include "rgl/graph.hpp"
#include "rgl/rational.hpp"

namespace rgl {

// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            const Bitset& nb = g.neighbors(v);
            for (int w = nb.first(); w != -1; w = nb.next(w))
                if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_forest(const Graph& g) {
    return g.m() == g.n() - static_cast<int>(components(g).size());
}

inline Rational density(const Graph& g) {
    if (g.n() == 0) throw EmptyGraph("density is undefined for n=0");
    return Rational(g.m(), g.n());
}

// Max density over induced subgraphs (equals the max over all subgraphs,
// since deleting edges never raises e/v).  Exhaustive; capped at n <= 24.
inline Rational max_density(const Graph& g) {
    if (g.n() == 0) throw EmptyGraph("max_density is undefined for n=0");
    if (g.n() > 24) throw TooLarge("max_density cap is 24 vertices, got " + std::to_string(g.n()));
    int n = g.n();
    std::vector<std::uint32_t> masks(n);  // adjacency rows as machine words
    for (int v = 0; v < n; ++v) {
        const Bitset& nb = g.neighbors(v);
        for (int w = nb.first(); w != -1; w = nb.next(w)) masks[v] |= 1u << w;
    }
    long long best_e = 0, best_v = 1;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int verts = std::popcount(s);
        long long edges = 0;
        for (std::uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            edges += std::popcount(masks[v] & rest);  // each edge counted once
        }
        if (edges * best_v > best_e * verts) { best_e = edges; best_v = verts; }
    }
    return Rational(best_e, best_v);
}

// Does G contain an (induced, if requested) copy of the pattern H?
// Straightforward backtracking with degree pruning; capped at |V(H)| <= 10.
inline bool contains_subgraph(const Graph& g, const Graph& h, bool induced) {
    if (h.n() > 10) throw PatternTooLarge("pattern cap is 10 vertices, got " + std::to_string(h.n()));
    if (h.n() > g.n() || h.m() > g.m()) return false;
    int hn = h.n();
    // Order pattern vertices so each (after the first per component) has a
    // previously-placed neighbor: keeps the partial map connected and prunes.
    std::vector<int> order;
    {
        std::vector<bool> used(hn, false);
        std::vector<int> by_deg(hn);
        std::iota(by_deg.begin(), by_deg.end(), 0);
        std::stable_sort(by_deg.begin(), by_deg.end(),
                         [&h](int a, int b) { return h.degree(a) > h.degree(b); });
        while (static_cast<int>(order.size()) < hn) {
            int pick = -1;
            for (int c : by_deg) {
                if (used[c]) continue;
                bool anchored = false;
                for (int p : order) anchored = anchored || h.adjacent(c, p);
                if (anchored) { pick = c; break; }
            }
            if (pick == -1)
                for (int c : by_deg) if (!used[c]) { pick = c; break; }
            used[pick] = true;
            order.push_back(pick);
        }
    }
    std::vector<int> map(hn, -1);       // pattern vertex -> host vertex
    std::vector<bool> taken(g.n(), false);
    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == hn) return true;
        int c = order[depth];
        for (int cand = 0; cand < g.n(); ++cand) {
            if (taken[cand] || g.degree(cand) < h.degree(c)) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                int p = order[i];
                bool want = h.adjacent(c, p);
                bool have = g.adjacent(cand, map[p]);
                ok = induced ? (want == have) : (!want || have);
            }
            if (!ok) continue;
            map[c] = cand;
            taken[cand] = true;
            if (self(self, depth + 1)) return true;
            taken[cand] = false;
            map[c] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

// BFS distances from a source; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        const Bitset& nb = g.neighbors(v);
        for (int w = nb.first(); w != -1; w = nb.next(w))
            if (dist[w] == -1) { dist[w] = dist[v] + 1; q.push(w); }
    }
    return dist;
}

namespace detail {

// AHU code of the tree containing `root`, rooted at `root`: children codes
// sorted and wrapped in parentheses.  Equal codes <=> rooted isomorphism.
inline std::string ahu_code(const Graph& g, int root, int parent) {
    std::vector<std::string> child_codes;
    const Bitset& nb = g.neighbors(root);
    for (int w = nb.first(); w != -1; w = nb.next(w))
        if (w != parent) child_codes.push_back(ahu_code(g, w, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

// Center(s) of the tree component containing `any`: repeatedly peel leaves.
inline std::vector<int> tree_centers(const Graph& g, const std::vector<int>& comp) {
    if (comp.size() == 1) return {comp[0]};
    std::vector<int> deg(g.n(), 0), layer;
    std::vector<bool> removed(g.n(), true);
    for (int v : comp) { deg[v] = g.degree(v); removed[v] = false; }
    int alive = static_cast<int>(comp.size());
    for (int v : comp)
        if (deg[v] <= 1) layer.push_back(v);
    while (alive > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --alive;
            const Bitset& nb = g.neighbors(v);
            for (int w = nb.first(); w != -1; w = nb.next(w))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v : comp)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

} // namespace detail

// Canonical code of a rooted tree; equal codes iff rooted-isomorphic.
// `root` must lie in a tree component (checked via the caller for whole trees).
inline std::string rooted_tree_code(const Graph& g, int root) {
    return detail::ahu_code(g, root, -1);
}

// Canonical code of a (whole-graph) tree; equal codes iff isomorphic.
inline std::string tree_code(const Graph& t) {
    if (t.n() == 0) throw NotATree("empty graph");
    auto comps = components(t);
    if (comps.size() != 1 || t.m() != t.n() - 1) throw NotATree("input is not a tree");
    std::string best;
    for (int c : detail::tree_centers(t, comps[0])) {
        std::string code = rooted_tree_code(t, c);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

// Canonical code of a tree component inside a forest.
inline std::string component_tree_code(const Graph& g, const std::vector<int>& comp) {
    if (static_cast<int>(comp.size()) - 1 != g.induced(comp).m()) throw NotATree("component has a cycle");
    std::string best;
    for (int c : detail::tree_centers(g, comp)) {
        std::string code = detail::ahu_code(g, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

// |Aut(G)| by backtracking over degree-compatible assignments; cap n <= 10.
inline long long automorphism_count(const Graph& g) {
    if (g.n() > 10) throw TooLarge("automorphism_count cap is 10 vertices");
    int n = g.n();
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    long long count = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == n) { ++count; return; }
        for (int img = 0; img < n; ++img) {
            if (used[img] || g.degree(img) != g.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(perm[u], img);
            if (!ok) continue;
            perm[v] = img;
            used[img] = true;
            self(self, v + 1);
            used[img] = false;
            perm[v] = -1;
        }
    };
    dfs(dfs, 0);
    return count;
}

} // namespace rgl
