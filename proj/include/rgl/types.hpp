// Classification of vertex-set pairs (X, complement of X): per-vertex types
// along an inside and an outside axis, the five subset classes, special
// vertices, and the data-driven knowledge base mapping pair types to the
// exact alpha-ranges in which they appear asymptotically almost surely in
// G(n, n^{-alpha}).
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rgl/bitset.hpp"
#include "rgl/errors.hpp"
#include "rgl/graph.hpp"
#include "rgl/rational.hpp"
#include "rgl/rng.hpp"

namespace rgl {

enum class Axis { Dominating, Common, Isolated };

struct VertexType {
    Axis inside = Axis::Common;
    Axis outside = Axis::Common;

    friend bool operator==(const VertexType& a, const VertexType& b) {
        return a.inside == b.inside && a.outside == b.outside;
    }
    friend bool operator<(const VertexType& a, const VertexType& b) {
        if (a.inside != b.inside) return a.inside < b.inside;
        return a.outside < b.outside;
    }
};

enum class SubsetClass { Complete, Dense, Sparse, Independent, Common };
enum class SpecialCase { None, Case1, Case2 };
enum class TableVerdict { AasPresent, AasAbsent, NotListed };

struct PairType {
    std::set<VertexType> x_types;    // types realized by the vertices of X
    std::set<VertexType> xbar_types; // types realized by the complement
    SpecialCase special = SpecialCase::None;

    friend bool operator==(const PairType& a, const PairType& b) {
        return a.x_types == b.x_types && a.xbar_types == b.xbar_types &&
               a.special == b.special;
    }
    friend bool operator<(const PairType& a, const PairType& b) {
        if (a.x_types != b.x_types) return a.x_types < b.x_types;
        if (a.xbar_types != b.xbar_types) return a.xbar_types < b.xbar_types;
        return a.special < b.special;
    }
};

inline char axis_letter(Axis a) {
    switch (a) {
        case Axis::Dominating: return 'D';
        case Axis::Common: return 'C';
        default: return 'I';
    }
}

inline std::string type_string(const VertexType& t) {
    return std::string(1, axis_letter(t.inside)) + axis_letter(t.outside);
}

inline std::string pair_type_json(const PairType& pt) {
    auto list = [](const std::set<VertexType>& ts) {
        std::string out = "[";
        bool first = true;
        for (const VertexType& t : ts) {
            if (!first) out += ",";
            first = false;
            out += "\"" + type_string(t) + "\"";
        }
        return out + "]";
    };
    const char* special = pt.special == SpecialCase::None     ? "none"
                          : pt.special == SpecialCase::Case1 ? "case1"
                                                             : "case2";
    return "{\"x\":" + list(pt.x_types) + ",\"xbar\":" + list(pt.xbar_types) +
           ",\"special\":\"" + std::string(special) + "\"}";
}

namespace detail_types {

inline void check_subset(const Graph& g, const Bitset& x) {
    if (x.capacity() != g.n()) throw VertexOutOfRange("subset capacity mismatch");
}

// Classify v against a comparison set (v itself excluded by the caller).
// An empty comparison set reads as "adjacent to nothing": Isolated.
inline Axis axis_of(const Graph& g, const Bitset& comparison, int v) {
    int total = comparison.count();
    if (total == 0) return Axis::Isolated;
    int adj = g.neighbors(v).intersect_count(comparison);
    if (adj == total) return Axis::Dominating;
    if (adj == 0) return Axis::Isolated;
    return Axis::Common;
}

inline Bitset complement(const Bitset& x) {
    Bitset c(x.capacity());
    for (int v = 0; v < x.capacity(); ++v)
        if (!x.test(v)) c.set(v);
    return c;
}

inline void check_nondegenerate(const Graph& g, const Bitset& x) {
    check_subset(g, x);
    int in = x.count();
    if (in < 2 || g.n() - in < 2)
        throw DegenerateSubset("both X and its complement need at least 2 vertices");
}

} // namespace detail_types

// Type of v relative to the side of the partition it belongs to: the inside
// axis compares v with the rest of its own side, the outside axis with the
// other side.
inline VertexType classify_vertex(const Graph& g, const Bitset& x, int v) {
    detail_types::check_subset(g, x);
    if (v < 0 || v >= g.n()) throw VertexOutOfRange("vertex " + std::to_string(v));
    Bitset home = x.test(v) ? x : detail_types::complement(x);
    Bitset away = x.test(v) ? detail_types::complement(x) : x;
    home.reset(v);
    return VertexType{detail_types::axis_of(g, home, v),
                      detail_types::axis_of(g, away, v)};
}

inline SubsetClass subset_class(const Graph& g, const Bitset& x) {
    detail_types::check_subset(g, x);
    if (x.count() == 0) throw DegenerateSubset("empty subset has no class");
    bool complete = true, independent = true, has_dom = false, has_iso = false;
    for (int v = x.first(); v != -1; v = x.next(v)) {
        Bitset rest = x;
        rest.reset(v);
        Axis a = detail_types::axis_of(g, rest, v);
        if (a != Axis::Dominating) complete = false;
        if (a != Axis::Isolated) independent = false;
        if (a == Axis::Dominating) has_dom = true;
        if (a == Axis::Isolated) has_iso = true;
    }
    if (complete) return SubsetClass::Complete;
    if (independent) return SubsetClass::Independent;
    if (has_dom) return SubsetClass::Dense;
    if (has_iso) return SubsetClass::Sparse;
    return SubsetClass::Common;
}

// All vertices (on either side) that are dominating toward one side of the
// partition and isolated toward the other.  Case1: isolated toward X,
// dominating toward the complement; Case2 the reverse.
inline std::vector<std::pair<int, SpecialCase>> special_vertices(const Graph& g,
                                                                 const Bitset& x) {
    detail_types::check_nondegenerate(g, x);
    Bitset xbar = detail_types::complement(x);
    std::vector<std::pair<int, SpecialCase>> out;
    for (int v = 0; v < g.n(); ++v) {
        Bitset toward_x = x, toward_xbar = xbar;
        toward_x.reset(v);
        toward_xbar.reset(v);
        Axis ax = detail_types::axis_of(g, toward_x, v);
        Axis ab = detail_types::axis_of(g, toward_xbar, v);
        if (ax == Axis::Isolated && ab == Axis::Dominating)
            out.emplace_back(v, SpecialCase::Case1);
        else if (ax == Axis::Dominating && ab == Axis::Isolated)
            out.emplace_back(v, SpecialCase::Case2);
    }
    return out;
}

inline PairType pair_type(const Graph& g, const Bitset& x) {
    detail_types::check_nondegenerate(g, x);
    Bitset xbar = detail_types::complement(x);
    int cx = x.count(), cxbar = g.n() - cx;
    auto axis = [](int adj, int total) {
        if (total == 0 || adj == 0) return Axis::Isolated;
        if (adj == total) return Axis::Dominating;
        return Axis::Common;
    };
    PairType pt;
    for (int v = 0; v < g.n(); ++v) {
        bool in_x = x.test(v);
        int ax = g.neighbors(v).intersect_count(x);
        int ab = g.neighbors(v).intersect_count(xbar);
        Axis toward_x = axis(ax, cx - (in_x ? 1 : 0));
        Axis toward_xbar = axis(ab, cxbar - (in_x ? 0 : 1));
        if (in_x)
            pt.x_types.insert(VertexType{toward_x, toward_xbar});
        else
            pt.xbar_types.insert(VertexType{toward_xbar, toward_x});
        // Both kinds of special vertex can coexist in graphs outside the
        // a.a.s. regime (e.g. two disjoint edges with X one of them); the
        // case of the lowest-numbered special vertex is reported, which
        // keeps the flag exact under mirroring because X and its complement
        // share special vertices.
        if (pt.special == SpecialCase::None) {
            if (toward_x == Axis::Isolated && toward_xbar == Axis::Dominating)
                pt.special = SpecialCase::Case1;
            else if (toward_x == Axis::Dominating && toward_xbar == Axis::Isolated)
                pt.special = SpecialCase::Case2;
        }
    }
    return pt;
}

inline PairType mirror(const PairType& pt) {
    PairType out;
    out.x_types = pt.xbar_types;
    out.xbar_types = pt.x_types;
    out.special = pt.special == SpecialCase::Case1   ? SpecialCase::Case2
                  : pt.special == SpecialCase::Case2 ? SpecialCase::Case1
                                                     : SpecialCase::None;
    return out;
}

// Equality up to interchanging X with its complement.
inline bool same_pair_type(const PairType& a, const PairType& b) {
    return a == b || a == mirror(b);
}

namespace detail_types {

inline SubsetClass class_of_types(const std::set<VertexType>& ts) {
    bool all_dom = true, all_iso = true, has_dom = false, has_iso = false;
    for (const VertexType& t : ts) {
        if (t.inside != Axis::Dominating) all_dom = false;
        if (t.inside != Axis::Isolated) all_iso = false;
        if (t.inside == Axis::Dominating) has_dom = true;
        if (t.inside == Axis::Isolated) has_iso = true;
    }
    if (all_dom) return SubsetClass::Complete;
    if (all_iso) return SubsetClass::Independent;
    if (has_dom) return SubsetClass::Dense;
    if (has_iso) return SubsetClass::Sparse;
    return SubsetClass::Common;
}

inline std::set<Axis> outside_of(const std::set<VertexType>& ts) {
    std::set<Axis> out;
    for (const VertexType& t : ts) out.insert(t.outside);
    return out;
}

struct AlphaRange {
    bool empty = false;
    Rational lo{0, 1};
    bool lo_closed = false; // the upper end is always open
    Rational hi{1, 1};

    bool contains(const Rational& a) const {
        if (empty) return false;
        if (lo_closed ? a < lo : a <= lo) return false;
        return a < hi;
    }
};

struct PlainRow {
    int id;
    SubsetClass cx, cxbar;
    std::set<Axis> ox, oxbar;
    AlphaRange range;
};

struct SpecialRow {
    const char* id;
    SpecialCase kind;
    SubsetClass cxbar;
    std::set<Axis> ox, oxbar; // outside types of the non-special vertices
    AlphaRange range;
};

inline const std::vector<PlainRow>& plain_rows() {
    using SC = SubsetClass;
    constexpr Axis D = Axis::Dominating, C = Axis::Common, I = Axis::Isolated;
    auto open01 = AlphaRange{};
    auto upto = [](long long n, long long d) {
        return AlphaRange{false, Rational(0), false, Rational(n, d)};
    };
    auto from = [](long long n, long long d) {
        return AlphaRange{false, Rational(n, d), true, Rational(1)};
    };
    static const std::vector<PlainRow> rows = {
        {1, SC::Complete, SC::Common, {C}, {D, I, C}, open01},
        {2, SC::Complete, SC::Common, {C}, {I, C}, open01},
        {3, SC::Dense, SC::Common, {C}, {D, I, C}, upto(4, 5)},
        {4, SC::Dense, SC::Common, {C}, {I, C}, open01},
        {5, SC::Dense, SC::Common, {C}, {D, C}, upto(1, 3)},
        {6, SC::Dense, SC::Common, {C}, {C}, upto(1, 2)},
        {7, SC::Independent, SC::Common, {C}, {D, I, C}, open01},
        {8, SC::Independent, SC::Common, {C}, {I, C}, open01},
        {9, SC::Independent, SC::Common, {C}, {D, C}, upto(1, 3)},
        {10, SC::Independent, SC::Common, {C}, {C}, open01},
        {11, SC::Independent, SC::Sparse, {C}, {I, C}, from(2, 3)},
        {12, SC::Independent, SC::Sparse, {C}, {C}, from(2, 3)},
        {13, SC::Sparse, SC::Sparse, {I, C}, {I, C}, from(1, 2)},
        {14, SC::Sparse, SC::Sparse, {I, C}, {C}, from(1, 2)},
        {15, SC::Sparse, SC::Sparse, {C}, {C}, from(1, 2)},
        {16, SC::Sparse, SC::Common, {I, C}, {I, C}, from(1, 2)},
        {17, SC::Sparse, SC::Common, {I, C}, {C}, from(1, 2)},
        {18, SC::Sparse, SC::Common, {C}, {C}, open01},
        {19, SC::Sparse, SC::Common, {C}, {I, C}, open01},
        {20, SC::Sparse, SC::Common, {C}, {D, C}, upto(1, 2)},
        {21, SC::Sparse, SC::Common, {C}, {D, I, C}, open01},
        {22, SC::Common, SC::Common, {I, C}, {I, C}, from(1, 2)},
        {23, SC::Common, SC::Common, {C}, {C}, open01},
        {24, SC::Common, SC::Common, {C}, {I, C}, open01},
        {25, SC::Common, SC::Common, {C}, {D, C}, upto(1, 2)},
        {26, SC::Common, SC::Common, {C}, {D, I, C}, upto(5, 6)},
    };
    return rows;
}

inline const std::vector<SpecialRow>& special_rows() {
    using SC = SubsetClass;
    constexpr Axis C = Axis::Common, I = Axis::Isolated;
    auto never = AlphaRange{true, Rational(0), false, Rational(0)};
    auto upto = [](long long n, long long d) {
        return AlphaRange{false, Rational(0), false, Rational(n, d)};
    };
    auto from = [](long long n, long long d) {
        return AlphaRange{false, Rational(n, d), true, Rational(1)};
    };
    static const std::vector<SpecialRow> rows = {
        {"1.1", SpecialCase::Case1, SC::Sparse, {C, I}, {C}, from(1, 2)},
        {"1.2", SpecialCase::Case1, SC::Sparse, {C}, {C}, never},
        {"1.3", SpecialCase::Case1, SC::Independent, {C, I}, {C}, from(2, 3)},
        {"1.4", SpecialCase::Case1, SC::Independent, {C}, {C}, never},
        {"1.5", SpecialCase::Case1, SC::Common, {C, I}, {C}, never},
        {"1.6", SpecialCase::Case1, SC::Common, {C}, {C}, upto(1, 2)},
        {"2.1", SpecialCase::Case2, SC::Common, {C}, {C, I}, from(1, 2)},
        {"2.2", SpecialCase::Case2, SC::Common, {C}, {C}, upto(1, 2)},
    };
    return rows;
}

// The vertex type a special vertex of the given kind has on the X side.
inline VertexType special_type(SpecialCase kind) {
    return kind == SpecialCase::Case1
               ? VertexType{Axis::Isolated, Axis::Dominating}
               : VertexType{Axis::Dominating, Axis::Isolated};
}

inline const AlphaRange* match_plain(const PairType& pt) {
    SubsetClass cx = class_of_types(pt.x_types);
    SubsetClass cb = class_of_types(pt.xbar_types);
    std::set<Axis> ox = outside_of(pt.x_types), ob = outside_of(pt.xbar_types);
    for (const PlainRow& r : plain_rows()) {
        if (r.cx == cx && r.cxbar == cb && r.ox == ox && r.oxbar == ob) return &r.range;
        if (r.cx == cb && r.cxbar == cx && r.ox == ob && r.oxbar == ox) return &r.range;
    }
    return nullptr;
}

// Match one orientation against the special table: the special vertex must
// sit in X with its forced type; the rows list the remaining vertices only.
inline const AlphaRange* match_special_oriented(const PairType& pt) {
    VertexType sv = special_type(pt.special);
    if (!pt.x_types.count(sv)) return nullptr;
    std::set<VertexType> rest = pt.x_types;
    rest.erase(sv);
    std::set<Axis> ox = outside_of(rest), ob = outside_of(pt.xbar_types);
    SubsetClass cb = class_of_types(pt.xbar_types);
    for (const SpecialRow& r : special_rows()) {
        if (r.kind != pt.special) continue;
        if (r.cxbar == cb && r.ox == ox && r.oxbar == ob) return &r.range;
    }
    return nullptr;
}

inline const AlphaRange* match_special(const PairType& pt) {
    if (const AlphaRange* r = match_special_oriented(pt)) return r;
    return match_special_oriented(mirror(pt));
}

} // namespace detail_types

inline TableVerdict table_lookup(const PairType& pt, const Rational& alpha) {
    if (alpha <= Rational(0) || alpha >= Rational(1))
        throw AlphaOutOfRange("the classification covers 0 < alpha < 1 only");
    const detail_types::AlphaRange* range =
        pt.special == SpecialCase::None ? detail_types::match_plain(pt)
                                        : detail_types::match_special(pt);
    if (range == nullptr) return TableVerdict::AasAbsent;
    return range->contains(alpha) ? TableVerdict::AasPresent : TableVerdict::AasAbsent;
}

inline std::set<PairType> enumerate_pair_types(const Graph& g) {
    if (g.n() > 20) throw TooLarge("exhaustive subset enumeration caps at 20 vertices");
    std::set<PairType> out;
    int n = g.n();
    Bitset x(n);
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
        int c = static_cast<int>(std::popcount(m));
        if (c < 2 || n - c < 2) continue;
        for (int v = 0; v < n; ++v) x.assign(v, (m >> v) & 1);
        out.insert(pair_type(g, x));
    }
    return out;
}

// Sampling variant for larger graphs: a fixed number of uniformly random
// nondegenerate subsets.
inline std::set<PairType> enumerate_pair_types(const Graph& g, int budget,
                                               std::uint64_t seed) {
    std::set<PairType> out;
    SplitMix64 rng(seed);
    for (int t = 0; t < budget; ++t) {
        Bitset x(g.n());
        for (int v = 0; v < g.n(); ++v)
            if (rng.next() & 1) x.set(v);
        int c = x.count();
        if (c < 2 || g.n() - c < 2) continue;
        out.insert(pair_type(g, x));
    }
    return out;
}

namespace detail_types {

// Candidate subsets suggested by the constructive recipes behind the table
// rows.  Every candidate is verified against the requested pair type, so the
// recipes only have to be good guesses.
inline std::vector<Bitset> recipe_candidates(const Graph& g) {
    std::vector<Bitset> out;
    int n = g.n();
    auto make = [&](const std::vector<int>& vs) {
        Bitset x(n);
        for (int v : vs) x.set(v);
        out.push_back(x);
    };

    // Rows 1, 21: an edge of a triangle; a triangle with a pendant vertex.
    for (auto [u, v] : g.edges()) {
        Bitset common = g.neighbors(u);
        common &= g.neighbors(v);
        for (int w = common.first(); w != -1; w = common.next(w)) {
            make({u, v});
            for (int z = 0; z < n; ++z)
                if (z != w && g.adjacent(z, u) && !g.adjacent(z, v) && !g.adjacent(z, w))
                    make({z, v, w});
            break;
        }
    }
    // Rows 2, 8: greedy maximal clique / maximal independent set per start.
    for (int start = 0; start < std::min(n, 4); ++start) {
        std::vector<int> clique{start}, indep{start};
        for (int v = 0; v < n; ++v) {
            if (v == start) continue;
            bool all = true, none = true;
            for (int c : clique)
                if (!g.adjacent(v, c)) all = false;
            for (int c : indep)
                if (g.adjacent(v, c)) none = false;
            if (all) clique.push_back(v);
            if (none) indep.push_back(v);
        }
        make(clique);
        make(indep);
    }
    // Row 7: endpoints of an induced two-edge path.
    for (int mid = 0; mid < n; ++mid)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (g.adjacent(mid, a) && g.adjacent(mid, b) && !g.adjacent(a, b)) {
                    make({a, b});
                    goto done_p3;
                }
done_p3:
    // Rows 18, 19, 23, 24: halves built around two nonadjacent vertices, and
    // a plain alternating split.
    {
        std::vector<int> half;
        for (int v = 0; v < n; v += 2) half.push_back(v);
        make(half);
        for (int u1 = 0; u1 < n; ++u1)
            for (int u2 = u1 + 1; u2 < n; ++u2) {
                if (g.adjacent(u1, u2)) continue;
                std::vector<int> rest;
                for (int v = 0; v < n; ++v)
                    if (v != u1 && v != u2 && !g.adjacent(v, u1) && !g.adjacent(v, u2))
                        rest.push_back(v);
                std::vector<int> u_half(rest.begin(), rest.begin() + rest.size() / 2);
                std::vector<int> with1 = u_half, with2 = u_half;
                with1.push_back(u1);
                with2.push_back(u1);
                with2.push_back(u2);
                make(u_half);
                make(with1);
                make(with2);
                u1 = n; // one nonadjacent pair suffices
                break;
            }
    }
    // Rows 20, 25: neighborhood constructions around an edge.
    for (auto [v, w] : g.edges()) {
        std::vector<int> x20, x25;
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u)) {
            if (!g.adjacent(u, w)) x20.push_back(u);
            if (u != w) x25.push_back(u);
        }
        make(x20);
        make(x25);
    }
    // Row 26: outer vertices of two triangles sharing one vertex.
    for (int hub = 0; hub < n; ++hub) {
        std::vector<std::pair<int, int>> tri;
        const Bitset& nb = g.neighbors(hub);
        for (int a = nb.first(); a != -1; a = nb.next(a))
            for (int b = nb.next(a); b != -1; b = nb.next(b))
                if (g.adjacent(a, b)) tri.emplace_back(a, b);
        for (std::size_t i = 0; i < tri.size(); ++i)
            for (std::size_t j = i + 1; j < tri.size(); ++j) {
                auto [a, b] = tri[i];
                auto [c, d] = tri[j];
                if (a != c && a != d && b != c && b != d) make({a, b, c, d});
            }
    }
    // Rows 13-17, 22: splits anchored at independent vertices with disjoint
    // neighborhoods.
    std::vector<int> anchors;
    for (int v = 0; v < n && anchors.size() < 4; ++v) {
        bool ok = true;
        for (int a : anchors)
            if (a == v || g.adjacent(a, v) || g.neighbors(a).intersects(g.neighbors(v)))
                ok = false;
        if (ok) anchors.push_back(v);
    }
    if (anchors.size() == 4) {
        auto [v1, v2, v3, v4] = std::tuple{anchors[0], anchors[1], anchors[2], anchors[3]};
        Bitset used(n);
        for (int a : anchors) {
            used.set(a);
            for (int u = g.neighbors(a).first(); u != -1; u = g.neighbors(a).next(u))
                used.set(u);
        }
        std::vector<int> v1_half;
        bool flip = false;
        for (int v = 0; v < n; ++v)
            if (!used.test(v) && (flip = !flip)) v1_half.push_back(v);
        auto with = [&](std::vector<int> extra, std::initializer_list<int> nbrs_of) {
            for (int a : nbrs_of)
                for (int u = g.neighbors(a).first(); u != -1; u = g.neighbors(a).next(u))
                    extra.push_back(u);
            extra.insert(extra.end(), v1_half.begin(), v1_half.end());
            std::sort(extra.begin(), extra.end());
            extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
            make(extra);
        };
        with({v1, v3}, {v2, v3});     // row 13
        with({v1, v2, v4}, {v2, v3}); // row 14
        with({v1, v3}, {v2, v4});     // row 15
        with({v1, v2}, {v2});         // row 16
        with({v1, v2, v3, v4}, {v2}); // row 17
        with({v1}, {v1});             // row 22
    }
    return out;
}

} // namespace detail_types

// A subset realizing the requested pair type, if one can be found: recipe
// candidates first, then (for graphs of at most 20 vertices) an exhaustive
// scan over all nondegenerate subsets.
inline std::optional<Bitset> find_witness(const Graph& g, const PairType& pt) {
    auto matches = [&](const Bitset& x) {
        int c = x.count();
        if (c < 2 || g.n() - c < 2) return false;
        return pair_type(g, x) == pt;
    };
    for (const Bitset& x : detail_types::recipe_candidates(g)) {
        if (matches(x)) return x;
        Bitset xb = detail_types::complement(x);
        if (matches(xb)) return xb;
    }
    if (g.n() <= 20) {
        Bitset x(g.n());
        for (std::uint64_t m = 0; m < (1ull << g.n()); ++m) {
            for (int v = 0; v < g.n(); ++v) x.assign(v, (m >> v) & 1);
            if (matches(x)) return x;
        }
    }
    return std::nullopt;
}

} // namespace rgl
