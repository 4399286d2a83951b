// Acceptance suite: one criterion per invocation, selected with
// --criterion N.  Each run prints a single PASS/FAIL line and exits 0/1.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rgl/eval.hpp"
#include "rgl/game.hpp"
#include "rgl/graph.hpp"
#include "rgl/oracles.hpp"
#include "rgl/spectrum.hpp"
#include "rgl/strategy.hpp"
#include "rgl/types.hpp"
#include "support/enumerate.hpp"

using namespace rgl;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

// 1. Triangle-free frequency at alpha = 1 within +-0.02 of e^{-1/6}.
Outcome criterion1() {
    auto est = estimate(target_oracle(BuiltinName::triangle_free), Rational{1, 1}, 300,
                        40000, 101);
    double want = std::exp(-1.0 / 6.0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "p_hat=%.4f expected=%.4f +-0.02", est.p_hat(), want);
    return {std::abs(est.p_hat() - want) <= 0.02, buf};
}

// 2. Edge appearance at alpha = 2: closed form inside the Wilson CI.
Outcome criterion2() {
    const int n = 200;
    auto est = estimate(target_oracle(BuiltinName::fo3_1), Rational{2, 1}, n, 20000, 102);
    double p = std::pow(n, -2.0);
    double want = 1.0 - std::pow(1.0 - p, n * (n - 1) / 2.0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "closed_form=%.4f ci=[%.4f,%.4f]", want, est.ci_low,
                  est.ci_high);
    return {est.ci_low <= want && want <= est.ci_high, buf};
}

// 3. Diamond / bowtie appearance probabilities at their thresholds.
Outcome criterion3() {
    auto e45 = estimate(target_oracle(BuiltinName::mso_45), Rational{4, 5}, 400, 20000, 103);
    auto e56 = estimate(target_oracle(BuiltinName::mso_56), Rational{5, 6}, 400, 20000, 113);
    double w45 = 1.0 - std::exp(-0.25), w56 = 1.0 - std::exp(-0.125);
    char buf[160];
    std::snprintf(buf, sizeof buf, "p45=%.4f (want %.4f) p56=%.4f (want %.4f) +-0.03",
                  e45.p_hat(), w45, e56.p_hat(), w56);
    return {std::abs(e45.p_hat() - w45) <= 0.03 && std::abs(e56.p_hat() - w56) <= 0.03, buf};
}

// 4. Nine-vertex tree component at alpha = 9/8, n = 5000.
Outcome criterion4() {
    auto est = estimate(target_oracle(BuiltinName::mso_98), Rational{9, 8}, 5000, 5000, 104);
    double want = 1.0 - std::exp(-0.5);
    char buf[128];
    std::snprintf(buf, sizeof buf, "p_hat=%.4f expected=%.4f +-0.03", est.p_hat(), want);
    return {std::abs(est.p_hat() - want) <= 0.03, buf};
}

// 5. Oracle / formula agreement on exhaustive small instances.
Outcome criterion5() {
    long long checked = 0, mismatches = 0;
    for (BuiltinName b : {BuiltinName::mso_45, BuiltinName::mso_56}) {
        FormulaPtr phi = builtin(b);
        for (int n = 1; n <= 7; ++n)
            for (const Graph& g : testsupport::all_graphs(n)) {
                ++checked;
                if (eval_sentence(g, phi) != oracle(g, b)) ++mismatches;
            }
    }
    for (BuiltinName b : {BuiltinName::mso_98, BuiltinName::fo3_1, BuiltinName::fo3_2,
                          BuiltinName::fo3_3, BuiltinName::fo3_4, BuiltinName::fo3_5,
                          BuiltinName::fo3_6}) {
        FormulaPtr phi = builtin(b);
        for (const Graph& g : testsupport::all_forests(9)) {
            ++checked;
            if (eval_sentence(g, phi) != oracle(g, b)) ++mismatches;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%lld checks, %lld mismatches", checked, mismatches);
    return {mismatches == 0, buf};
}

// 6. The two sentence variants agree on random graphs.
Outcome criterion6() {
    FormulaPtr inf = builtin(BuiltinName::phi_inf), fo = builtin(BuiltinName::phi_fo);
    const double probs[3] = {0.1, 0.3, 0.5};
    int mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + static_cast<int>(mix64(600, t) % 10);
        Graph g = testsupport::random_graph(n, probs[t % 3], mix64(601, t));
        if (eval_sentence(g, inf) != eval_sentence(g, fo)) ++mismatches;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "1000 graphs, %d mismatches", mismatches);
    return {mismatches == 0, buf};
}

// 7. Whenever a shallow catalog sentence separates two graphs, the game
// solver awards the k-round game to Spoiler; identical graphs go to
// Duplicator.
Outcome criterion7() {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : testsupport::all_graphs(n)) graphs.push_back(g);
    long long violations = 0, solved = 0;
    for (int code = 0; code < static_cast<int>(BuiltinName::triangle_free) + 1; ++code) {
        BuiltinName b = static_cast<BuiltinName>(code);
        FormulaPtr phi = builtin(b);
        int k = quantifier_depth(phi);
        if (k > 3) continue;
        GameLogic logic = is_mso(phi) ? GameLogic::MSO : GameLogic::FO;
        std::vector<char> val;
        for (const Graph& g : graphs) {
            bool v;
            try {
                v = eval_sentence(g, phi);
            } catch (const Error&) {
                val.push_back(2);
                continue;
            }
            val.push_back(v);
        }
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (val[i] == 2) continue;
            if (solve(graphs[i], graphs[i], k, logic) != Winner::Duplicator) ++violations;
            ++solved;
            for (std::size_t j = i + 1; j < graphs.size(); ++j) {
                if (val[j] == 2 || val[i] == val[j]) continue;
                ++solved;
                if (solve(graphs[i], graphs[j], k, logic) != Winner::Spoiler) ++violations;
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%lld solves, %lld violations", solved, violations);
    return {violations == 0, buf};
}

// 8. Equal pair types imply a Duplicator win in the 2-round set-game
// continuation.
Outcome criterion8() {
    SplitMix64 rng(808);
    int found = 0, wins = 0;
    while (found < 200) {
        int n = 4 + static_cast<int>(rng.next_below(3));
        double p = 0.2 + 0.15 * static_cast<double>(rng.next_below(4));
        Graph g = testsupport::random_graph(n, p, rng.next());
        Graph h = testsupport::random_graph(n, p, rng.next());
        std::map<PairType, Bitset> by_type;
        for (std::uint64_t m = 0; m < (1ull << n); ++m) {
            Bitset y(n);
            for (int v = 0; v < n; ++v) y.assign(v, (m >> v) & 1);
            try {
                by_type.emplace(pair_type(h, y), y);
            } catch (const Error&) {
            }
        }
        for (std::uint64_t m = 0; m < (1ull << n) && found < 200; ++m) {
            Bitset x(n);
            for (int v = 0; v < n; ++v) x.assign(v, (m >> v) & 1);
            PairType pt;
            try {
                pt = pair_type(g, x);
            } catch (const Error&) {
                continue;
            }
            auto it = by_type.find(pt);
            if (it == by_type.end()) continue;
            GameState s;
            s.A = &g;
            s.B = &h;
            s.logic = GameLogic::MSO;
            s.sets.emplace_back(x, it->second);
            s.rounds_left = 2;
            ++found;
            if (value(s) == Winner::Duplicator) ++wins;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d/%d continuations won", wins, found);
    return {wins == found, buf};
}

// Composed Duplicator strategy for one 3-round set game: the opponent
// enumerates every vertex and set move on the small source side of the
// board; the final round is adjudicated by the exact solver.
namespace composed {

// Reduction of a first-round set pair: degenerate sets carry at most a
// single distinguished vertex of information.
struct History {
    enum Kind { Null, VertexPair, SetPair } kind = Null;
    int x1 = -1, y1 = -1;
    Bitset X, Y;
};

Bitset respond_round2_set(const Graph& g, const Graph& h, const History& hist,
                          const Bitset& X2) {
    switch (hist.kind) {
        case History::Null:
            return mso_respond_set(g, h, X2);
        case History::VertexPair:
            return respond_set_after_vertex(g, h, hist.x1, hist.y1, X2);
        default:
            return respond_set_after_set(g, h, hist.X, hist.Y, X2);
    }
}

int respond_round2_vertex(const Graph& g, const Graph& h, const History& hist, int v) {
    switch (hist.kind) {
        case History::Null:
            return fo_respond_round1(g, h, v);
        case History::VertexPair:
            return fo_respond_round2(g, h, hist.x1, hist.y1, v);
        default:
            return respond_vertex_after_set(g, h, hist.X, hist.Y, v);
    }
}

History classify_set_round(const Graph& g, const Graph& h, const Bitset& X,
                           const Bitset& Y) {
    History hist;
    int cx = X.count();
    if (cx == 0 || cx == g.n()) {
        hist.kind = History::Null;
    } else if (cx == 1 || cx == g.n() - 1) {
        // One side is a singleton; the pair constrains exactly as a vertex
        // round on that singleton and its image.
        hist.kind = History::VertexPair;
        hist.x1 = cx == 1 ? X.first() : X.complement().first();
        hist.y1 = cx == 1 ? Y.first() : Y.complement().first();
    } else {
        hist.kind = History::SetPair;
        hist.X = X;
        hist.Y = Y;
    }
    return hist;
}

// Returns the number of histories where the strategy lost the game; fills
// `played` with completed 3-round playouts.
long long run_instance(const Graph& g, const Graph& h, long long& played) {
    long long losses = 0;
    const int n = g.n();
    std::vector<Bitset> all_sets;
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
        Bitset x(n);
        for (int v = 0; v < n; ++v) x.assign(v, (m >> v) & 1);
        all_sets.push_back(x);
    }

    auto final_ok = [&](const GameState& s) {
        ++played;
        return value(s) == Winner::Duplicator;
    };

    GameState base;
    base.A = &g;
    base.B = &h;
    base.logic = GameLogic::MSO;

    // Round 1: every vertex move.
    for (int x1 = 0; x1 < n; ++x1) {
        try {
            int y1 = fo_respond_round1(g, h, x1);
            History hist;
            hist.kind = History::VertexPair;
            hist.x1 = x1;
            hist.y1 = y1;
            for (int x2 = 0; x2 < n; ++x2) {
                GameState s = base;
                s.verts = {{x1, y1}, {x2, respond_round2_vertex(g, h, hist, x2)}};
                s.rounds_left = 1;
                if (!final_ok(s)) ++losses;
            }
            for (const Bitset& X2 : all_sets) {
                GameState s = base;
                s.verts = {{x1, y1}};
                s.sets = {{X2, respond_round2_set(g, h, hist, X2)}};
                s.rounds_left = 1;
                if (!final_ok(s)) ++losses;
            }
        } catch (const Error&) {
            ++losses;
        }
    }

    // Round 1: every set move.
    for (const Bitset& X1 : all_sets) {
        try {
            Bitset Y1 = mso_respond_set(g, h, X1);
            History hist = classify_set_round(g, h, X1, Y1);
            for (int x2 = 0; x2 < n; ++x2) {
                GameState s = base;
                s.sets = {{X1, Y1}};
                s.verts = {{x2, respond_round2_vertex(g, h, hist, x2)}};
                s.rounds_left = 1;
                if (!final_ok(s)) ++losses;
            }
            for (const Bitset& X2 : all_sets) {
                GameState s = base;
                s.sets = {{X1, Y1}, {X2, respond_round2_set(g, h, hist, X2)}};
                s.rounds_left = 1;
                if (!final_ok(s)) ++losses;
            }
        } catch (const Error&) {
            ++losses;
        }
    }
    return losses;
}

} // namespace composed

// 9. The composed strategy survives exhaustive opposition, and the
// leaf-distance realization has its invariants on every admissible input.
Outcome criterion9() {
    // Part A: build_R over every admissible subset of {0..6}.
    long long build_bad = 0;
    for (int mask = 1; mask < (1 << 7); ++mask) {
        LeafDistanceSet l;
        for (int d = 0; d < 7; ++d)
            if (mask & (1 << d)) l.distances.insert(d);
        if (!is_admissible(l)) {
            try {
                build_R(l);
                ++build_bad;
            } catch (const NotAdmissible&) {
            }
            continue;
        }
        auto [t, v] = build_R(l);
        if (t.n() > 7 || !is_forest(t) || components(t).size() != 1) {
            ++build_bad;
            continue;
        }
        std::set<int> got = leaf_distances(t, v).distances;
        std::set<int> low;
        for (int d : l.distances)
            if (d <= 2) low.insert(d);
        bool tail = false;
        for (int d : l.distances)
            if (d >= 3) tail = true;
        std::set<int> want = low;
        if (tail) want.insert(3);
        if (got != want) ++build_bad;
    }

    // Part B: 100 exhaustively opposed games.  Each source is a rich forest:
    // a small variable forest plus the guarantee kit of two isolated edges
    // and two isolated vertices, under a random relabeling.  The host is a
    // large rich forest with enough isolated vertices for every split.
    Graph host = disjoint_union({make_rich_forest(7, 2, true), empty_graph(2)});
    SplitMix64 rng(909);
    long long losses = 0, played = 0;
    for (int inst = 0; inst < 100; ++inst) {
        static const int extra[] = {0, 1, 1, 2, 2, 2, 3, 3, 3, 3};
        int k = extra[inst % 10];
        Graph base = disjoint_union({testsupport::random_forest(k, 3, rng), path_graph(2),
                                     path_graph(2), empty_graph(2)});
        int n = base.n();
        std::vector<int> perm = testsupport::random_permutation(n, rng);
        Graph g(n);
        for (auto [u, v] : base.edges()) g.add_edge(perm[u], perm[v]);
        losses += composed::run_instance(g, host, played);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%lld playouts, %lld losses, %lld build_R faults",
                  played, losses, build_bad);
    return {losses == 0 && build_bad == 0 && played > 100000, buf};
}

// 10. Table ranges pinned row by row, plus the predicted monotone trends of
// the independent-neighborhood probe.
namespace table_pins {

struct Expected {
    bool empty = false;
    Rational lo{0, 1};
    bool lo_closed = false;
    Rational hi{1, 1};

    bool contains(const Rational& a) const {
        if (empty) return false;
        if (lo_closed ? a < lo : a <= lo) return false;
        return a < hi;
    }
};

Expected open01() { return {}; }
Expected upto(long long n, long long d) { return {false, Rational(0), false, Rational(n, d)}; }
Expected from(long long n, long long d) { return {false, Rational(n, d), true, Rational(1)}; }
Expected never() { return {true, Rational(0), false, Rational(0)}; }

std::set<VertexType> side_types(SubsetClass c, const std::set<Axis>& outside) {
    std::set<VertexType> out;
    Axis first = *outside.begin();
    switch (c) {
        case SubsetClass::Complete:
            for (Axis o : outside) out.insert({Axis::Dominating, o});
            break;
        case SubsetClass::Independent:
            for (Axis o : outside) out.insert({Axis::Isolated, o});
            break;
        case SubsetClass::Dense:
            out.insert({Axis::Dominating, first});
            for (Axis o : outside) out.insert({Axis::Common, o});
            break;
        case SubsetClass::Sparse:
            out.insert({Axis::Isolated, first});
            for (Axis o : outside) out.insert({Axis::Common, o});
            break;
        case SubsetClass::Common:
            for (Axis o : outside) out.insert({Axis::Common, o});
            break;
    }
    return out;
}

long long check_rows(long long& bad) {
    constexpr Axis D = Axis::Dominating, C = Axis::Common, I = Axis::Isolated;
    struct Plain {
        SubsetClass cx, cxbar;
        std::set<Axis> ox, oxbar;
        Expected range;
    };
    using SC = SubsetClass;
    const std::vector<Plain> plains = {
        {SC::Complete, SC::Common, {C}, {D, I, C}, open01()},
        {SC::Complete, SC::Common, {C}, {I, C}, open01()},
        {SC::Dense, SC::Common, {C}, {D, I, C}, upto(4, 5)},
        {SC::Dense, SC::Common, {C}, {I, C}, open01()},
        {SC::Dense, SC::Common, {C}, {D, C}, upto(1, 3)},
        {SC::Dense, SC::Common, {C}, {C}, upto(1, 2)},
        {SC::Independent, SC::Common, {C}, {D, I, C}, open01()},
        {SC::Independent, SC::Common, {C}, {I, C}, open01()},
        {SC::Independent, SC::Common, {C}, {D, C}, upto(1, 3)},
        {SC::Independent, SC::Common, {C}, {C}, open01()},
        {SC::Independent, SC::Sparse, {C}, {I, C}, from(2, 3)},
        {SC::Independent, SC::Sparse, {C}, {C}, from(2, 3)},
        {SC::Sparse, SC::Sparse, {I, C}, {I, C}, from(1, 2)},
        {SC::Sparse, SC::Sparse, {I, C}, {C}, from(1, 2)},
        {SC::Sparse, SC::Sparse, {C}, {C}, from(1, 2)},
        {SC::Sparse, SC::Common, {I, C}, {I, C}, from(1, 2)},
        {SC::Sparse, SC::Common, {I, C}, {C}, from(1, 2)},
        {SC::Sparse, SC::Common, {C}, {C}, open01()},
        {SC::Sparse, SC::Common, {C}, {I, C}, open01()},
        {SC::Sparse, SC::Common, {C}, {D, C}, upto(1, 2)},
        {SC::Sparse, SC::Common, {C}, {D, I, C}, open01()},
        {SC::Common, SC::Common, {I, C}, {I, C}, from(1, 2)},
        {SC::Common, SC::Common, {C}, {C}, open01()},
        {SC::Common, SC::Common, {C}, {I, C}, open01()},
        {SC::Common, SC::Common, {C}, {D, C}, upto(1, 2)},
        {SC::Common, SC::Common, {C}, {D, I, C}, upto(5, 6)},
    };
    struct Special {
        SpecialCase kind;
        SubsetClass cxbar;
        std::set<Axis> ox, oxbar;
        Expected range;
    };
    const std::vector<Special> specials = {
        {SpecialCase::Case1, SC::Sparse, {C, I}, {C}, from(1, 2)},
        {SpecialCase::Case1, SC::Sparse, {C}, {C}, never()},
        {SpecialCase::Case1, SC::Independent, {C, I}, {C}, from(2, 3)},
        {SpecialCase::Case1, SC::Independent, {C}, {C}, never()},
        {SpecialCase::Case1, SC::Common, {C, I}, {C}, never()},
        {SpecialCase::Case1, SC::Common, {C}, {C}, upto(1, 2)},
        {SpecialCase::Case2, SC::Common, {C}, {C, I}, from(1, 2)},
        {SpecialCase::Case2, SC::Common, {C}, {C}, upto(1, 2)},
    };

    const std::vector<Rational> grid = {{1, 10}, {1, 3},  {2, 5}, {1, 2},  {3, 5},
                                        {2, 3},  {7, 10}, {4, 5}, {5, 6},  {9, 10},
                                        {24, 25}};
    long long checks = 0;
    auto probe = [&](const PairType& pt, const Expected& range) {
        for (const Rational& a : grid) {
            ++checks;
            TableVerdict want =
                range.contains(a) ? TableVerdict::AasPresent : TableVerdict::AasAbsent;
            if (table_lookup(pt, a) != want) ++bad;
        }
    };
    for (const Plain& r : plains) {
        PairType pt;
        pt.x_types = side_types(r.cx, r.ox);
        pt.xbar_types = side_types(r.cxbar, r.oxbar);
        probe(pt, r.range);
    }
    for (const Special& r : specials) {
        PairType pt;
        pt.special = r.kind;
        pt.x_types = side_types(SubsetClass::Common, r.ox);
        pt.x_types.insert(r.kind == SpecialCase::Case1
                              ? VertexType{Axis::Isolated, Axis::Dominating}
                              : VertexType{Axis::Dominating, Axis::Isolated});
        pt.xbar_types = side_types(r.cxbar, r.oxbar);
        probe(pt, r.range);
    }
    // An unlisted combination must come out absent everywhere.
    PairType unlisted;
    unlisted.x_types = {{Axis::Dominating, D}};
    unlisted.xbar_types = {{Axis::Dominating, D}};
    probe(unlisted, never());
    return checks;
}

} // namespace table_pins

Outcome criterion10() {
    long long bad = 0;
    long long checks = table_pins::check_rows(bad);

    auto probe_high = probe_catalog("indep_neighborhood_vertex", Rational{3, 4});
    auto probe_low = probe_catalog("indep_neighborhood_vertex", Rational{1, 2});
    double hi[3], lo[3];
    const int ns[3] = {200, 400, 800};
    for (int i = 0; i < 3; ++i) {
        hi[i] = estimate(probe_high, Rational{3, 4}, ns[i], 300, 1000 + i).p_hat();
        lo[i] = estimate(probe_low, Rational{1, 2}, ns[i], 300, 2000 + i).p_hat();
    }
    int rising = (hi[1] >= hi[0]) + (hi[2] >= hi[1]);
    int falling = (lo[1] <= lo[0]) + (lo[2] <= lo[1]);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%lld row checks (%lld bad); trend high=[%.3f,%.3f,%.3f] "
                  "low=[%.3f,%.3f,%.3f]",
                  checks, bad, hi[0], hi[1], hi[2], lo[0], lo[1], lo[2]);
    return {bad == 0 && rising >= 2 && falling >= 2, buf};
}

} // namespace

int main(int argc, char** argv) {
    int which = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0) which = std::atoi(argv[i + 1]);
    if (which < 1 || which > 10) {
        std::fprintf(stderr, "usage: acceptance --criterion N  (1 <= N <= 10)\n");
        return 2;
    }
    Outcome (*criteria[10])() = {criterion1, criterion2, criterion3, criterion4,
                                 criterion5, criterion6, criterion7, criterion8,
                                 criterion9, criterion10};
    Outcome r;
    try {
        r = criteria[which - 1]();
    } catch (const Error& e) {
        std::printf("FAIL criterion %d: unexpected error %s\n", which, e.what());
        return 1;
    }
    std::printf("%s criterion %d: %s\n", r.pass ? "PASS" : "FAIL", which, r.detail.c_str());
    return r.pass ? 0 : 1;
}
