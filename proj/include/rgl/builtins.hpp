// Catalog of the built-in formulas used throughout the library and tests.
//
// conn          : connectedness (MSO, depth 3)
// phi_inf       : MSO sentence whose satisfying pair (x1,x2) carries the set
//                 X = {x1} ∪ N(x1)∩N(x2) with a triangle inside and no vertex
//                 z 2-dominating X (depth 4)
// phi_fo        : first-order counterpart of phi_inf (depth 5)
// fo3_1..fo3_6  : FO sentences whose minimal tree models are the paths
//                 P2..P7 (depth <= 3; macros expanded inline)
// mso_98/56/45  : existential-set sentences equivalent to: a spider(3,3,2)
//                 tree component / a bowtie subgraph / a diamond subgraph
// triangle_free : no triangle (depth 3)
#pragma once

#include <map>
#include <string>
#include <vector>

#include "rgl/formula.hpp"
#include "rgl/parser.hpp"

namespace rgl {

enum class BuiltinName {
    conn, phi_inf, phi_fo,
    fo3_1, fo3_2, fo3_3, fo3_4, fo3_5, fo3_6,
    mso_98, mso_56, mso_45,
    triangle_free,
};

inline const std::vector<std::pair<std::string, BuiltinName>>& builtin_names() {
    static const std::vector<std::pair<std::string, BuiltinName>> names = {
        {"conn", BuiltinName::conn},
        {"phi_inf", BuiltinName::phi_inf},
        {"phi_fo", BuiltinName::phi_fo},
        {"fo3_1", BuiltinName::fo3_1},
        {"fo3_2", BuiltinName::fo3_2},
        {"fo3_3", BuiltinName::fo3_3},
        {"fo3_4", BuiltinName::fo3_4},
        {"fo3_5", BuiltinName::fo3_5},
        {"fo3_6", BuiltinName::fo3_6},
        {"mso_98", BuiltinName::mso_98},
        {"mso_56", BuiltinName::mso_56},
        {"mso_45", BuiltinName::mso_45},
        {"triangle_free", BuiltinName::triangle_free},
    };
    return names;
}

inline std::string builtin_to_string(BuiltinName b) {
    for (const auto& [s, n] : builtin_names())
        if (n == b) return s;
    throw Error("Internal", "unknown builtin");
}

inline BuiltinName builtin_from_string(const std::string& s) {
    for (const auto& [name, b] : builtin_names())
        if (name == s) return b;
    throw SyntaxError("unknown builtin formula: " + s);
}

namespace detail {

inline std::string builtin_source(BuiltinName name) {
    // Macros used by the fo3 family:
    //   P2(x,y) = (exists z (x ~ z & y ~ z)) & !(x = y)   [distance-2 witness]
    //   S(x)    = exists y exists z (x ~ y & x ~ z & !(y = z))   [degree >= 2]
    // They are expanded inline below; P2 contributes one nested exists to
    // the quantifier depth.
    switch (name) {
        case BuiltinName::conn:
            // Every nonempty, non-full set has an edge leaving it.
            return "forall X ((exists x1 exists x2 (X(x1) & !X(x2)))"
                   " -> (exists y exists z (X(y) & !X(z) & y ~ z)))";
        case BuiltinName::phi_inf:
            // X = {x1} ∪ N(x1)∩N(x2) contains a triangle and no vertex
            // outside X comes within distance two of all of X.  The witness z
            // must be restricted to the complement: a triangle vertex inside
            // X is always within distance two of every member (via x1), so
            // without !X(z) the second conjunct contradicts the third and the
            // sentence has no models at all.
            return "exists X ("
                   " (exists x1 exists x2 forall x (X(x1) & !X(x2)"
                   "   & ((X(x) & !(x = x1)) <-> (x ~ x1 & x ~ x2))))"
                   " & !(exists z (!X(z)"
                   "     & forall x (X(x) -> (exists v (v ~ z & v ~ x)))))"
                   " & (exists x1 exists x2 exists x3 (X(x1) & X(x2) & X(x3)"
                   "   & x1 ~ x2 & x2 ~ x3 & x1 ~ x3)))";
        case BuiltinName::phi_fo:
            // First-order form of phi_inf over the definable set
            // X = {x1} ∪ N(x1)∩N(x2).  The defining pair must be distinct and
            // non-adjacent (otherwise z = x2 lies outside X and dominates it
            // via v = x1), so that requirement is stated explicitly; the
            // domination witness z is restricted to the complement of X,
            // mirroring phi_inf.
            return "exists x1 exists x2 ("
                   " !(x1 = x2) & !(x1 ~ x2)"
                   " & !(exists z (!(z = x1) & !(z ~ x1 & z ~ x2)"
                   "     & forall x (((x ~ x1 & x ~ x2) | x = x1)"
                   "       -> (exists v (v ~ z & v ~ x)))))"
                   " & (exists y1 exists y2 (x1 ~ y1 & x1 ~ y2 & x2 ~ y1"
                   "     & x2 ~ y2 & y1 ~ y2)))";
        case BuiltinName::fo3_1:
            return "exists x1 exists x2 (x1 ~ x2)";
        case BuiltinName::fo3_2:
            return "exists x1 exists x2 ((exists z (x1 ~ z & x2 ~ z)) & !(x1 = x2))";
        case BuiltinName::fo3_3:
            return "exists x1 ("
                   " (exists y exists z (x1 ~ y & x1 ~ z & !(y = z)))"
                   " & (exists x2 ((exists z (x1 ~ z & x2 ~ z)) & !(x1 = x2))))";
        case BuiltinName::fo3_4:
            return "exists x1 ("
                   " (exists y exists z (x1 ~ y & x1 ~ z & !(y = z)))"
                   " & (forall x2 exists x3 (x2 ~ x1 -> (x2 ~ x3 & !(x3 = x1)))))";
        case BuiltinName::fo3_5:
            return "exists x1 ("
                   " (exists y exists z (x1 ~ y & x1 ~ z & !(y = z)))"
                   " & (forall x2 exists x3 (x2 ~ x1 -> (x2 ~ x3 & !(x3 = x1))))"
                   " & (exists x2 ((exists z (x1 ~ z & x2 ~ z)) & !(x1 = x2)"
                   "     & (exists x3 (!(x3 ~ x1) & x3 ~ x2)))))";
        case BuiltinName::fo3_6:
            return "exists x1 ("
                   " (exists y exists z (x1 ~ y & x1 ~ z & !(y = z)))"
                   " & (forall x2 exists x3 (x2 ~ x1 -> (x2 ~ x3 & !(x3 = x1))))"
                   " & (forall x2 (((exists z (x1 ~ z & x2 ~ z)) & !(x1 = x2))"
                   "     -> (exists x3 (!(x3 ~ x1) & x3 ~ x2)))))";
        case BuiltinName::mso_98:
            // X has a universal vertex, is not a clique (two non-adjacent
            // members), every member has a neighbor outside X, and every
            // outside neighbor of X has a further neighbor outside X.
            return "exists X ("
                   " (exists x (X(x) & forall y ((X(y) & !(y = x)) -> x ~ y)))"
                   " & (exists x exists y (X(x) & X(y) & !(x = y) & !(x ~ y)))"
                   " & (forall x (X(x) -> (exists y (!X(y) & x ~ y))))"
                   " & (forall y ((!X(y) & (exists x (X(x) & x ~ y)))"
                   "     -> (exists z (!X(z) & y ~ z)))))";
        case BuiltinName::mso_56:
            // X is nonempty, every member of X has a neighbor and a
            // (distinct) non-neighbor inside X, and some outside vertex
            // dominates X.  Nonemptiness must be stated: the empty set
            // satisfies the other two conjuncts on every nonempty graph.
            return "exists X ("
                   " (exists x X(x))"
                   " & (forall x (X(x) -> ((exists y (X(y) & x ~ y))"
                   "     & (exists y (X(y) & !(x = y) & !(x ~ y))))))"
                   " & (exists z (!X(z) & forall x (X(x) -> z ~ x))))";
        case BuiltinName::mso_45:
            // X has a universal vertex and a non-adjacent pair, and some
            // outside vertex dominates X.
            return "exists X ("
                   " (exists x (X(x) & forall y ((X(y) & !(y = x)) -> x ~ y)))"
                   " & (exists x exists y (X(x) & X(y) & !(x = y) & !(x ~ y)))"
                   " & (exists z (!X(z) & forall x (X(x) -> z ~ x))))";
        case BuiltinName::triangle_free:
            return "!(exists x1 exists x2 exists x3 (x1 ~ x2 & x2 ~ x3 & x1 ~ x3))";
    }
    throw Error("Internal", "unknown builtin");
}

} // namespace detail

inline FormulaPtr builtin(BuiltinName name) {
    static std::map<BuiltinName, FormulaPtr> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, parse(detail::builtin_source(name))).first;
    return it->second;
}

} // namespace rgl
