// Tarskian model checker for FO/MSO formulas on graphs.
//
// Vertex quantifiers range over all n vertices; set quantifiers enumerate all
// 2^n subsets (Gray-code order, one bit flipped per step), which caps MSO
// evaluation at n <= 24.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "rgl/bitset.hpp"
#include "rgl/errors.hpp"
#include "rgl/formula.hpp"
#include "rgl/graph.hpp"

namespace rgl {

struct Assignment {
    std::map<std::string, int> vertex;
    std::map<std::string, Bitset> set;
};

namespace detail {

inline bool has_set_quantifier(const FormulaPtr& f) {
    if (!f) return false;
    if (f->kind == FormulaKind::ForallS || f->kind == FormulaKind::ExistsS) return true;
    return has_set_quantifier(f->left) || has_set_quantifier(f->right);
}

inline int lookup_vertex(const Assignment& a, const std::string& var) {
    auto it = a.vertex.find(var);
    if (it == a.vertex.end()) throw UnboundVariable(var);
    return it->second;
}

inline const Bitset& lookup_set(const Assignment& a, const std::string& var) {
    auto it = a.set.find(var);
    if (it == a.set.end()) throw UnboundVariable(var);
    return it->second;
}

inline bool eval_rec(const Graph& g, const FormulaPtr& f, Assignment& a) {
    switch (f->kind) {
        case FormulaKind::True: return true;
        case FormulaKind::False: return false;
        case FormulaKind::Adj: {
            int u = lookup_vertex(a, f->a), v = lookup_vertex(a, f->b);
            return g.adjacent(u, v);
        }
        case FormulaKind::Eq:
            return lookup_vertex(a, f->a) == lookup_vertex(a, f->b);
        case FormulaKind::Member:
            return lookup_set(a, f->a).test(lookup_vertex(a, f->b));
        case FormulaKind::Not: return !eval_rec(g, f->left, a);
        case FormulaKind::And: return eval_rec(g, f->left, a) && eval_rec(g, f->right, a);
        case FormulaKind::Or: return eval_rec(g, f->left, a) || eval_rec(g, f->right, a);
        case FormulaKind::Implies: return !eval_rec(g, f->left, a) || eval_rec(g, f->right, a);
        case FormulaKind::Iff: return eval_rec(g, f->left, a) == eval_rec(g, f->right, a);
        case FormulaKind::ForallV:
        case FormulaKind::ExistsV: {
            bool exists = f->kind == FormulaKind::ExistsV;
            auto [it, fresh] = a.vertex.emplace(f->var, 0);
            int saved = fresh ? -1 : it->second;
            bool result = !exists;
            for (int v = 0; v < g.n(); ++v) {
                it->second = v;
                if (eval_rec(g, f->left, a) == exists) { result = exists; break; }
            }
            if (fresh) a.vertex.erase(f->var); else it->second = saved;
            return result;
        }
        case FormulaKind::ForallS:
        case FormulaKind::ExistsS: {
            bool exists = f->kind == FormulaKind::ExistsS;
            auto [it, fresh] = a.set.emplace(f->var, Bitset(g.n()));
            Bitset saved = fresh ? Bitset() : it->second;
            it->second = Bitset(g.n());
            bool result = !exists;
            std::uint32_t total = 1u << g.n();
            // Gray-code walk: subset(i) differs from subset(i-1) in one bit.
            for (std::uint32_t i = 0; i < total; ++i) {
                if (i) it->second.assign(std::countr_zero(i), ((i ^ (i >> 1)) >> std::countr_zero(i)) & 1);
                if (eval_rec(g, f->left, a) == exists) { result = exists; break; }
            }
            if (fresh) a.set.erase(f->var); else it->second = saved;
            return result;
        }
    }
    throw Error("Internal", "unknown formula kind");
}

} // namespace detail

inline bool eval(const Graph& g, const FormulaPtr& phi, const Assignment& a) {
    if (detail::has_set_quantifier(phi) && g.n() > 24)
        throw GraphTooLargeForMSO("set quantifiers cap evaluation at 24 vertices, got " +
                                  std::to_string(g.n()));
    Assignment scratch = a;
    return detail::eval_rec(g, phi, scratch);
}

inline bool eval_sentence(const Graph& g, const FormulaPtr& phi) { return eval(g, phi, Assignment{}); }

} // namespace rgl
