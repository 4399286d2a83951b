// Formula AST for the FO/MSO language of graphs, with printing,
// quantifier-depth computation and structural equality.
//
// Vertex variables are lowercase identifiers, set variables start uppercase.
#pragma once

#include <memory>
#include <string>

#include "rgl/errors.hpp"

namespace rgl {

enum class FormulaKind {
    True, False,
    Adj,      // a ~ b         (vertex vars a, b)
    Eq,       // a = b         (vertex vars a, b)
    Member,   // A(b)          (set var a, vertex var b)
    Not, And, Or, Implies, Iff,
    ForallV, ExistsV,         // vertex quantifiers, variable `var`
    ForallS, ExistsS          // set quantifiers, variable `var`
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    FormulaKind kind;
    std::string a, b;        // atom operands
    std::string var;         // quantified variable
    FormulaPtr left, right;  // children (unary ops use left only)

    // Source span (byte offsets) when produced by the parser; -1 otherwise.
    int span_begin = -1;
    int span_end = -1;
};

inline FormulaPtr mk(FormulaKind k) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    return f;
}
inline FormulaPtr f_true() { return mk(FormulaKind::True); }
inline FormulaPtr f_false() { return mk(FormulaKind::False); }
inline FormulaPtr f_adj(std::string x, std::string y) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::Adj; f->a = std::move(x); f->b = std::move(y);
    return f;
}
inline FormulaPtr f_eq(std::string x, std::string y) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::Eq; f->a = std::move(x); f->b = std::move(y);
    return f;
}
inline FormulaPtr f_member(std::string set_var, std::string vertex_var) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::Member; f->a = std::move(set_var); f->b = std::move(vertex_var);
    return f;
}
inline FormulaPtr f_unary(FormulaKind k, FormulaPtr child) {
    auto f = std::make_shared<Formula>();
    f->kind = k; f->left = std::move(child);
    return f;
}
inline FormulaPtr f_not(FormulaPtr x) { return f_unary(FormulaKind::Not, std::move(x)); }
inline FormulaPtr f_binary(FormulaKind k, FormulaPtr l, FormulaPtr r) {
    auto f = std::make_shared<Formula>();
    f->kind = k; f->left = std::move(l); f->right = std::move(r);
    return f;
}
inline FormulaPtr f_and(FormulaPtr l, FormulaPtr r) { return f_binary(FormulaKind::And, std::move(l), std::move(r)); }
inline FormulaPtr f_or(FormulaPtr l, FormulaPtr r) { return f_binary(FormulaKind::Or, std::move(l), std::move(r)); }
inline FormulaPtr f_implies(FormulaPtr l, FormulaPtr r) { return f_binary(FormulaKind::Implies, std::move(l), std::move(r)); }
inline FormulaPtr f_iff(FormulaPtr l, FormulaPtr r) { return f_binary(FormulaKind::Iff, std::move(l), std::move(r)); }
inline FormulaPtr f_quant(FormulaKind k, std::string var, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = k; f->var = std::move(var); f->left = std::move(body);
    return f;
}

inline bool is_quantifier(FormulaKind k) {
    return k == FormulaKind::ForallV || k == FormulaKind::ExistsV ||
           k == FormulaKind::ForallS || k == FormulaKind::ExistsS;
}

inline int quantifier_depth(const FormulaPtr& f) {
    if (!f) return 0;
    int sub = std::max(quantifier_depth(f->left), quantifier_depth(f->right));
    return is_quantifier(f->kind) ? sub + 1 : sub;
}

// True iff the formula mentions sets at all (set quantifier or membership atom).
inline bool is_mso(const FormulaPtr& f) {
    if (!f) return false;
    if (f->kind == FormulaKind::Member || f->kind == FormulaKind::ForallS ||
        f->kind == FormulaKind::ExistsS)
        return true;
    return is_mso(f->left) || is_mso(f->right);
}

inline bool structurally_equal(const FormulaPtr& x, const FormulaPtr& y) {
    if (!x || !y) return !x && !y;
    if (x->kind != y->kind || x->a != y->a || x->b != y->b || x->var != y->var) return false;
    return structurally_equal(x->left, y->left) && structurally_equal(x->right, y->right);
}

// Printer emitting the concrete grammar; parse(print(f)) == f structurally.
inline std::string print(const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::True: return "true";
        case FormulaKind::False: return "false";
        case FormulaKind::Adj: return f->a + " ~ " + f->b;
        case FormulaKind::Eq: return f->a + " = " + f->b;
        case FormulaKind::Member: return f->a + "(" + f->b + ")";
        case FormulaKind::Not: return "!(" + print(f->left) + ")";
        case FormulaKind::And: return "(" + print(f->left) + " & " + print(f->right) + ")";
        case FormulaKind::Or: return "(" + print(f->left) + " | " + print(f->right) + ")";
        case FormulaKind::Implies: return "(" + print(f->left) + " -> " + print(f->right) + ")";
        case FormulaKind::Iff: return "(" + print(f->left) + " <-> " + print(f->right) + ")";
        // A quantifier body extends maximally rightward in the grammar, so
        // the whole quantified formula is wrapped as well as its body.
        case FormulaKind::ForallV:
        case FormulaKind::ForallS:
            return "(forall " + f->var + " (" + print(f->left) + "))";
        case FormulaKind::ExistsV:
        case FormulaKind::ExistsS:
            return "(exists " + f->var + " (" + print(f->left) + "))";
    }
    throw Error("Internal", "unknown formula kind");
}

} // namespace rgl
