// Recursive-descent parser for the formula language.
//
// Grammar (ASCII, whitespace insignificant):
//   formula := iff
//   iff     := imp ("<->" imp)*          (left-assoc)
//   imp     := or ("->" or)*             (right-assoc)
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | quant | atom | "(" formula ")"
//   quant   := ("forall"|"exists") ident formula
//   atom    := ident "~" ident | ident "=" ident | IDENT "(" ident ")"
//            | "true" | "false"
// Identifiers starting lowercase are vertex variables; starting uppercase,
// set variables.  Unbound occurrences and shadowing are rejected.
#pragma once

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "rgl/formula.hpp"

namespace rgl {

namespace detail {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    FormulaPtr parse_all() {
        FormulaPtr f = parse_formula();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        throw rgl::SyntaxError("at position " + std::to_string(pos_) + ", expected " + expected);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (text_.compare(pos_, tok.size(), tok) == 0) {
            // keyword tokens must not run into a following identifier char
            if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
                std::size_t end = pos_ + tok.size();
                if (end < text_.size() &&
                    (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                    return false;
            }
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    bool peek_ident(std::string& out) {
        skip_ws();
        std::size_t p = pos_;
        if (p >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[p]))) return false;
        std::size_t end = p;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            ++end;
        out = text_.substr(p, end - p);
        if (out == "forall" || out == "exists" || out == "true" || out == "false") return false;
        return true;
    }

    std::string take_ident() {
        std::string id;
        if (!peek_ident(id)) fail("identifier");
        pos_ += id.size();
        skip_ws();
        return id;
    }

    static bool is_set_var(const std::string& id) {
        return std::isupper(static_cast<unsigned char>(id[0]));
    }

    void require_bound(const std::string& id, bool set_var) {
        const auto& scope = set_var ? set_scope_ : vertex_scope_;
        if (!scope.count(id)) throw rgl::UnboundVariable(id);
    }

    FormulaPtr with_span(FormulaPtr f, std::size_t begin) {
        auto g = std::const_pointer_cast<Formula>(f);
        g->span_begin = static_cast<int>(begin);
        g->span_end = static_cast<int>(pos_);
        return f;
    }

    FormulaPtr parse_formula() { return parse_iff(); }

    FormulaPtr parse_iff() {
        std::size_t begin = mark();
        FormulaPtr f = parse_imp();
        while (eat("<->")) f = with_span(f_iff(f, parse_imp()), begin);
        return f;
    }

    FormulaPtr parse_imp() {
        std::size_t begin = mark();
        FormulaPtr f = parse_or();
        if (eat("->")) f = with_span(f_implies(f, parse_imp()), begin);  // right-assoc
        return f;
    }

    FormulaPtr parse_or() {
        std::size_t begin = mark();
        FormulaPtr f = parse_and();
        while (true) {
            skip_ws();
            // do not confuse "|" with nothing else in this grammar
            if (!eat("|")) break;
            f = with_span(f_or(f, parse_and()), begin);
        }
        return f;
    }

    FormulaPtr parse_and() {
        std::size_t begin = mark();
        FormulaPtr f = parse_unary();
        while (eat("&")) f = with_span(f_and(f, parse_unary()), begin);
        return f;
    }

    std::size_t mark() {
        skip_ws();
        return pos_;
    }

    FormulaPtr parse_unary() {
        std::size_t begin = mark();
        if (eat("!")) return with_span(f_not(parse_unary()), begin);
        if (eat("forall")) return parse_quant(true, begin);
        if (eat("exists")) return parse_quant(false, begin);
        if (eat("true")) return with_span(f_true(), begin);
        if (eat("false")) return with_span(f_false(), begin);
        if (eat("(")) {
            FormulaPtr f = parse_formula();
            if (!eat(")")) fail("')'");
            return f;
        }
        return parse_atom(begin);
    }

    FormulaPtr parse_quant(bool universal, std::size_t begin) {
        std::string var = take_ident();
        bool set_var = is_set_var(var);
        auto& scope = set_var ? set_scope_ : vertex_scope_;
        if (scope.count(var))
            throw rgl::SyntaxError("variable '" + var + "' shadows an enclosing binding");
        scope.insert(var);
        FormulaPtr body = parse_formula();
        scope.erase(var);
        FormulaKind k = set_var ? (universal ? FormulaKind::ForallS : FormulaKind::ExistsS)
                                : (universal ? FormulaKind::ForallV : FormulaKind::ExistsV);
        return with_span(f_quant(k, var, body), begin);
    }

    FormulaPtr parse_atom(std::size_t begin) {
        std::string id;
        if (!peek_ident(id)) fail("atom");
        pos_ += id.size();
        skip_ws();
        if (is_set_var(id)) {
            if (!eat("(")) fail("'(' after set variable");
            std::string v = take_ident();
            if (is_set_var(v)) fail("vertex variable inside membership atom");
            if (!eat(")")) fail("')'");
            require_bound(id, true);
            require_bound(v, false);
            return with_span(f_member(id, v), begin);
        }
        require_bound(id, false);
        if (eat("~")) {
            std::string rhs = take_ident();
            if (is_set_var(rhs)) fail("vertex variable after '~'");
            require_bound(rhs, false);
            return with_span(f_adj(id, rhs), begin);
        }
        if (eat("=")) {
            std::string rhs = take_ident();
            if (is_set_var(rhs)) fail("vertex variable after '='");
            require_bound(rhs, false);
            return with_span(f_eq(id, rhs), begin);
        }
        fail("'~', '=' or membership atom");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::set<std::string> vertex_scope_, set_scope_;
};

} // namespace detail

inline FormulaPtr parse(const std::string& text) { return detail::Parser(text).parse_all(); }

} // namespace rgl
