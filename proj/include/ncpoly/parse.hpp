#ifndef NCPOLY_PARSE_HPP
#define NCPOLY_PARSE_HPP

#include "nonassoc.hpp"
#include "polynomial.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ncpoly {

struct ParseError : std::runtime_error {
    std::size_t line, column;
    ParseError(const std::string& msg, std::size_t l, std::size_t c)
        : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " +
                             std::to_string(c)),
          line(l), column(c) {}
};

/// Expression AST. Parentheses are preserved as explicit nodes so printing
/// reproduces the user's bracketing; `defaulted` marks a multiplication the
/// parser associated to the left without explicit parentheses.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, basis, var, neg, add, sub, mul, tensor, paren };
    Kind kind;
    Rational num;             // number
    std::string basis_name;   // basis
    ExprPtr a, b;             // unary/binary
    std::vector<ExprPtr> parts; // tensor
    bool defaulted = false;   // mul: left association was implicit
};

inline ExprPtr make_expr(Expr e) { return std::make_shared<Expr>(std::move(e)); }

inline bool expr_equal(const ExprPtr& x, const ExprPtr& y) {
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case Expr::Kind::number: return x->num == y->num;
        case Expr::Kind::basis: return x->basis_name == y->basis_name;
        case Expr::Kind::var: return true;
        case Expr::Kind::neg:
        case Expr::Kind::paren: return expr_equal(x->a, y->a);
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
            return expr_equal(x->a, y->a) && expr_equal(x->b, y->b);
        case Expr::Kind::tensor: {
            if (x->parts.size() != y->parts.size()) return false;
            for (std::size_t t = 0; t < x->parts.size(); ++t)
                if (!expr_equal(x->parts[t], y->parts[t])) return false;
            return true;
        }
    }
    return false;
}

struct ParseResult {
    ExprPtr expr;
    bool defaulted_association = false;
};

namespace detail {

struct Token {
    enum class Kind { number, symbol, var, plus, minus, star, tensor, lparen, rparen, end };
    Kind kind;
    Rational num;
    std::string text;
    std::size_t line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        std::size_t l = line_, c = col_;
        if (pos_ >= src_.size()) return {Token::Kind::end, 0, "", l, c};
        char ch = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits = take_digits();
            Rational v(digits);
            if (peek() == '/') {
                std::size_t save = pos_, sl = line_, sc = col_;
                advance();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    std::string den = take_digits();
                    if (Rational(den) == 0) throw ParseError("zero denominator", l, c);
                    v /= Rational(den);
                } else {
                    pos_ = save; line_ = sl; col_ = sc;
                }
            }
            return {Token::Kind::number, v, "", l, c};
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string word;
            while (pos_ < src_.size() &&
                   std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
                word += src_[pos_];
                advance();
            }
            if (word == "x") return {Token::Kind::var, 0, "", l, c};
            return {Token::Kind::symbol, 0, word, l, c};
        }
        // UTF-8 tensor sign as an alias for '@'
        if (src_.compare(pos_, 3, "\xe2\x8a\x97") == 0) {
            advance(); advance(); advance();
            return {Token::Kind::tensor, 0, "", l, c};
        }
        advance();
        switch (ch) {
            case '+': return {Token::Kind::plus, 0, "", l, c};
            case '-': return {Token::Kind::minus, 0, "", l, c};
            case '*': return {Token::Kind::star, 0, "", l, c};
            case '@': return {Token::Kind::tensor, 0, "", l, c};
            case '(': return {Token::Kind::lparen, 0, "", l, c};
            case ')': return {Token::Kind::rparen, 0, "", l, c};
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    std::string take_digits() {
        std::string s;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            s += src_[pos_];
            advance();
        }
        return s;
    }

    const std::string& src_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class Parser {
public:
    Parser(const std::string& src, const AlgebraSpec& alg)
        : lex_(src), alg_(&alg) { cur_ = lex_.next(); }

    ParseResult run() {
        ExprPtr e = expr();
        if (cur_.kind != Token::Kind::end)
            throw ParseError("trailing input", cur_.line, cur_.column);
        return {e, defaulted_};
    }

private:
    // expr := texpr (('+'|'-') texpr)*
    ExprPtr expr() {
        ExprPtr e = texpr();
        while (cur_.kind == Token::Kind::plus || cur_.kind == Token::Kind::minus) {
            bool plus = cur_.kind == Token::Kind::plus;
            bump();
            ExprPtr rhs = texpr();
            Expr n;
            n.kind = plus ? Expr::Kind::add : Expr::Kind::sub;
            n.a = e;
            n.b = rhs;
            e = make_expr(std::move(n));
        }
        return e;
    }

    // texpr := term ('@' term)*
    ExprPtr texpr() {
        ExprPtr e = term();
        if (cur_.kind != Token::Kind::tensor) return e;
        Expr n;
        n.kind = Expr::Kind::tensor;
        n.parts.push_back(e);
        while (cur_.kind == Token::Kind::tensor) {
            bump();
            n.parts.push_back(term());
        }
        return make_expr(std::move(n));
    }

    // term := factor ('*'? factor)*   (adjacency means multiplication)
    ExprPtr term() {
        ExprPtr e = factor();
        std::size_t chain = 1;
        while (true) {
            bool explicit_star = cur_.kind == Token::Kind::star;
            if (explicit_star) bump();
            if (!starts_factor()) {
                if (explicit_star)
                    throw ParseError("expected operand after '*'", cur_.line, cur_.column);
                break;
            }
            ExprPtr rhs = factor();
            Expr n;
            n.kind = Expr::Kind::mul;
            n.a = e;
            n.b = rhs;
            ++chain;
            if (chain > 2) {
                n.defaulted = true;
                defaulted_ = true;
            }
            e = make_expr(std::move(n));
        }
        return e;
    }

    // factor := '-' factor | atom | '(' expr ')'
    ExprPtr factor() {
        if (cur_.kind == Token::Kind::minus) {
            bump();
            Expr n;
            n.kind = Expr::Kind::neg;
            n.a = factor();
            return make_expr(std::move(n));
        }
        if (cur_.kind == Token::Kind::lparen) {
            std::size_t l = cur_.line, c = cur_.column;
            bump();
            ExprPtr inner = expr();
            if (cur_.kind != Token::Kind::rparen)
                throw ParseError("unbalanced '(' opened", l, c);
            bump();
            Expr n;
            n.kind = Expr::Kind::paren;
            n.a = inner;
            return make_expr(std::move(n));
        }
        if (cur_.kind == Token::Kind::number) {
            Expr n;
            n.kind = Expr::Kind::number;
            n.num = cur_.num;
            bump();
            return make_expr(std::move(n));
        }
        if (cur_.kind == Token::Kind::var) {
            bump();
            Expr n;
            n.kind = Expr::Kind::var;
            return make_expr(std::move(n));
        }
        if (cur_.kind == Token::Kind::symbol) {
            if (alg_->basis_index(cur_.text) < 0)
                throw ParseError("unknown basis symbol '" + cur_.text + "'",
                                 cur_.line, cur_.column);
            Expr n;
            n.kind = Expr::Kind::basis;
            n.basis_name = cur_.text;
            bump();
            return make_expr(std::move(n));
        }
        throw ParseError("expected an operand", cur_.line, cur_.column);
    }

    bool starts_factor() const {
        switch (cur_.kind) {
            case Token::Kind::number:
            case Token::Kind::symbol:
            case Token::Kind::var:
            case Token::Kind::lparen:
                return true;
            default:
                return false;
        }
    }

    void bump() { cur_ = lex_.next(); }

    Lexer lex_;
    const AlgebraSpec* alg_;
    Token cur_;
    bool defaulted_ = false;
};

inline Element basis_by_name(const AlgebraSpec& alg, const std::string& s) {
    int idx = alg.basis_index(s);
    if (idx < 0) throw AlgebraError("unknown basis symbol '" + s + "'");
    return basis_element(alg, static_cast<std::size_t>(idx));
}

} // namespace detail

inline ParseResult parse(const std::string& src, const AlgebraSpec& alg) {
    return detail::Parser(src, alg).run();
}

inline std::string print_expr(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::number: return to_string(e->num);
        case Expr::Kind::basis: return e->basis_name;
        case Expr::Kind::var: return "x";
        case Expr::Kind::neg: return "-" + print_expr(e->a);
        case Expr::Kind::add: return print_expr(e->a) + " + " + print_expr(e->b);
        case Expr::Kind::sub: return print_expr(e->a) + " - " + print_expr(e->b);
        case Expr::Kind::mul: return print_expr(e->a) + "*" + print_expr(e->b);
        case Expr::Kind::paren: return "(" + print_expr(e->a) + ")";
        case Expr::Kind::tensor: {
            std::string s = print_expr(e->parts[0]);
            for (std::size_t t = 1; t < e->parts.size(); ++t)
                s += " @ " + print_expr(e->parts[t]);
            return s;
        }
    }
    return "";
}

/// Evaluate an AST to a single algebra element. Multiplication follows the
/// tree shape, so explicit brackets are honored in non-associative algebras.
inline Element ast_element(const ExprPtr& e, const AlgebraSpec& alg) {
    switch (e->kind) {
        case Expr::Kind::number: return e->num * basis_element(alg, 0);
        case Expr::Kind::basis: return detail::basis_by_name(alg, e->basis_name);
        case Expr::Kind::var: throw AlgebraError("'x' is not allowed in an element");
        case Expr::Kind::neg: return -ast_element(e->a, alg);
        case Expr::Kind::paren: return ast_element(e->a, alg);
        case Expr::Kind::add: return ast_element(e->a, alg) + ast_element(e->b, alg);
        case Expr::Kind::sub: return ast_element(e->a, alg) - ast_element(e->b, alg);
        case Expr::Kind::mul: return ast_element(e->a, alg) * ast_element(e->b, alg);
        case Expr::Kind::tensor: throw AlgebraError("'@' is not allowed in an element");
    }
    throw AlgebraError("bad expression node");
}

/// Evaluate an AST to a polynomial. Associative algebras only (the product
/// of polynomials needs associativity); use ast_bracket for octonions.
inline Polynomial ast_polynomial(const ExprPtr& e, const AlgebraSpec& alg) {
    switch (e->kind) {
        case Expr::Kind::number:
            return Polynomial::constant(e->num * basis_element(alg, 0));
        case Expr::Kind::basis:
            return Polynomial::constant(detail::basis_by_name(alg, e->basis_name));
        case Expr::Kind::var: return Polynomial::variable(alg);
        case Expr::Kind::neg: return -ast_polynomial(e->a, alg);
        case Expr::Kind::paren: return ast_polynomial(e->a, alg);
        case Expr::Kind::add:
            return ast_polynomial(e->a, alg) + ast_polynomial(e->b, alg);
        case Expr::Kind::sub:
            return ast_polynomial(e->a, alg) - ast_polynomial(e->b, alg);
        case Expr::Kind::mul:
            return ast_polynomial(e->a, alg) * ast_polynomial(e->b, alg);
        case Expr::Kind::tensor:
            throw AlgebraError("'@' is not allowed in a polynomial");
    }
    throw AlgebraError("bad expression node");
}

/// Evaluate a sum of '@' products to a tensor sum. Each '@' part must be a
/// constant element; the rank is the common part count.
inline TensorSum ast_tensor(const ExprPtr& e, const AlgebraSpec& alg) {
    switch (e->kind) {
        case Expr::Kind::neg: return -ast_tensor(e->a, alg);
        case Expr::Kind::paren: return ast_tensor(e->a, alg);
        case Expr::Kind::add: return ast_tensor(e->a, alg) + ast_tensor(e->b, alg);
        case Expr::Kind::sub: return ast_tensor(e->a, alg) - ast_tensor(e->b, alg);
        case Expr::Kind::tensor: {
            std::vector<Element> f;
            for (const auto& part : e->parts) f.push_back(ast_element(part, alg));
            return pure(std::move(f));
        }
        default:
            throw AlgebraError("expected '@' products joined by '+' or '-'");
    }
}

/// Evaluate an AST to a bracketed polynomial, preserving the user's
/// multiplication order.
inline BracketPolynomial ast_bracket(const ExprPtr& e, const AlgebraSpec& alg) {
    BracketPolynomial out(alg);
    switch (e->kind) {
        case Expr::Kind::number:
            out.add_term(e->num, bt_const(basis_element(alg, 0)));
            return out;
        case Expr::Kind::basis:
            out.add_term(1, bt_const(detail::basis_by_name(alg, e->basis_name)));
            return out;
        case Expr::Kind::var:
            out.add_term(1, bt_var());
            return out;
        case Expr::Kind::neg: return -ast_bracket(e->a, alg);
        case Expr::Kind::paren: return ast_bracket(e->a, alg);
        case Expr::Kind::add: return ast_bracket(e->a, alg) + ast_bracket(e->b, alg);
        case Expr::Kind::sub: return ast_bracket(e->a, alg) - ast_bracket(e->b, alg);
        case Expr::Kind::mul: {
            BracketPolynomial l = ast_bracket(e->a, alg);
            BracketPolynomial r = ast_bracket(e->b, alg);
            for (const auto& lt : l.terms())
                for (const auto& rt : r.terms())
                    out.add_term(lt.coeff * rt.coeff, bracket_product(lt.tree, rt.tree, alg));
            return out;
        }
        case Expr::Kind::tensor:
            throw AlgebraError("'@' is not allowed in a bracketed expression");
    }
    throw AlgebraError("bad expression node");
}

} // namespace ncpoly

#endif
