#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

#include "qhom/bivar_poly.hpp"

namespace qhom {

/// Syntax error with the byte offset at which it was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

inline constexpr int kMaxExponent = 100000;

namespace detail {

template <class F>
class PolyParser {
public:
    PolyParser(const F& field, std::string_view text, std::pair<std::string, std::string> vars)
        : field_(field), text_(text), vars_(std::move(vars)) {}

    BivarPoly<F> run() {
        BivarPoly<F> p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected input", pos_);
        return p;
    }

private:
    // expr   := term (('+'|'-') term)*
    // term   := factor ('*' factor)*
    // factor := '-' factor | atom ('^' INT)?
    // atom   := INT | VAR | '(' expr ')'
    BivarPoly<F> expr() {
        BivarPoly<F> acc = term();
        for (;;) {
            skip_ws();
            if (match('+')) acc = acc + term();
            else if (match('-')) acc = acc - term();
            else return acc;
        }
    }

    BivarPoly<F> term() {
        BivarPoly<F> acc = factor();
        for (;;) {
            skip_ws();
            if (match('*')) acc = acc * factor();
            else return acc;
        }
    }

    BivarPoly<F> factor() {
        skip_ws();
        if (match('-')) return -factor();
        BivarPoly<F> base = atom();
        skip_ws();
        if (match('^')) {
            int e = exponent();
            return base.pow(e);
        }
        return base;
    }

    BivarPoly<F> atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer_literal();
            if (match('/')) {
                std::size_t dpos = pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError("expected denominator", pos_);
                Integer den = integer_literal();
                typename F::Elem d = field_.from_integer(den);
                if (field_.is_zero(d)) throw ParseError("zero denominator", dpos);
                return BivarPoly<F>::constant(field_, field_.from_integer(num) / d);
            }
            return BivarPoly<F>::constant(field_, field_.from_integer(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name = identifier();
            if (name == vars_.first) return BivarPoly<F>::variable(field_, Var::x);
            if (name == vars_.second) return BivarPoly<F>::variable(field_, Var::y);
            throw ParseError("unknown identifier '" + name + "'", start);
        }
        if (match('(')) {
            BivarPoly<F> inner = expr();
            skip_ws();
            if (!match(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    int exponent() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected nonnegative integer exponent", pos_);
        std::size_t start = pos_;
        Integer n = integer_literal();
        if (n > kMaxExponent) throw ParseError("exponent overflow", start);
        return n.convert_to<int>();
    }

    Integer integer_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool match(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const F& field_;
    std::string_view text_;
    std::pair<std::string, std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: integer literals, the two variable names, + - * ^ ( ), with ^
/// taking nonnegative integer exponents. Implicit multiplication is a
/// syntax error.
template <class F>
BivarPoly<F> parse_poly(const F& field, std::string_view text,
                        std::pair<std::string, std::string> vars = {"x", "y"}) {
    return detail::PolyParser<F>(field, text, std::move(vars)).run();
}

inline PolyQ parse_q(std::string_view text) { return parse_poly(RationalField{}, text); }

template <class F>
UniPoly<F> parse_unipoly(const F& field, std::string_view text, char var = 'x') {
    BivarPoly<F> p = parse_poly(field, text, {std::string(1, var), "#unused#"});
    UniPoly<F> out = p.to_unipoly_in_x(var);
    return out;
}

/// Canonical printer: terms in descending graded-lex order, explicit `*`
/// and `^`, coefficients in lowest-terms `a/b` form when not integral.
/// parse_poly inverts it.
template <class F>
std::string format_poly(const BivarPoly<F>& f,
                        std::pair<std::string, std::string> vars = {"x", "y"}) {
    if (f.is_zero()) return "0";
    const F& field = f.field();
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = field.to_string(c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string monomial;
        if (e.i > 0) {
            monomial += vars.first;
            if (e.i > 1) monomial += "^" + std::to_string(e.i);
        }
        if (e.j > 0) {
            if (!monomial.empty()) monomial += "*";
            monomial += vars.second;
            if (e.j > 1) monomial += "^" + std::to_string(e.j);
        }
        if (monomial.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += monomial;
        } else {
            out += cs + "*" + monomial;
        }
    }
    return out;
}

}  // namespace qhom
