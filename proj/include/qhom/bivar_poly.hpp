#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qhom/field.hpp"
#include "qhom/unipoly.hpp"

namespace qhom {

/// Exponent pair of a bivariate monomial x^i * y^j.
struct Exp {
    int i = 0;
    int j = 0;
    bool operator==(const Exp&) const = default;
};

/// Graded lexicographic order: by total degree, then by x-exponent.
struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        int da = a.i + a.j, db = b.i + b.j;
        if (da != db) return da < db;
        return a.i < b.i;
    }
};

enum class Var { x, y };

/// Sparse bivariate polynomial over an exact field. Stored coefficients are
/// never zero and iteration over terms is in ascending graded-lex order.
template <class F>
class BivarPoly {
public:
    using Elem = typename F::Elem;
    using TermMap = std::map<Exp, Elem, GradedLexLess>;

    explicit BivarPoly(F field) : field_(std::move(field)) {}

    static BivarPoly zero(F field) { return BivarPoly(std::move(field)); }

    static BivarPoly constant(F field, Elem c) { return monomial(std::move(field), 0, 0, std::move(c)); }

    static BivarPoly monomial(F field, int i, int j, Elem c) {
        if (i < 0 || j < 0) throw std::invalid_argument("BivarPoly: negative exponent");
        BivarPoly p(field);
        if (!field.is_zero(c)) p.terms_.emplace(Exp{i, j}, std::move(c));
        return p;
    }

    static BivarPoly variable(F field, Var v) {
        Elem c = field.one();
        return monomial(std::move(field), v == Var::x ? 1 : 0, v == Var::x ? 0 : 1, std::move(c));
    }

    const F& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }

    std::size_t term_count() const { return terms_.size(); }

    int deg_x() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.i);
        return d;
    }

    int deg_y() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.j);
        return d;
    }

    Elem coeff(int i, int j) const {
        auto it = terms_.find(Exp{i, j});
        return it == terms_.end() ? field_.zero() : it->second;
    }

    /// Leading term in graded-lex order.
    std::pair<Exp, Elem> leading_term() const {
        if (terms_.empty()) throw std::domain_error("BivarPoly: leading term of zero");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    void add_term(int i, int j, const Elem& c) {
        if (i < 0 || j < 0) throw std::invalid_argument("BivarPoly: negative exponent");
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(Exp{i, j}, c);
        if (!inserted) {
            it->second = it->second + c;
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
        a.check_field(b);
        BivarPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e.i, e.j, c);
        return out;
    }

    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

    BivarPoly operator-() const {
        BivarPoly out(field_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        a.check_field(b);
        BivarPoly out(a.field_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(ea.i + eb.i, ea.j + eb.j, ca * cb);
        return out;
    }

    BivarPoly scaled(const Elem& c) const {
        BivarPoly out(field_);
        if (field_.is_zero(c)) return out;
        for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
        return out;
    }

    BivarPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("BivarPoly: negative power");
        BivarPoly acc = constant(field_, field_.one());
        BivarPoly base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const BivarPoly& other) const {
        return field_ == other.field_ && terms_ == other.terms_;
    }

    Elem eval(const Elem& a, const Elem& b) const {
        std::vector<Elem> xp = powers(a, deg_x());
        std::vector<Elem> yp = powers(b, deg_y());
        Elem acc = field_.zero();
        for (const auto& [e, c] : terms_)
            acc = acc + c * xp[static_cast<std::size_t>(e.i)] * yp[static_cast<std::size_t>(e.j)];
        return acc;
    }

    /// f(u, v) for polynomial substitutions u, v.
    BivarPoly substituted(const BivarPoly& u, const BivarPoly& v) const {
        check_field(u);
        check_field(v);
        std::vector<BivarPoly> up = poly_powers(u, deg_x());
        std::vector<BivarPoly> vp = poly_powers(v, deg_y());
        BivarPoly acc(field_);
        for (const auto& [e, c] : terms_)
            acc = acc + (up[static_cast<std::size_t>(e.i)] * vp[static_cast<std::size_t>(e.j)]).scaled(c);
        return acc;
    }

    BivarPoly derivative(Var v) const {
        BivarPoly out(field_);
        for (const auto& [e, c] : terms_) {
            int k = (v == Var::x) ? e.i : e.j;
            if (k == 0) continue;
            Elem nc = c * field_.from_long(k);
            if (field_.is_zero(nc)) continue;  // characteristic p kills multiples of p
            out.terms_.emplace(Exp{v == Var::x ? e.i - 1 : e.i, v == Var::x ? e.j : e.j - 1}, nc);
        }
        return out;
    }

    /// Coefficient of y^j, as a univariate polynomial in x.
    UniPoly<F> y_coefficient(int j) const {
        UniPoly<F> out(field_, 'x');
        std::vector<Elem> cs;
        for (const auto& [e, c] : terms_) {
            if (e.j != j) continue;
            if (static_cast<int>(cs.size()) <= e.i) cs.resize(static_cast<std::size_t>(e.i) + 1, field_.zero());
            cs[static_cast<std::size_t>(e.i)] = c;
        }
        return UniPoly<F>(field_, std::move(cs), 'x');
    }

    /// [f_0, ..., f_n] with n = deg_y f; the single entry [f] when deg_y f <= 0.
    std::vector<UniPoly<F>> coefficients_in_y() const {
        int n = std::max(deg_y(), 0);
        std::vector<UniPoly<F>> out;
        out.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) out.push_back(y_coefficient(j));
        return out;
    }

    static BivarPoly from_y_coefficients(const F& field, const std::vector<UniPoly<F>>& fs) {
        BivarPoly out(field);
        for (std::size_t j = 0; j < fs.size(); ++j)
            for (int i = 0; i <= fs[j].degree(); ++i)
                out.add_term(i, static_cast<int>(j), fs[j].coeff(i));
        return out;
    }

    static BivarPoly from_unipoly_in_x(const UniPoly<F>& p) {
        BivarPoly out(p.field());
        for (int i = 0; i <= p.degree(); ++i) out.add_term(i, 0, p.coeff(i));
        return out;
    }

    /// Requires deg_y f <= 0.
    UniPoly<F> to_unipoly_in_x(char var = 'x') const {
        if (deg_y() > 0) throw std::domain_error("BivarPoly: polynomial still depends on y");
        UniPoly<F> out = y_coefficient(0);
        out.set_var(var);
        return out;
    }

    /// Requires deg_x f <= 0.
    UniPoly<F> to_unipoly_in_y(char var = 'y') const {
        if (deg_x() > 0) throw std::domain_error("BivarPoly: polynomial still depends on x");
        std::vector<Elem> cs;
        for (const auto& [e, c] : terms_) {
            if (static_cast<int>(cs.size()) <= e.j) cs.resize(static_cast<std::size_t>(e.j) + 1, field_.zero());
            cs[static_cast<std::size_t>(e.j)] = c;
        }
        return UniPoly<F>(field_, std::move(cs), var);
    }

private:
    void check_field(const BivarPoly& other) const {
        if (!(field_ == other.field_)) throw std::invalid_argument("BivarPoly: field mismatch");
    }

    std::vector<Elem> powers(const Elem& a, int up_to) const {
        std::vector<Elem> out;
        out.push_back(field_.one());
        for (int k = 1; k <= up_to; ++k) out.push_back(out.back() * a);
        return out;
    }

    std::vector<BivarPoly> poly_powers(const BivarPoly& a, int up_to) const {
        std::vector<BivarPoly> out;
        out.push_back(constant(field_, field_.one()));
        for (int k = 1; k <= up_to; ++k) out.push_back(out.back() * a);
        return out;
    }

    F field_;
    TermMap terms_;
};

template <class F>
BivarPoly<F> eval_partial_x(const BivarPoly<F>& f, const typename F::Elem& a) {
    // f(a, y) as a polynomial in y, returned with the y terms in x-position 0.
    BivarPoly<F> out(f.field());
    for (const auto& [e, c] : f.terms()) {
        typename F::Elem v = c * field_pow(f.field(), a, static_cast<unsigned long long>(e.i));
        out.add_term(0, e.j, v);
    }
    return out;
}

using PolyQ = BivarPoly<RationalField>;
using PolyFp = BivarPoly<PrimeField>;
using UniQ = UniPoly<RationalField>;
using UniFp = UniPoly<PrimeField>;

}  // namespace qhom
