#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qhom/bivar_poly.hpp"
#include "qhom/gcd.hpp"
#include "qhom/resultant.hpp"

namespace qhom {

enum class HomogVar { x, xt, y, yt };

/// Bidegree-(m, n) polynomial in the pairs (x, xt) and (y, yt); the stored
/// key (i, j) represents the monomial x^i xt^(m-i) y^j yt^(n-j).
template <class F>
class MultiHomogPoly {
public:
    using Elem = typename F::Elem;
    using TermMap = typename BivarPoly<F>::TermMap;

    MultiHomogPoly(F field, int m, int n) : field_(std::move(field)), m_(m), n_(n) {
        if (m < 0 || n < 0) throw std::invalid_argument("MultiHomogPoly: negative bidegree");
    }

    const F& field() const { return field_; }
    int deg_m() const { return m_; }
    int deg_n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int i, int j, const Elem& c) {
        if (i < 0 || j < 0 || i > m_ || j > n_)
            throw std::invalid_argument("MultiHomogPoly: exponent outside bidegree box");
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(Exp{i, j}, c);
        if (!inserted) {
            it->second = it->second + c;
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Elem coeff(int i, int j) const {
        auto it = terms_.find(Exp{i, j});
        return it == terms_.end() ? field_.zero() : it->second;
    }

    friend MultiHomogPoly operator+(const MultiHomogPoly& a, const MultiHomogPoly& b) {
        a.check_compatible(b);
        MultiHomogPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e.i, e.j, c);
        return out;
    }

    friend MultiHomogPoly operator-(const MultiHomogPoly& a, const MultiHomogPoly& b) {
        return a + b.scaled(-b.field_.one());
    }

    friend MultiHomogPoly operator*(const MultiHomogPoly& a, const MultiHomogPoly& b) {
        if (!(a.field_ == b.field_)) throw std::invalid_argument("MultiHomogPoly: field mismatch");
        MultiHomogPoly out(a.field_, a.m_ + b.m_, a.n_ + b.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(ea.i + eb.i, ea.j + eb.j, ca * cb);
        return out;
    }

    MultiHomogPoly scaled(const Elem& c) const {
        MultiHomogPoly out(field_, m_, n_);
        if (field_.is_zero(c)) return out;
        for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
        return out;
    }

    bool operator==(const MultiHomogPoly& other) const {
        return field_ == other.field_ && m_ == other.m_ && n_ == other.n_ && terms_ == other.terms_;
    }

    Elem eval(const Elem& x, const Elem& xt, const Elem& y, const Elem& yt) const {
        Elem acc = field_.zero();
        for (const auto& [e, c] : terms_) {
            Elem t = c;
            t = t * field_pow(field_, x, static_cast<unsigned long long>(e.i));
            t = t * field_pow(field_, xt, static_cast<unsigned long long>(m_ - e.i));
            t = t * field_pow(field_, y, static_cast<unsigned long long>(e.j));
            t = t * field_pow(field_, yt, static_cast<unsigned long long>(n_ - e.j));
            acc = acc + t;
        }
        return acc;
    }

    /// Chart xt = yt = 1.
    BivarPoly<F> dehomogenized() const {
        BivarPoly<F> out(field_);
        for (const auto& [e, c] : terms_) out.add_term(e.i, e.j, c);
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = field_.to_string(c);
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) cs = cs.substr(1);
            out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
            first = false;
            std::string mono;
            auto push = [&mono](const char* v, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            push("x", e.i);
            push("xt", m_ - e.i);
            push("y", e.j);
            push("yt", n_ - e.j);
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

private:
    void check_compatible(const MultiHomogPoly& other) const {
        if (!(field_ == other.field_) || m_ != other.m_ || n_ != other.n_)
            throw std::invalid_argument("MultiHomogPoly: bidegree or field mismatch");
    }

    F field_;
    int m_, n_;
    TermMap terms_;
};

/// Multi-homogenization: bidegree (deg_x f, deg_y f), coefficients carried
/// over unchanged.
template <class F>
MultiHomogPoly<F> multi_homogenize(const BivarPoly<F>& f) {
    if (f.is_zero()) throw std::domain_error("multi_homogenize: zero polynomial");
    MultiHomogPoly<F> out(f.field(), f.deg_x(), f.deg_y());
    for (const auto& [e, c] : f.terms()) out.add_term(e.i, e.j, c);
    return out;
}

/// Formal partial derivative; the bidegree drops by one in the chosen pair.
template <class F>
MultiHomogPoly<F> homog_derivative(const MultiHomogPoly<F>& p, HomogVar v) {
    const F& field = p.field();
    bool xpair = (v == HomogVar::x || v == HomogVar::xt);
    if ((xpair ? p.deg_m() : p.deg_n()) == 0)
        throw std::invalid_argument("homog_derivative: bidegree is zero in that variable pair");
    MultiHomogPoly<F> out(field, p.deg_m() - (xpair ? 1 : 0), p.deg_n() - (xpair ? 0 : 1));
    for (const auto& [e, c] : p.terms()) {
        int weight;
        int ni = e.i, nj = e.j;
        switch (v) {
            case HomogVar::x: weight = e.i; ni = e.i - 1; break;
            case HomogVar::xt: weight = p.deg_m() - e.i; break;
            case HomogVar::y: weight = e.j; nj = e.j - 1; break;
            default: weight = p.deg_n() - e.j; break;
        }
        if (weight == 0) continue;
        typename F::Elem nc = c * field.from_long(weight);
        if (field.is_zero(nc)) continue;
        out.add_term(ni, nj, nc);
    }
    return out;
}

/// Multiply by one of the four variables; the bidegree grows by one in the
/// corresponding pair.
template <class F>
MultiHomogPoly<F> mul_var(const MultiHomogPoly<F>& p, HomogVar v) {
    bool xpair = (v == HomogVar::x || v == HomogVar::xt);
    MultiHomogPoly<F> out(p.field(), p.deg_m() + (xpair ? 1 : 0), p.deg_n() + (xpair ? 0 : 1));
    for (const auto& [e, c] : p.terms()) {
        int ni = e.i + (v == HomogVar::x ? 1 : 0);
        int nj = e.j + (v == HomogVar::y ? 1 : 0);
        out.add_term(ni, nj, c);
    }
    return out;
}

/// var * d(p)/d(var), restoring the original bidegree.
template <class F>
MultiHomogPoly<F> var_times_derivative(const MultiHomogPoly<F>& p, HomogVar v) {
    return mul_var(homog_derivative(p, v), v);
}

enum class CWitnessKind { y_zero_chart, y_inf_chart, affine };

inline const char* to_string(CWitnessKind k) {
    switch (k) {
        case CWitnessKind::y_zero_chart: return "y_zero_chart";
        case CWitnessKind::y_inf_chart: return "y_inf_chart";
        default: return "affine";
    }
}

template <class F>
struct CWitness {
    CWitnessKind kind;
    /// Monic squarefree polynomial with nonzero constant term whose roots
    /// are the abscissae of common points.
    UniPoly<F> factor;
};

template <class F>
struct ConditionC {
    bool holds = false;
    std::optional<CWitness<F>> witness;
    bool fy_identically_zero = false;   // positive characteristic only
    bool res_identically_zero = false;  // positive characteristic only
};

namespace detail {

/// x^(-v) * p where v is the order of vanishing at 0.
template <class F>
UniPoly<F> strip_x_power(const UniPoly<F>& p) {
    int v = p.valuation();
    if (v <= 0) return p;
    std::vector<typename F::Elem> cs(p.coeffs().begin() + v, p.coeffs().end());
    return UniPoly<F>(p.field(), std::move(cs), p.var());
}

template <class F>
UniPoly<F> nonconstant_witness(const UniPoly<F>& p) {
    UniPoly<F> s = strip_x_power(p);
    if (!s.is_constant() && !s.derivative().is_zero()) return squarefree_part(s);
    return s.monic();  // p-th powers in positive characteristic: keep the stripped factor
}

}  // namespace detail

/// Condition (C) by chart analysis, assuming the caller has verified that f
/// is reduced with f_0, f_n nonzero:
///   - at y = 0 the multi-homogenized pair has a common point with nonzero
///     abscissa iff f_0 is not a monomial;
///   - at y = infinity, iff f_n is not a monomial;
///   - for y in the torus, once both charts pass, iff Res_y(f, f_y) is
///     nonconstant after stripping its power of x;
///   - deg_y f = 0 degenerates to the first chart with f_0 = f.
template <class F>
ConditionC<F> condition_c_unchecked(const BivarPoly<F>& f) {
    ConditionC<F> out;
    int n = f.deg_y();
    UniPoly<F> f0 = f.y_coefficient(0);

    if (n <= 0) {
        // y * f^_y is identically zero, so common points are exactly the
        // roots of f itself
        if (f0.is_monomial()) { out.holds = true; return out; }
        out.witness = CWitness<F>{CWitnessKind::y_zero_chart, detail::nonconstant_witness(f0)};
        return out;
    }

    UniPoly<F> fn = f.y_coefficient(n);
    if (!f0.is_monomial()) {
        out.witness = CWitness<F>{CWitnessKind::y_zero_chart, detail::nonconstant_witness(f0)};
        return out;
    }
    if (!fn.is_monomial()) {
        out.witness = CWitness<F>{CWitnessKind::y_inf_chart, detail::nonconstant_witness(fn)};
        return out;
    }

    BivarPoly<F> fy = f.derivative(Var::y);
    if (fy.is_zero()) {
        // f(a, y) keeps degree n >= 1 for every nonzero a (f_n is a
        // monomial), so the curve has points over every such a, all of
        // them killing y * f^_y.
        out.fy_identically_zero = true;
        return out;
    }
    UniPoly<F> res = resultant_y(f, fy);
    if (res.is_zero()) {
        // f and f_y share a y-dependent factor; its zero locus meets the
        // region with nonzero abscissa.
        out.res_identically_zero = true;
        return out;
    }
    UniPoly<F> stripped = detail::strip_x_power(res);
    if (stripped.is_constant()) {
        out.holds = true;
        return out;
    }
    out.witness = CWitness<F>{CWitnessKind::affine, detail::nonconstant_witness(res)};
    return out;
}

/// Condition (C) with full precondition checking (f nonzero and reduced,
/// f_0 and f_n nonzero).
template <class F>
ConditionC<F> condition_c(const BivarPoly<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("condition_c: zero polynomial");
    UniPoly<F> f0 = f.y_coefficient(0);
    UniPoly<F> fn = f.y_coefficient(std::max(f.deg_y(), 0));
    if (f0.is_zero() || fn.is_zero())
        throw std::invalid_argument("condition_c: requires nonzero f_0 and f_n");
    if (!is_reduced(f)) throw std::invalid_argument("condition_c: requires a reduced polynomial");
    return condition_c_unchecked(f);
}

}  // namespace qhom
