#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhom/field.hpp"

namespace qhom {

/// Dense univariate polynomial over an exact field. Coefficients are stored
/// in ascending order of exponent and the vector is always trimmed, so the
/// zero polynomial is the empty vector and degree() == -1 stands in for the
/// degree -infinity of the zero polynomial.
template <class F>
class UniPoly {
public:
    using Elem = typename F::Elem;

    explicit UniPoly(F field, char var = 'x') : field_(std::move(field)), var_(var) {}

    UniPoly(F field, std::vector<Elem> coeffs, char var = 'x')
        : field_(std::move(field)), coeffs_(std::move(coeffs)), var_(var) {
        trim();
    }

    static UniPoly zero(F field, char var = 'x') { return UniPoly(std::move(field), var); }

    static UniPoly constant(F field, Elem c, char var = 'x') {
        UniPoly p(field, var);
        if (!field.is_zero(c)) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static UniPoly monomial(F field, Elem c, int k, char var = 'x') {
        if (k < 0) throw std::invalid_argument("UniPoly: negative exponent");
        UniPoly p(field, var);
        if (!field.is_zero(c)) {
            p.coeffs_.assign(static_cast<std::size_t>(k) + 1, field.zero());
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    static UniPoly one(F field, char var = 'x') {
        return constant(field, field.one(), var);
    }

    const F& field() const { return field_; }
    char var() const { return var_; }
    void set_var(char v) { var_ = v; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Elem>& coeffs() const { return coeffs_; }

    Elem coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return field_.zero();
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Elem leading() const {
        if (is_zero()) throw std::domain_error("UniPoly: leading coefficient of zero");
        return coeffs_.back();
    }

    /// Smallest exponent with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!field_.is_zero(coeffs_[k])) return static_cast<int>(k);
        return -1;
    }

    bool is_monomial() const {
        int nonzero = 0;
        for (const Elem& c : coeffs_)
            if (!field_.is_zero(c)) ++nonzero;
        return nonzero == 1;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        a.check_field(b);
        std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
        for (std::size_t k = 0; k < out.size(); ++k) {
            if (k < a.coeffs_.size()) out[k] = out[k] + a.coeffs_[k];
            if (k < b.coeffs_.size()) out[k] = out[k] + b.coeffs_[k];
        }
        return UniPoly(a.field_, std::move(out), a.var_);
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    UniPoly operator-() const {
        UniPoly out(*this);
        for (Elem& c : out.coeffs_) c = -c;
        return out;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        a.check_field(b);
        if (a.is_zero() || b.is_zero()) return zero(a.field_, a.var_);
        std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.field_.is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(a.field_, std::move(out), a.var_);
    }

    UniPoly scaled(const Elem& c) const {
        if (field_.is_zero(c)) return zero(field_, var_);
        UniPoly out(*this);
        for (Elem& x : out.coeffs_) x = x * c;
        return out;
    }

    /// Multiply by var^k.
    UniPoly shifted(int k) const {
        if (k < 0) throw std::invalid_argument("UniPoly: negative shift");
        if (is_zero()) return *this;
        UniPoly out(field_, var_);
        out.coeffs_.assign(static_cast<std::size_t>(k), field_.zero());
        out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return out;
    }

    UniPoly derivative() const {
        UniPoly out(field_, var_);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            out.coeffs_.push_back(coeffs_[k] * field_.from_long(static_cast<long long>(k)));
        out.trim();
        return out;
    }

    Elem eval(const Elem& x) const {
        Elem acc = field_.zero();
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    /// Quotient and remainder with deg(rem) < deg(divisor).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        a.check_field(b);
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly q = zero(a.field_, a.var_), r = a;
        Elem lead_inv = a.field_.one() / b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Elem c = r.leading() * lead_inv;
            q = q + monomial(a.field_, c, shift, a.var_);
            r = r - b.shifted(shift).scaled(c);
        }
        return {q, r};
    }

    friend UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("UniPoly: exact division left a remainder");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.one() / leading());
    }

    bool operator==(const UniPoly& other) const {
        return field_ == other.field_ && coeffs_ == other.coeffs_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (field_.is_zero(coeffs_[k])) continue;
            std::string cs = field_.to_string(coeffs_[k]);
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) cs = cs.substr(1);
            if (first) {
                if (negative) out += "-";
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            bool unit = (cs == "1");
            if (k == 0) {
                out += cs;
            } else {
                if (!unit) { out += cs; out += "*"; }
                out += var_;
                if (k > 1) { out += "^"; out += std::to_string(k); }
            }
        }
        return out;
    }

private:
    void check_field(const UniPoly& other) const {
        if (!(field_ == other.field_)) throw std::invalid_argument("UniPoly: field mismatch");
    }

    void trim() {
        while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    F field_;
    std::vector<Elem> coeffs_;
    char var_;
};

/// Monic gcd via the Euclidean algorithm over the coefficient field.
template <class F>
UniPoly<F> uni_gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
bool is_squarefree(const UniPoly<F>& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    UniPoly<F> d = p.derivative();
    if (d.is_zero()) return false;  // only in positive characteristic
    return uni_gcd(p, d).is_constant();
}

/// p with all repeated factors collapsed to multiplicity one, made monic.
template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.is_constant()) return UniPoly<F>::one(p.field(), p.var());
    UniPoly<F> d = p.derivative();
    if (d.is_zero()) throw std::domain_error("squarefree_part: derivative vanishes");
    return exact_div(p, uni_gcd(p, d)).monic();
}

}  // namespace qhom
