#pragma once

#include <stdexcept>

#include "qhom/bivar_poly.hpp"
#include "qhom/newton.hpp"
#include "qhom/unipoly.hpp"

namespace qhom {

/// Normal form of a quasi-homogeneous polynomial of type (w; alpha, beta)
/// with alpha > 0 and gcd(alpha, |beta|) = 1:
///
///     f = scale * x^k0 * y^ell0 * g(x^(-beta) * y^alpha)
///
/// as a Laurent identity, with g(0) != 0. Pulling x^(beta*deg g) out of g
/// gives the second shape with exponent k_prime = k0 - beta*deg(g); one of
/// the two is a product of honest polynomials depending on sign(beta).
template <class F>
struct LaurentForm {
    int k0 = 0;
    int ell0 = 0;
    int k_prime = 0;
    UniPoly<F> g;  // variable z, g(0) != 0
    long long alpha = 1;
    long long beta = 0;
    typename F::Elem scale;
};

/// Extract the normal form. The type must fit f exactly (every support
/// point on the line) and must have alpha > 0 after canonicalization.
template <class F>
LaurentForm<F> laurent_decompose(const BivarPoly<F>& f, const QhType& t) {
    if (f.is_zero()) throw std::domain_error("laurent_decompose: zero polynomial");
    if (t.alpha <= 0)
        throw std::invalid_argument("laurent_decompose: type must have positive weight of x");
    const F& field = f.field();
    for (const auto& [e, c] : f.terms())
        if (t.alpha * e.i + t.beta * e.j != t.w)
            throw std::invalid_argument("laurent_decompose: support point off the type line");

    int ell0 = f.deg_y() + 1;
    for (const auto& [e, c] : f.terms()) ell0 = std::min(ell0, e.j);
    int k0 = -1;
    for (const auto& [e, c] : f.terms())
        if (e.j == ell0) k0 = e.i;  // unique: alpha*i is pinned by the line at j = ell0

    std::vector<typename F::Elem> gc;
    for (const auto& [e, c] : f.terms()) {
        long long num = e.j - ell0;
        if (num % t.alpha != 0)
            throw std::logic_error("laurent_decompose: exponent step not divisible by alpha");
        auto m = static_cast<std::size_t>(num / t.alpha);
        if (gc.size() <= m) gc.resize(m + 1, field.zero());
        gc[m] = c;
    }
    LaurentForm<F> out{k0, ell0, 0, UniPoly<F>(field, std::move(gc), 'z'),
                       t.alpha, t.beta, field.one()};
    long long kp = k0 - static_cast<long long>(out.g.degree()) * t.beta;
    if (kp < 0) throw std::logic_error("laurent_decompose: negative second exponent");
    out.k_prime = static_cast<int>(kp);
    return out;
}

/// Re-expand the polynomial shape of the normal form (picked by sign(beta)).
template <class F>
BivarPoly<F> laurent_reconstruct(const LaurentForm<F>& form) {
    const F& field = form.g.field();
    BivarPoly<F> out(field);
    int d = form.g.degree();
    for (int m = 0; m <= d; ++m) {
        typename F::Elem c = form.g.coeff(m) * form.scale;
        if (field.is_zero(c)) continue;
        long long i, j = form.ell0 + form.alpha * static_cast<long long>(m);
        if (form.beta > 0)
            i = form.k_prime + form.beta * static_cast<long long>(d - m);
        else
            i = form.k0 + (-form.beta) * static_cast<long long>(m);
        out.add_term(static_cast<int>(i), static_cast<int>(j), c);
    }
    return out;
}

/// Reducedness read off the normal form: the polynomial-shape exponent of x
/// (k_prime for beta > 0, k0 otherwise, i.e. min of the two), the exponent
/// of y, and squarefreeness of g. Agrees with is_reduced on
/// quasi-homogeneous input in characteristic 0.
template <class F>
bool qh_reduced_criterion(const LaurentForm<F>& form) {
    if (std::min(form.k0, form.k_prime) > 1) return false;
    if (form.ell0 > 1) return false;
    return form.g.is_constant() || is_squarefree(form.g);
}

}  // namespace qhom
