#pragma once

#include <stdexcept>
#include <utility>

#include "qhom/bivar_poly.hpp"
#include "qhom/unipoly.hpp"

namespace qhom {

/// Content of f in K[x]: monic gcd of the coefficients of f seen in K[x][y].
template <class F>
UniPoly<F> content_in_x(const BivarPoly<F>& f) {
    if (f.is_zero()) throw std::domain_error("content_in_x: zero polynomial");
    UniPoly<F> g = UniPoly<F>::zero(f.field(), 'x');
    for (int j = 0; j <= std::max(f.deg_y(), 0); ++j) {
        UniPoly<F> fj = f.y_coefficient(j);
        if (fj.is_zero()) continue;
        g = uni_gcd(g, fj);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

/// Divide every K[x]-coefficient of f by the univariate divisor d (exactly).
template <class F>
BivarPoly<F> divide_coefficients(const BivarPoly<F>& f, const UniPoly<F>& d) {
    std::vector<UniPoly<F>> parts = f.coefficients_in_y();
    for (auto& p : parts)
        if (!p.is_zero()) p = exact_div(p, d);
    return BivarPoly<F>::from_y_coefficients(f.field(), parts);
}

template <class F>
BivarPoly<F> primitive_part_in_y(const BivarPoly<F>& f) {
    return divide_coefficients(f, content_in_x(f));
}

/// Scale so that the graded-lex leading coefficient is 1.
template <class F>
BivarPoly<F> normalize_leading(const BivarPoly<F>& f) {
    if (f.is_zero()) return f;
    auto [e, c] = f.leading_term();
    return f.scaled(f.field().one() / c);
}

namespace detail {

/// One pseudo-remainder step chain: cancels leading y-terms of a against b,
/// multiplying by b's leading coefficient as needed. Only used inside the
/// primitive PRS, which strips contents afterwards.
template <class F>
BivarPoly<F> pseudo_remainder_y(BivarPoly<F> r, const BivarPoly<F>& b) {
    int db = b.deg_y();
    BivarPoly<F> lead_b = BivarPoly<F>::from_unipoly_in_x(b.y_coefficient(db));
    BivarPoly<F> y = BivarPoly<F>::variable(b.field(), Var::y);
    while (!r.is_zero() && r.deg_y() >= db) {
        int dr = r.deg_y();
        BivarPoly<F> lead_r = BivarPoly<F>::from_unipoly_in_x(r.y_coefficient(dr));
        r = lead_b * r - lead_r * b * y.pow(dr - db);
    }
    return r;
}

}  // namespace detail

/// Gcd in K[x,y] via the content/primitive-part split in K[x][y] and a
/// primitive pseudo-remainder sequence in y. The result is normalized so
/// that its graded-lex leading coefficient is 1.
template <class F>
BivarPoly<F> gcd_bivar(const BivarPoly<F>& a, const BivarPoly<F>& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd_bivar: both inputs are zero");
    if (a.is_zero()) return normalize_leading(b);
    if (b.is_zero()) return normalize_leading(a);

    UniPoly<F> ca = content_in_x(a), cb = content_in_x(b);
    UniPoly<F> cg = uni_gcd(ca, cb);
    BivarPoly<F> pa = divide_coefficients(a, ca);
    BivarPoly<F> pb = divide_coefficients(b, cb);

    if (pa.deg_y() < pb.deg_y()) std::swap(pa, pb);

    BivarPoly<F> gcd_y(a.field());
    if (pb.deg_y() == 0) {
        // pb is a unit in K: gcd in y is trivial
        gcd_y = BivarPoly<F>::constant(a.field(), a.field().one());
    } else {
        for (;;) {
            BivarPoly<F> r = detail::pseudo_remainder_y(pa, pb);
            if (r.is_zero()) {
                gcd_y = pb;
                break;
            }
            if (r.deg_y() == 0) {
                gcd_y = BivarPoly<F>::constant(a.field(), a.field().one());
                break;
            }
            pa = std::move(pb);
            pb = primitive_part_in_y(r);
        }
    }
    return normalize_leading(BivarPoly<F>::from_unipoly_in_x(cg) * gcd_y);
}

/// True iff gcd(f, f_x, f_y) is a nonzero constant. In characteristic 0
/// that is squarefreeness; in characteristic p it is geometric reducedness.
template <class F>
bool is_reduced(const BivarPoly<F>& f) {
    if (f.is_zero()) throw std::domain_error("is_reduced: zero polynomial");
    BivarPoly<F> fx = f.derivative(Var::x);
    BivarPoly<F> fy = f.derivative(Var::y);
    if (fx.is_zero() && fy.is_zero()) return f.is_constant();
    BivarPoly<F> g = gcd_bivar(f, fx.is_zero() ? fy : fx);
    if (!fx.is_zero() && !fy.is_zero() && !g.is_constant()) g = gcd_bivar(g, fy);
    return g.is_constant();
}

}  // namespace qhom
