#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "qhom/bivar_poly.hpp"
#include "qhom/unipoly.hpp"

namespace qhom {

enum class ResultantAlgo { bareiss, interpolate };

/// Sylvester matrix of f and g with respect to y; entries live in K[x].
/// Row layout: deg_y(g) shifted coefficient rows of f followed by deg_y(f)
/// shifted rows of g. Degrees may be declared higher than the actual ones
/// (used by the discriminant, which needs f_y at formal degree n-1).
template <class F>
class SylvesterMatrix {
public:
    SylvesterMatrix(const BivarPoly<F>& f, const BivarPoly<F>& g, int deg_f, int deg_g)
        : f_(f), g_(g), deg_f_(deg_f), deg_g_(deg_g), dim_(deg_f + deg_g) {
        if (deg_f < 0 || deg_g < 0 || dim_ < 1)
            throw std::invalid_argument("SylvesterMatrix: need positive combined y-degree");
        if (f.deg_y() > deg_f || g.deg_y() > deg_g)
            throw std::invalid_argument("SylvesterMatrix: declared degree below actual degree");
        const F& field = f.field();
        UniPoly<F> zero = UniPoly<F>::zero(field, 'x');
        entries_.assign(static_cast<std::size_t>(dim_) * dim_, zero);
        // f-coefficient rows, highest y-power first
        for (int r = 0; r < deg_g_; ++r)
            for (int k = 0; k <= deg_f_; ++k)
                at(r, r + k) = f.y_coefficient(deg_f_ - k);
        for (int r = 0; r < deg_f_; ++r)
            for (int k = 0; k <= deg_g_; ++k)
                at(deg_g_ + r, r + k) = g.y_coefficient(deg_g_ - k);
    }

    SylvesterMatrix(const BivarPoly<F>& f, const BivarPoly<F>& g)
        : SylvesterMatrix(f, g, std::max(f.deg_y(), 0), std::max(g.deg_y(), 0)) {}

    int dim() const { return dim_; }
    const UniPoly<F>& entry(int r, int c) const { return entries_[index(r, c)]; }
    const BivarPoly<F>& source_f() const { return f_; }
    const BivarPoly<F>& source_g() const { return g_; }

    /// Fraction-free Bareiss elimination; exact over K[x].
    UniPoly<F> determinant() const {
        const F& field = f_.field();
        std::vector<UniPoly<F>> m = entries_;
        int n = dim_;
        auto cell = [&](int r, int c) -> UniPoly<F>& { return m[static_cast<std::size_t>(r) * n + c]; };
        bool negate = false;
        UniPoly<F> prev = UniPoly<F>::one(field, 'x');
        for (int k = 0; k + 1 < n; ++k) {
            int pivot = -1;
            for (int r = k; r < n; ++r)
                if (!cell(r, k).is_zero()) { pivot = r; break; }
            if (pivot < 0) return UniPoly<F>::zero(field, 'x');
            if (pivot != k) {
                for (int c = 0; c < n; ++c) std::swap(cell(k, c), cell(pivot, c));
                negate = !negate;
            }
            for (int r = k + 1; r < n; ++r) {
                for (int c = k + 1; c < n; ++c)
                    cell(r, c) = exact_div(cell(k, k) * cell(r, c) - cell(r, k) * cell(k, c), prev);
                cell(r, k) = UniPoly<F>::zero(field, 'x');
            }
            prev = cell(k, k);
        }
        UniPoly<F> det = cell(n - 1, n - 1);
        return negate ? -det : det;
    }

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * dim_ + c; }
    UniPoly<F>& at(int r, int c) { return entries_[index(r, c)]; }

    BivarPoly<F> f_, g_;
    int deg_f_, deg_g_, dim_;
    std::vector<UniPoly<F>> entries_;
};

namespace detail {

/// Scalar resultant of univariate polynomials via Gaussian elimination on
/// the scalar Sylvester matrix (declared degrees df, dg).
template <class F>
typename F::Elem scalar_resultant(const F& field, const std::vector<typename F::Elem>& fc, int df,
                                  const std::vector<typename F::Elem>& gc, int dg) {
    using Elem = typename F::Elem;
    int n = df + dg;
    std::vector<Elem> m(static_cast<std::size_t>(n) * n, field.zero());
    auto cell = [&](int r, int c) -> Elem& { return m[static_cast<std::size_t>(r) * n + c]; };
    auto coeff = [&](const std::vector<Elem>& v, int k) -> Elem {
        return (k >= 0 && k < static_cast<int>(v.size())) ? v[static_cast<std::size_t>(k)] : field.zero();
    };
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) cell(r, r + k) = coeff(fc, df - k);
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) cell(dg + r, r + k) = coeff(gc, dg - k);

    Elem det = field.one();
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!field.is_zero(cell(r, k))) { pivot = r; break; }
        if (pivot < 0) return field.zero();
        if (pivot != k) {
            for (int c = k; c < n; ++c) std::swap(cell(k, c), cell(pivot, c));
            det = -det;
        }
        det = det * cell(k, k);
        Elem inv = field.one() / cell(k, k);
        for (int r = k + 1; r < n; ++r) {
            if (field.is_zero(cell(r, k))) continue;
            Elem factor = cell(r, k) * inv;
            for (int c = k; c < n; ++c) cell(r, c) = cell(r, c) - factor * cell(k, c);
        }
    }
    return det;
}

/// Clear denominators towards an integer-coefficient representative.
/// Returns the scaled polynomial together with the scalar multiplier used.
inline std::pair<PolyQ, Rational> clear_denominators(const PolyQ& f) {
    Integer l = 1;
    for (const auto& [e, c] : f.terms()) l = lcm(l, denominator(c));
    Rational scale(l);
    return {f.scaled(scale), scale};
}

template <class F>
UniPoly<F> resultant_det(const BivarPoly<F>& f, const BivarPoly<F>& g, int deg_f, int deg_g) {
    if constexpr (std::is_same_v<F, RationalField>) {
        auto [fi, sf] = clear_denominators(f);
        auto [gi, sg] = clear_denominators(g);
        UniPoly<F> det = SylvesterMatrix<F>(fi, gi, deg_f, deg_g).determinant();
        Rational back = Rational(1) /
            (field_pow(f.field(), sf, static_cast<unsigned long long>(deg_g)) *
             field_pow(f.field(), sg, static_cast<unsigned long long>(deg_f)));
        return det.scaled(back);
    } else {
        return SylvesterMatrix<F>(f, g, deg_f, deg_g).determinant();
    }
}

template <class F>
UniPoly<F> interpolated_resultant(const BivarPoly<F>& f, const BivarPoly<F>& g) {
    const F& field = f.field();
    using Elem = typename F::Elem;
    int df = f.deg_y(), dg = g.deg_y();
    int dxf = std::max(f.deg_x(), 0), dxg = std::max(g.deg_x(), 0);
    int bound = dxf * dg + dxg * df;  // deg_x bound for Res_y(f, g)
    UniPoly<F> lcf = f.y_coefficient(df), lcg = g.y_coefficient(dg);

    std::vector<Elem> points, values;
    std::set<std::string> used;
    long long t = 0;
    long long tries = 0;
    while (static_cast<int>(points.size()) <= bound) {
        if (++tries > 4 * (bound + 2) + 64)
            throw std::domain_error("resultant interpolation: not enough usable sample points in this field");
        Elem xt = field.from_long(t);
        t = (t > 0) ? -t : -t + 1;  // 0, 1, -1, 2, -2, ...
        if (!used.insert(field.to_string(xt)).second) continue;  // wrapped around mod p
        if (field.is_zero(lcf.eval(xt)) || field.is_zero(lcg.eval(xt))) continue;
        BivarPoly<F> fx = eval_partial_x(f, xt);
        BivarPoly<F> gx = eval_partial_x(g, xt);
        std::vector<Elem> fc, gc;
        for (int j = 0; j <= df; ++j) fc.push_back(fx.coeff(0, j));
        for (int j = 0; j <= dg; ++j) gc.push_back(gx.coeff(0, j));
        points.push_back(xt);
        values.push_back(scalar_resultant(field, fc, df, gc, dg));
    }

    // Lagrange interpolation through (points, values)
    UniPoly<F> acc = UniPoly<F>::zero(field, 'x');
    for (std::size_t i = 0; i < points.size(); ++i) {
        UniPoly<F> basis = UniPoly<F>::one(field, 'x');
        Elem denom = field.one();
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly<F>(field, {-points[j], field.one()}, 'x');
            denom = denom * (points[i] - points[j]);
        }
        acc = acc + basis.scaled(values[i] / denom);
    }
    return acc;
}

}  // namespace detail

/// Resultant of f and g with respect to y, an element of K[x].
template <class F>
UniPoly<F> resultant_y(const BivarPoly<F>& f, const BivarPoly<F>& g,
                       ResultantAlgo algo = ResultantAlgo::bareiss) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant_y: zero operand");
    if (f.deg_y() < 1 && g.deg_y() < 1)
        throw std::invalid_argument("resultant_y: both inputs constant in y");
    if (algo == ResultantAlgo::interpolate) return detail::interpolated_resultant(f, g);
    return detail::resultant_det(f, g, std::max(f.deg_y(), 0), std::max(g.deg_y(), 0));
}

/// Disc_y(f) = (-1)^(n(n-1)/2) Res_y(f, f_y) / f_n with f_y taken at formal
/// degree n-1; the division is exact in K[x] for every coefficient ring.
/// For n = 1 this is the constant 1.
template <class F>
UniPoly<F> discriminant_y(const BivarPoly<F>& f) {
    int n = f.deg_y();
    if (n < 1) throw std::invalid_argument("discriminant_y: input has no y-dependence");
    const F& field = f.field();
    if (n == 1) return UniPoly<F>::one(field, 'x');
    BivarPoly<F> fy = f.derivative(Var::y);
    UniPoly<F> res = detail::resultant_det(f, fy, n, n - 1);
    bool flip = ((static_cast<long long>(n) * (n - 1)) / 2) % 2 == 1;
    if (flip) res = -res;
    if (res.is_zero()) return res;
    auto [q, r] = divmod(res, f.y_coefficient(n));
    if (!r.is_zero())
        throw std::logic_error("discriminant_y: division by the leading coefficient was not exact");
    return q;
}

/// A univariate monomial: exactly one nonzero term. Nonzero constants count.
template <class F>
bool is_monomial(const UniPoly<F>& p) {
    return p.is_monomial();
}

template <class F>
struct ConditionB {
    bool holds = false;
    UniPoly<F> f0, fn, disc;
    bool disc_degenerate = false;  // f_y vanished identically (positive characteristic)
};

/// Condition (B): f_0, f_n and Disc_y(f) are all monomials in x.
/// Precondition: f_0 and f_n nonzero.
template <class F>
ConditionB<F> condition_b(const BivarPoly<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("condition_b: zero polynomial");
    int n = std::max(f.deg_y(), 0);
    UniPoly<F> f0 = f.y_coefficient(0);
    UniPoly<F> fn = f.y_coefficient(n);
    if (f0.is_zero() || fn.is_zero())
        throw std::invalid_argument("condition_b: requires nonzero f_0 and f_n");
    ConditionB<F> out{false, f0, fn, UniPoly<F>::one(f.field(), 'x'), false};
    if (n >= 1) {
        if (f.derivative(Var::y).is_zero()) out.disc_degenerate = true;
        out.disc = discriminant_y(f);
    }
    out.holds = out.f0.is_monomial() && out.fn.is_monomial() && out.disc.is_monomial();
    return out;
}

}  // namespace qhom
