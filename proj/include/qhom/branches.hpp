#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qhom/bivar_poly.hpp"
#include "qhom/newton.hpp"
#include "qhom/unipoly.hpp"

namespace qhom {

/// Truncated power series s(x) = sum_{r=1..K} c_r x^r; only strictly
/// positive exponents, matching the Puiseux convention for branches through
/// the origin. coeff[r] is the coefficient of x^r (index 0 stays zero).
template <class F>
class TruncatedSeries {
public:
    using Elem = typename F::Elem;

    TruncatedSeries(F field, int order)
        : field_(std::move(field)),
          order_(order),
          coeff_(static_cast<std::size_t>(order) + 1, field_.zero()) {
        if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    }

    const F& field() const { return field_; }
    int order() const { return order_; }

    Elem coeff(int r) const {
        if (r < 1 || r > order_) return field_.zero();
        return coeff_[static_cast<std::size_t>(r)];
    }

    void set_coeff(int r, const Elem& c) {
        if (r < 1 || r > order_) throw std::invalid_argument("TruncatedSeries: exponent out of range");
        coeff_[static_cast<std::size_t>(r)] = c;
    }

    /// Leading exponent M >= 1; throws on the zero series.
    int valuation() const {
        for (int r = 1; r <= order_; ++r)
            if (!field_.is_zero(coeff_[static_cast<std::size_t>(r)])) return r;
        throw std::domain_error("TruncatedSeries: zero series has no valuation");
    }

    UniPoly<F> as_unipoly(char var = 'x') const {
        return UniPoly<F>(field_, coeff_, var);
    }

    bool operator==(const TruncatedSeries& other) const {
        return field_ == other.field_ && order_ == other.order_ && coeff_ == other.coeff_;
    }

private:
    F field_;
    int order_;
    std::vector<Elem> coeff_;
};

/// Edge of the lower Newton polygon of f at the origin: `from` and `to` are
/// support points (ordered by increasing y-exponent), the branch exponent is
/// M = delta_i / delta_j > 0, and the slope in the (i, j) plane is -1/M.
/// Each edge carries height = delta_j branches counted with multiplicity.
struct PolygonEdge {
    LatticePoint from;
    LatticePoint to;
    long long m_num = 0;
    long long m_den = 1;  // M = m_num / m_den, reduced, positive
    long long slope_num = 0;
    long long slope_den = 1;  // slope = slope_num / slope_den = -m_den / m_num
    int height = 0;
};

/// f(t^N, y): the ramification substitution x -> t^N.
template <class F>
BivarPoly<F> ramify(const BivarPoly<F>& f, int n) {
    if (n < 1) throw std::invalid_argument("ramify: index must be >= 1");
    const F& field = f.field();
    BivarPoly<F> tn = BivarPoly<F>::monomial(field, n, 0, field.one());
    return f.substituted(tn, BivarPoly<F>::variable(field, Var::y));
}

namespace detail {

/// x-adic valuation of each y-coefficient, as polygon points (j, ord).
template <class F>
std::vector<LatticePoint> valuation_points(const BivarPoly<F>& f) {
    std::vector<LatticePoint> pts;
    for (int j = 0; j <= f.deg_y(); ++j) {
        UniPoly<F> fj = f.y_coefficient(j);
        if (fj.is_zero()) continue;
        pts.emplace_back(j, fj.valuation());
    }
    return pts;
}

inline std::vector<LatticePoint> lower_chain(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<LatticePoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

}  // namespace detail

/// Edges of the lower Newton polygon of f at (0, 0) that carry branches
/// y = s(x) with s(0) = 0 (the negative-slope part of the lower hull of
/// the points (j, ord_x f_j)).
template <class F>
std::vector<PolygonEdge> lower_polygon_edges(const BivarPoly<F>& f) {
    if (f.is_zero()) throw std::domain_error("lower_polygon_edges: zero polynomial");
    if (!f.field().is_zero(f.coeff(0, 0)))
        throw std::domain_error("lower_polygon_edges: no branch through the origin, f(0,0) != 0");
    if (f.deg_y() < 1) throw std::domain_error("lower_polygon_edges: f does not depend on y");

    std::vector<LatticePoint> hull = detail::lower_chain(detail::valuation_points(f));
    std::vector<PolygonEdge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        long long j1 = hull[k].first, v1 = hull[k].second;
        long long j2 = hull[k + 1].first, v2 = hull[k + 1].second;
        if (v2 >= v1) continue;  // slope >= 0: no vanishing branch
        long long num = v1 - v2, den = j2 - j1;
        long long g = std::gcd(num, den);
        PolygonEdge e;
        e.from = {v1, j1};  // back to (i, j) coordinates
        e.to = {v2, j2};
        e.m_num = num / g;
        e.m_den = den / g;
        e.slope_num = -e.m_den;
        e.slope_den = e.m_num;
        e.height = static_cast<int>(den);
        edges.push_back(e);
    }
    return edges;
}

/// Leading exponents of the branches of f vanishing at the origin, with
/// multiplicities (edge of lattice height h contributes its exponent h
/// times). Sorted ascending.
template <class F>
std::vector<Rational> branch_exponents_at_origin(const BivarPoly<F>& f) {
    std::vector<Rational> out;
    for (const PolygonEdge& e : lower_polygon_edges(f))
        for (int k = 0; k < e.height; ++k)
            out.emplace_back(Integer(e.m_num), Integer(e.m_den));
    std::sort(out.begin(), out.end());
    return out;
}

/// The polynomial whose roots are the admissible leading coefficients for
/// exponent M: phi(z) = sum over support points minimizing i + M*j of
/// c_ij z^j.
template <class F>
UniPoly<F> edge_polynomial(const BivarPoly<F>& f, int m) {
    if (f.is_zero()) throw std::domain_error("edge_polynomial: zero polynomial");
    const F& field = f.field();
    long long mu = 0;
    bool have = false;
    for (const auto& [e, c] : f.terms()) {
        long long w = e.i + static_cast<long long>(m) * e.j;
        if (!have || w < mu) { mu = w; have = true; }
    }
    std::vector<typename F::Elem> cs;
    for (const auto& [e, c] : f.terms()) {
        if (e.i + static_cast<long long>(m) * e.j != mu) continue;
        if (static_cast<int>(cs.size()) <= e.j) cs.resize(static_cast<std::size_t>(e.j) + 1, field.zero());
        cs[static_cast<std::size_t>(e.j)] = c;
    }
    return UniPoly<F>(field, std::move(cs), 'z');
}

/// f(x, s(x)) as a univariate polynomial in x.
template <class F>
UniPoly<F> eval_at_series(const BivarPoly<F>& f, const UniPoly<F>& s) {
    const F& field = f.field();
    BivarPoly<F> sb(field);
    for (int k = 0; k <= s.degree(); ++k) sb.add_term(k, 0, s.coeff(k));
    BivarPoly<F> composed = f.substituted(BivarPoly<F>::variable(field, Var::x), sb);
    return composed.to_unipoly_in_x();
}

inline int default_truncation(int deg_x, int deg_y) {
    return 2 * (std::max(deg_x, 0) + std::max(deg_y, 0)) + 4;
}

/// Lift the branch with leading term c*x^M by Newton-style successive
/// correction, up to truncation order K. The seed must be a simple root of
/// the edge polynomial for exponent M; then every correction stays in the
/// base field. On return f(x, s(x)) vanishes at least to order K + 1 (the
/// residual order actually exceeds K by the valuation of f_y along the
/// branch); this is re-checked before returning.
template <class F>
TruncatedSeries<F> lift_branch(const BivarPoly<F>& f, int m, const typename F::Elem& c, int order) {
    const F& field = f.field();
    if (field.is_zero(c)) throw std::invalid_argument("lift_branch: zero leading coefficient");
    if (m < 1) throw std::invalid_argument("lift_branch: leading exponent must be >= 1");
    if (order < m) throw std::invalid_argument("lift_branch: truncation order below leading exponent");

    UniPoly<F> phi = edge_polynomial(f, m);
    if (!field.is_zero(phi.eval(c)))
        throw std::invalid_argument("lift_branch: seed is not a root of the edge polynomial");
    if (field.is_zero(phi.derivative().eval(c)))
        throw std::invalid_argument(
            "lift_branch: non-simple seed, lifting is not unique (ramify or perturb first)");

    BivarPoly<F> fy = f.derivative(Var::y);
    UniPoly<F> s = UniPoly<F>::monomial(field, c, m, 'x');
    int last_exponent = m;
    for (;;) {
        UniPoly<F> residual = eval_at_series(f, s);
        if (residual.is_zero()) break;  // exact polynomial branch
        int e = residual.valuation();
        UniPoly<F> dy = eval_at_series(fy, s);
        if (dy.is_zero())
            throw std::logic_error("lift_branch: derivative vanished along the branch");
        int u = dy.valuation();
        int r = e - u;
        if (r > order) break;
        if (r <= last_exponent)
            throw std::logic_error("lift_branch: lifting stalled; the branch needs ramification");
        typename F::Elem cr = -(residual.coeff(e) / dy.coeff(u));
        s = s + UniPoly<F>::monomial(field, cr, r, 'x');
        last_exponent = r;
    }

    UniPoly<F> check = eval_at_series(f, s);
    if (!check.is_zero() && check.valuation() <= order)
        throw std::logic_error("lift_branch: residual not small enough after lifting");

    TruncatedSeries<F> out(field, order);
    for (int r = 1; r <= std::min(order, s.degree()); ++r) out.set_coeff(r, s.coeff(r));
    return out;
}

/// Exact limit of h = y*f_y / (x*f_x) for x -> 0 along the branch s. For a
/// branch of valuation M the value is -1/M, in particular never 0.
template <class F>
typename F::Elem h_limit_along(const BivarPoly<F>& f, const TruncatedSeries<F>& s) {
    const F& field = f.field();
    UniPoly<F> sp = s.as_unipoly('x');
    UniPoly<F> numer = sp * eval_at_series(f.derivative(Var::y), sp);
    UniPoly<F> denom = eval_at_series(f.derivative(Var::x), sp).shifted(1);
    if (denom.is_zero())
        throw std::domain_error("h_limit_along: denominator vanishes to truncation order");
    if (numer.is_zero())
        throw std::domain_error("h_limit_along: numerator vanishes to truncation order");
    int va = numer.valuation(), vb = denom.valuation();
    if (va > s.order() || vb > s.order())
        throw std::domain_error("h_limit_along: leading terms unresolved, increase the order");
    if (va > vb) return field.zero();        // limit 0 (ruled out for true branches)
    if (va < vb)
        throw std::domain_error("h_limit_along: limit is infinite along this branch");
    return numer.coeff(va) / denom.coeff(vb);
}

inline std::vector<Integer> small_divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::domain_error("small_divisors: zero");
    if (n > Integer(1000000000000LL))
        throw std::domain_error("small_divisors: coefficient too large for root search");
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Rational roots of a univariate polynomial over Q (used to enumerate
/// liftable seeds at desk scale).
inline std::vector<Rational> rational_roots(const UniQ& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    // strip x^v, clear denominators
    RationalField field;
    int v = p.valuation();
    std::vector<Rational> cs(p.coeffs().begin() + v, p.coeffs().end());
    Integer l = 1;
    for (const Rational& c : cs) l = lcm(l, denominator(c));
    std::vector<Integer> ic;
    for (const Rational& c : cs) ic.push_back(numerator(c * Rational(l)));
    std::vector<Rational> roots;
    if (ic.size() <= 1) return roots;
    std::vector<Integer> nums = small_divisors(ic.front());
    std::vector<Integer> dens = small_divisors(ic.back());
    UniQ stripped(field, cs, p.var());
    for (const Integer& a : nums) {
        for (const Integer& b : dens) {
            for (int sign : {1, -1}) {
                Rational cand(sign * a, b);
                if (field.is_zero(stripped.eval(cand))) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace qhom
