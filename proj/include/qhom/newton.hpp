#pragma once

#include <array>
#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qhom/bivar_poly.hpp"

namespace qhom {

using LatticePoint = std::pair<long long, long long>;
using SupportSet = std::vector<LatticePoint>;  // sorted, duplicate-free

/// Weight triple (w; alpha, beta): every support point satisfies
/// alpha*i + beta*j = w. Canonical representative: gcd(|alpha|,|beta|) = 1
/// and alpha > 0, or alpha = 0 and beta > 0. For single-point supports the
/// line is not unique and line_unique is false.
struct QhType {
    long long w = 0;
    long long alpha = 0;
    long long beta = 0;
    bool line_unique = true;

    bool operator==(const QhType&) const = default;
};

template <class F>
SupportSet support(const BivarPoly<F>& f) {
    if (f.is_zero()) throw std::domain_error("support: zero polynomial");
    SupportSet pts;
    for (const auto& [e, c] : f.terms()) pts.emplace_back(e.i, e.j);
    std::sort(pts.begin(), pts.end());
    return pts;
}

namespace detail {

inline long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

inline void orient_primitive(long long& w, long long& alpha, long long& beta) {
    long long g = std::gcd(std::abs(alpha), std::abs(beta));
    if (g > 1) { alpha /= g; beta /= g; w /= g; }
    if (alpha < 0 || (alpha == 0 && beta < 0)) { alpha = -alpha; beta = -beta; w = -w; }
}

}  // namespace detail

/// Quasi-homogeneity by support collinearity, decided with exact integer
/// cross products. Returns the canonical type of the spanning line, the
/// flagged representative (i; 1, 0) for single-point supports, or nothing.
template <class F>
std::optional<QhType> find_qh_type(const BivarPoly<F>& f) {
    SupportSet pts = support(f);
    if (pts.size() == 1)
        return QhType{pts[0].first, 1, 0, false};
    const LatticePoint& p0 = pts[0];
    const LatticePoint& p1 = pts[1];
    for (std::size_t k = 2; k < pts.size(); ++k)
        if (detail::cross(p0, p1, pts[k]) != 0) return std::nullopt;
    long long di = p1.first - p0.first;
    long long dj = p1.second - p0.second;
    // primitive normal of the spanning line
    long long alpha = dj, beta = -di;
    long long w = alpha * p0.first + beta * p0.second;
    detail::orient_primitive(w, alpha, beta);
    return QhType{w, alpha, beta, true};
}

struct EulerQhResult {
    long long w = 0;
    long long alpha = 0;
    long long beta = 0;
    bool advisory = false;  // set in positive characteristic, where i, j enter mod p

    bool operator==(const EulerQhResult&) const = default;
};

/// Independent route to the same data via linear algebra: a nonzero
/// (w, alpha, beta) with w*c_ij = (alpha*i + beta*j)*c_ij for every support
/// monomial, i.e. a nullspace vector of the rows (1, -i, -j) over the
/// coefficient field. Agrees with find_qh_type in existence, and the
/// returned vector is proportional to the type whenever the line is unique.
template <class F>
std::optional<EulerQhResult> euler_qh_test(const BivarPoly<F>& f) {
    if (f.is_zero()) throw std::domain_error("euler_qh_test: zero polynomial");
    const F& field = f.field();
    using Elem = typename F::Elem;

    std::vector<std::array<Elem, 3>> rows;
    for (const auto& [e, c] : f.terms())
        rows.push_back({field.one(), field.from_long(-e.i), field.from_long(-e.j)});

    // Gauss-Jordan to reduced row echelon form (3 columns).
    std::vector<int> pivot_col;
    std::size_t rank_row = 0;
    for (int col = 0; col < 3 && rank_row < rows.size(); ++col) {
        std::size_t sel = rank_row;
        while (sel < rows.size() && field.is_zero(rows[sel][static_cast<std::size_t>(col)])) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank_row], rows[sel]);
        Elem inv = field.one() / rows[rank_row][static_cast<std::size_t>(col)];
        for (int c = 0; c < 3; ++c)
            rows[rank_row][static_cast<std::size_t>(c)] =
                rows[rank_row][static_cast<std::size_t>(c)] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank_row) continue;
            Elem factor = rows[r][static_cast<std::size_t>(col)];
            if (field.is_zero(factor)) continue;
            for (int c = 0; c < 3; ++c)
                rows[r][static_cast<std::size_t>(c)] =
                    rows[r][static_cast<std::size_t>(c)] -
                    factor * rows[rank_row][static_cast<std::size_t>(c)];
        }
        pivot_col.push_back(col);
        ++rank_row;
    }
    std::size_t rank = pivot_col.size();
    if (rank == 3) return std::nullopt;

    // Nullspace basis vector for the first free column. The w-column is
    // always a pivot, so the free column is alpha when the nullspace is
    // 2-dimensional, matching the flagged single-point representative of
    // find_qh_type.
    int free_col = 1;
    for (int col = 1; col < 3; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) {
            free_col = col;
            break;
        }
    }
    std::array<Elem, 3> v = {field.zero(), field.zero(), field.zero()};
    v[static_cast<std::size_t>(free_col)] = field.one();
    for (std::size_t r = 0; r < rank; ++r)
        v[static_cast<std::size_t>(pivot_col[r])] = -rows[r][static_cast<std::size_t>(free_col)];

    EulerQhResult out;
    out.advisory = field.characteristic() != 0;
    if constexpr (std::is_same_v<F, RationalField>) {
        Integer l = lcm(lcm(denominator(v[0]), denominator(v[1])), denominator(v[2]));
        Integer wi = numerator(v[0] * Rational(l));
        Integer ai = numerator(v[1] * Rational(l));
        Integer bi = numerator(v[2] * Rational(l));
        Integer g = gcd(gcd(abs(wi), abs(ai)), abs(bi));
        if (g > 1) { wi /= g; ai /= g; bi /= g; }
        out.w = wi.convert_to<long long>();
        out.alpha = ai.convert_to<long long>();
        out.beta = bi.convert_to<long long>();
        if (out.alpha < 0 || (out.alpha == 0 && out.beta < 0)) {
            out.w = -out.w; out.alpha = -out.alpha; out.beta = -out.beta;
        }
    } else {
        // advisory lift: normalize the leading nonzero weight to 1
        Elem lead = !field.is_zero(v[1]) ? v[1] : v[2];
        Elem inv = field.one() / lead;
        out.w = static_cast<long long>((v[0] * inv).value());
        out.alpha = static_cast<long long>((v[1] * inv).value());
        out.beta = static_cast<long long>((v[2] * inv).value());
    }
    return out;
}

struct ConditionA {
    bool holds = false;
    std::optional<QhType> type;
};

/// Condition (A): quasi-homogeneous with nonzero weight of x.
template <class F>
ConditionA condition_a(const BivarPoly<F>& f) {
    std::optional<QhType> t = find_qh_type(f);
    if (!t) return {false, std::nullopt};
    if (t->alpha == 0) return {false, t};
    return {true, t};
}

/// Convex hull (Andrew's monotone chain), counterclockwise, starting from
/// the lexicographically smallest vertex. Collinear boundary points drop.
inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {  // lower chain
        while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

template <class F>
std::vector<LatticePoint> newton_polytope(const BivarPoly<F>& f) {
    return convex_hull(support(f));
}

/// Twice the Euclidean area of a convex polygon in CCW order.
inline long long doubled_area(const std::vector<LatticePoint>& hull) {
    if (hull.size() < 3) return 0;
    long long a2 = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& p = hull[i];
        const auto& q = hull[(i + 1) % hull.size()];
        a2 += p.first * q.second - q.first * p.second;
    }
    return a2;
}

/// Mixed volume MV(P, Q) = area(P+Q) - area(P) - area(Q), normalized so
/// that two unit segments in transversal directions give 1 (the toric
/// root-count normalization).
inline long long mixed_volume(const std::vector<LatticePoint>& p,
                              const std::vector<LatticePoint>& q) {
    if (p.empty() || q.empty()) throw std::invalid_argument("mixed_volume: empty polytope");
    std::vector<LatticePoint> hp = convex_hull(p);
    std::vector<LatticePoint> hq = convex_hull(q);
    std::vector<LatticePoint> sums;
    sums.reserve(hp.size() * hq.size());
    for (const auto& a : hp)
        for (const auto& b : hq) sums.emplace_back(a.first + b.first, a.second + b.second);
    long long mv2 = doubled_area(convex_hull(std::move(sums))) - doubled_area(hp) - doubled_area(hq);
    if (mv2 < 0 || mv2 % 2 != 0) throw std::logic_error("mixed_volume: inconsistent area bookkeeping");
    return mv2 / 2;
}

}  // namespace qhom
