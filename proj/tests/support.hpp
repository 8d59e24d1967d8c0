#pragma once

#include <cstdint>
#include <vector>

#include "qhom/qhom.hpp"

namespace qhom::testsupport {

/// Deterministic generator for property tests; independent of the standard
/// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x8f1bbcdcbfa53e0bull)) {}

    std::uint64_t next() { return state_ = splitmix64(state_); }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(double p) {
        return (next() >> 11) < static_cast<std::uint64_t>(p * 9007199254740992.0);
    }

private:
    std::uint64_t state_;
};

inline Rational rand_coeff_q(Rng& rng, long long height) {
    long long c = rng.range(1, height);
    return Rational(rng.chance(0.5) ? c : -c);
}

inline PolyQ random_poly_q(Rng& rng, int deg_x, int deg_y, double density, long long height) {
    RationalField field;
    for (;;) {
        PolyQ f(field);
        for (int i = 0; i <= deg_x; ++i)
            for (int j = 0; j <= deg_y; ++j)
                if (rng.chance(density)) f.add_term(i, j, rand_coeff_q(rng, height));
        if (!f.is_zero()) return f;
    }
}

inline UniQ random_unipoly_q(Rng& rng, int deg, long long height, char var = 'x') {
    RationalField field;
    std::vector<Rational> cs(static_cast<std::size_t>(deg) + 1, Rational(0));
    cs.back() = rand_coeff_q(rng, height);
    for (int k = 0; k < deg; ++k)
        if (rng.chance(0.7)) cs[static_cast<std::size_t>(k)] = rand_coeff_q(rng, height);
    return UniQ(field, std::move(cs), var);
}

/// c(x) * prod_i (y - b_i(x)).
inline PolyQ split_poly(const UniQ& c, const std::vector<UniQ>& bs) {
    RationalField field;
    PolyQ f = PolyQ::from_unipoly_in_x(c);
    PolyQ y = PolyQ::variable(field, Var::y);
    for (const UniQ& b : bs) f = f * (y - PolyQ::from_unipoly_in_x(b));
    return f;
}

/// The defining product formula: c^(2n-2) * prod_{i<j} (b_i - b_j)^2.
inline UniQ discriminant_product_oracle(const UniQ& c, const std::vector<UniQ>& bs) {
    RationalField field;
    UniQ out = UniQ::one(field, 'x');
    int n = static_cast<int>(bs.size());
    for (int e = 0; e < 2 * n - 2; ++e) out = out * c;
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            UniQ d = bs[i] - bs[j];
            out = out * d * d;
        }
    return out;
}

inline QhGenParams random_qh_params(Rng& rng, bool squarefree, int k_max = 1, int ell_max = 1) {
    QhGenParams p;
    p.alpha_min = 1;
    p.alpha_max = 3;
    p.beta_min = -3;
    p.beta_max = 3;
    p.g_degree = static_cast<int>(rng.range(0, 3));
    p.squarefree_g = squarefree;
    p.k = static_cast<int>(rng.range(0, k_max));
    p.ell = static_cast<int>(rng.range(0, ell_max));
    p.seed = rng.next();
    return p;
}

}  // namespace qhom::testsupport
