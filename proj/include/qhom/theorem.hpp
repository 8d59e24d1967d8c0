#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "qhom/bivar_poly.hpp"
#include "qhom/charp.hpp"
#include "qhom/gcd.hpp"
#include "qhom/homog.hpp"
#include "qhom/laurent.hpp"
#include "qhom/newton.hpp"
#include "qhom/parse.hpp"
#include "qhom/resultant.hpp"

namespace qhom {

/// Everything the analyzer can say about one polynomial: the theorem
/// preconditions, the verdicts of the three equivalent conditions (where
/// defined), and whether they agree. In characteristic 0 disagreement on a
/// precondition-passing input is impossible; the CLI treats it as a fatal
/// self-test failure.
template <class F>
struct TheoremReport {
    std::string input_text;
    BivarPoly<F> poly;
    int deg_x = 0;
    int deg_y = 0;
    SupportSet support_points;

    bool reduced = false;
    bool f0_nonzero = false;
    bool fn_nonzero = false;
    bool preconditions() const { return reduced && f0_nonzero && fn_nonzero; }

    ConditionA verdict_a;
    std::optional<ConditionB<F>> verdict_b;    // defined when f_0, f_n nonzero
    std::optional<ConditionC<F>> verdict_c;    // defined when all preconditions hold
    std::optional<bool> agreement;             // set when all three verdicts exist

    std::int64_t a_micros = 0, b_micros = 0, c_micros = 0, total_micros = 0;
};

template <class F>
TheoremReport<F> check_theorem(const BivarPoly<F>& f, std::string input_text = "") {
    if (f.is_zero()) throw std::invalid_argument("check_theorem: zero polynomial");
    using clock = std::chrono::steady_clock;
    auto micros_since = [](clock::time_point t0) {
        return std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0).count();
    };
    auto start = clock::now();

    TheoremReport<F> report{std::move(input_text), f};
    report.deg_x = f.deg_x();
    report.deg_y = f.deg_y();
    report.support_points = support(f);
    report.reduced = is_reduced(f);
    report.f0_nonzero = !f.y_coefficient(0).is_zero();
    report.fn_nonzero = !f.y_coefficient(std::max(f.deg_y(), 0)).is_zero();

    auto t = clock::now();
    report.verdict_a = condition_a(f);
    report.a_micros = micros_since(t);

    if (report.f0_nonzero && report.fn_nonzero) {
        t = clock::now();
        report.verdict_b = condition_b(f);
        report.b_micros = micros_since(t);
        if (report.reduced) {
            t = clock::now();
            report.verdict_c = condition_c_unchecked(f);
            report.c_micros = micros_since(t);
            report.agreement = report.verdict_a.holds == report.verdict_b->holds &&
                               report.verdict_b->holds == report.verdict_c->holds;
        }
    }
    report.total_micros = micros_since(start);
    return report;
}

struct RandomPolyParams {
    int deg_x = 4;
    int deg_y = 4;
    double density = 0.5;
    long long coeff_height = 10;
    std::uint64_t seed = 0;
    bool require_reduced = true;
    bool require_f0 = true;
    bool require_fn = true;
    int budget = 20000;
    bool test_force_square = false;  // test hook: square every candidate before filtering
};

template <class F>
struct GeneratedPoly {
    BivarPoly<F> poly;
    int rejections = 0;
};

/// Rejection-sample a random polynomial until the requested predicates
/// hold. Deterministic for a fixed seed.
template <class F>
GeneratedPoly<F> generate_random(const F& field, const RandomPolyParams& params) {
    if (params.deg_x < 0 || params.deg_y < 0 || params.coeff_height < 1)
        throw std::invalid_argument("generate_random: bad parameters");
    auto threshold = static_cast<std::uint64_t>(params.density * 9007199254740992.0);  // 2^53
    int rejections = 0;
    for (int attempt = 0; attempt < params.budget; ++attempt) {
        std::uint64_t state =
            splitmix64(params.seed ^ splitmix64(static_cast<std::uint64_t>(attempt) + 0x51ed2701));
        auto next = [&state]() { return state = splitmix64(state); };
        BivarPoly<F> f(field);
        for (int i = 0; i <= params.deg_x; ++i) {
            for (int j = 0; j <= params.deg_y; ++j) {
                if ((next() >> 11) >= threshold) continue;
                long long c;
                if constexpr (std::is_same_v<F, RationalField>) {
                    c = 1 + static_cast<long long>(next() % static_cast<std::uint64_t>(params.coeff_height));
                    if (next() & 1) c = -c;
                } else {
                    c = 1 + static_cast<long long>(next() % (field.characteristic() - 1));
                }
                f.add_term(i, j, field.from_long(c));
            }
        }
        if (params.test_force_square) f = f * f;
        if (f.is_zero() ||
            (params.require_f0 && f.y_coefficient(0).is_zero()) ||
            (params.require_fn && f.y_coefficient(std::max(f.deg_y(), 0)).is_zero()) ||
            (params.require_reduced && !is_reduced(f))) {
            ++rejections;
            continue;
        }
        return {f, rejections};
    }
    throw std::runtime_error("generate_random: rejection budget exhausted");
}

struct QhGenParams {
    long long alpha_min = 1, alpha_max = 4;
    long long beta_min = -4, beta_max = 4;
    int g_degree = 3;
    bool squarefree_g = true;
    int k = 0;
    int ell = 0;
    long long coeff_height = 10;
    std::uint64_t seed = 0;
};

/// Build a quasi-homogeneous polynomial from the normal form:
/// x^k * y^ell * (polynomial shape of g(x^(-beta) y^alpha)) for a random
/// coprime type with alpha >= 1 and a random g with nonzero constant term.
/// The result is reduced exactly when k, ell <= 1 and g is squarefree.
template <class F>
BivarPoly<F> generate_qh(const F& field, const QhGenParams& params) {
    if (params.alpha_min < 1 || params.alpha_max < params.alpha_min ||
        params.beta_max < params.beta_min || params.g_degree < 0 || params.k < 0 || params.ell < 0)
        throw std::invalid_argument("generate_qh: bad parameters");
    std::uint64_t state = splitmix64(params.seed ^ 0xa5a5a5a5a5a5a5a5ull);
    auto next = [&state]() { return state = splitmix64(state); };
    auto rand_in = [&next](long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    long long alpha, beta;
    do {
        alpha = rand_in(params.alpha_min, params.alpha_max);
        beta = rand_in(params.beta_min, params.beta_max);
    } while (std::gcd(alpha, std::abs(beta)) != 1);

    auto random_elem = [&]() {
        long long c;
        if constexpr (std::is_same_v<F, RationalField>) {
            c = 1 + static_cast<long long>(next() % static_cast<std::uint64_t>(params.coeff_height));
            if (next() & 1) c = -c;
        } else {
            c = 1 + static_cast<long long>(next() % (field.characteristic() - 1));
        }
        return field.from_long(c);
    };

    UniPoly<F> g(field, 'z');
    for (int tries = 0;; ++tries) {
        if (tries > 1000) throw std::runtime_error("generate_qh: could not build a suitable g");
        std::vector<typename F::Elem> cs(static_cast<std::size_t>(params.g_degree) + 1, field.zero());
        cs.front() = random_elem();  // g(0) != 0
        cs.back() = random_elem();   // deg g as requested
        for (int m = 1; m < params.g_degree; ++m)
            if (next() & 1) cs[static_cast<std::size_t>(m)] = random_elem();
        g = UniPoly<F>(field, std::move(cs), 'z');
        if (!params.squarefree_g || is_squarefree(g)) break;
    }

    int k0, k_prime;
    if (beta > 0) {
        k_prime = params.k;
        k0 = params.k + static_cast<int>(beta) * g.degree();
    } else {
        k0 = params.k;
        k_prime = params.k - static_cast<int>(beta) * g.degree();
    }
    LaurentForm<F> form{k0, params.ell, k_prime, g, alpha, beta, field.one()};
    return laurent_reconstruct(form);
}

}  // namespace qhom
