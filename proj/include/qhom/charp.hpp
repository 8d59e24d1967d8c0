#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhom/bivar_poly.hpp"
#include "qhom/gcd.hpp"
#include "qhom/homog.hpp"
#include "qhom/newton.hpp"
#include "qhom/parse.hpp"
#include "qhom/resultant.hpp"

namespace qhom {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct CharPExperimentConfig {
    std::uint64_t p = 5;
    int degree_bound = 3;  // total degree
    int samples = 1000;
    std::uint64_t seed = 0;
    double density = 0.5;
};

struct CharPFlags {
    bool fy_identically_zero = false;
    bool res_identically_zero = false;
    bool disc_degenerate = false;
};

struct ConditionsModP {
    bool a = false;
    bool b = false;
    bool c = false;
    CharPFlags flags;
};

/// All three conditions over F_p: (A) via support collinearity
/// (characteristic-free), (B) via the same resultant/discriminant formulas,
/// (C) via the chart analysis with "no root in the algebraic closure's
/// torus" decided symbolically (the stripped polynomial is constant).
/// Preconditions: f nonzero, geometrically reduced, f_0 and f_n nonzero.
inline ConditionsModP check_conditions_mod_p(const BivarPoly<PrimeField>& f) {
    if (f.is_zero()) throw std::invalid_argument("check_conditions_mod_p: zero polynomial");
    UniPoly<PrimeField> f0 = f.y_coefficient(0);
    UniPoly<PrimeField> fn = f.y_coefficient(std::max(f.deg_y(), 0));
    if (f0.is_zero() || fn.is_zero())
        throw std::invalid_argument("check_conditions_mod_p: requires nonzero f_0 and f_n");
    if (!is_reduced(f))
        throw std::invalid_argument("check_conditions_mod_p: requires a geometrically reduced polynomial");

    ConditionsModP out;
    out.a = condition_a(f).holds;
    ConditionB<PrimeField> b = condition_b(f);
    out.b = b.holds;
    out.flags.disc_degenerate = b.disc_degenerate;
    ConditionC<PrimeField> c = condition_c_unchecked(f);
    out.c = c.holds;
    out.flags.fy_identically_zero = c.fy_identically_zero;
    out.flags.res_identically_zero = c.res_identically_zero;
    return out;
}

struct Counterexample {
    std::string poly;  // canonical text over F_p
    std::uint64_t p = 0;
    bool a = false, b = false, c = false;
    std::string failed_implications;  // e.g. "A=>B A=>C"
    std::string notes;
};

struct CharPSearchSummary {
    CharPExperimentConfig config;
    bool exhaustive = false;
    long long drawn = 0;               // candidate polynomials visited
    long long passed_preconditions = 0;
    long long agreements = 0;
    std::vector<Counterexample> counterexamples;
};

namespace detail {

inline std::string implication_failures(const ConditionsModP& v) {
    std::string out;
    auto add = [&out](const char* s) {
        if (!out.empty()) out += " ";
        out += s;
    };
    if (v.a && !v.b) add("A=>B");
    if (v.a && !v.c) add("A=>C");
    if (v.b && !v.a) add("B=>A");
    if (v.b && !v.c) add("B=>C");
    if (v.c && !v.a) add("C=>A");
    if (v.c && !v.b) add("C=>B");
    return out;
}

inline std::string flag_notes(const CharPFlags& flags) {
    std::string out;
    auto add = [&out](const char* s) {
        if (!out.empty()) out += "; ";
        out += s;
    };
    if (flags.fy_identically_zero) add("f_y == 0");
    if (flags.res_identically_zero) add("Res_y(f, f_y) == 0");
    if (flags.disc_degenerate) add("Disc undefined, reported as 0");
    return out;
}

/// Shared verdict bookkeeping for one candidate.
inline void record_candidate(const BivarPoly<PrimeField>& f, CharPSearchSummary& summary) {
    ++summary.drawn;
    if (f.is_zero()) return;
    if (f.y_coefficient(0).is_zero()) return;
    if (!is_reduced(f)) return;
    ++summary.passed_preconditions;
    ConditionsModP v = check_conditions_mod_p(f);
    if (v.a == v.b && v.b == v.c) {
        ++summary.agreements;
        return;
    }
    Counterexample ce;
    ce.poly = format_poly(f);
    ce.p = f.field().modulus();
    ce.a = v.a;
    ce.b = v.b;
    ce.c = v.c;
    ce.failed_implications = implication_failures(v);
    ce.notes = flag_notes(v.flags);
    summary.counterexamples.push_back(std::move(ce));
}

}  // namespace detail

/// Monomial exponents of total degree <= d, in graded-lex order.
inline std::vector<std::pair<int, int>> degree_grid(int d) {
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t <= d; ++t)
        for (int i = 0; i <= t; ++i) out.emplace_back(i, t - i);
    return out;
}

/// Randomized search: samples polynomials of total degree <= degree_bound
/// with the configured monomial density, filters by the theorem
/// preconditions, and records every verdict disagreement. Deterministic for
/// a fixed seed.
inline CharPSearchSummary search_counterexamples(const CharPExperimentConfig& cfg) {
    PrimeField field(cfg.p);
    if (cfg.degree_bound < 1) throw std::invalid_argument("search_counterexamples: degree bound must be >= 1");
    if (cfg.samples < 1) throw std::invalid_argument("search_counterexamples: sample count must be >= 1");
    CharPSearchSummary summary;
    summary.config = cfg;

    std::vector<std::pair<int, int>> grid = degree_grid(cfg.degree_bound);
    auto density_threshold =
        static_cast<std::uint64_t>(cfg.density * 9007199254740992.0);  // 2^53

    for (int trial = 0; trial < cfg.samples; ++trial) {
        std::uint64_t state = splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(trial) + 1));
        auto next = [&state]() { return state = splitmix64(state); };
        BivarPoly<PrimeField> f(field);
        for (const auto& [i, j] : grid) {
            if ((next() >> 11) >= density_threshold) continue;
            std::uint64_t c = 1 + next() % (cfg.p - 1);
            f.add_term(i, j, FpElem(c, cfg.p));
        }
        detail::record_candidate(f, summary);
    }
    return summary;
}

/// Exhaustive sweep over every polynomial of total degree <= d over F_p.
/// Feasible only for tiny (p, d); guarded by a candidate-count cap.
inline CharPSearchSummary exhaustive_sweep(std::uint64_t p, int d) {
    PrimeField field(p);
    std::vector<std::pair<int, int>> grid = degree_grid(d);
    double total = 1;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        total *= static_cast<double>(p);
        if (total > 8e6) throw std::invalid_argument("exhaustive_sweep: search space too large");
    }
    CharPSearchSummary summary;
    summary.config = CharPExperimentConfig{p, d, 0, 0, 1.0};
    summary.exhaustive = true;

    std::vector<std::uint64_t> digits(grid.size(), 0);
    for (;;) {
        // next candidate
        std::size_t k = 0;
        while (k < digits.size()) {
            if (++digits[k] < p) break;
            digits[k] = 0;
            ++k;
        }
        if (k == digits.size()) break;  // wrapped: all candidates visited
        BivarPoly<PrimeField> f(field);
        for (std::size_t t = 0; t < grid.size(); ++t)
            if (digits[t] != 0) f.add_term(grid[t].first, grid[t].second, FpElem(digits[t], p));
        detail::record_candidate(f, summary);
    }
    return summary;
}

}  // namespace qhom
