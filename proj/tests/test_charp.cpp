#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "support.hpp"

using namespace qhom;
using testsupport::Rng;

TEST_CASE("condition checks over small prime fields", "[charp]") {
    PrimeField f5(5);
    auto v5 = check_conditions_mod_p(parse_poly(f5, "y^2 + x^3"));
    REQUIRE(v5.a);
    REQUIRE(v5.b);
    REQUIRE(v5.c);
    // Disc = -4x^3 = x^3 mod 5, a monomial
    REQUIRE(condition_b(parse_poly(f5, "y^2 + x^3")).disc ==
            parse_unipoly(f5, "x^3"));

    PrimeField f2(2);
    auto v2 = check_conditions_mod_p(parse_poly(f2, "y^2 + x^3"));
    REQUIRE(v2.a);
    REQUIRE_FALSE(v2.b);
    REQUIRE_FALSE(v2.c);
    REQUIRE(v2.flags.fy_identically_zero);
    REQUIRE(v2.flags.disc_degenerate);

    // (x + y)^p is a p-th power: geometrically non-reduced, rejected
    PrimeField f3(3);
    REQUIRE_THROWS_AS(check_conditions_mod_p(parse_poly(f3, "(x + y)^3")),
                      std::invalid_argument);
}

TEST_CASE("exhaustive sweep at p = 2, d = 3 finds the counterexample class", "[charp]") {
    auto summary = exhaustive_sweep(2, 3);
    REQUIRE(summary.exhaustive);
    REQUIRE(summary.drawn == 1023);  // 2^10 - 1 nonzero candidates
    REQUIRE_FALSE(summary.counterexamples.empty());

    bool found = false;
    for (const auto& ce : summary.counterexamples) {
        if (ce.poly == "x^3 + y^2") {
            found = true;
            REQUIRE(ce.a);
            REQUIRE_FALSE(ce.b);
            REQUIRE_FALSE(ce.c);
            REQUIRE(ce.failed_implications.find("A=>B") != std::string::npos);
            REQUIRE(ce.notes.find("f_y == 0") != std::string::npos);
        }
    }
    REQUIRE(found);

    // every recorded entry is a genuine disagreement
    for (const auto& ce : summary.counterexamples)
        REQUIRE_FALSE(ce.a == ce.b && ce.b == ce.c);
}

TEST_CASE("degenerate degree bound produces no counterexamples", "[charp]") {
    CharPExperimentConfig cfg;
    cfg.p = 5;
    cfg.degree_bound = 1;
    cfg.samples = 400;
    cfg.seed = 7;
    auto summary = search_counterexamples(cfg);
    REQUIRE(summary.counterexamples.empty());
    REQUIRE(summary.passed_preconditions > 0);
}

TEST_CASE("large characteristic sampling sees only agreement", "[charp]") {
    CharPExperimentConfig cfg;
    cfg.p = 97;
    cfg.degree_bound = 3;
    cfg.samples = 400;
    cfg.seed = 11;
    auto summary = search_counterexamples(cfg);
    REQUIRE(summary.counterexamples.empty());
    REQUIRE(summary.agreements == summary.passed_preconditions);
}

TEST_CASE("searches are deterministic for a fixed seed", "[charp]") {
    CharPExperimentConfig cfg;
    cfg.p = 3;
    cfg.degree_bound = 3;
    cfg.samples = 300;
    cfg.seed = 424242;
    auto s1 = search_counterexamples(cfg);
    auto s2 = search_counterexamples(cfg);
    REQUIRE(s1.drawn == s2.drawn);
    REQUIRE(s1.passed_preconditions == s2.passed_preconditions);
    REQUIRE(s1.counterexamples.size() == s2.counterexamples.size());
    for (std::size_t k = 0; k < s1.counterexamples.size(); ++k) {
        REQUIRE(s1.counterexamples[k].poly == s2.counterexamples[k].poly);
        REQUIRE(s1.counterexamples[k].failed_implications ==
                s2.counterexamples[k].failed_implications);
    }
}

TEST_CASE("reduction mod large p preserves the verdicts", "[charp]") {
    const RationalField Q;
    PrimeField fp(1000003);  // far above every coefficient and degree in play
    Rng rng(190);
    int done = 0;
    while (done < 40) {
        RandomPolyParams params;
        params.deg_x = 3;
        params.deg_y = 3;
        params.density = 0.5;
        params.coeff_height = 10;
        params.seed = rng.next();
        PolyQ f = generate_random(Q, params).poly;

        PolyFp g(fp);
        bool integral = true;
        for (const auto& [e, c] : f.terms()) {
            if (denominator(c) != 1) { integral = false; break; }
            g.add_term(e.i, e.j, fp.from_integer(numerator(c)));
        }
        REQUIRE(integral);
        if (g.is_zero() || g.y_coefficient(0).is_zero() || !is_reduced(g)) continue;
        if (g.term_count() != f.term_count()) continue;  // support must match

        auto vq = std::tuple{condition_a(f).holds, condition_b(f).holds,
                             condition_c_unchecked(f).holds};
        auto vp = check_conditions_mod_p(g);
        REQUIRE(std::get<0>(vq) == vp.a);
        REQUIRE(std::get<1>(vq) == vp.b);
        REQUIRE(std::get<2>(vq) == vp.c);
        ++done;
    }
}
