#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace qhom;
using testsupport::Rng;

namespace {
const RationalField Q;
}

TEST_CASE("parsing reads the grammar", "[polyring]") {
    PolyQ f = parse_q("y^2 - x^3");
    REQUIRE(f.term_count() == 2);
    REQUIRE(f.coeff(0, 2) == Rational(1));
    REQUIRE(f.coeff(3, 0) == Rational(-1));

    PolyQ g = parse_q("1 + x*y + x^2*y^2");
    REQUIRE(g.term_count() == 3);
    REQUIRE(g.coeff(0, 0) == Rational(1));
    REQUIRE(g.coeff(1, 1) == Rational(1));
    REQUIRE(g.coeff(2, 2) == Rational(1));

    REQUIRE(parse_q("(x + y)^2") == parse_q("x^2 + 2*x*y + y^2"));
    REQUIRE(parse_q("-x^3 + y^2") == f);
    REQUIRE(parse_q("1/2*x + 1/2*x") == parse_q("x"));
}

TEST_CASE("parse errors carry offsets", "[polyring]") {
    try {
        parse_q("x*(y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.offset() == 4);
    }
    REQUIRE_THROWS_AS(parse_q("z + 1"), ParseError);
    REQUIRE_THROWS_AS(parse_q("x^9999999"), ParseError);
    REQUIRE_THROWS_AS(parse_q("2x"), ParseError);          // implicit multiplication
    REQUIRE_THROWS_AS(parse_q("x^2^3"), ParseError);       // chained exponents
    REQUIRE_THROWS_AS(parse_q("x^-2"), ParseError);        // negative exponent
    REQUIRE_THROWS_AS(parse_q(""), ParseError);

    PrimeField f5(5);
    REQUIRE_THROWS_AS(parse_poly(f5, "1/5"), ParseError);  // denominator vanishes mod 5
}

TEST_CASE("arithmetic fixtures", "[polyring]") {
    REQUIRE(parse_q("(y - x)*(y + x)") == parse_q("y^2 - x^2"));
    PolyQ f = parse_q("y^2 - x^3");
    REQUIRE(f.eval(Rational(-1), Rational(0)) == Rational(0));

    // x -> t^2, y -> y
    PolyQ sub = f.substituted(PolyQ::monomial(Q, 2, 0, Q.one()), PolyQ::variable(Q, Var::y));
    REQUIRE(sub == parse_q("y^2 - x^6"));  // t plays the x slot

    PrimeField f5(5), f7(7);
    REQUIRE_THROWS_AS(parse_poly(f5, "x") + parse_poly(f7, "x"), std::invalid_argument);
}

TEST_CASE("derivatives", "[polyring]") {
    REQUIRE(parse_q("y^2 - x^3").derivative(Var::y) == parse_q("2*y"));
    REQUIRE(parse_q("y^2 - x^3").derivative(Var::x) == parse_q("-3*x^2"));
    PrimeField f2(2);
    REQUIRE(parse_poly(f2, "y^2 + x^3").derivative(Var::y).is_zero());
}

TEST_CASE("coefficients in y", "[polyring]") {
    auto fs = parse_q("y^2 - x^3").coefficients_in_y();
    REQUIRE(fs.size() == 3);
    REQUIRE(fs[0] == parse_unipoly(Q, "-x^3"));
    REQUIRE(fs[1].is_zero());
    REQUIRE(fs[2] == parse_unipoly(Q, "1"));

    auto gs = parse_q("1 + x*y + x^2*y^2").coefficients_in_y();
    REQUIRE(gs.size() == 3);
    REQUIRE(gs[0] == parse_unipoly(Q, "1"));
    REQUIRE(gs[1] == parse_unipoly(Q, "x"));
    REQUIRE(gs[2] == parse_unipoly(Q, "x^2"));

    auto hs = parse_q("3*x^2").coefficients_in_y();
    REQUIRE(hs.size() == 1);
    REQUIRE(hs[0] == parse_unipoly(Q, "3*x^2"));
}

TEST_CASE("gcd fixtures", "[polyring]") {
    REQUIRE(gcd_bivar(parse_q("x^2 - y^2"), parse_q("x - y")) == parse_q("x - y"));
    REQUIRE(gcd_bivar(parse_q("y^2 - x^3"), parse_q("2*y")) == parse_q("1"));
    REQUIRE(gcd_bivar(parse_q("(y - x)^2*(y + x)"), parse_q("y - x")) == parse_q("y - x"));
    REQUIRE_THROWS_AS(gcd_bivar(PolyQ::zero(Q), PolyQ::zero(Q)), std::domain_error);
}

TEST_CASE("reduced test fixtures", "[polyring]") {
    REQUIRE_FALSE(is_reduced(parse_q("(y - x)^2*(y + x)")));
    REQUIRE(is_reduced(parse_q("y^2 - x^3")));
    PrimeField f2(2);
    REQUIRE(is_reduced(parse_poly(f2, "y^2 + x^3")));
    REQUIRE_FALSE(is_reduced(parse_poly(f2, "x^2*y^2")));  // f_x = f_y = 0, f nonconstant
    REQUIRE_THROWS_AS(is_reduced(PolyQ::zero(Q)), std::domain_error);
}

TEST_CASE("ring axioms on random triples", "[polyring]") {
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        PolyQ a = testsupport::random_poly_q(rng, 3, 3, 0.5, 9);
        PolyQ b = testsupport::random_poly_q(rng, 3, 3, 0.5, 9);
        PolyQ c = testsupport::random_poly_q(rng, 3, 3, 0.5, 9);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) - b == a);
    }
}

TEST_CASE("parse inverts format", "[polyring]") {
    Rng rng(202);
    for (int trial = 0; trial < 300; ++trial) {
        PolyQ f = testsupport::random_poly_q(rng, 5, 5, 0.4, 40);
        std::string text = format_poly(f);
        REQUIRE(parse_q(text) == f);
        REQUIRE(format_poly(parse_q(text)) == text);
    }
    PrimeField f7(7);
    for (int trial = 0; trial < 50; ++trial) {
        RandomPolyParams params;
        params.seed = rng.next();
        params.require_reduced = false;
        PolyFp f = generate_random(f7, params).poly;
        REQUIRE(parse_poly(f7, format_poly(f)) == f);
    }
}

TEST_CASE("reducedness of products of coprime squarefree factors", "[polyring]") {
    Rng rng(303);
    int done = 0;
    while (done < 25) {
        PolyQ g = testsupport::random_poly_q(rng, 2, 2, 0.6, 5);
        PolyQ h = testsupport::random_poly_q(rng, 2, 2, 0.6, 5);
        if (g.is_constant() || h.is_constant()) continue;
        if (!is_reduced(g) || !is_reduced(h)) continue;
        if (!gcd_bivar(g, h).is_constant()) continue;
        REQUIRE(is_reduced(g * h));
        REQUIRE_FALSE(is_reduced(g * g * h));
        ++done;
    }
}

TEST_CASE("gcd respects common factors", "[polyring]") {
    Rng rng(404);
    int done = 0;
    while (done < 25) {
        PolyQ a = testsupport::random_poly_q(rng, 2, 1, 0.7, 5);
        PolyQ b = testsupport::random_poly_q(rng, 2, 1, 0.7, 5);
        PolyQ g = testsupport::random_poly_q(rng, 1, 1, 0.8, 5);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        PolyQ lhs = gcd_bivar(a * g, b * g);
        PolyQ rhs = normalize_leading(g * gcd_bivar(a, b));
        REQUIRE(lhs == rhs);  // associates, compared after normalization
        ++done;
    }
}

TEST_CASE("derivative is linear and satisfies the product rule", "[polyring]") {
    Rng rng(505);
    for (int trial = 0; trial < 40; ++trial) {
        PolyQ a = testsupport::random_poly_q(rng, 3, 3, 0.5, 9);
        PolyQ b = testsupport::random_poly_q(rng, 3, 3, 0.5, 9);
        for (Var v : {Var::x, Var::y}) {
            REQUIRE((a + b).derivative(v) == a.derivative(v) + b.derivative(v));
            REQUIRE((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
        }
    }
}

TEST_CASE("unipoly division and gcd", "[polyring]") {
    UniQ a = parse_unipoly(Q, "x^4 - 1");
    UniQ b = parse_unipoly(Q, "x^2 - 1");
    auto [quot, rem] = divmod(a, b);
    REQUIRE(rem.is_zero());
    REQUIRE(quot == parse_unipoly(Q, "x^2 + 1"));
    REQUIRE(uni_gcd(a, b) == parse_unipoly(Q, "x^2 - 1"));
    REQUIRE(squarefree_part(parse_unipoly(Q, "x^3 + 2*x^2 + x")) == parse_unipoly(Q, "x^2 + x"));
    REQUIRE(UniQ::zero(Q).degree() == -1);  // stands in for degree -infinity
}
