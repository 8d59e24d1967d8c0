#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace qhom;
using testsupport::Rng;

namespace {
const RationalField Q;

bool proportional(const QhType& t, const EulerQhResult& e) {
    return t.w * e.alpha == e.w * t.alpha && t.w * e.beta == e.w * t.beta &&
           t.alpha * e.beta == e.alpha * t.beta;
}
}  // namespace

TEST_CASE("support extraction", "[newton]") {
    REQUIRE(support(parse_q("y^2 - x^3")) == SupportSet{{0, 2}, {3, 0}});
    REQUIRE(support(parse_q("1 + x*y + x^2*y^2")) == SupportSet{{0, 0}, {1, 1}, {2, 2}});
    REQUIRE(support(parse_q("7")) == SupportSet{{0, 0}});
    REQUIRE_THROWS_AS(support(PolyQ::zero(Q)), std::domain_error);
}

TEST_CASE("type detection by collinearity", "[newton]") {
    auto t1 = find_qh_type(parse_q("1 + x*y + x^2*y^2"));
    REQUIRE(t1.has_value());
    REQUIRE(*t1 == QhType{0, 1, -1, true});

    auto t2 = find_qh_type(parse_q("y^2 - x^3"));
    REQUIRE(*t2 == QhType{6, 2, 3, true});

    REQUIRE_FALSE(find_qh_type(parse_q("y^2 - x^3 - x^2")).has_value());

    auto t3 = find_qh_type(parse_q("x^2*y^3"));
    REQUIRE(t3.has_value());
    REQUIRE_FALSE(t3->line_unique);
    REQUIRE(*t3 == QhType{2, 1, 0, false});
}

TEST_CASE("euler route to the type", "[newton]") {
    auto e1 = euler_qh_test(parse_q("y^2 - x^3"));
    REQUIRE(e1.has_value());
    REQUIRE(e1->w == 6);
    REQUIRE(e1->alpha == 2);
    REQUIRE(e1->beta == 3);
    REQUIRE_FALSE(e1->advisory);

    auto e2 = euler_qh_test(parse_q("1 + x*y + x^2*y^2"));
    REQUIRE(e2->w == 0);
    REQUIRE(e2->alpha == 1);
    REQUIRE(e2->beta == -1);

    REQUIRE_FALSE(euler_qh_test(parse_q("y^2 - x^3 - x^2")).has_value());

    PrimeField f5(5);
    auto e3 = euler_qh_test(parse_poly(f5, "y^2 + x^3"));
    REQUIRE(e3.has_value());
    REQUIRE(e3->advisory);
}

TEST_CASE("condition A", "[newton]") {
    auto a1 = condition_a(parse_q("y^2 - x^3"));
    REQUIRE(a1.holds);
    REQUIRE(*a1.type == QhType{6, 2, 3, true});

    auto a2 = condition_a(parse_q("1 + x"));
    REQUIRE_FALSE(a2.holds);
    REQUIRE(a2.type.has_value());  // the spanning line exists but has weight 0 for x
    REQUIRE(a2.type->alpha == 0);

    auto a3 = condition_a(parse_q("x^2*y^3"));
    REQUIRE(a3.holds);
    REQUIRE(*a3.type == QhType{2, 1, 0, false});
}

TEST_CASE("newton polytope and mixed volume fixtures", "[newton]") {
    REQUIRE(newton_polytope(parse_q("y^2 - x^3")) ==
            std::vector<LatticePoint>{{0, 2}, {3, 0}});
    REQUIRE(mixed_volume(newton_polytope(parse_q("y^2 - x^3")),
                         newton_polytope(parse_q("2*y^2"))) == 0);
    REQUIRE(mixed_volume(newton_polytope(parse_q("y^2 + x*y + x^3")),
                         newton_polytope(parse_q("2*y^2 + x*y"))) == 1);
    REQUIRE(mixed_volume(newton_polytope(parse_q("y^2 + x*y")),
                         newton_polytope(parse_q("2*y^2 + x*y"))) == 0);
    // normalization pin: transversal unit segments
    REQUIRE(mixed_volume({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}) == 1);

    auto hull = newton_polytope(parse_q("1 + x + y + x*y + x^2*y^2"));
    REQUIRE(hull == std::vector<LatticePoint>{{0, 0}, {1, 0}, {2, 2}, {0, 1}});
    REQUIRE(doubled_area(hull) >= 0);  // counterclockwise
}

TEST_CASE("collinearity and euler agree on random input", "[newton]") {
    Rng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        PolyQ f = testsupport::random_poly_q(rng, 4, 4, 0.35, 9);
        auto t = find_qh_type(f);
        auto e = euler_qh_test(f);
        REQUIRE(t.has_value() == e.has_value());
        if (t && support(f).size() >= 2) {
            REQUIRE(proportional(*t, *e));
            REQUIRE(*t == QhType{e->w, e->alpha, e->beta, true});  // same canonical form
        }
    }
}

TEST_CASE("weighted euler identity for quasi-homogeneous input", "[newton]") {
    Rng rng(88);
    for (int trial = 0; trial < 80; ++trial) {
        PolyQ f = generate_qh(Q, testsupport::random_qh_params(rng, false, 2, 2));
        auto t = find_qh_type(f);
        REQUIRE(t.has_value());
        PolyQ lhs = f.scaled(Rational(t->w));
        PolyQ rhs = parse_q("x") * f.derivative(Var::x).scaled(Rational(t->alpha)) +
                    parse_q("y") * f.derivative(Var::y).scaled(Rational(t->beta));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("quasi-homogeneous input has parallel supports with y*f_y", "[newton]") {
    Rng rng(99);
    int done = 0;
    while (done < 80) {
        PolyQ f = generate_qh(Q, testsupport::random_qh_params(rng, false, 2, 2));
        if (!condition_a(f).holds) continue;
        PolyQ yfy = parse_q("y") * f.derivative(Var::y);
        if (yfy.is_zero()) continue;
        REQUIRE(mixed_volume(newton_polytope(f), newton_polytope(yfy)) == 0);
        ++done;
    }
}

TEST_CASE("type is invariant under scaling and covariant under monomial shifts", "[newton]") {
    Rng rng(110);
    for (int trial = 0; trial < 60; ++trial) {
        PolyQ f = testsupport::random_poly_q(rng, 4, 4, 0.4, 9);
        REQUIRE(find_qh_type(f.scaled(Rational(7))) == find_qh_type(f));

        auto t = find_qh_type(f);
        if (!t || !t->line_unique) continue;
        int a = static_cast<int>(rng.range(0, 3)), b = static_cast<int>(rng.range(0, 3));
        PolyQ shifted = f * PolyQ::monomial(Q, a, b, Q.one());
        auto ts = find_qh_type(shifted);
        REQUIRE(ts.has_value());
        REQUIRE(ts->alpha == t->alpha);
        REQUIRE(ts->beta == t->beta);
        REQUIRE(ts->w == t->w + t->alpha * a + t->beta * b);
    }
}
