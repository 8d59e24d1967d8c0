#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace qhom;
using testsupport::Rng;

namespace {
const RationalField Q;
}

TEST_CASE("full reports on the worked fixtures", "[theoremlab]") {
    auto r1 = check_theorem(parse_q("y^2 - x^3"), "y^2 - x^3");
    REQUIRE(r1.preconditions());
    REQUIRE(r1.verdict_a.holds);
    REQUIRE(*r1.verdict_a.type == QhType{6, 2, 3, true});
    REQUIRE(r1.verdict_b->holds);
    REQUIRE(r1.verdict_c->holds);
    REQUIRE(r1.agreement.value());

    auto r2 = check_theorem(parse_q("y^2 - x^3 - x^2"));
    REQUIRE(r2.preconditions());
    REQUIRE_FALSE(r2.verdict_a.holds);
    REQUIRE_FALSE(r2.verdict_b->holds);
    REQUIRE(r2.verdict_b->disc == parse_unipoly(Q, "4*x^3 + 4*x^2"));
    REQUIRE_FALSE(r2.verdict_c->holds);
    REQUIRE(r2.verdict_c->witness->factor == parse_unipoly(Q, "x + 1"));
    REQUIRE(r2.agreement.value());  // all three false still agrees

    auto r3 = check_theorem(parse_q("1 + x*y + x^2*y^2"));
    REQUIRE(r3.verdict_a.holds);
    REQUIRE(*r3.verdict_a.type == QhType{0, 1, -1, true});
    REQUIRE(r3.agreement.value());

    auto r4 = check_theorem(parse_q("x + 1"));
    REQUIRE(r4.preconditions());
    REQUIRE_FALSE(r4.verdict_a.holds);
    REQUIRE_FALSE(r4.verdict_b->holds);
    REQUIRE_FALSE(r4.verdict_c->holds);
    REQUIRE(r4.agreement.value());
}

TEST_CASE("reports on inputs that fail preconditions", "[theoremlab]") {
    auto r1 = check_theorem(parse_q("x*y + x^2*y^3"));  // f_0 = 0
    REQUIRE_FALSE(r1.f0_nonzero);
    REQUIRE_FALSE(r1.verdict_b.has_value());
    REQUIRE_FALSE(r1.verdict_c.has_value());
    REQUIRE_FALSE(r1.agreement.has_value());

    auto r2 = check_theorem(parse_q("(y - x - 1)^2"));  // not reduced
    REQUIRE_FALSE(r2.reduced);
    REQUIRE(r2.verdict_b.has_value());  // still computable
    REQUIRE_FALSE(r2.verdict_c.has_value());
    REQUIRE_FALSE(r2.agreement.has_value());

    REQUIRE_THROWS_AS(check_theorem(PolyQ::zero(Q)), std::invalid_argument);
}

TEST_CASE("random generation honors its contract", "[theoremlab]") {
    RandomPolyParams params;
    params.seed = 5;
    auto g1 = generate_random(Q, params);
    auto g2 = generate_random(Q, params);
    REQUIRE(g1.poly == g2.poly);  // deterministic
    REQUIRE(g1.rejections == g2.rejections);
    REQUIRE(is_reduced(g1.poly));
    REQUIRE_FALSE(g1.poly.y_coefficient(0).is_zero());

    params.deg_y = 1;
    params.seed = 6;
    auto g3 = generate_random(Q, params);
    REQUIRE(g3.poly.deg_y() <= 1);

    params.test_force_square = true;
    params.budget = 60;
    REQUIRE_THROWS_AS(generate_random(Q, params), std::runtime_error);  // filter self-test
}

TEST_CASE("quasi-homogeneous construction fixtures", "[theoremlab]") {
    // the inverse direction of the normal form, pinned by explicit data
    LaurentForm<RationalField> f1{3, 0, 0, parse_unipoly(Q, "z - 1", 'z'), 2, 3, Q.one()};
    REQUIRE(laurent_reconstruct(f1) == parse_q("y^2 - x^3"));

    LaurentForm<RationalField> f2{0, 0, 2, parse_unipoly(Q, "1 + z + z^2", 'z'), 1, -1, Q.one()};
    REQUIRE(laurent_reconstruct(f2) == parse_q("1 + x*y + x^2*y^2"));

    LaurentForm<RationalField> f3{1, 0, 1, parse_unipoly(Q, "z - 2", 'z'), 1, 0, Q.one()};
    REQUIRE(laurent_reconstruct(f3) == parse_q("x*y - 2*x"));

    Rng rng(200);
    for (int trial = 0; trial < 40; ++trial) {
        QhGenParams params = testsupport::random_qh_params(rng, true, 1, 1);
        PolyQ f = generate_qh(Q, params);
        PolyQ f_again = generate_qh(Q, params);
        REQUIRE(f == f_again);  // deterministic
        auto t = find_qh_type(f);
        REQUIRE(t.has_value());  // quasi-homogeneous by construction
        REQUIRE(is_reduced(f)); // k, ell <= 1 and squarefree g
    }
    for (int trial = 0; trial < 20; ++trial) {
        QhGenParams params = testsupport::random_qh_params(rng, true, 1, 1);
        params.k = 2;
        PolyQ f = generate_qh(Q, params);
        REQUIRE_FALSE(is_reduced(f));  // x^2 divides f
    }
}

TEST_CASE("characteristic-zero agreement on generated instances", "[theoremlab]") {
    Rng rng(210);
    for (int trial = 0; trial < 120; ++trial) {
        RandomPolyParams params;
        params.deg_x = 5;
        params.deg_y = 5;
        params.density = 0.4;
        params.seed = rng.next();
        PolyQ f = generate_random(Q, params).poly;
        auto report = check_theorem(f);
        INFO("f = " << format_poly(f));
        REQUIRE(report.agreement.value());
    }
}

TEST_CASE("report json round-trips", "[theoremlab]") {
    for (const char* text : {"y^2 - x^3", "y^2 - x^3 - x^2", "1 + x*y + x^2*y^2", "x + 1",
                             "x*y + x^2*y^3", "(y - x - 1)^2", "y^2 - 2*x*y + x^3"}) {
        auto report = check_theorem(parse_q(text), text);
        Json j = report_to_json(report);
        auto back = report_from_json<RationalField>(j);
        REQUIRE(report_to_json(back) == j);
        REQUIRE(back.poly == report.poly);
    }

    PrimeField f2(2);
    auto rp = check_theorem(parse_poly(f2, "y^2 + x^3"), "y^2 + x^3");
    Json j = report_to_json(rp);
    auto back = report_from_json<PrimeField>(j);
    REQUIRE(report_to_json(back) == j);
}

TEST_CASE("corpus records are stable and timestamp-insensitive", "[theoremlab]") {
    auto report = check_theorem(parse_q("y^2 - x^3"), "y^2 - x^3");
    auto rec = make_corpus_record(report, "fuzz", 42, Json{{"degree", 4}});
    REQUIRE(rec.report.total_micros == 0);  // volatile timings cleared for determinism

    Json j = corpus_record_to_json(rec);
    auto back = corpus_record_from_json<RationalField>(j);
    REQUIRE(corpus_record_to_json(back) == j);

    auto rec2 = make_corpus_record(check_theorem(parse_q("y^2 - x^3"), "y^2 - x^3"),
                                   "fuzz", 42, Json{{"degree", 4}});
    REQUIRE(without_timestamp(corpus_record_to_json(rec)) ==
            without_timestamp(corpus_record_to_json(rec2)));
}
