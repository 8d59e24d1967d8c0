#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <string>

#include <json.hpp>

#include "qhom/parse.hpp"
#include "qhom/theorem.hpp"

namespace qhom {

using Json = nlohmann::ordered_json;

inline Json field_to_json(const RationalField&) { return Json{{"type", "Q"}}; }
inline Json field_to_json(const PrimeField& f) { return Json{{"type", "Fp"}, {"p", f.modulus()}}; }

template <class F>
F field_from_json(const Json& j);

template <>
inline RationalField field_from_json<RationalField>(const Json& j) {
    if (j.at("type") != "Q") throw std::invalid_argument("field_from_json: expected rational field");
    return RationalField{};
}

template <>
inline PrimeField field_from_json<PrimeField>(const Json& j) {
    if (j.at("type") != "Fp") throw std::invalid_argument("field_from_json: expected prime field");
    return PrimeField(j.at("p").get<std::uint64_t>());
}

template <class F>
Json report_to_json(const TheoremReport<F>& r) {
    Json j;
    j["input"] = r.input_text;
    j["canonical"] = format_poly(r.poly);
    j["field"] = field_to_json(r.poly.field());
    j["degrees"] = Json{{"x", r.deg_x}, {"y", r.deg_y}};
    Json sup = Json::array();
    for (const auto& [i, k] : r.support_points) sup.push_back(Json::array({i, k}));
    j["support"] = sup;
    j["preconditions"] = Json{
        {"reduced", r.reduced}, {"f0_nonzero", r.f0_nonzero}, {"fn_nonzero", r.fn_nonzero}};

    Json a{{"holds", r.verdict_a.holds}};
    if (r.verdict_a.type) {
        a["type"] = Json{{"w", r.verdict_a.type->w},
                         {"alpha", r.verdict_a.type->alpha},
                         {"beta", r.verdict_a.type->beta},
                         {"line_unique", r.verdict_a.type->line_unique}};
    } else {
        a["type"] = nullptr;
    }
    j["condition_a"] = a;

    if (r.verdict_b) {
        j["condition_b"] = Json{{"holds", r.verdict_b->holds},
                                {"f0", r.verdict_b->f0.str()},
                                {"fn", r.verdict_b->fn.str()},
                                {"disc", r.verdict_b->disc.str()},
                                {"disc_degenerate", r.verdict_b->disc_degenerate}};
    } else {
        j["condition_b"] = nullptr;
    }

    if (r.verdict_c) {
        Json c{{"holds", r.verdict_c->holds},
               {"fy_identically_zero", r.verdict_c->fy_identically_zero},
               {"res_identically_zero", r.verdict_c->res_identically_zero}};
        if (r.verdict_c->witness) {
            c["witness"] = Json{{"kind", to_string(r.verdict_c->witness->kind)},
                                {"factor", r.verdict_c->witness->factor.str()}};
        } else {
            c["witness"] = nullptr;
        }
        j["condition_c"] = c;
    } else {
        j["condition_c"] = nullptr;
    }

    if (r.agreement) j["agreement"] = *r.agreement;
    else j["agreement"] = nullptr;

    j["timings_us"] = Json{{"a", r.a_micros}, {"b", r.b_micros}, {"c", r.c_micros},
                           {"total", r.total_micros}};
    return j;
}

inline CWitnessKind witness_kind_from_string(const std::string& s) {
    if (s == "y_zero_chart") return CWitnessKind::y_zero_chart;
    if (s == "y_inf_chart") return CWitnessKind::y_inf_chart;
    if (s == "affine") return CWitnessKind::affine;
    throw std::invalid_argument("unknown witness kind: " + s);
}

template <class F>
TheoremReport<F> report_from_json(const Json& j) {
    F field = field_from_json<F>(j.at("field"));
    TheoremReport<F> r{j.at("input").get<std::string>(),
                       parse_poly(field, j.at("canonical").get<std::string>())};
    r.deg_x = j.at("degrees").at("x").get<int>();
    r.deg_y = j.at("degrees").at("y").get<int>();
    for (const auto& p : j.at("support"))
        r.support_points.emplace_back(p.at(0).get<long long>(), p.at(1).get<long long>());
    const Json& pre = j.at("preconditions");
    r.reduced = pre.at("reduced").get<bool>();
    r.f0_nonzero = pre.at("f0_nonzero").get<bool>();
    r.fn_nonzero = pre.at("fn_nonzero").get<bool>();

    const Json& a = j.at("condition_a");
    r.verdict_a.holds = a.at("holds").get<bool>();
    if (!a.at("type").is_null()) {
        const Json& t = a.at("type");
        r.verdict_a.type = QhType{t.at("w").get<long long>(), t.at("alpha").get<long long>(),
                                  t.at("beta").get<long long>(), t.at("line_unique").get<bool>()};
    }

    if (!j.at("condition_b").is_null()) {
        const Json& b = j.at("condition_b");
        ConditionB<F> vb{b.at("holds").get<bool>(),
                         parse_unipoly(field, b.at("f0").get<std::string>(), 'x'),
                         parse_unipoly(field, b.at("fn").get<std::string>(), 'x'),
                         parse_unipoly(field, b.at("disc").get<std::string>(), 'x'),
                         b.at("disc_degenerate").get<bool>()};
        r.verdict_b = std::move(vb);
    }

    if (!j.at("condition_c").is_null()) {
        const Json& c = j.at("condition_c");
        ConditionC<F> vc;
        vc.holds = c.at("holds").get<bool>();
        vc.fy_identically_zero = c.at("fy_identically_zero").get<bool>();
        vc.res_identically_zero = c.at("res_identically_zero").get<bool>();
        if (!c.at("witness").is_null()) {
            vc.witness = CWitness<F>{
                witness_kind_from_string(c.at("witness").at("kind").get<std::string>()),
                parse_unipoly(field, c.at("witness").at("factor").get<std::string>(), 'x')};
        }
        r.verdict_c = std::move(vc);
    }

    if (!j.at("agreement").is_null()) r.agreement = j.at("agreement").get<bool>();
    const Json& t = j.at("timings_us");
    r.a_micros = t.at("a").get<std::int64_t>();
    r.b_micros = t.at("b").get<std::int64_t>();
    r.c_micros = t.at("c").get<std::int64_t>();
    r.total_micros = t.at("total").get<std::int64_t>();
    return r;
}

/// One corpus entry: a report plus the provenance needed to regenerate it.
/// Serialized as a single JSONL line; the timestamp is the only field
/// excluded from determinism comparisons, and timings are zeroed before
/// writing for the same reason.
template <class F>
struct CorpusRecord {
    TheoremReport<F> report;
    std::string generator;  // "fuzz", "charp", "cli", ...
    std::uint64_t seed = 0;
    Json params;
    std::string timestamp;
};

inline std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <class F>
Json corpus_record_to_json(const CorpusRecord<F>& rec) {
    Json j;
    j["record"] = report_to_json(rec.report);
    j["provenance"] = Json{{"generator", rec.generator},
                           {"seed", rec.seed},
                           {"params", rec.params},
                           {"timestamp", rec.timestamp}};
    return j;
}

template <class F>
CorpusRecord<F> corpus_record_from_json(const Json& j) {
    CorpusRecord<F> rec{report_from_json<F>(j.at("record")),
                        j.at("provenance").at("generator").get<std::string>(),
                        j.at("provenance").at("seed").get<std::uint64_t>(),
                        j.at("provenance").at("params"),
                        j.at("provenance").at("timestamp").get<std::string>()};
    return rec;
}

/// Strip volatile provenance for byte-level determinism comparisons.
inline Json without_timestamp(Json j) {
    if (j.contains("provenance") && j["provenance"].contains("timestamp"))
        j["provenance"].erase("timestamp");
    return j;
}

template <class F>
CorpusRecord<F> make_corpus_record(TheoremReport<F> report, std::string generator,
                                   std::uint64_t seed, Json params) {
    report.a_micros = report.b_micros = report.c_micros = report.total_micros = 0;
    return CorpusRecord<F>{std::move(report), std::move(generator), seed, std::move(params),
                           iso8601_now()};
}

}  // namespace qhom
