#include "doctest.h"

#include "epslab/toml_lite.hpp"
#include "epslab/verify.hpp"

#include <cmath>

using namespace epslab;

namespace {

CaseConfig make_case(CaseKind kind, Json params, unsigned precision = 40,
                     unsigned long seed = 42) {
    CaseConfig c;
    c.kind = kind;
    c.name = std::string(case_kind_name(kind)) + "-test";
    c.precision = precision;
    c.seed = seed;
    c.params = std::move(params);
    return c;
}

}  // namespace

TEST_CASE("complex literals parse with sign, exponent, and unit imaginary parts") {
    auto close = [](const Cplx& z, double re, double im) {
        return std::abs(static_cast<double>(z.re) - re) < 1e-15 &&
               std::abs(static_cast<double>(z.im) - im) < 1e-15;
    };
    CHECK(close(complex_from_string("0.3"), 0.3, 0.0));
    CHECK(close(complex_from_string("-1.5"), -1.5, 0.0));
    CHECK(close(complex_from_string("0.5+0.5i"), 0.5, 0.5));
    CHECK(close(complex_from_string("3-4i"), 3.0, -4.0));
    CHECK(close(complex_from_string("2i"), 0.0, 2.0));
    CHECK(close(complex_from_string("-2i"), 0.0, -2.0));
    CHECK(close(complex_from_string("i"), 0.0, 1.0));
    CHECK(close(complex_from_string("-i"), 0.0, -1.0));
    CHECK(close(complex_from_string("1+i"), 1.0, 1.0));
    CHECK(close(complex_from_string("1-i"), 1.0, -1.0));
    CHECK(close(complex_from_string("1e-3+2.5e+2i"), 0.001, 250.0));
    CHECK(close(complex_from_string(" 0.5 + 0.5i "), 0.5, 0.5));
    CHECK_THROWS_AS(complex_from_string("abc"), std::runtime_error);
    CHECK_THROWS_AS(complex_from_string(""), std::runtime_error);
    CHECK_THROWS_AS(complex_from_string("1+2j"), std::runtime_error);
}

TEST_CASE("config digests pin the published 64-bit FNV-1a vectors") {
    // Oracle: reference FNV-1a test vectors.
    CHECK(fnv1a_digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "fnv1a64:af63dc4c8601ec8c");
    CHECK(fnv1a_digest("foobar") == "fnv1a64:85944171f73967e8");
    CHECK(fnv1a_digest("foobar") == fnv1a_digest("foobar"));
    CHECK(fnv1a_digest("foobar") != fnv1a_digest("foobaz"));
}

TEST_CASE("campaign parsing applies defaults and rejects malformed cases") {
    Json cfg = Json{{"report", Json{{"precision", 30}, {"seed", 7}}},
                    {"case", Json::array({
                                 Json{{"kind", "gamma"}},
                                 Json{{"kind", "snf"},
                                      {"name", "pinned"},
                                      {"p", 5},
                                      {"u", 4},
                                      {"f", 2},
                                      {"precision", 25},
                                      {"seed", 99}},
                             })}};
    CampaignConfig parsed = parse_campaign(cfg);
    CHECK(parsed.default_precision == 30);
    CHECK(parsed.default_seed == 7);
    REQUIRE(parsed.cases.size() == 2);
    CHECK(parsed.cases[0].kind == CaseKind::Gamma);
    CHECK(parsed.cases[0].name == "gamma-1");
    CHECK(parsed.cases[0].precision == 30);  // campaign default
    CHECK(parsed.cases[0].seed == 7);
    CHECK(parsed.cases[1].name == "pinned");
    CHECK(parsed.cases[1].precision == 25);  // per-case override
    CHECK(parsed.cases[1].seed == 99);

    // No cases at all is a valid (vacuously passing) campaign.
    CHECK(parse_campaign(Json::object()).cases.empty());

    CHECK_THROWS_AS(parse_campaign(Json{{"case", Json::array({Json{{"kind", "bogus"}}})}}),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_campaign(Json{{"case", Json::array({Json{{"kind", "snf"}}})}}),
                    std::runtime_error);  // missing p/u/f
    CHECK_THROWS_AS(
        parse_campaign(Json{{"case", Json::array({Json{{"kind", "snf"},
                                                       {"p", 5},
                                                       {"u", 4},
                                                       {"f", "two"}}})}}),
        std::runtime_error);  // wrong type
    CHECK_THROWS_AS(parse_campaign(Json{{"case", Json::array({Json::array()})}}),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_campaign(Json(3)), std::runtime_error);
}

TEST_CASE("every advertised kind name round-trips") {
    for (const char* name :
         {"lemma80", "snf", "nr-diagram", "taylor-unit", "hasse-davenport",
          "conductor-induction", "gamma", "lfun-fe", "class-number", "le81",
          "epsilon-anchor", "gauss-law"}) {
        auto kind = case_kind_from_name(name);
        REQUIRE(kind.has_value());
        CHECK(std::string(case_kind_name(*kind)) == name);
    }
    CHECK(!case_kind_from_name("lemma81").has_value());
    CHECK(!case_kind_from_name("").has_value());
}

TEST_CASE("special-value case passes with exact rational witnesses") {
    CaseResult r = run_case(make_case(CaseKind::Gamma, Json::object()));
    CHECK(r.status == CaseStatus::Pass);
    CHECK(r.report.at("pass") == true);
    CHECK(r.report.at("witnesses").at("gamma_star_1") == "1");
    CHECK(r.report.at("witnesses").at("gamma_star_3") == "2");
    CHECK(r.report.at("witnesses").at("gamma_star_minus_1") == "-1");
}

TEST_CASE("elementary divisor case agrees with the direct valuation") {
    // Oracle: v_5(1 - 4^2) = v_5(-15) = 1, so divisors must be (0, 1).
    CaseResult r = run_case(make_case(CaseKind::Snf, Json{{"p", 5}, {"u", 4}, {"f", 2}}));
    REQUIRE(r.status == CaseStatus::Pass);
    CHECK(r.report["witnesses"]["omega_direct"] == 1);
    CHECK(r.report["witnesses"]["exponents"] == Json::array({0, 1}));
    CHECK(r.report["witnesses"]["transform_consistent"] == true);
    CHECK(r.report["witnesses"]["profile_consistent"] == true);

    // Oracle: v_5(1 - 7^2) = v_5(-48) = 0, the invertible regime.
    CaseResult r2 = run_case(make_case(CaseKind::Snf, Json{{"p", 5}, {"u", 7}, {"f", 2}}));
    REQUIRE(r2.status == CaseStatus::Pass);
    CHECK(r2.report["witnesses"]["omega_direct"] == 0);
    CHECK(r2.report["witnesses"]["exponents"] == Json::array({0, 0}));
}

TEST_CASE("degenerate divisor inputs surface as case errors") {
    // Non-unit twist value.
    CaseResult bad_u = run_case(make_case(CaseKind::Snf, Json{{"p", 5}, {"u", 10}, {"f", 2}}));
    CHECK(bad_u.status == CaseStatus::Error);
    CHECK(bad_u.report.contains("error"));
    CHECK(bad_u.report["pass"] == false);

    // u = 1 makes 1 - u^f exactly zero: no finite answer exists.
    CaseResult zero = run_case(make_case(CaseKind::Snf, Json{{"p", 5}, {"u", 1}, {"f", 2}}));
    CHECK(zero.status == CaseStatus::Error);

    // 1 - u^f is nonzero but vanishes to order 4, beyond working precision 3:
    // the run must refuse rather than report a wrong divisor.
    CaseResult shallow =
        run_case(make_case(CaseKind::Snf, Json{{"p", 5}, {"u", 626}, {"f", 1}}, 3));
    CHECK(shallow.status == CaseStatus::Error);
    CHECK(std::string(shallow.report["error"].get<std::string>()).find("precision") !=
          std::string::npos);
}

TEST_CASE("multiplicative pairing case counts the residue characters") {
    CaseResult r = run_case(make_case(CaseKind::GaussLaw, Json{{"p", 5}}));
    REQUIRE(r.status == CaseStatus::Pass);
    // Oracle: nontrivial characters of F_5^* come in orders d | 4, d > 1:
    // one of order 2 and two of order 4.
    CHECK(r.report["witnesses"]["characters_checked"] == 3);
    CHECK(r.report["witnesses"]["failures"] == Json::array());

    CaseResult r9 = run_case(make_case(CaseKind::GaussLaw, Json{{"p", 3}, {"k", 2}}));
    REQUIRE(r9.status == CaseStatus::Pass);
    // F_9^*: orders d | 8, d > 1 give 1 + 2 + 4 = 7 characters.
    CHECK(r9.report["witnesses"]["characters_checked"] == 7);
}

TEST_CASE("lifting-relation case runs over the base-field characters") {
    CaseResult r = run_case(make_case(CaseKind::HasseDavenport, Json{{"p", 3}, {"f", 2}}));
    REQUIRE(r.status == CaseStatus::Pass);
    CHECK(r.report["witnesses"]["characters_checked"] == 1);  // only the quadratic one
    CHECK(r.report["witnesses"]["failures"] == Json::array());
}

TEST_CASE("unramified anchor case pins the exact power of p") {
    CaseResult r = run_case(make_case(CaseKind::EpsilonAnchor, Json{{"p", 5}}));
    REQUIRE(r.status == CaseStatus::Pass);
    const Json& anchors = r.report["witnesses"]["anchors"];
    REQUIRE(anchors.size() == 4);
    // Oracle: p^{f_K (e_K - 1)} for (eK, fK) = (1,1), (2,1), (1,2), (4,1).
    CHECK(anchors[0]["expected"] == "1");
    CHECK(anchors[1]["expected"] == "5");
    CHECK(anchors[2]["expected"] == "1");
    CHECK(anchors[3]["expected"] == "125");
    for (const Json& a : anchors) CHECK(a["match"] == true);
}

TEST_CASE("group-ring unit case certifies the determinant exponents") {
    // Totally ramified C_2 over Q_5, two twist units.
    CaseResult r = run_case(make_case(
        CaseKind::Lemma80,
        Json{{"p", 5}, {"e", 2}, {"units", Json::array({2, "6"})}}));
    REQUIRE(r.status == CaseStatus::Pass);
    CHECK(r.report["witnesses"]["m"] == 0);
    CHECK(r.report["witnesses"]["characters"] == 2);
    CHECK(r.report["witnesses"]["det_checks"] == 4);
    CHECK(r.report["witnesses"]["det_failures"] == Json::array());

    // Ramified base field: m = f_K (e_K - 1) = 1 exercises the u^m twist.
    CaseResult rm = run_case(make_case(
        CaseKind::Lemma80, Json{{"p", 5}, {"eK", 2}, {"e", 2}, {"u", 2}}));
    REQUIRE(rm.status == CaseStatus::Pass);
    CHECK(rm.report["witnesses"]["m"] == 1);

    // Non-unit twist is a configuration error.
    CaseResult bad = run_case(
        make_case(CaseKind::Lemma80, Json{{"p", 5}, {"e", 2}, {"u", 5}}));
    CHECK(bad.status == CaseStatus::Error);
}

TEST_CASE("crystalline determinant case matches the closed form symbolically") {
    CaseResult r = run_case(make_case(
        CaseKind::Le81, Json{{"p", 5}, {"fK", 2}, {"f", 2}, {"u", 2}}));
    REQUIRE(r.status == CaseStatus::Pass);
    // Oracle: det of [[1, -AB], [-A, 1]] expanded by hand.
    CHECK(r.report["witnesses"]["determinant"] == "1 - A^2*B");
    CHECK(r.report["witnesses"]["symbolic_match"] == true);
    CHECK(r.report["witnesses"]["unit_components"] == Json::array({true, true}));
    // Oracle: omega = v_5(1 - 2^4) = v_5(-15) = 1.
    CHECK(r.report["witnesses"]["omega"] == 1);
    CHECK(r.report["witnesses"]["divisor_exponents"] == Json::array({0, 1}));

    // One-dimensional corner: the matrix degenerates to the single cell 1 - AB.
    CaseResult r1 = run_case(make_case(
        CaseKind::Le81, Json{{"p", 5}, {"fK", 1}, {"f", 1}, {"u", 2}}));
    REQUIRE(r1.status == CaseStatus::Pass);
    CHECK(r1.report["witnesses"]["determinant"] == "1 - A*B");
}

TEST_CASE("norm-diagram case is deterministic across seeds and thread counts") {
    Json params = Json{{"e", 2}, {"f", 1}, {"trials", 12}};
    CaseResult serial = run_case(make_case(CaseKind::NrDiagram, params), 1);
    REQUIRE(serial.status == CaseStatus::Pass);
    CHECK(serial.report["witnesses"]["checked"] == 12);
    CHECK(serial.report["witnesses"]["mismatches"] == 0);

    CaseResult again = run_case(make_case(CaseKind::NrDiagram, params), 1);
    CHECK(serial.report.dump() == again.report.dump());

    CaseResult threaded = run_case(make_case(CaseKind::NrDiagram, params), 4);
    CHECK(serial.report.dump() == threaded.report.dump());

    // A different seed draws a different sample stream but still passes.
    CaseResult other_seed = run_case(make_case(CaseKind::NrDiagram, params, 40, 7));
    CHECK(other_seed.status == CaseStatus::Pass);
}

TEST_CASE("resolvent-ratio case reports one entry per character") {
    CaseResult r = run_case(make_case(
        CaseKind::TaylorUnit, Json{{"p", 5}, {"e", 2}, {"nontrivial_ratio_one", true}}));
    REQUIRE(r.status == CaseStatus::Pass);
    CHECK(r.report["witnesses"]["per_char"].size() == 2);
    CHECK(r.report["witnesses"]["all_unit"] == true);
    CHECK(r.report["witnesses"]["nontrivial_ratios_one"] == true);
}

TEST_CASE("conductor bookkeeping case balances against the tower discriminant") {
    CaseResult r = run_case(make_case(
        CaseKind::ConductorInduction, Json{{"p", 5}, {"e", 2}, {"f", 2}}));
    REQUIRE(r.status == CaseStatus::Pass);
    // Oracle: for the abelian (2,2) extension of Q_5 two of the four characters
    // are ramified with conductor exponent 1 each.
    CHECK(r.report["witnesses"]["conductor_sum"] == 2);
    CHECK(r.report["witnesses"]["tower_discriminant"] == 2);
    CHECK(r.report["witnesses"]["abelian"] == true);
    CHECK(r.report["witnesses"]["per_char"].size() == 4);
}

TEST_CASE("functional-equation case sweeps the primitive characters") {
    CaseResult r = run_case(
        make_case(CaseKind::LfunFe,
                  Json{{"max_modulus", 5}, {"s_grid", Json::array({"0.5", "1.2"})}}),
        1);
    REQUIRE(r.status == CaseStatus::Pass);
    // Oracle: one primitive character mod 3, one mod 4, three mod 5.
    CHECK(r.report["witnesses"]["primitive_characters"] == 5);
    CHECK(r.report["witnesses"]["pairs_checked"] == 10);
    CHECK(r.report["witnesses"]["max_residual"].get<double>() < 1e-8);

    // An impossible tolerance flips the same computation to a clean failure.
    CaseResult fail = run_case(make_case(
        CaseKind::LfunFe, Json{{"max_modulus", 3},
                               {"s_grid", Json::array({"0.5"})},
                               {"tolerance", 1e-40}}));
    CHECK(fail.status == CaseStatus::Fail);
    CHECK(fail.report["pass"] == false);
    CHECK(fail.report["witnesses"]["failures"].size() == 1);
}

TEST_CASE("imaginary quadratic class number case passes its tolerance") {
    CaseResult r = run_case(make_case(CaseKind::ClassNumber, Json::object()));
    REQUIRE(r.status == CaseStatus::Pass);
    CHECK(std::abs(r.report["witnesses"]["h"].get<double>() - 1.0) < 1e-6);
    CHECK(r.report["witnesses"]["deviation"].get<double>() < 1e-6);
}

TEST_CASE("campaigns collate case reports in configuration order") {
    Json cfg = Json{{"case", Json::array({
                                 Json{{"kind", "gamma"}},
                                 Json{{"kind", "snf"}, {"p", 5}, {"u", 4}, {"f", 2}},
                                 Json{{"kind", "epsilon-anchor"}, {"p", 5}},
                             })}};
    CampaignConfig parsed = parse_campaign(cfg);
    CampaignResult res = run_campaign(parsed, 1, fnv1a_digest(cfg.dump()), false);
    CHECK(res.all_pass);
    CHECK(!res.any_error);
    CHECK(res.exit_code() == 0);
    REQUIRE(res.report["cases"].size() == 3);
    CHECK(res.report["cases"][0]["kind"] == "gamma");
    CHECK(res.report["cases"][1]["kind"] == "snf");
    CHECK(res.report["cases"][2]["kind"] == "epsilon-anchor");
    CHECK(res.report["tool"] == "epslab");
    CHECK(res.report["pass"] == true);
    for (const Json& cj : res.report["cases"]) CHECK(!cj.contains("wall_ms"));

    // Byte-identical reruns, serial or threaded, with timings off.
    CampaignResult rerun = run_campaign(parsed, 1, fnv1a_digest(cfg.dump()), false);
    CHECK(res.report.dump() == rerun.report.dump());
    CampaignResult threaded = run_campaign(parsed, 3, fnv1a_digest(cfg.dump()), false);
    CHECK(res.report.dump() == threaded.report.dump());

    // Timings are opt-in and change only the wall_ms fields.
    CampaignResult timed = run_campaign(parsed, 1, fnv1a_digest(cfg.dump()), true);
    for (const Json& cj : timed.report["cases"]) CHECK(cj.contains("wall_ms"));
}

TEST_CASE("campaign exit codes separate failure from error") {
    // Empty campaign: vacuous pass.
    CampaignResult empty = run_campaign(parse_campaign(Json::object()), 1, "d", false);
    CHECK(empty.exit_code() == 0);
    CHECK(empty.report["cases"] == Json::array());

    // One genuine verification failure: exit 2.
    Json failing = Json{{"case", Json::array({
                                     Json{{"kind", "gamma"}},
                                     Json{{"kind", "lfun-fe"},
                                          {"max_modulus", 3},
                                          {"s_grid", Json::array({"0.5"})},
                                          {"tolerance", 1e-40}},
                                 })}};
    CampaignResult fail_res = run_campaign(parse_campaign(failing), 1, "d", false);
    CHECK(fail_res.exit_code() == 2);
    CHECK(fail_res.report["pass"] == false);

    // A runtime error inside a case dominates: exit 1.
    Json erroring = Json{{"case", Json::array({
                                      Json{{"kind", "gamma"}},
                                      Json{{"kind", "snf"}, {"p", 5}, {"u", 1}, {"f", 2}},
                                  })}};
    CampaignResult err_res = run_campaign(parse_campaign(erroring), 1, "d", false);
    CHECK(err_res.exit_code() == 1);
    CHECK(err_res.report["cases"][1].contains("error"));
}

TEST_CASE("a campaign written in the config language runs end to end") {
    Json cfg = parse_toml(
        "[report]\n"
        "precision = 40\n"
        "seed = 42\n"
        "\n"
        "[[case]]\n"
        "kind = \"snf\"\n"
        "name = \"divisors-5-4-2\"\n"
        "p = 5\n"
        "u = 4\n"
        "f = 2\n"
        "\n"
        "[[case]]\n"
        "kind = \"le81\"\n"
        "p = 5\n"
        "fK = 2\n"
        "f = 2\n"
        "u = \"2\"\n");
    CampaignResult res = run_campaign(parse_campaign(cfg), 1, fnv1a_digest(cfg.dump()), false);
    CHECK(res.exit_code() == 0);
    CHECK(res.report["cases"][0]["case"] == "divisors-5-4-2");
    CHECK(res.report["cases"][1]["witnesses"]["symbolic_match"] == true);
}
