// Acceptance gate: one line per criterion, nonzero exit if any fails.
//
// Each criterion drives the same case machinery the campaign runner uses,
// with the parameters fixed below, and independently re-checks the headline
// values where they are cheap to state exactly.

#include "epslab/epsilon.hpp"
#include "epslab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace epslab;

namespace {

int failures = 0;

CaseConfig make_case(CaseKind kind, Json params, unsigned precision = 40,
                     unsigned long seed = 42) {
    CaseConfig c;
    c.kind = kind;
    c.name = case_kind_name(kind);
    c.precision = precision;
    c.seed = seed;
    c.params = std::move(params);
    return c;
}

bool case_passes(CaseKind kind, Json params, std::string* why = nullptr) {
    CaseResult r = run_case(make_case(kind, std::move(params)));
    if (r.status == CaseStatus::Pass) return true;
    if (why) {
        *why = r.report.value("error", std::string("case reported pass=false"));
    }
    return false;
}

void report(int number, const char* title, bool ok, const std::string& detail = "") {
    std::printf("%s  %2d. %s%s%s\n", ok ? "PASS" : "FAIL", number, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

void criterion_1_gamma() {
    bool exact = gamma_star(1) == 1 && gamma_star(3) == 2 && gamma_star(-1) == -1 &&
                 gamma_factor({{-1, 1}}) == 1;
    bool ok = exact && case_passes(CaseKind::Gamma, Json::object());
    report(1, "regularized Gamma special values are exact", ok);
}

void criterion_2_divisors() {
    struct Row {
        unsigned long p, u, f;
    };
    bool ok = true;
    std::string why;
    for (Row r : std::vector<Row>{{5, 4, 2}, {5, 7, 2}, {7, 3, 3}, {13, 14, 2}})
        ok = ok && case_passes(CaseKind::Snf,
                               Json{{"p", r.p}, {"u", r.u}, {"f", r.f}}, &why);
    report(2, "elementary divisors match the direct valuation at precision 40", ok, why);
}

void criterion_3_gauss_laws() {
    bool ok = true;
    std::string why;
    struct Field {
        unsigned long p, k;
    };
    for (Field f : std::vector<Field>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {13, 1}, {5, 2}})
        ok = ok && case_passes(CaseKind::GaussLaw, Json{{"p", f.p}, {"k", f.k}}, &why);
    for (unsigned long p : {3ul, 5ul, 7ul})
        ok = ok &&
             case_passes(CaseKind::HasseDavenport, Json{{"p", p}, {"f", 2}}, &why);
    report(3, "Gauss sum pairing and norm-lift identities hold exactly", ok, why);
}

void criterion_4_epsilon_anchor() {
    std::string why;
    bool ok = case_passes(
        CaseKind::EpsilonAnchor,
        Json{{"p", 5},
             {"pairs", Json::array({{1, 1}, {2, 1}, {1, 2}, {4, 1}})}},
        &why);
    report(4, "trivial-character epsilon equals the discriminant power", ok, why);
}

void criterion_5_group_ring_units() {
    Json units = Json::array({2, 6, 4});     // 2, 1+p, p-1 for p = 5
    Json units7 = Json::array({2, 8, 6});    // 2, 1+p, p-1 for p = 7
    bool ok = true;
    std::string why;
    // Unramified (trivial inertia), totally ramified cyclic (inertia is
    // everything), and the smallest nonabelian metacyclic case.
    ok = ok && case_passes(CaseKind::Lemma80,
                           Json{{"p", 5}, {"f", 3}, {"units", units}}, &why);
    ok = ok && case_passes(CaseKind::Lemma80,
                           Json{{"p", 5}, {"e", 2}, {"units", units}}, &why);
    ok = ok && case_passes(CaseKind::Lemma80,
                           Json{{"p", 7}, {"e", 3}, {"units", units7}}, &why);
    ok = ok && case_passes(CaseKind::Lemma80,
                           Json{{"p", 5}, {"e", 3}, {"f", 2}, {"units", units}}, &why);
    ok = ok && case_passes(CaseKind::Lemma80,
                           Json{{"p", 5}, {"eK", 2}, {"e", 2}, {"units", units}}, &why);
    report(5, "group-ring units carry the prescribed determinant exponents", ok, why);
}

void criterion_6_crystalline_determinant() {
    bool ok = true;
    std::string why;
    for (unsigned long fK : {1ul, 2ul, 3ul, 4ul, 6ul})
        ok = ok && case_passes(CaseKind::Le81,
                               Json{{"p", 5}, {"fK", fK}, {"f", 2}, {"u", 2}}, &why);
    report(6, "crystalline determinant matches symbolically and by divisors", ok, why);
}

void criterion_7_norm_diagram() {
    bool ok = true;
    std::string why;
    struct Group {
        unsigned long e, f, q, c;
    };
    for (Group g : std::vector<Group>{
             {2, 1, 1, 0}, {6, 1, 1, 0}, {3, 2, 2, 0}, {4, 2, 3, 0}})
        ok = ok && case_passes(CaseKind::NrDiagram,
                               Json{{"e", g.e},
                                    {"f", g.f},
                                    {"q", g.q},
                                    {"c", g.c},
                                    {"trials", 100}},
                               &why);
    report(7, "reduced norm agrees with the matrix route on 100 random units each", ok,
           why);
}

void criterion_8_resolvent_ratios() {
    bool ok = true;
    std::string why;
    ok = ok && case_passes(CaseKind::TaylorUnit,
                           Json{{"p", 5}, {"e", 2}, {"nontrivial_ratio_one", true}},
                           &why);
    struct Grid {
        unsigned long p, e;
    };
    for (Grid g : std::vector<Grid>{{7, 2}, {7, 3}, {13, 2}, {13, 3}, {13, 4}})
        ok = ok && case_passes(CaseKind::TaylorUnit, Json{{"p", g.p}, {"e", g.e}}, &why);
    report(8, "norm-resolvent ratios are p-units (and 1 where pinned)", ok, why);
}

void criterion_9_conductor_induction() {
    bool ok = true;
    std::string why;
    // Abelian cases with base ramification at most 2 carry the
    // conductor-discriminant cross-check; the nonabelian case checks the
    // induction formula on every irreducible character.
    ok = ok && case_passes(CaseKind::ConductorInduction,
                           Json{{"p", 5}, {"e", 2}, {"f", 2}}, &why);
    ok = ok && case_passes(CaseKind::ConductorInduction,
                           Json{{"p", 5}, {"eK", 2}, {"e", 4}}, &why);
    ok = ok && case_passes(CaseKind::ConductorInduction,
                           Json{{"p", 3}, {"fK", 2}, {"e", 2}}, &why);
    ok = ok && case_passes(CaseKind::ConductorInduction,
                           Json{{"p", 5}, {"e", 3}, {"f", 2}}, &why);
    report(9, "induced conductor exponents balance the tower discriminant", ok, why);
}

void criterion_10_functional_equation() {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool fe_ok = case_passes(
        CaseKind::LfunFe,
        Json{{"max_modulus", 20},
             {"s_grid", Json::array({"0.3", "0.5", "0.5+0.5i", "1.2"})},
             {"tolerance", 1e-8}},
        &why);

    auto t1 = std::chrono::steady_clock::now();
    bool cn_ok = case_passes(CaseKind::ClassNumber, Json::object(), &why);
    auto t2 = std::chrono::steady_clock::now();
    double cn_seconds = std::chrono::duration<double>(t2 - t1).count();
    bool cn_fast = cn_seconds < 10.0;
    (void)t0;

    char detail[96];
    std::snprintf(detail, sizeof detail, "class number in %.2fs", cn_seconds);
    report(10, "functional equation residuals < 1e-8 and h = 1 within 1e-6",
           fe_ok && cn_ok && cn_fast, fe_ok && cn_ok && !cn_fast ? detail : why);
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();

    criterion_1_gamma();
    criterion_2_divisors();
    criterion_3_gauss_laws();
    criterion_4_epsilon_anchor();
    criterion_5_group_ring_units();
    criterion_6_crystalline_determinant();
    criterion_7_norm_diagram();
    criterion_8_resolvent_ratios();
    criterion_9_conductor_induction();
    criterion_10_functional_equation();

    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                       .count();
    bool in_budget = total < 60.0;
    std::printf("%s  total wall time %.2fs (budget 60s)\n", in_budget ? "PASS" : "FAIL",
                total);
    if (!in_budget) ++failures;

    if (failures > 0) {
        std::printf("acceptance: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("acceptance: all criteria hold\n");
    return 0;
}
