#include "CLI11.hpp"

#include "epslab/epsilon.hpp"
#include "epslab/lfun.hpp"
#include "epslab/toml_lite.hpp"
#include "epslab/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace epslab;

namespace {

// Default working precision: explicit flag, then EPSLAB_PRECISION, then 40.
unsigned resolve_precision(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("EPSLAB_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 100000) return static_cast<unsigned>(v);
        std::cerr << "epslab: ignoring invalid EPSLAB_PRECISION '" << env << "'\n";
    }
    return 40;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int finish_case(const CaseConfig& config, unsigned jobs) {
    CaseResult r = run_case(config, jobs);
    Json rep = r.report;
    // The per-character table is the interesting payload here; surface it.
    if (config.kind == CaseKind::TaylorUnit && rep.contains("witnesses") &&
        rep["witnesses"].contains("per_char"))
        rep["per_char"] = rep["witnesses"]["per_char"];
    print_json(rep);
    switch (r.status) {
        case CaseStatus::Pass: return 0;
        case CaseStatus::Fail: return 2;
        case CaseStatus::Error: return 1;
    }
    return 1;
}

Json json_value_witness(const CyclotomicNumber& x) {
    if (x.is_rational()) return Json(rational_to_string(x.rational_value()));
    return cyclo_to_json(x);
}

struct DescriptorFlags {
    unsigned long p = 0;
    unsigned long eK = 1, fK = 1, e = 1, f = 1, c = 0;
    long disc_override = -1;

    void attach(CLI::App* cmd, bool with_tower = true) {
        cmd->add_option("--p", p, "Residue characteristic (prime)")->required();
        cmd->add_option("--eK", eK, "Ramification index of the base field over Q_p");
        cmd->add_option("--fK", fK, "Residue degree of the base field over Q_p");
        if (with_tower) {
            cmd->add_option("--e", e, "Ramification index of the extension");
            cmd->add_option("--f", f, "Residue degree of the extension");
            cmd->add_option("--c", c, "Metacyclic commutator twist");
        }
        cmd->add_option("--disc", disc_override,
                        "Override for the base-field discriminant exponent");
    }

    void fill(Json& params) const {
        params["p"] = p;
        params["eK"] = eK;
        params["fK"] = fK;
        params["e"] = e;
        params["f"] = f;
        params["c"] = c;
        if (disc_override >= 0)
            params["discriminant_override"] = static_cast<unsigned long>(disc_override);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"epslab: exact local constants of tame p-adic extensions, "
                 "with verification campaigns"};
    app.set_version_flag("--version", std::string("epslab ") + kToolVersion);
    app.require_subcommand(1);

    // ------------------------------------------------------------- verify
    CLI::App* verify = app.add_subcommand("verify", "Run one verification case");
    verify->require_subcommand(1);

    unsigned precision_flag = 0;
    unsigned long seed = 42;
    unsigned jobs = 1;

    struct PendingCase {
        CaseKind kind;
        Json params = Json::object();
    };
    PendingCase pending;

    // lemma80
    {
        CLI::App* cmd = verify->add_subcommand(
            "lemma80", "Group-ring unit with prescribed determinant exponents");
        static DescriptorFlags dflags;
        dflags.attach(cmd);
        static std::vector<std::string> units;
        cmd->add_option("--u", units, "Twist unit(s), rational, repeatable")->required();
        cmd->add_option("--precision", precision_flag, "Working p-adic precision");
        cmd->callback([&]() {
            pending.kind = CaseKind::Lemma80;
            dflags.fill(pending.params);
            Json arr = Json::array();
            for (const std::string& u : units) arr.push_back(u);
            pending.params["units"] = arr;
        });
    }
    // snf
    {
        CLI::App* cmd = verify->add_subcommand(
            "snf", "Elementary divisors of the twisted shift operator");
        static unsigned long p = 0, f = 1;
        static std::string u;
        cmd->add_option("--p", p, "Residue characteristic (prime)")->required();
        cmd->add_option("--u", u, "Twist unit, rational")->required();
        cmd->add_option("--f", f, "Cyclic degree")->required();
        cmd->add_option("--precision", precision_flag, "Working p-adic precision");
        cmd->callback([&]() {
            pending.kind = CaseKind::Snf;
            pending.params = Json{{"p", p}, {"u", u}, {"f", f}};
        });
    }
    // nr-diagram
    {
        CLI::App* cmd = verify->add_subcommand(
            "nr-diagram", "Reduced-norm square on random invertible elements");
        static unsigned long e = 1, f = 1, q = 1, c = 0, trials = 100;
        cmd->add_option("--e", e, "Cyclic normal part order")->required();
        cmd->add_option("--f", f, "Quotient order")->required();
        cmd->add_option("--q", q, "Conjugation action");
        cmd->add_option("--c", c, "Commutator twist");
        cmd->add_option("--trials", trials, "Number of random elements");
        cmd->add_option("--seed", seed, "Random seed");
        cmd->callback([&]() {
            pending.kind = CaseKind::NrDiagram;
            pending.params =
                Json{{"e", e}, {"f", f}, {"q", q}, {"c", c}, {"trials", trials}};
        });
    }
    // taylor-unit
    {
        CLI::App* cmd = verify->add_subcommand(
            "taylor-unit", "Norm-resolvent to Gauss-element ratios are p-units");
        static unsigned long p = 0, e = 0;
        static bool ratio_one = false;
        cmd->add_option("--p", p, "Prime, 1 mod e")->required();
        cmd->add_option("--e", e, "Subfield degree")->required();
        cmd->add_flag("--require-ratio-one", ratio_one,
                      "Additionally require every nontrivial ratio to equal 1");
        cmd->callback([&]() {
            pending.kind = CaseKind::TaylorUnit;
            pending.params = Json{{"p", p}, {"e", e}};
            if (ratio_one) pending.params["nontrivial_ratio_one"] = true;
        });
    }
    // hasse-davenport
    {
        CLI::App* cmd = verify->add_subcommand(
            "hasse-davenport", "Norm-lift identity for Gauss sums");
        static unsigned long p = 0, k = 1, f = 2;
        cmd->add_option("--p", p, "Residue characteristic (prime)")->required();
        cmd->add_option("--k", k, "Base field degree over the prime field");
        cmd->add_option("--f", f, "Lift degree")->required();
        cmd->callback([&]() {
            pending.kind = CaseKind::HasseDavenport;
            pending.params = Json{{"p", p}, {"k", k}, {"f", f}};
        });
    }
    // le81
    {
        CLI::App* cmd = verify->add_subcommand(
            "le81", "Crystalline determinant: symbolic identity and divisors");
        static DescriptorFlags dflags;
        dflags.attach(cmd);
        static std::string u;
        cmd->add_option("--u", u, "Twist unit, rational")->required();
        cmd->add_option("--precision", precision_flag, "Working p-adic precision");
        cmd->callback([&]() {
            pending.kind = CaseKind::Le81;
            dflags.fill(pending.params);
            pending.params["u"] = u;
        });
    }
    // conductor-induction
    {
        CLI::App* cmd = verify->add_subcommand(
            "conductor-induction", "Induced conductor exponents and the tower discriminant");
        static DescriptorFlags dflags;
        dflags.attach(cmd);
        cmd->callback([&]() {
            pending.kind = CaseKind::ConductorInduction;
            dflags.fill(pending.params);
        });
    }
    // epsilon-anchor
    {
        CLI::App* cmd = verify->add_subcommand(
            "epsilon-anchor", "Trivial-character epsilon equals the discriminant power");
        static unsigned long p = 0;
        cmd->add_option("--p", p, "Residue characteristic (prime)")->required();
        cmd->callback([&]() {
            pending.kind = CaseKind::EpsilonAnchor;
            pending.params = Json{{"p", p}};
        });
    }
    // gauss-law
    {
        CLI::App* cmd = verify->add_subcommand(
            "gauss-law", "Gauss sum times its inverse-character partner");
        static unsigned long p = 0, k = 1;
        cmd->add_option("--p", p, "Residue characteristic (prime)")->required();
        cmd->add_option("--k", k, "Field degree over the prime field");
        cmd->callback([&]() {
            pending.kind = CaseKind::GaussLaw;
            pending.params = Json{{"p", p}, {"k", k}};
        });
    }
    // gamma (special values), lfun-fe, class-number
    {
        CLI::App* cmd = verify->add_subcommand(
            "gamma", "Regularized Gamma special values");
        cmd->callback([&]() { pending.kind = CaseKind::Gamma; });
    }
    {
        CLI::App* cmd = verify->add_subcommand(
            "lfun-fe", "Completed functional equation over primitive characters");
        static unsigned long max_modulus = 20;
        static std::vector<std::string> s_grid;
        static double tolerance = 1e-8;
        cmd->add_option("--max-modulus", max_modulus, "Largest modulus to sweep");
        cmd->add_option("--s", s_grid, "Evaluation point(s), e.g. \"0.5+0.5i\", repeatable");
        cmd->add_option("--tolerance", tolerance, "Residual tolerance");
        cmd->add_option("--jobs", jobs, "Concurrent workers (0 = all cores)");
        cmd->callback([&]() {
            pending.kind = CaseKind::LfunFe;
            pending.params = Json{{"max_modulus", max_modulus}, {"tolerance", tolerance}};
            if (!s_grid.empty()) pending.params["s_grid"] = s_grid;
        });
    }
    {
        CLI::App* cmd = verify->add_subcommand(
            "class-number", "Imaginary quadratic class number from L(chi, 1)");
        cmd->callback([&]() { pending.kind = CaseKind::ClassNumber; });
    }

    // ---------------------------------------------------------- gauss-sum
    CLI::App* gs = app.add_subcommand("gauss-sum", "Gauss sum of a residue character");
    unsigned long gs_p = 0, gs_k = 1, gs_order = 2, gs_index = 1, gs_twist = 1;
    gs->add_option("--p", gs_p, "Residue characteristic (prime)")->required();
    gs->add_option("--k", gs_k, "Field degree over the prime field");
    gs->add_option("--order", gs_order, "Character order (divides q-1)")->required();
    gs->add_option("--index", gs_index, "Character index within its order");
    gs->add_option("--twist", gs_twist, "Additive twist (nonzero residue)");

    // -------------------------------------------------------- tame-epsilon
    CLI::App* te = app.add_subcommand("tame-epsilon", "Epsilon factor of a tame character");
    DescriptorFlags te_desc;
    te_desc.attach(te, /*with_tower=*/false);
    long te_n = 0;
    unsigned long te_order = 1, te_index = 1;
    std::string te_u = "1";
    te->add_option("--n", te_n, "Additive conductor exponent");
    te->add_option("--order", te_order, "Residue character order (1 = unramified)");
    te->add_option("--index", te_index, "Residue character index");
    te->add_option("--u", te_u, "Uniformizer value, rational");

    // --------------------------------------------------------------- gamma
    CLI::App* gm = app.add_subcommand("gamma", "Regularized Gamma values and factors");
    std::vector<long> gm_star;
    std::vector<std::string> gm_hodge;
    gm->add_option("--star", gm_star, "Integer argument(s) for the regularized Gamma");
    gm->add_option("--hodge", gm_hodge, "Multiset entries j:m for the Gamma factor");

    // ---------------------------------------------------------------- lfun
    CLI::App* lf = app.add_subcommand("lfun", "Dirichlet L-function checks");
    lf->require_subcommand(1);
    CLI::App* fe = lf->add_subcommand("fe", "Functional equation residuals at a point");
    unsigned long fe_modulus = 0;
    std::vector<std::string> fe_points;
    double fe_tolerance = 1e-8;
    fe->add_option("--modulus", fe_modulus, "Character modulus")->required();
    fe->add_option("--s", fe_points, "Evaluation point(s), e.g. \"0.5+0.5i\"")->required();
    fe->add_option("--tolerance", fe_tolerance, "Residual tolerance");
    CLI::App* cn = lf->add_subcommand("class-number-qi",
                                      "Class number of the Gaussian field from L(chi, 1)");

    // --------------------------------------------------------------- report
    CLI::App* rp = app.add_subcommand("report", "Run a verification campaign from a config");
    std::string rp_config, rp_out;
    unsigned rp_jobs = 0;
    long rp_seed = -1;
    bool rp_timings = false;
    rp->add_option("--config", rp_config, "Campaign config (.toml or .json)")->required();
    rp->add_option("--out", rp_out, "Output JSON report path")->required();
    rp->add_option("--jobs", rp_jobs, "Concurrent workers (0 = all cores)");
    rp->add_option("--seed", rp_seed, "Default seed override");
    rp->add_flag("--timings", rp_timings,
                 "Include wall-clock timings (breaks byte-for-byte determinism)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            CaseConfig config;
            config.kind = pending.kind;
            config.name = case_kind_name(pending.kind);
            config.precision = resolve_precision(precision_flag);
            config.seed = seed;
            config.params = pending.params;
            return finish_case(config, jobs);
        }

        if (gs->parsed()) {
            auto field = finite_field(gs_p, gs_k);
            ResidueMultChar chi(field, gs_order, gs_index);
            CyclotomicNumber value = gauss_sum(chi, gs_twist);
            print_json(Json{{"p", gs_p},
                            {"k", gs_k},
                            {"q", field->size()},
                            {"order", gs_order},
                            {"index", gs_index},
                            {"twist", gs_twist},
                            {"gauss_sum", json_value_witness(value)}});
            return 0;
        }

        if (te->parsed()) {
            TameExtensionDescriptor d;
            d.p = te_desc.p;
            d.e_K = te_desc.eK;
            d.f_K = te_desc.fK;
            if (te_desc.disc_override >= 0)
                d.discriminant_exponent_override =
                    static_cast<unsigned long>(te_desc.disc_override);
            CyclotomicNumber u(rational_from_string(te_u));
            TameLocalCharacter chi =
                te_order > 1
                    ? ramified_character(d, ResidueMultChar(finite_field(d.p, d.f_K),
                                                            te_order, te_index),
                                         u)
                    : unramified_character(d, u);
            CyclotomicNumber eps = tame_epsilon(chi, AdditiveCharDescriptor{te_n});
            print_json(Json{{"p", d.p},
                            {"eK", d.e_K},
                            {"fK", d.f_K},
                            {"n", te_n},
                            {"ramified", chi.is_ramified()},
                            {"conductor_exponent", chi.conductor_exponent()},
                            {"uniformizer_value", te_u},
                            {"epsilon", json_value_witness(eps)}});
            return 0;
        }

        if (gm->parsed()) {
            if (gm_star.empty() && gm_hodge.empty())
                throw std::runtime_error("gamma: give --star and/or --hodge");
            Json out = Json::object();
            if (!gm_star.empty()) {
                Json stars = Json::array();
                for (long j : gm_star)
                    stars.push_back(
                        Json{{"j", j}, {"value", rational_to_string(gamma_star(j))}});
                out["star"] = stars;
            }
            if (!gm_hodge.empty()) {
                std::map<long, long> hodge;
                for (const std::string& ent : gm_hodge) {
                    std::size_t colon = ent.find(':');
                    if (colon == std::string::npos || colon == 0 ||
                        colon + 1 == ent.size())
                        throw std::runtime_error("gamma: --hodge entries look like j:m");
                    hodge[std::stol(ent.substr(0, colon))] +=
                        std::stol(ent.substr(colon + 1));
                }
                Json entries = Json::array();
                for (const auto& [j, m] : hodge)
                    entries.push_back(Json{{"j", j}, {"m", m}});
                out["hodge"] = entries;
                out["factor"] = rational_to_string(gamma_factor(hodge));
            }
            print_json(out);
            return 0;
        }

        if (fe->parsed()) {
            Json rows = Json::array();
            bool all_ok = true;
            unsigned long found = 0;
            for (const DirichletCharacter& chi : characters_mod(fe_modulus)) {
                if (!chi.is_primitive()) continue;
                ++found;
                for (const std::string& stext : fe_points) {
                    Cplx s = complex_from_string(stext);
                    double r =
                        static_cast<double>(functional_equation_residual(chi, s));
                    bool ok = r < fe_tolerance;
                    all_ok = all_ok && ok;
                    rows.push_back(Json{{"chi", chi.label()},
                                        {"s", stext},
                                        {"residual", r},
                                        {"pass", ok}});
                }
            }
            print_json(Json{{"modulus", fe_modulus},
                            {"tolerance", fe_tolerance},
                            {"precision_bits", 113},
                            {"primitive_characters", found},
                            {"pass", all_ok && found > 0},
                            {"residuals", rows}});
            if (found == 0) {
                std::cerr << "epslab: no primitive characters mod " << fe_modulus << "\n";
                return 1;
            }
            return all_ok ? 0 : 2;
        }

        if (cn->parsed()) {
            ClassNumberReport r = class_number_check_qi();
            print_json(Json{{"h", static_cast<double>(r.h)},
                            {"deviation", r.deviation},
                            {"l_at_one_re", static_cast<double>(r.l_at_one.value.re)},
                            {"l_at_one_im", static_cast<double>(r.l_at_one.value.im)},
                            {"l_error_bound", r.l_at_one.error_bound},
                            {"precision_bits", r.l_at_one.precision_bits},
                            {"pass", r.pass}});
            return r.pass ? 0 : 2;
        }

        if (rp->parsed()) {
            std::ifstream in(rp_config, std::ios::binary);
            if (!in) throw std::runtime_error("config: cannot read '" + rp_config + "'");
            std::ostringstream raw;
            raw << in.rdbuf();
            std::string digest = fnv1a_digest(raw.str());

            Json cfg = load_config_file(rp_config);
            if (!cfg.is_object()) throw std::runtime_error("config: root must be a table");
            if (!cfg.contains("report") || !cfg["report"].is_object())
                cfg["report"] = Json::object();
            if (!cfg["report"].contains("precision"))
                cfg["report"]["precision"] = resolve_precision(0);
            if (rp_seed >= 0) cfg["report"]["seed"] = rp_seed;

            CampaignConfig campaign = parse_campaign(cfg);
            CampaignResult result = run_campaign(campaign, rp_jobs, digest, rp_timings);

            std::ofstream out(rp_out, std::ios::binary);
            if (!out) throw std::runtime_error("report: cannot write '" + rp_out + "'");
            out << result.report.dump(2) << "\n";
            out.close();

            unsigned long passed = 0;
            for (const Json& cj : result.report["cases"])
                if (cj["pass"] == true) ++passed;
            std::cout << "epslab report: " << passed << "/"
                      << result.report["cases"].size() << " cases passed, "
                      << (result.any_error
                              ? "errors present"
                              : (result.all_pass ? "all checks hold" : "failures present"))
                      << ", written to " << rp_out << " (" << digest << ")\n";
            return result.exit_code();
        }
    } catch (const std::exception& e) {
        std::cerr << "epslab: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
