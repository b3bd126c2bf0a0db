#pragma once

#include "epslab/float128.hpp"
#include "epslab/json_forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace epslab {

/// The verification case kinds the campaign runner understands.
enum class CaseKind {
    Lemma80,
    Snf,
    NrDiagram,
    TaylorUnit,
    HasseDavenport,
    ConductorInduction,
    Gamma,
    LfunFe,
    ClassNumber,
    Le81,
    EpsilonAnchor,
    GaussLaw,
};

/// Canonical lowercase-hyphen name ("lemma80", "nr-diagram", ...).
const char* case_kind_name(CaseKind k);
/// Reverse lookup; empty for unknown names.
std::optional<CaseKind> case_kind_from_name(const std::string& name);

/// One self-contained verification case.
struct CaseConfig {
    CaseKind kind = CaseKind::Gamma;
    std::string name;         // unique-ish label, defaulted from kind + position
    unsigned precision = 40;  // working precision for exact p-adic checks
    unsigned long seed = 42;  // RNG seed for randomized trials
    Json params;              // the case table as parsed (flat descriptor keys)
};

struct CampaignConfig {
    std::vector<CaseConfig> cases;
    unsigned default_precision = 40;
    unsigned long default_seed = 42;
};

/**
 * Validate and normalize a parsed config tree: optional [report] table with
 * campaign defaults {precision, seed}, and [[case]] tables each carrying a
 * known kind plus that kind's required parameters. Unknown kinds and missing
 * or malformed parameters throw std::runtime_error (a configuration error).
 */
CampaignConfig parse_campaign(const Json& config);

enum class CaseStatus { Pass, Fail, Error };

struct CaseResult {
    CaseStatus status = CaseStatus::Error;
    Json report;  // {name, kind, inputs, pass, witnesses[, error]}
    double wall_ms = 0.0;
};

/// Run one case; computational failures surface as status Fail with
/// witnesses, exceptions as status Error with the message recorded. jobs
/// bounds the threads of the case's own grid/trial loops (1 = serial,
/// 0 = runtime default); the collated output is identical either way.
CaseResult run_case(const CaseConfig& c, unsigned jobs = 1);

struct CampaignResult {
    Json report;
    bool all_pass = false;
    bool any_error = false;
    /// 0 all pass, 2 verification failure, 1 configuration/runtime error.
    int exit_code() const { return any_error ? 1 : (all_pass ? 0 : 2); }
};

/**
 * Run every case — concurrently when jobs != 1 (0 = runtime default) — and
 * collate reports in config order, so the document is independent of
 * scheduling. include_timings adds per-case wall_ms fields, which are the
 * one part of the report excluded from byte-identical determinism.
 */
CampaignResult run_campaign(const CampaignConfig& config, unsigned jobs,
                            const std::string& config_digest, bool include_timings);

/// FNV-1a 64-bit digest, rendered as "fnv1a64:" + 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

/// Parse "a", "a+bi", "a-bi", "bi" into a complex value.
Cplx complex_from_string(const std::string& text);

extern const char* const kToolVersion;

}  // namespace epslab
