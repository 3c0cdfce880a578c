#pragma once
// Falsification harness: every asserted identity gets an evaluator, frozen
// default points, per-point error budgets, and a three-valued verdict backed
// by the independent reference evaluators (never by the formula under test).

#include <optional>
#include <string>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab::claims {

enum class ClaimId {
    PsfGaussian,
    MuntzIdentity,
    ContinuationQuotient,
    ImDecomposition,
    WrAveragedFe,
    PGeneralFe,
    RefinementSeries,
    EtaRepresentation,
    ImzetaStarSeries,
    MaslankaFormula,
    RwrfeHyperbola,
    MahZeroContainment,
    LevyMomentDichotomy,
    WrMoments,
};

struct ClaimInfo {
    ClaimId id;
    std::string name;    // stable token, e.g. "psf-gaussian"
    std::string anchor;  // short phrase identifying the assertion
};

// Registry in stable (declaration) order; size is fixed at 14.
const std::vector<ClaimInfo>& list_claims();
const ClaimInfo& info(ClaimId id);
std::optional<ClaimId> claim_from_name(const std::string& name);

struct Config {
    SeedValue seed = 0;
    long precision_bits = 384;  // floor for the extended-precision evaluators
    double tol = 1e-6;          // scales every per-claim budget: budget *= tol/1e-6
};

struct PointReport {
    Complex s;
    Complex lhs;
    Complex rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double err_budget = 0.0;
};

struct Variant {
    std::string label;
    std::string verdict;
    double max_abs_err = 0.0;
};

struct ClaimReport {
    ClaimId claim;
    std::vector<PointReport> points;
    std::string verdict;  // supported | refuted | inconclusive
    Config config;
    std::vector<Variant> variants;
    std::vector<std::string> notes;
};

// Verdict rule: supported iff every point has abs_err <= err_budget; refuted
// iff some point exceeds 10x its budget; the decade between is inconclusive.
std::string verdict_of(const std::vector<PointReport>& points);

// Frozen default evaluation points for a claim.
std::vector<Complex> default_points(ClaimId id);

// Evaluate at given points (validated per claim; throws DomainError outside
// the claim's region). Claims that derive their own points (the zero-scan
// containment check) accept an empty list.
ClaimReport evaluate_claim(ClaimId id, const std::vector<Complex>& points,
                           const Config& cfg);
ClaimReport evaluate_claim(ClaimId id, const Config& cfg);  // default points

struct ChebyshevResult {
    bool holds = false;
    double gap = 0.0;  // mean(ab) - mean(a) mean(b)
};

// Same-length positive sequences; true iff the similarly-ordered mean
// inequality holds for this pair.
ChebyshevResult chebyshev_sum_check(const std::vector<double>& a,
                                    const std::vector<double>& b);

// Validated wrapper over the reference scan: requires 0 <= t_lo < t_hi <= 50
// and step > 0.
std::vector<double> critical_zero_scan(double t_lo, double t_hi, double step);

// JSON report over a set of claim reports: fixed field order, full round-trip
// number precision, byte-identical across runs with identical config.
std::string render_report(const std::vector<ClaimReport>& reports,
                          const Config& cfg);

}  // namespace zetalab::claims
