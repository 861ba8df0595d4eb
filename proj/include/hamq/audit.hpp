#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamq/quaternion.hpp"
#include "hamq/rng.hpp"

namespace hamq::audit {

/// Sampling domains for identity claims.
enum class Domain { FullH, BEqDEq0, BEq0, PositiveComponents, UnitSphere };

std::string_view domain_name(Domain d);

/// Whether the source text's identity is expected to survive sampling as
/// printed, or to fail (with its corrected twin registered separately).
enum class Expectation { Holds, FailsAsPrinted };

/// What one sample produced: a scaled residual, or nothing when the sample
/// was degenerate for this claim (e.g. Cjs does not exist there).
struct Outcome {
    std::optional<double> residual;
    std::vector<Quaternion> inputs;
    int power = -1;  // exponent drawn, for power-law claims
};

struct Claim {
    std::string id;
    Domain domain;
    Expectation expected;
    std::function<Outcome(SplitMix64&, Domain)> eval;
};

struct ClaimReport {
    std::string id;
    Domain domain{};
    Expectation expected{};
    std::size_t samples = 0;
    std::size_t skips = 0;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    bool pass = true;  // max_residual <= 1e-8
    std::vector<Quaternion> counterexample;  // inputs of the max-residual sample
    int power = -1;
};

struct AuditReport {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<ClaimReport> claims;
};

/// One quaternion from the claim's sampling domain. Components are uniform
/// in [-3, 3] (positive domain: (0, 3]); unit-sphere draws are normalized.
Quaternion draw(SplitMix64& rng, Domain d);

/// |lhs - rhs| / (1 + |lhs| + |rhs|): an absolute/relative blend that stays
/// meaningful across magnitudes.
double scaled_residual(const Quaternion& lhs, const Quaternion& rhs);
double scaled_residual(double lhs, double rhs);

/// The built-in claim catalog: every printed identity of the source text's
/// first three sections plus its corrected twin where the printed form is
/// wrong.
const std::vector<Claim>& default_claims();

/// Sample every claim `samples` times. Each sample draws from an independent
/// substream keyed by (seed, claim id, index), so the report is identical
/// for a given (seed, samples) regardless of evaluation order.
AuditReport run(const std::vector<Claim>& claims, std::size_t samples, std::uint64_t seed);
AuditReport run_default(std::size_t samples, std::uint64_t seed);

/// One line per claim, tab-separated: id, domain, samples, skips,
/// max residual (%.6e), PASS/FAIL, counterexample ("a,b,c,d" groups joined
/// by ";", with a trailing ";n=N" for power claims; "-" if every sample
/// was skipped).
std::string serialize(const AuditReport& report);

}  // namespace hamq::audit
