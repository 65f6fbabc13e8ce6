#pragma once

// Poisson-sized random commissions drawn from the rows of R_n, Monte Carlo
// estimation of the chance that they disagree with eta(n), and the matching
// Chernoff/union bound.

#include <cstdint>
#include <variant>
#include <vector>

#include "knockout/core.hpp"
#include "knockout/profile.hpp"
#include "knockout/random.hpp"

namespace knockout {

/// Multiplicity of each profile row in a random commission.
struct CommissionSample {
  std::vector<std::uint64_t> weights;
  double lambda = 0.0;  // total Poisson mean the weights were drawn with
};

/// Row count of R_n, 4n + 10.
std::size_t profile_rows(unsigned n);

/// Independent Poisson(lambda / (4n + 10)) weights for the rows of R_n.
CommissionSample sample_commission(unsigned n, double lambda, Philox4x32& rng);

/// The pairs left undecided by a weighted commission.
struct TieReport {
  std::vector<CandidatePair> tied_pairs;
};

using Outcome = std::variant<PreferencePattern, TieReport>;

/// Weighted majority: each row counts weights[k] times.
Outcome induced_outcome(const VotingProfile& profile, std::span<const std::uint64_t> weights);

struct SimulationConfig {
  unsigned n = 0;
  double lambda = 1.0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;  // 0 = hardware concurrency; does not affect results
};

struct SimulationReport {
  std::uint64_t mismatches = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double ci_halfwidth = 0.0;  // Wilson score, 95%
  double bound = 0.0;         // chernoff_bound(n, lambda)
};

/// Trial t draws its commission from substream t of `seed`, so any thread
/// count gives the same report. Ties count as mismatches.
SimulationReport estimate_mismatch(const SimulationConfig& config,
                                   unsigned max_level = kDefaultMaxEtaLevel);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  double halfwidth() const { return (upper - lower) / 2.0; }
};

/// Wilson score interval for `successes` out of `trials` at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

/// Chernoff exponent at zero of X - Y for independent Poisson(hi), Poisson(lo):
/// (sqrt(hi) - sqrt(lo))^2. Requires hi > lo > 0.
double rate_function_zero(double lambda_hi, double lambda_lo);

/// Number of candidate pairs at level n, 2^(n+2) (2^(n+3) - 1).
double candidate_pairs(unsigned n);

/// Per-pair exponent lambda (1 - sqrt(1 - 1/(2n+5)^2)).
double pair_rate(unsigned n, double lambda);

/// Union bound pairs(n) exp(-pair_rate(n, lambda)). May exceed 1.
double chernoff_bound(unsigned n, double lambda);

/// Smallest lambda with chernoff_bound(n, lambda) <= p_target.
double min_lambda_for(unsigned n, double p_target);

}  // namespace knockout
