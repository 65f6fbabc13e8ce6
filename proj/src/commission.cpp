#include "knockout/commission.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

namespace knockout {

std::size_t profile_rows(unsigned n) { return 4 * std::size_t{n} + 10; }

CommissionSample sample_commission(unsigned n, double lambda, Philox4x32& rng) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("commission mean must be positive and finite");
  const std::size_t rows = profile_rows(n);
  CommissionSample sample;
  sample.lambda = lambda;
  sample.weights.resize(rows);
  const double per_row = lambda / static_cast<double>(rows);
  for (auto& w : sample.weights) w = sample_poisson(rng, per_row);
  return sample;
}

namespace {

std::int64_t weighted_margin(const VotingProfile& profile, std::span<const std::uint64_t> weights,
                             Candidate i, Candidate j) {
  std::int64_t total = 0;
  for (std::size_t r = 0; r < weights.size(); ++r) {
    const auto w = static_cast<std::int64_t>(weights[r]);
    total += profile.prefers(r, i, j) ? w : -w;
  }
  return total;
}

void check_weights(const VotingProfile& profile, std::span<const std::uint64_t> weights) {
  if (weights.size() != profile.row_count())
    throw DomainError("weight vector has " + std::to_string(weights.size()) +
                      " entries but the profile has " + std::to_string(profile.row_count()) +
                      " rows");
}

// True when the weighted commission reproduces `expected` on every pair.
bool reproduces(const VotingProfile& profile, std::span<const std::uint64_t> weights,
                const PreferencePattern& expected) {
  const Candidate m = expected.size();
  for (Candidate i = 1; i <= m; ++i) {
    for (Candidate j = i + 1; j <= m; ++j) {
      const auto d = weighted_margin(profile, weights, i, j);
      if (d == 0 || (d > 0) != expected.beats(i, j)) return false;
    }
  }
  return true;
}

}  // namespace

Outcome induced_outcome(const VotingProfile& profile, std::span<const std::uint64_t> weights) {
  check_weights(profile, weights);
  const auto& cands = profile.candidates();
  const std::size_t m = cands.size();
  if (m < 2 || !is_power_of_two(m) || cands.front() != 1 || cands.back() != m)
    throw DomainError("weighted majority needs rows ranking all of [2^k], k >= 1");

  TieReport ties;
  for (Candidate i = 1; i <= m; ++i) {
    for (Candidate j = i + 1; j <= m; ++j) {
      if (weighted_margin(profile, weights, i, j) == 0) ties.tied_pairs.push_back({i, j});
    }
  }
  if (!ties.tied_pairs.empty()) return ties;
  return PreferencePattern::from_rule(exact_log2(m), [&](Candidate lo, Candidate hi) {
    return weighted_margin(profile, weights, lo, hi) > 0;
  });
}

SimulationReport estimate_mismatch(const SimulationConfig& config, unsigned max_level) {
  if (!(config.lambda > 0.0) || !std::isfinite(config.lambda))
    throw DomainError("lambda must be positive and finite");
  if (config.trials == 0) throw DomainError("trials must be at least 1");
  if (config.n > max_level)
    throw ResourceError("simulation level " + std::to_string(config.n) + " exceeds cap " +
                        std::to_string(max_level));

  const VotingProfile profile = build_profile(config.n, max_level);
  const PreferencePattern expected = eta(config.n, max_level);

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t misses = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      Philox4x32 rng(config.seed, t);
      const auto sample = sample_commission(config.n, config.lambda, rng);
      if (!reproduces(profile, sample.weights, expected)) ++misses;
    }
    return misses;
  };

  unsigned threads = config.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                         : config.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, config.trials));

  SimulationReport report;
  report.trials = config.trials;
  if (threads <= 1) {
    report.mismatches = run_range(0, config.trials);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (config.trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = std::min(config.trials, w * chunk);
      const std::uint64_t end = std::min(config.trials, begin + chunk);
      workers.emplace_back([&, w, begin, end] { partial[w] = run_range(begin, end); });
    }
    for (auto& t : workers) t.join();
    for (auto p : partial) report.mismatches += p;
  }
  report.estimate = static_cast<double>(report.mismatches) / static_cast<double>(report.trials);
  report.ci_halfwidth = wilson_interval(report.mismatches, report.trials, kZ95).halfwidth();
  report.bound = chernoff_bound(config.n, config.lambda);
  return report;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw DomainError("Wilson interval needs at least one trial");
  if (successes > trials) throw DomainError("more successes than trials");
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double centre = (p + z2 / (2.0 * nt)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
  // the endpoints are exact at p = 0 and p = 1; don't let rounding leak in
  const double lower = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double upper = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {lower, upper};
}

double rate_function_zero(double lambda_hi, double lambda_lo) {
  if (!(lambda_lo > 0.0) || !(lambda_hi > lambda_lo) || !std::isfinite(lambda_hi))
    throw DomainError("rate function needs lambda_hi > lambda_lo > 0");
  // (sqrt(hi) - sqrt(lo))^2 written without the cancelling subtraction.
  const double diff = lambda_hi - lambda_lo;
  const double root_sum = std::sqrt(lambda_hi) + std::sqrt(lambda_lo);
  return (diff / root_sum) * (diff / root_sum);
}

double candidate_pairs(unsigned n) { return std::ldexp(1.0, static_cast<int>(n) + 2) * (std::ldexp(1.0, static_cast<int>(n) + 3) - 1.0); }

double pair_rate(unsigned n, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive and finite");
  // A pair is won by 2n + 6 of the 4n + 10 rows at worst.
  const double rows = static_cast<double>(profile_rows(n));
  const double majority = (2.0 * n + 6.0) * lambda / rows;
  const double minority = (2.0 * n + 4.0) * lambda / rows;
  return rate_function_zero(majority, minority);
}

double chernoff_bound(unsigned n, double lambda) {
  return candidate_pairs(n) * std::exp(-pair_rate(n, lambda));
}

double min_lambda_for(unsigned n, double p_target) {
  if (!(p_target > 0.0 && p_target < 1.0)) throw DomainError("target probability must lie in (0, 1)");
  double lambda = std::log(candidate_pairs(n) / p_target) / pair_rate(n, 1.0);
  // The closed form can land one ulp short of the target after rounding.
  while (chernoff_bound(n, lambda) > p_target)
    lambda = std::nextafter(lambda, std::numeric_limits<double>::infinity());
  return lambda;
}

}  // namespace knockout
