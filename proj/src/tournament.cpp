#include "knockout/tournament.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace knockout {

Lineup::Lineup(std::vector<Candidate> entrants) : entrants_(std::move(entrants)) {
  if (entrants_.empty() || !is_power_of_two(entrants_.size()))
    throw DomainError("lineup length " + std::to_string(entrants_.size()) +
                      " is not a power of two");
  auto sorted = entrants_;
  std::ranges::sort(sorted);
  if (std::ranges::adjacent_find(sorted) != sorted.end())
    throw DomainError("lineup has a repeated candidate");
}

Lineup::Lineup(const Bracket& bracket)
    : entrants_(bracket.positions().begin(), bracket.positions().end()) {}

Lineup play_round(const PreferencePattern& pattern, const Lineup& lineup) {
  const auto in = lineup.entrants();
  if (in.size() < 2) throw DomainError("a round needs at least two entrants");
  std::vector<Candidate> out;
  out.reserve(in.size() / 2);
  for (std::size_t k = 0; k < in.size(); k += 2) out.push_back(pattern.winner_of(in[k], in[k + 1]));
  return Lineup(std::move(out));
}

namespace {

void check_sizes(const PreferencePattern& pattern, const Bracket& bracket) {
  if (pattern.size() != bracket.size())
    throw DomainError("bracket has " + std::to_string(bracket.size()) +
                      " slots but the pattern has " + std::to_string(pattern.size()) +
                      " candidates");
}

// In-place tournament over a scratch buffer; no validation.
Candidate play_out(const PreferencePattern& pattern, std::vector<Candidate>& slots) {
  for (std::size_t len = slots.size(); len > 1; len /= 2) {
    for (std::size_t k = 0; k < len / 2; ++k)
      slots[k] = pattern.winner_of(slots[2 * k], slots[2 * k + 1]);
  }
  return slots.front();
}

void check_enumerable(const PreferencePattern& pattern) {
  if (pattern.size() > kMaxEnumeratedCandidates)
    throw ResourceError("winner_set enumerates at most " +
                        std::to_string(kMaxEnumeratedCandidates) +
                        " candidates; use bracket synthesis for larger fields");
}

// Emits every canonical bracket of `pool`: at each split the half holding the
// pool minimum goes left.
using BracketVisitor = std::function<void(std::vector<Candidate>&)>;

void canonical_brackets(std::vector<Candidate> pool, std::vector<Candidate>& prefix,
                        const BracketVisitor& visit) {
  if (pool.size() == 1) {
    prefix.push_back(pool.front());
    visit(prefix);
    prefix.pop_back();
    return;
  }
  std::ranges::sort(pool);
  const std::size_t half = pool.size() / 2;
  // Choose the rest of the left half from pool[1..]; pool[0] is always left.
  std::vector<bool> pick(pool.size() - 1, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(half - 1), true);
  do {
    std::vector<Candidate> left{pool.front()};
    std::vector<Candidate> right;
    for (std::size_t k = 1; k < pool.size(); ++k) (pick[k - 1] ? left : right).push_back(pool[k]);
    // Enumerate left subtrees, then right subtrees for each.
    canonical_brackets(left, prefix, [&](std::vector<Candidate>& with_left) {
      canonical_brackets(right, with_left, visit);
    });
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

Candidate winner(const PreferencePattern& pattern, const Bracket& bracket) {
  check_sizes(pattern, bracket);
  std::vector<Candidate> slots(bracket.positions().begin(), bracket.positions().end());
  return play_out(pattern, slots);
}

std::vector<Match> match_log(const PreferencePattern& pattern, const Bracket& bracket) {
  check_sizes(pattern, bracket);
  std::vector<Match> log;
  Lineup lineup(bracket);
  for (unsigned round = 1; lineup.size() > 1; ++round) {
    const auto in = lineup.entrants();
    for (std::size_t k = 0; k < in.size(); k += 2)
      log.push_back({round, in[k], in[k + 1], pattern.winner_of(in[k], in[k + 1])});
    lineup = play_round(pattern, lineup);
  }
  return log;
}

std::set<Candidate> winner_set(const PreferencePattern& pattern) {
  check_enumerable(pattern);
  std::vector<Candidate> perm(pattern.size());
  std::iota(perm.begin(), perm.end(), Candidate{1});
  std::vector<Candidate> scratch(perm.size());
  std::set<Candidate> winners;
  do {
    std::ranges::copy(perm, scratch.begin());
    winners.insert(play_out(pattern, scratch));
  } while (std::ranges::next_permutation(perm).found);
  return winners;
}

std::set<Candidate> winner_set_reduced(const PreferencePattern& pattern) {
  check_enumerable(pattern);
  std::vector<Candidate> pool(pattern.size());
  std::iota(pool.begin(), pool.end(), Candidate{1});
  std::set<Candidate> winners;
  std::vector<Candidate> prefix;
  std::vector<Candidate> scratch;
  canonical_brackets(pool, prefix, [&](std::vector<Candidate>& bracket) {
    scratch = bracket;
    winners.insert(play_out(pattern, scratch));
  });
  return winners;
}

CoverageReport coverage_impossible(unsigned n) {
  if (n != 1 && n != 2)
    throw DomainError("coverage_impossible covers n = 1 and n = 2 only, got " + std::to_string(n));
  CoverageReport report;
  report.n = n;
  report.candidates = candidate_count(n);
  const auto pairs = pair_count(report.candidates);
  report.patterns_checked = std::uint64_t{1} << pairs;
  for (std::uint64_t code = 0; code < report.patterns_checked; ++code) {
    std::uint64_t bit = 0;
    const auto pattern = PreferencePattern::from_rule(n, [&](Candidate, Candidate) {
      return ((code >> bit++) & 1U) != 0;
    });
    const auto coverage = static_cast<std::uint32_t>(winner_set(pattern).size());
    report.max_coverage = std::max(report.max_coverage, coverage);
    if (coverage == report.candidates) report.full_coverage_found = true;
  }
  return report;
}

}  // namespace knockout
