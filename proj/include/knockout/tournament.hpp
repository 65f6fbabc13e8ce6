#pragma once

// Knockout tournament evaluation and exhaustive oracles over brackets.

#include <set>
#include <vector>

#include "knockout/core.hpp"

namespace knockout {

/// Surviving candidates in board order at the start of a round.
class Lineup {
 public:
  explicit Lineup(std::vector<Candidate> entrants);
  explicit Lineup(const Bracket& bracket);

  std::span<const Candidate> entrants() const { return entrants_; }
  std::size_t size() const { return entrants_.size(); }

  friend bool operator==(const Lineup&, const Lineup&) = default;

 private:
  std::vector<Candidate> entrants_;
};

struct Match {
  unsigned round = 0;  // 1-based
  Candidate first = 0;
  Candidate second = 0;
  Candidate winner = 0;

  friend bool operator==(const Match&, const Match&) = default;
};

/// Pairs entrants (1,2), (3,4), ... and keeps each pair's winner in order.
Lineup play_round(const PreferencePattern& pattern, const Lineup& lineup);

/// Champion of the tournament seeded by `bracket`.
Candidate winner(const PreferencePattern& pattern, const Bracket& bracket);

/// Every match of the tournament, round by round, in board order.
std::vector<Match> match_log(const PreferencePattern& pattern, const Bracket& bracket);

/// Largest candidate count winner_set will enumerate (8! brackets).
inline constexpr std::uint32_t kMaxEnumeratedCandidates = 8;

/// Candidates that win under at least one bracket, by trying all m! brackets.
std::set<Candidate> winner_set(const PreferencePattern& pattern);

/// Same image as winner_set, enumerating one bracket per tournament tree.
///
/// Swapping the two halves of any sub-bracket leaves every match unchanged,
/// so only brackets whose left half holds the smaller minimum at every node
/// are played: m! / 2^(m-1) of them.
std::set<Candidate> winner_set_reduced(const PreferencePattern& pattern);

struct CoverageReport {
  unsigned n = 0;                      // 2^n candidates
  std::uint64_t patterns_checked = 0;  // 2^C(2^n, 2)
  std::uint32_t max_coverage = 0;      // largest |winner_set| seen
  std::uint32_t candidates = 0;
  bool full_coverage_found = false;
};

/// Exhausts every strict pattern on 2^n candidates (n in {1, 2}) and records
/// the largest winner set; full coverage is never reached.
CoverageReport coverage_impossible(unsigned n);

}  // namespace knockout
