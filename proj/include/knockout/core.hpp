#pragma once

// Shared domain types: candidates, strict preference patterns, brackets.
//
// Candidates are 1-based throughout. A pattern over m = 2^n candidates stores
// one orientation per canonical pair (i < j); queries with i > j are answered
// by antisymmetry, so a pattern cannot represent a tie.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knockout {

using Candidate = std::uint32_t;

/// Precondition violations: bad indices, size mismatches, malformed input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requests beyond a configured size cap (enumeration limits, recursion depth).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Winner of an unordered pair {i, j} as seen from (i, j): Left means i wins.
enum class Side : std::uint8_t { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Unordered pair stored canonically with first < second.
struct CandidatePair {
  Candidate first = 0;
  Candidate second = 0;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
  friend auto operator<=>(const CandidatePair&, const CandidatePair&) = default;
};

CandidatePair make_pair_canonical(Candidate i, Candidate j);

/// 2^exponent, rejecting exponents that do not fit a candidate index.
std::uint32_t candidate_count(unsigned exponent);

/// Number of unordered pairs over m candidates, m(m-1)/2.
std::uint64_t pair_count(std::uint64_t m);

/// Complete strict orientation of all pairs of [2^n].
///
/// Dense patterns keep one bit per canonical pair. Rule-backed patterns answer
/// queries from a function and store nothing; they are used for very large
/// structured patterns whose orientation is cheap to recompute.
class PreferencePattern {
 public:
  /// Returns true when the smaller candidate of a canonical pair wins.
  using Rule = std::function<bool(Candidate lo, Candidate hi)>;

  /// All pairs oriented toward the smaller index (1 beats everybody).
  explicit PreferencePattern(unsigned n_exponent);

  /// Builds a dense pattern by evaluating `rule` on every canonical pair.
  static PreferencePattern from_rule(unsigned n_exponent, const Rule& rule);

  /// Wraps `rule` without materialising it.
  static PreferencePattern lazy(unsigned n_exponent, Rule rule);

  /// Builds a pattern from (winner, loser) edges; every pair exactly once.
  static PreferencePattern from_edges(
      unsigned n_exponent, std::span<const std::pair<Candidate, Candidate>> edges);

  unsigned n_exponent() const { return n_exponent_; }
  std::uint32_t size() const { return m_; }
  bool is_dense() const { return rule_ == nullptr; }

  /// Winner of {i, j} as seen from (i, j).
  Side orientation(Candidate i, Candidate j) const;

  /// The winning candidate of {i, j}.
  Candidate winner_of(Candidate i, Candidate j) const {
    return orientation(i, j) == Side::Left ? i : j;
  }

  bool beats(Candidate i, Candidate j) const { return orientation(i, j) == Side::Left; }

  /// Sets i ▷ j. Only valid on dense patterns; used while building.
  void set_winner(Candidate winner, Candidate loser);

  /// Number of stored orientations, m(m-1)/2.
  std::uint64_t edge_count() const { return pair_count(m_); }

  /// All (winner, loser) edges sorted lexicographically.
  std::vector<std::pair<Candidate, Candidate>> edges() const;

  friend bool operator==(const PreferencePattern& a, const PreferencePattern& b);

 private:
  void check_candidate(Candidate c) const;
  std::uint64_t bit_index(Candidate lo, Candidate hi) const;

  unsigned n_exponent_;
  std::uint32_t m_;
  std::vector<std::uint64_t> bits_;  // bit set: lower index wins
  std::shared_ptr<const Rule> rule_;
};

/// Pairs on which two patterns over the same m disagree, ordered by (min, max).
std::vector<CandidatePair> pattern_diff(const PreferencePattern& a, const PreferencePattern& b);

/// A permutation of [m] assigning candidates to board slots. Slot ℓ (1-based)
/// is positions()[ℓ - 1]; slots 2k-1 and 2k meet in the first round.
class Bracket {
 public:
  explicit Bracket(std::vector<Candidate> positions);

  static Bracket identity(std::uint32_t m);

  std::span<const Candidate> positions() const { return positions_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(positions_.size()); }

  /// Candidate at 1-based slot ℓ.
  Candidate at_slot(std::uint32_t slot) const;

  /// 1-based slot holding candidate c.
  std::uint32_t slot_of(Candidate c) const;

  friend bool operator==(const Bracket&, const Bracket&) = default;

 private:
  std::vector<Candidate> positions_;
};

/// True when `values` is a permutation of [values.size()].
bool is_permutation_of_range(std::span<const Candidate> values);

bool is_power_of_two(std::uint64_t x);

/// log2 of a power of two.
unsigned exact_log2(std::uint64_t x);

}  // namespace knockout
