#pragma once

// Voting profiles realising the eta family, and majority-graph extraction.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knockout/core.hpp"
#include "knockout/pattern_builder.hpp"

namespace knockout {

/// One voter's ranking, most preferred first. Entries are distinct; the
/// candidate set need not be [m] (blocks of an interleave are not).
class PreferenceList {
 public:
  explicit PreferenceList(std::vector<Candidate> ranking);

  std::span<const Candidate> ranking() const { return ranking_; }
  std::size_t size() const { return ranking_.size(); }

  friend bool operator==(const PreferenceList&, const PreferenceList&) = default;

 private:
  std::vector<Candidate> ranking_;
};

/// Components in reverse order.
PreferenceList reverse(const PreferenceList& list);
std::vector<Candidate> reverse(std::span<const Candidate> block);

/// Ordered rows over a common candidate set.
///
/// Keeps a position table (row, candidate) -> rank so pair queries are O(1)
/// per row.
class VotingProfile {
 public:
  VotingProfile() = default;
  explicit VotingProfile(std::vector<PreferenceList> rows);

  std::span<const PreferenceList> rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// Sorted candidate set shared by all rows.
  const std::vector<Candidate>& candidates() const { return candidates_; }

  /// True when row `row` ranks i above j.
  bool prefers(std::size_t row, Candidate i, Candidate j) const;

  bool contains(Candidate c) const { return c < stride_ && position_[c] != kAbsent; }

  friend bool operator==(const VotingProfile& a, const VotingProfile& b) { return a.rows_ == b.rows_; }

 private:
  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};

  std::uint32_t rank(std::size_t row, Candidate c) const { return position_[row * stride_ + c]; }

  std::vector<PreferenceList> rows_;
  std::vector<Candidate> candidates_;
  std::size_t stride_ = 0;              // max label + 1
  std::vector<std::uint32_t> position_;  // row-major, indexed by label
};

/// The vertical glue of several profiles over the same candidates.
VotingProfile glue(std::span<const VotingProfile> parts);

/// Signed margin: rows ranking i above j minus rows ranking j above i.
std::int64_t margin(const VotingProfile& profile, Candidate i, Candidate j);

/// Every entry increased by `offset`.
VotingProfile shift(const VotingProfile& profile, Candidate offset);

/// Margin-preserving merge of profiles on disjoint candidate sets with a common
/// even row count: odd rows concatenate blocks first to last, even rows last
/// to first, so every cross-block margin cancels.
VotingProfile interleave(std::span<const VotingProfile> blocks);

/// Parity split of [2^(n+3)]; every block is ascending.
struct ParityBlocks {
  std::vector<Candidate> lower_odd;   // A1
  std::vector<Candidate> upper_odd;   // B1
  std::vector<Candidate> lower_even;  // A2
  std::vector<Candidate> upper_even;  // B2
};

ParityBlocks parity_blocks(unsigned n);

/// The four-voter gadget over [2^(n+3)] producing exactly the cross-half
/// arrows of eta(n): the first two voters the even-sum arrows pointing
/// lower -> upper, the last two the odd-sum arrows pointing upper -> lower.
std::array<PreferenceList, 4> em_gadget(unsigned n);

/// Ten-row profile over [8] whose majority graph is eta_base().
VotingProfile stearns_base();

/// R_n: the gadget rows of level n followed by R_{n-1} interleaved with its
/// copy shifted by 2^(n+2). 4n + 10 rows over [2^(n+3)].
VotingProfile build_profile(unsigned n, unsigned max_level = kDefaultMaxEtaLevel);

/// Drops the last row.
VotingProfile trim(const VotingProfile& profile);

/// Majority-graph failure: a pair with zero margin.
class TieError : public DomainError {
 public:
  explicit TieError(CandidatePair pair);
  CandidatePair pair() const { return pair_; }

 private:
  CandidatePair pair_;
};

/// Orients every pair by majority. Rows must rank all of [m], m = 2^k >= 2.
/// Throws TieError naming the lexicographically first tied pair.
PreferencePattern majority_graph(const VotingProfile& profile);

/// First tied pair, if any, without building the pattern.
std::optional<CandidatePair> first_tie(const VotingProfile& profile);

}  // namespace knockout
