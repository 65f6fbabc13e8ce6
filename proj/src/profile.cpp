#include "knockout/profile.hpp"

#include <algorithm>
#include <string>

namespace knockout {

namespace {

std::string pair_text(CandidatePair p) {
  return "{" + std::to_string(p.first) + ", " + std::to_string(p.second) + "}";
}

std::vector<Candidate> concat(std::initializer_list<std::span<const Candidate>> parts) {
  std::vector<Candidate> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

PreferenceList::PreferenceList(std::vector<Candidate> ranking) : ranking_(std::move(ranking)) {
  auto sorted = ranking_;
  std::ranges::sort(sorted);
  if (!sorted.empty() && sorted.front() == 0)
    throw DomainError("candidate 0 in a preference list; candidates are 1-based");
  if (std::ranges::adjacent_find(sorted) != sorted.end())
    throw DomainError("preference list ranks a candidate twice");
}

PreferenceList reverse(const PreferenceList& list) {
  return PreferenceList(reverse(list.ranking()));
}

std::vector<Candidate> reverse(std::span<const Candidate> block) {
  return {block.rbegin(), block.rend()};
}

// ---------------------------------------------------------------------------
// VotingProfile

VotingProfile::VotingProfile(std::vector<PreferenceList> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) return;
  const auto first = rows_.front().ranking();
  candidates_.assign(first.begin(), first.end());
  std::ranges::sort(candidates_);
  for (std::size_t r = 1; r < rows_.size(); ++r) {
    auto other = std::vector<Candidate>(rows_[r].ranking().begin(), rows_[r].ranking().end());
    std::ranges::sort(other);
    if (other != candidates_)
      throw DomainError("row " + std::to_string(r + 1) + " ranks a different candidate set");
  }
  stride_ = candidates_.empty() ? 1 : std::size_t{candidates_.back()} + 1;
  position_.assign(rows_.size() * stride_, kAbsent);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto ranking = rows_[r].ranking();
    for (std::uint32_t k = 0; k < ranking.size(); ++k) position_[r * stride_ + ranking[k]] = k;
  }
}

bool VotingProfile::prefers(std::size_t row, Candidate i, Candidate j) const {
  return rank(row, i) < rank(row, j);
}

VotingProfile glue(std::span<const VotingProfile> parts) {
  std::vector<PreferenceList> rows;
  for (const auto& part : parts) rows.insert(rows.end(), part.rows().begin(), part.rows().end());
  return VotingProfile(std::move(rows));
}

std::int64_t margin(const VotingProfile& profile, Candidate i, Candidate j) {
  if (i == j) throw DomainError("margin of a candidate against itself");
  if (!profile.contains(i) || !profile.contains(j))
    throw DomainError("margin queried for a candidate the profile does not rank");
  std::int64_t total = 0;
  for (std::size_t r = 0; r < profile.row_count(); ++r) total += profile.prefers(r, i, j) ? 1 : -1;
  return total;
}

VotingProfile shift(const VotingProfile& profile, Candidate offset) {
  std::vector<PreferenceList> rows;
  rows.reserve(profile.row_count());
  for (const auto& row : profile.rows()) {
    std::vector<Candidate> shifted(row.ranking().begin(), row.ranking().end());
    for (auto& c : shifted) c += offset;
    rows.emplace_back(std::move(shifted));
  }
  return VotingProfile(std::move(rows));
}

VotingProfile interleave(std::span<const VotingProfile> blocks) {
  if (blocks.size() < 2) throw DomainError("interleave needs at least two profiles");
  const std::size_t rows = blocks.front().row_count();
  if (rows == 0 || rows % 2 != 0)
    throw DomainError("interleave needs a common even, non-zero row count");
  std::vector<Candidate> seen;
  for (const auto& block : blocks) {
    if (block.row_count() != rows)
      throw DomainError("interleave needs equal row counts, got " + std::to_string(rows) + " and " +
                        std::to_string(block.row_count()));
    seen.insert(seen.end(), block.candidates().begin(), block.candidates().end());
  }
  std::ranges::sort(seen);
  if (std::ranges::adjacent_find(seen) != seen.end())
    throw DomainError("interleave needs pairwise disjoint candidate sets");

  std::vector<PreferenceList> out;
  out.reserve(rows);
  for (std::size_t s = 0; s < rows; ++s) {
    std::vector<Candidate> row;
    row.reserve(seen.size());
    // s is 0-based: even s is an odd (1-based) row.
    auto append = [&](const VotingProfile& b) {
      const auto r = b.rows()[s].ranking();
      row.insert(row.end(), r.begin(), r.end());
    };
    if (s % 2 == 0) {
      for (const auto& b : blocks) append(b);
    } else {
      for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) append(*it);
    }
    out.emplace_back(std::move(row));
  }
  return VotingProfile(std::move(out));
}

ParityBlocks parity_blocks(unsigned n) {
  const Candidate m = candidate_count(n + 3);
  const Candidate half = m / 2;
  ParityBlocks b;
  for (Candidate u = 1; u <= m; ++u) {
    const bool lower = u <= half;
    const bool odd = u % 2 == 1;
    auto& block = odd ? (lower ? b.lower_odd : b.upper_odd) : (lower ? b.lower_even : b.upper_even);
    block.push_back(u);
  }
  return b;
}

std::array<PreferenceList, 4> em_gadget(unsigned n) {
  const auto b = parity_blocks(n);
  const auto a1r = reverse(b.lower_odd);
  const auto b1r = reverse(b.upper_odd);
  const auto a2r = reverse(b.lower_even);
  const auto b2r = reverse(b.upper_even);
  return {
      PreferenceList(concat({b.lower_odd, b.upper_odd, b.lower_even, b.upper_even})),
      PreferenceList(concat({a2r, b2r, a1r, b1r})),
      PreferenceList(concat({b.upper_odd, b.lower_even, b.upper_even, b.lower_odd})),
      PreferenceList(concat({b2r, a1r, b1r, a2r})),
  };
}

VotingProfile stearns_base() {
  static const std::vector<std::vector<Candidate>> kRows{
      {8, 1, 5, 2, 3, 4, 6, 7}, {2, 7, 6, 4, 1, 3, 5, 8}, {2, 7, 3, 6, 4, 5, 8, 1},
      {4, 1, 3, 8, 5, 6, 7, 2}, {3, 5, 2, 6, 7, 1, 4, 8}, {6, 8, 4, 1, 5, 7, 2, 3},
      {6, 7, 3, 4, 8, 1, 2, 5}, {8, 5, 2, 7, 1, 4, 3, 6}, {7, 8, 5, 6, 3, 4, 1, 2},
      {1, 2, 3, 4, 5, 6, 7, 8},
  };
  std::vector<PreferenceList> rows;
  for (const auto& r : kRows) rows.emplace_back(r);
  return VotingProfile(std::move(rows));
}

VotingProfile build_profile(unsigned n, unsigned max_level) {
  if (n > max_level)
    throw ResourceError("profile level " + std::to_string(n) + " exceeds cap " +
                        std::to_string(max_level));
  VotingProfile current = stearns_base();
  for (unsigned level = 1; level <= n; ++level) {
    const Candidate half = Candidate{1} << (level + 2);
    const auto gadget = em_gadget(level);
    const std::array<VotingProfile, 2> halves{current, shift(current, half)};
    const std::array<VotingProfile, 2> parts{
        VotingProfile(std::vector<PreferenceList>(gadget.begin(), gadget.end())),
        interleave(halves)};
    current = glue(parts);
  }
  return current;
}

VotingProfile trim(const VotingProfile& profile) {
  if (profile.empty()) throw DomainError("cannot trim an empty profile");
  return VotingProfile(std::vector<PreferenceList>(profile.rows().begin(), profile.rows().end() - 1));
}

TieError::TieError(CandidatePair pair)
    : DomainError("tie on pair " + pair_text(pair)), pair_(pair) {}

namespace {

unsigned complete_exponent(const VotingProfile& profile) {
  if (profile.empty()) throw DomainError("majority graph of an empty profile");
  const auto& cands = profile.candidates();
  const std::size_t m = cands.size();
  if (m < 2 || !is_power_of_two(m) || cands.front() != 1 || cands.back() != m)
    throw DomainError("majority graph needs rows ranking all of [2^k], k >= 1");
  return exact_log2(m);
}

}  // namespace

std::optional<CandidatePair> first_tie(const VotingProfile& profile) {
  const auto& cands = profile.candidates();
  for (std::size_t a = 0; a < cands.size(); ++a) {
    for (std::size_t b = a + 1; b < cands.size(); ++b) {
      if (margin(profile, cands[a], cands[b]) == 0) return CandidatePair{cands[a], cands[b]};
    }
  }
  return std::nullopt;
}

PreferencePattern majority_graph(const VotingProfile& profile) {
  const unsigned exponent = complete_exponent(profile);
  return PreferencePattern::from_rule(exponent, [&](Candidate lo, Candidate hi) {
    const auto d = margin(profile, lo, hi);
    if (d == 0) throw TieError({lo, hi});
    return d > 0;
  });
}

}  // namespace knockout
