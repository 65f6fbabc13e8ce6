#include "knockout/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace knockout {

namespace {

constexpr unsigned kMaxExponent = 30;
// 2^16 candidates is ~2^31 pair bits (256 MiB); anything denser is refused.
constexpr unsigned kMaxDenseExponent = 16;

std::string pair_text(Candidate i, Candidate j) {
  return "{" + std::to_string(i) + ", " + std::to_string(j) + "}";
}

}  // namespace

CandidatePair make_pair_canonical(Candidate i, Candidate j) {
  if (i == j) throw DomainError("self-pair " + pair_text(i, j));
  return i < j ? CandidatePair{i, j} : CandidatePair{j, i};
}

std::uint32_t candidate_count(unsigned exponent) {
  if (exponent > kMaxExponent)
    throw ResourceError("candidate exponent " + std::to_string(exponent) + " exceeds " +
                        std::to_string(kMaxExponent));
  return std::uint32_t{1} << exponent;
}

std::uint64_t pair_count(std::uint64_t m) { return m * (m - 1) / 2; }

bool is_power_of_two(std::uint64_t x) { return std::has_single_bit(x); }

unsigned exact_log2(std::uint64_t x) {
  if (!is_power_of_two(x)) throw DomainError(std::to_string(x) + " is not a power of two");
  return static_cast<unsigned>(std::countr_zero(x));
}

bool is_permutation_of_range(std::span<const Candidate> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Candidate c : values) {
    if (c == 0 || c > values.size() || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PreferencePattern

PreferencePattern::PreferencePattern(unsigned n_exponent)
    : n_exponent_(n_exponent), m_(0) {
  if (n_exponent == 0) throw DomainError("a pattern needs at least two candidates");
  if (n_exponent > kMaxDenseExponent)
    throw ResourceError("dense pattern over 2^" + std::to_string(n_exponent) +
                        " candidates is too large");
  m_ = candidate_count(n_exponent);
  const std::uint64_t pairs = pair_count(m_);
  bits_.assign((pairs + 63) / 64, ~std::uint64_t{0});
  // keep padding bits clear so word-wise equality is exact
  if (pairs % 64 != 0) bits_.back() = (std::uint64_t{1} << (pairs % 64)) - 1;
}

PreferencePattern PreferencePattern::from_rule(unsigned n_exponent, const Rule& rule) {
  PreferencePattern p(n_exponent);
  std::ranges::fill(p.bits_, 0);
  std::uint64_t idx = 0;
  for (Candidate lo = 1; lo <= p.m_; ++lo) {
    for (Candidate hi = lo + 1; hi <= p.m_; ++hi, ++idx) {
      if (rule(lo, hi)) p.bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
  }
  return p;
}

PreferencePattern PreferencePattern::lazy(unsigned n_exponent, Rule rule) {
  if (n_exponent == 0) throw DomainError("a pattern needs at least two candidates");
  PreferencePattern p(1);
  p.n_exponent_ = n_exponent;
  p.m_ = candidate_count(n_exponent);
  p.bits_.clear();
  p.rule_ = std::make_shared<const Rule>(std::move(rule));
  return p;
}

PreferencePattern PreferencePattern::from_edges(
    unsigned n_exponent, std::span<const std::pair<Candidate, Candidate>> edges) {
  PreferencePattern p(n_exponent);
  if (edges.size() != p.edge_count())
    throw DomainError("expected " + std::to_string(p.edge_count()) + " edges, got " +
                      std::to_string(edges.size()));
  std::vector<bool> seen(p.edge_count(), false);
  for (const auto& [winner, loser] : edges) {
    p.check_candidate(winner);
    p.check_candidate(loser);
    const auto pair = make_pair_canonical(winner, loser);
    const auto idx = p.bit_index(pair.first, pair.second);
    if (seen[idx]) throw DomainError("pair " + pair_text(pair.first, pair.second) + " repeated");
    seen[idx] = true;
    p.set_winner(winner, loser);
  }
  return p;
}

void PreferencePattern::check_candidate(Candidate c) const {
  if (c == 0 || c > m_)
    throw DomainError("candidate " + std::to_string(c) + " outside [1, " + std::to_string(m_) +
                      "]");
}

std::uint64_t PreferencePattern::bit_index(Candidate lo, Candidate hi) const {
  // Row-major over canonical pairs: all (1, *) first, then (2, *), ...
  const std::uint64_t a = lo - 1;
  const std::uint64_t b = hi - 1;
  return a * (2 * std::uint64_t{m_} - a - 1) / 2 + (b - a - 1);
}

Side PreferencePattern::orientation(Candidate i, Candidate j) const {
  check_candidate(i);
  check_candidate(j);
  const auto [lo, hi] = make_pair_canonical(i, j);
  bool lo_wins;
  if (rule_) {
    lo_wins = (*rule_)(lo, hi);
  } else {
    const auto idx = bit_index(lo, hi);
    lo_wins = (bits_[idx >> 6] >> (idx & 63)) & 1U;
  }
  const bool i_wins = (i == lo) == lo_wins;
  return i_wins ? Side::Left : Side::Right;
}

void PreferencePattern::set_winner(Candidate winner, Candidate loser) {
  if (rule_) throw DomainError("cannot modify a rule-backed pattern");
  check_candidate(winner);
  check_candidate(loser);
  const auto [lo, hi] = make_pair_canonical(winner, loser);
  const auto idx = bit_index(lo, hi);
  const auto mask = std::uint64_t{1} << (idx & 63);
  if (winner == lo)
    bits_[idx >> 6] |= mask;
  else
    bits_[idx >> 6] &= ~mask;
}

std::vector<std::pair<Candidate, Candidate>> PreferencePattern::edges() const {
  std::vector<std::pair<Candidate, Candidate>> out;
  out.reserve(edge_count());
  for (Candidate i = 1; i <= m_; ++i) {
    for (Candidate j = 1; j <= m_; ++j) {
      if (i != j && beats(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool operator==(const PreferencePattern& a, const PreferencePattern& b) {
  if (a.m_ != b.m_) return false;
  if (a.is_dense() && b.is_dense()) return a.bits_ == b.bits_;
  return pattern_diff(a, b).empty();
}

std::vector<CandidatePair> pattern_diff(const PreferencePattern& a, const PreferencePattern& b) {
  if (a.size() != b.size())
    throw DomainError("pattern sizes differ: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  std::vector<CandidatePair> out;
  const Candidate m = a.size();
  for (Candidate i = 1; i <= m; ++i) {
    for (Candidate j = i + 1; j <= m; ++j) {
      if (a.orientation(i, j) != b.orientation(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bracket

Bracket::Bracket(std::vector<Candidate> positions) : positions_(std::move(positions)) {
  if (positions_.empty() || !is_power_of_two(positions_.size()))
    throw DomainError("bracket length " + std::to_string(positions_.size()) +
                      " is not a power of two");
  if (!is_permutation_of_range(positions_))
    throw DomainError("bracket is not a permutation of [" + std::to_string(positions_.size()) +
                      "]");
}

Bracket Bracket::identity(std::uint32_t m) {
  std::vector<Candidate> v(m);
  std::iota(v.begin(), v.end(), Candidate{1});
  return Bracket(std::move(v));
}

Candidate Bracket::at_slot(std::uint32_t slot) const {
  if (slot == 0 || slot > positions_.size())
    throw DomainError("slot " + std::to_string(slot) + " out of range");
  return positions_[slot - 1];
}

std::uint32_t Bracket::slot_of(Candidate c) const {
  const auto it = std::ranges::find(positions_, c);
  if (it == positions_.end()) throw DomainError("candidate " + std::to_string(c) + " not in bracket");
  return static_cast<std::uint32_t>(it - positions_.begin()) + 1;
}

}  // namespace knockout
