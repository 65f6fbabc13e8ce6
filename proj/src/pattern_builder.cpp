#include "knockout/pattern_builder.hpp"

#include <array>
#include <string>
#include <utility>

namespace knockout {

namespace {

// (winner, loser) for all 28 pairs of the base pattern.
constexpr std::array<std::pair<Candidate, Candidate>, 28> kBaseEdges{{
    {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 6}, {2, 7},
    {3, 4}, {3, 5}, {3, 6}, {3, 8}, {4, 1}, {4, 5}, {4, 8},
    {5, 2}, {5, 6}, {5, 7}, {6, 1}, {6, 4}, {6, 7}, {6, 8},
    {7, 1}, {7, 3}, {7, 4}, {7, 8}, {8, 1}, {8, 2}, {8, 5},
}};

// base_lo_wins[lo][hi] for 1 <= lo < hi <= 8.
constexpr auto kBaseTable = [] {
  std::array<std::array<bool, 9>, 9> t{};
  for (const auto& [w, l] : kBaseEdges) t[w][l] = true;
  return t;
}();

void check_pair(unsigned n, Candidate i, Candidate j) {
  const std::uint64_t m = std::uint64_t{1} << (n + 3);
  if (i == j) throw DomainError("self-pair {" + std::to_string(i) + ", " + std::to_string(i) + "}");
  if (i == 0 || j == 0 || i > m || j > m)
    throw DomainError("candidate outside [1, " + std::to_string(m) + "]");
}

// Walks down the halving recursion until the pair is either a cross pair at
// some level or lies inside one 8-candidate block.
bool beats_unchecked(unsigned n, Candidate i, Candidate j) {
  for (unsigned level = n; level > 0; --level) {
    const Candidate half = Candidate{1} << (level + 2);
    const bool i_low = i <= half;
    const bool j_low = j <= half;
    if (i_low != j_low) {
      const bool lower_wins = (i + j) % 2 == 0;
      return i_low == lower_wins;
    }
    if (!i_low) {
      i -= half;
      j -= half;
    }
  }
  return kBaseTable[i][j];
}

}  // namespace

PreferencePattern eta_base() { return PreferencePattern::from_edges(3, kBaseEdges); }

bool eta_beats(unsigned n, Candidate i, Candidate j) {
  check_pair(n, i, j);
  return beats_unchecked(n, i, j);
}

PreferencePattern eta(unsigned n, unsigned max_level) {
  if (n > max_level)
    throw ResourceError("eta level " + std::to_string(n) + " exceeds cap " +
                        std::to_string(max_level));
  if (n > 27) throw ResourceError("eta level " + std::to_string(n) + " is not addressable");
  const unsigned exponent = n + 3;
  if ((std::uint64_t{1} << exponent) > kDenseEtaLimit)
    return PreferencePattern::lazy(exponent,
                                   [n](Candidate lo, Candidate hi) { return beats_unchecked(n, lo, hi); });

  // Bottom-up: level k is assembled from level k-1 and the parity rule.
  PreferencePattern current = eta_base();
  for (unsigned level = 1; level <= n; ++level) {
    const Candidate half = Candidate{1} << (level + 2);
    const PreferencePattern prev = std::move(current);
    current = PreferencePattern::from_rule(level + 3, [&prev, half](Candidate lo, Candidate hi) {
      if (hi <= half) return prev.beats(lo, hi);
      if (lo > half) return prev.beats(lo - half, hi - half);
      return (lo + hi) % 2 == 0;
    });
  }
  return current;
}

}  // namespace knockout
