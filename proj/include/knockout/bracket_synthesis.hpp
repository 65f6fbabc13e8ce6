#pragma once

// Brackets that hand the title to a chosen candidate under the eta family.
//
// A field of 2^n candidates (n >= 3) is played under eta(n - 3). Two routes
// are provided: the inductive one splits the field in halves and recurses,
// the explicit one fills every block of eight slots from the base table.

#include <array>

#include "knockout/core.hpp"
#include "knockout/pattern_builder.hpp"

namespace knockout {

/// Largest field exponent accepted by the synthesis routines.
inline constexpr unsigned kMaxBracketExponent = kDefaultMaxEtaLevel + 3;

/// Block of eight consecutive candidates {8(q-1)+1, ..., 8q}.
struct ClassIndex {
  std::uint32_t q = 1;

  static ClassIndex of(Candidate c) { return ClassIndex{(c + 7) / 8}; }
  std::uint32_t offset() const { return q - 1; }

  friend bool operator==(const ClassIndex&, const ClassIndex&) = default;
};

/// The eight base brackets over [8]; entry k-1 is won by candidate k under
/// eta_base().
const std::array<Bracket, 8>& base_brackets();

/// Base bracket won by k (1-based).
const Bracket& base_bracket(Candidate k);

/// Lower bracket in slots 1..2^n, upper bracket shifted by 2^n after it.
Bracket compose_brackets(const Bracket& lower, const Bracket& upper);

/// Halving construction: the target wins its half while a companion of the
/// right parity wins the other half and then loses the final.
Bracket bracket_for_winner_inductive(unsigned n, Candidate target);

/// Closed-form construction: the target's block uses its base bracket, blocks
/// before it use base bracket 1 (even target) or 2 (odd target), blocks after
/// it the other one. Block membership of every slot is preserved.
Bracket bracket_for_winner_explicit(unsigned n, Candidate target);

/// Candidate 1 sits in the first half of the board and candidate 2^(n-1)+1 in
/// the second half, so the two seeds can only meet in the final. n >= 4.
bool check_top_seeds(const Bracket& bracket);

}  // namespace knockout
