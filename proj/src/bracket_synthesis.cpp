#include "knockout/bracket_synthesis.hpp"

#include <string>

namespace knockout {

namespace {

void check_request(unsigned n, Candidate target) {
  if (n < 3)
    throw DomainError("no pattern lets every candidate win with 2^" + std::to_string(n) +
                      " candidates; need n >= 3");
  if (n > kMaxBracketExponent)
    throw ResourceError("bracket exponent " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxBracketExponent));
  const std::uint32_t m = std::uint32_t{1} << n;
  if (target == 0 || target > m)
    throw DomainError("target " + std::to_string(target) + " outside [1, " + std::to_string(m) +
                      "]");
}

std::vector<Candidate> inductive_positions(unsigned n, Candidate target) {
  if (n == 3) {
    const auto p = base_bracket(target).positions();
    return {p.begin(), p.end()};
  }
  const Candidate half = Candidate{1} << (n - 1);
  Candidate lower_winner;
  Candidate upper_winner;
  if (target <= half) {
    // Lower candidate beats the upper one exactly when the sum is even.
    lower_winner = target;
    upper_winner = half + (target % 2 == 0 ? 2 : 1);
  } else {
    upper_winner = target;
    lower_winner = target % 2 == 0 ? 1 : 2;
  }
  auto out = inductive_positions(n - 1, lower_winner);
  const auto upper = inductive_positions(n - 1, upper_winner - half);
  out.reserve(out.size() + upper.size());
  for (Candidate c : upper) out.push_back(c + half);
  return out;
}

}  // namespace

const std::array<Bracket, 8>& base_brackets() {
  static const std::array<Bracket, 8> kBrackets{
      Bracket({1, 2, 3, 4, 5, 6, 7, 8}), Bracket({2, 3, 4, 1, 6, 7, 8, 5}),
      Bracket({3, 6, 4, 1, 8, 2, 5, 7}), Bracket({4, 1, 8, 2, 5, 6, 7, 3}),
      Bracket({5, 6, 7, 8, 2, 3, 4, 1}), Bracket({6, 7, 8, 5, 1, 2, 3, 4}),
      Bracket({7, 8, 1, 2, 3, 5, 6, 4}), Bracket({8, 1, 5, 6, 2, 3, 7, 4}),
  };
  return kBrackets;
}

const Bracket& base_bracket(Candidate k) {
  if (k == 0 || k > 8) throw DomainError("base bracket index " + std::to_string(k) + " outside [1, 8]");
  return base_brackets()[k - 1];
}

Bracket compose_brackets(const Bracket& lower, const Bracket& upper) {
  if (lower.size() != upper.size())
    throw DomainError("cannot compose brackets of sizes " + std::to_string(lower.size()) + " and " +
                      std::to_string(upper.size()));
  const Candidate shift = lower.size();
  std::vector<Candidate> out(lower.positions().begin(), lower.positions().end());
  out.reserve(2 * shift);
  for (Candidate c : upper.positions()) out.push_back(c + shift);
  return Bracket(std::move(out));
}

Bracket bracket_for_winner_inductive(unsigned n, Candidate target) {
  check_request(n, target);
  return Bracket(inductive_positions(n, target));
}

Bracket bracket_for_winner_explicit(unsigned n, Candidate target) {
  check_request(n, target);
  const std::uint32_t m = std::uint32_t{1} << n;
  const auto target_class = ClassIndex::of(target);
  const bool even = target % 2 == 0;
  const Bracket& before = base_bracket(even ? 1 : 2);
  const Bracket& after = base_bracket(even ? 2 : 1);
  const Bracket& own = base_bracket(target - 8 * target_class.offset());

  std::vector<Candidate> out(m);
  for (std::uint32_t slot = 1; slot <= m; ++slot) {
    const auto cls = ClassIndex::of(slot);
    const std::uint32_t shift = 8 * cls.offset();
    const Bracket& row = cls == target_class ? own : (slot < target ? before : after);
    out[slot - 1] = row.at_slot(slot - shift) + shift;
  }
  return Bracket(std::move(out));
}

bool check_top_seeds(const Bracket& bracket) {
  const std::uint32_t m = bracket.size();
  if (m < 16) throw DomainError("top-seed check needs at least 16 candidates");
  const std::uint32_t half = m / 2;
  return bracket.slot_of(1) <= half && bracket.slot_of(half + 1) > half;
}

}  // namespace knockout
