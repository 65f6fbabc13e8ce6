#pragma once

#include "knockout/core.hpp"

namespace knockout {

/// Deepest recursion level built by default; eta(12) spans 32,768 candidates.
inline constexpr unsigned kDefaultMaxEtaLevel = 12;

/// Level-n patterns with more candidates than this are rule-backed rather
/// than stored bit by bit.
inline constexpr std::uint32_t kDenseEtaLimit = 1024;

/// The 8-candidate base pattern: every candidate can win some bracket.
PreferencePattern eta_base();

/// The level-n pattern over 2^(n+3) candidates.
///
/// Each half of [2^(n+3)] carries a copy of level n-1 (the upper copy shifted
/// by 2^(n+2)). A cross pair (i lower, j upper) is won by i when i + j is even
/// and by j when i + j is odd.
PreferencePattern eta(unsigned n, unsigned max_level = kDefaultMaxEtaLevel);

/// Direct orientation query for the level-n pattern without building it.
/// True when i beats j.
bool eta_beats(unsigned n, Candidate i, Candidate j);

}  // namespace knockout
