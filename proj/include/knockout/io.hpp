#pragma once

// File formats:
//   pattern JSON  {"n_exponent": n, "edges": [[i, j], ...]}, [i, j] meaning
//                 i beats j, edges sorted, exactly m(m-1)/2 of them
//   bracket JSON  [c1, c2, ..., cm]
//   profile CSV   one voter per line, comma-separated candidates, no header

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "knockout/core.hpp"
#include "knockout/profile.hpp"

namespace knockout::io {

nlohmann::json pattern_to_json(const PreferencePattern& pattern);
PreferencePattern pattern_from_json(const nlohmann::json& doc);

nlohmann::json bracket_to_json(const Bracket& bracket);
Bracket bracket_from_json(const nlohmann::json& doc);

void write_profile_csv(std::ostream& out, const VotingProfile& profile);
VotingProfile read_profile_csv(std::istream& in);

std::string profile_to_csv(const VotingProfile& profile);
VotingProfile profile_from_csv(const std::string& text);

}  // namespace knockout::io
