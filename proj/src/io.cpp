#include "knockout/io.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

namespace knockout::io {

namespace {

Candidate parse_candidate(std::string_view field, std::size_t line) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
    field.remove_suffix(1);
  Candidate value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
    throw DomainError("profile line " + std::to_string(line) + ": bad candidate '" +
                      std::string(field) + "'");
  return value;
}

// Literal ints arrive signed, parsed ones unsigned; accept both.
bool is_positive_u32(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>() >= 1 && v.get<std::uint64_t>() <= UINT32_MAX;
  return v.is_number_integer() && v.get<std::int64_t>() >= 1 && v.get<std::int64_t>() <= UINT32_MAX;
}

Candidate json_candidate(const nlohmann::json& v) {
  if (!is_positive_u32(v)) throw DomainError("candidate indices must be positive integers");
  return static_cast<Candidate>(v.get<std::uint64_t>());
}

}  // namespace

nlohmann::json pattern_to_json(const PreferencePattern& pattern) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [w, l] : pattern.edges()) edges.push_back({w, l});
  return {{"n_exponent", pattern.n_exponent()}, {"edges", std::move(edges)}};
}

PreferencePattern pattern_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n_exponent") || !doc.contains("edges"))
    throw DomainError("pattern JSON needs 'n_exponent' and 'edges'");
  const auto& n = doc.at("n_exponent");
  if (!is_positive_u32(n)) throw DomainError("'n_exponent' must be a positive integer");
  const auto& edges = doc.at("edges");
  if (!edges.is_array()) throw DomainError("'edges' must be an array");
  std::vector<std::pair<Candidate, Candidate>> list;
  list.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw DomainError("each edge must be [winner, loser]");
    list.emplace_back(json_candidate(e[0]), json_candidate(e[1]));
  }
  return PreferencePattern::from_edges(static_cast<unsigned>(n.get<std::uint64_t>()), list);
}

nlohmann::json bracket_to_json(const Bracket& bracket) {
  return nlohmann::json(std::vector<Candidate>(bracket.positions().begin(), bracket.positions().end()));
}

Bracket bracket_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw DomainError("bracket JSON must be an array of candidates");
  std::vector<Candidate> slots;
  slots.reserve(doc.size());
  for (const auto& v : doc) slots.push_back(json_candidate(v));
  return Bracket(std::move(slots));
}

void write_profile_csv(std::ostream& out, const VotingProfile& profile) {
  for (const auto& row : profile.rows()) {
    const auto r = row.ranking();
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << r[k];
    out << '\n';
  }
}

VotingProfile read_profile_csv(std::istream& in) {
  std::vector<PreferenceList> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Candidate> ranking;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      ranking.push_back(parse_candidate(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    rows.emplace_back(std::move(ranking));
  }
  return VotingProfile(std::move(rows));
}

std::string profile_to_csv(const VotingProfile& profile) {
  std::ostringstream out;
  write_profile_csv(out, profile);
  return out.str();
}

VotingProfile profile_from_csv(const std::string& text) {
  std::istringstream in(text);
  return read_profile_csv(in);
}

}  // namespace knockout::io
