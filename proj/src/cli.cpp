#include "knockout/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "knockout/bracket_synthesis.hpp"
#include "knockout/commission.hpp"
#include "knockout/io.hpp"
#include "knockout/pattern_builder.hpp"
#include "knockout/profile.hpp"
#include "knockout/tournament.hpp"

namespace knockout::cli {

namespace {

using nlohmann::json;

/// Input or output file trouble; reported with exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Writes to --out when given, otherwise to stdout.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + out_path + "'");
  file << text;
  if (!file) throw IoError("write to '" + out_path + "' failed");
}

std::string sig4(double x) {
  std::ostringstream s;
  s << std::setprecision(4) << x;
  return s.str();
}

struct Options {
  unsigned n = 0;
  Candidate winner = 0;
  std::string method = "explicit";
  std::string verify_method = "both";
  std::string pattern_path;
  std::string bracket_path;
  std::string profile_path;
  std::string out_path;
  bool trimmed = false;
  bool full = false;
  bool log = false;
  double lambda = 0.0;
  double target = 0.0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

int cmd_pattern(const Options& o, std::ostream& out) {
  emit(io::pattern_to_json(eta(o.n)).dump() + "\n", o.out_path, out);
  return kOk;
}

Bracket synthesize(const std::string& method, unsigned n, Candidate target) {
  return method == "inductive" ? bracket_for_winner_inductive(n, target)
                               : bracket_for_winner_explicit(n, target);
}

int cmd_bracket(const Options& o, std::ostream& out) {
  emit(io::bracket_to_json(synthesize(o.method, o.n, o.winner)).dump() + "\n", o.out_path, out);
  return kOk;
}

int cmd_verify_brackets(const Options& o, std::ostream& out) {
  if (o.n < 3) throw DomainError("verify-brackets needs n >= 3");
  if (o.n > kMaxBracketExponent) throw ResourceError("verify-brackets n exceeds cap");
  const bool run_explicit = o.verify_method != "inductive";
  const bool run_inductive = o.verify_method != "explicit";
  const auto pattern = eta(o.n - 3);
  const Candidate m = Candidate{1} << o.n;

  std::ostringstream table;
  table << "target  explicit  inductive  status\n";
  std::uint32_t failures = 0;
  for (Candidate t = 1; t <= m; ++t) {
    std::optional<Candidate> ex;
    std::optional<Candidate> in;
    if (run_explicit) ex = winner(pattern, bracket_for_winner_explicit(o.n, t));
    if (run_inductive) in = winner(pattern, bracket_for_winner_inductive(o.n, t));
    const bool ok = (!ex || *ex == t) && (!in || *in == t);
    if (!ok) ++failures;
    table << std::setw(6) << t << "  " << std::setw(8) << (ex ? std::to_string(*ex) : "-") << "  "
          << std::setw(9) << (in ? std::to_string(*in) : "-") << "  " << (ok ? "PASS" : "FAIL")
          << '\n';
  }
  table << (failures == 0 ? "all " + std::to_string(m) + " targets PASS\n"
                          : std::to_string(failures) + " of " + std::to_string(m) +
                                " targets FAIL\n");
  emit(table.str(), o.out_path, out);
  return failures == 0 ? kOk : kFailed;
}

int cmd_winner(const Options& o, std::ostream& out) {
  const auto pattern = io::pattern_from_json(read_json(o.pattern_path));
  const auto bracket = io::bracket_from_json(read_json(o.bracket_path));
  std::string text = json{{"winner", winner(pattern, bracket)}}.dump() + "\n";
  if (o.log) {
    for (const auto& m : match_log(pattern, bracket))
      text += json{{"round", m.round}, {"first", m.first}, {"second", m.second}, {"winner", m.winner}}
                  .dump() +
              "\n";
  }
  emit(text, o.out_path, out);
  return kOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  auto profile = build_profile(o.n);
  if (o.trimmed) profile = trim(profile);
  emit(io::profile_to_csv(profile), o.out_path, out);
  return kOk;
}

int cmd_majority(const Options& o, std::ostream& out, std::ostream& err) {
  const auto profile = io::profile_from_csv(read_file(o.profile_path));
  try {
    emit(io::pattern_to_json(majority_graph(profile)).dump() + "\n", o.out_path, out);
  } catch (const TieError& e) {
    err << "tie: pair {" << e.pair().first << ", " << e.pair().second
        << "} has zero margin; no strict majority graph\n";
    return kFailed;
  }
  return kOk;
}

int cmd_verify_profile(const Options& o, std::ostream& out) {
  auto profile = build_profile(o.n);
  if (!o.full) profile = trim(profile);
  const auto expected = eta(o.n);
  const std::string label = (o.full ? "R_" : "R̃_") + std::to_string(o.n) +
                            " generates η_" + std::to_string(o.n);
  const std::string counts = std::to_string(profile.row_count()) + " rows, " +
                             std::to_string(expected.edge_count()) + " pairs";
  if (const auto tie = first_tie(profile)) {
    out << label << ": FAILED (tie on {" << tie->first << ", " << tie->second << "}; " << counts
        << ")\n";
    return kFailed;
  }
  const auto diff = pattern_diff(majority_graph(profile), expected);
  if (!diff.empty()) {
    out << label << ": FAILED (" << diff.size() << " differing pairs; " << counts << ")\n";
    return kFailed;
  }
  out << label << ": OK (" << counts << ")\n";
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  SimulationConfig config;
  config.n = o.n;
  config.lambda = o.lambda;
  config.trials = o.trials;
  config.seed = o.seed;
  config.threads = o.threads;
  const auto r = estimate_mismatch(config);
  const json doc{{"n", o.n},
                 {"lambda", o.lambda},
                 {"trials", r.trials},
                 {"seed", o.seed},
                 {"mismatches", r.mismatches},
                 {"estimate", r.estimate},
                 {"ci_halfwidth", r.ci_halfwidth},
                 {"bound", r.bound},
                 {"summary", "P(mismatch) ~ " + sig4(r.estimate) + " +/- " + sig4(r.ci_halfwidth) +
                                 " (95%), bound " + sig4(r.bound)}};
  emit(doc.dump() + "\n", o.out_path, out);
  return kOk;
}

int cmd_bound(const Options& o, bool has_lambda, std::ostream& out) {
  json doc;
  if (has_lambda) {
    const double b = chernoff_bound(o.n, o.lambda);
    doc = {{"n", o.n},
           {"lambda", o.lambda},
           {"pairs", candidate_pairs(o.n)},
           {"rate", pair_rate(o.n, o.lambda)},
           {"bound", b},
           {"summary", "P(mismatch) <= " + sig4(b) + " at lambda " + sig4(o.lambda)}};
  } else {
    const double lambda = min_lambda_for(o.n, o.target);
    doc = {{"n", o.n},
           {"target", o.target},
           {"lambda", lambda},
           {"bound_at_lambda", chernoff_bound(o.n, lambda)},
           {"method", "closed form: lambda = ln(pairs(n) / target) / (1 - sqrt(1 - 1/(2n+5)^2))"},
           {"summary", "lambda >= " + sig4(lambda) + " gives P(mismatch) <= " + sig4(o.target)}};
  }
  emit(doc.dump() + "\n", o.out_path, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knockout tournament manipulation: patterns, brackets, profiles, commissions",
               "knockout"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) {
    return sub->add_option("--n", o.n, "recursion level / field exponent")->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "output file (default stdout)"); };

  auto* pattern = app.add_subcommand("pattern", "emit eta(n) as pattern JSON");
  add_n(pattern);
  add_out(pattern);

  auto* bracket = app.add_subcommand("bracket", "bracket over [2^n] won by --winner under eta(n-3)");
  add_n(bracket);
  bracket->add_option("--winner", o.winner, "target candidate")->required();
  bracket->add_option("--method", o.method, "explicit|inductive")
      ->check(CLI::IsMember({"explicit", "inductive"}));
  add_out(bracket);

  auto* verify_brackets = app.add_subcommand("verify-brackets", "check every target of [2^n]");
  add_n(verify_brackets);
  verify_brackets->add_option("--method", o.verify_method, "explicit|inductive|both (default both)")
      ->check(CLI::IsMember({"explicit", "inductive", "both"}));
  add_out(verify_brackets);

  auto* win = app.add_subcommand("winner", "play a bracket under a pattern");
  win->add_option("--pattern", o.pattern_path, "pattern JSON file")->required();
  win->add_option("--bracket", o.bracket_path, "bracket JSON file")->required();
  win->add_flag("--log", o.log, "append the match log as JSON lines");
  add_out(win);

  auto* profile = app.add_subcommand("profile", "emit R_n (or the trimmed profile) as CSV");
  add_n(profile);
  profile->add_flag("--trimmed", o.trimmed, "drop the last row");
  add_out(profile);

  auto* majority = app.add_subcommand("majority", "majority graph of a CSV profile");
  majority->add_option("--profile", o.profile_path, "profile CSV file")->required();
  add_out(majority);

  auto* verify_profile = app.add_subcommand("verify-profile", "check the compiled profile against eta(n)");
  add_n(verify_profile);
  verify_profile->add_flag("--full", o.full, "check R_n instead of the trimmed profile");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo mismatch rate of Poisson commissions");
  add_n(simulate);
  simulate->add_option("--lambda", o.lambda, "expected commission size")->required();
  simulate->add_option("--trials", o.trials, "number of commissions")->required();
  simulate->add_option("--seed", o.seed, "64-bit seed")->required();
  simulate->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  add_out(simulate);

  auto* bound = app.add_subcommand("bound", "union/Chernoff bound or the lambda reaching a target");
  add_n(bound);
  auto* lambda_opt = bound->add_option("--lambda", o.lambda, "expected commission size");
  auto* target_opt = bound->add_option("--target", o.target, "target mismatch probability");
  lambda_opt->excludes(target_opt);
  target_opt->excludes(lambda_opt);
  add_out(bound);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (pattern->parsed()) return cmd_pattern(o, out);
    if (bracket->parsed()) return cmd_bracket(o, out);
    if (verify_brackets->parsed()) return cmd_verify_brackets(o, out);
    if (win->parsed()) return cmd_winner(o, out);
    if (profile->parsed()) return cmd_profile(o, out);
    if (majority->parsed()) return cmd_majority(o, out, err);
    if (verify_profile->parsed()) return cmd_verify_profile(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (bound->parsed()) {
      if (lambda_opt->count() == 0 && target_opt->count() == 0) {
        err << "bound: one of --lambda or --target is required\n";
        return kUsage;
      }
      return cmd_bound(o, lambda_opt->count() > 0, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace knockout::cli
