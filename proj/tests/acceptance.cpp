// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                  run everything, print the table
//   acceptance --criterion K    run only criterion K (used by ctest)
//
// Exit status is non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "knockout/bracket_synthesis.hpp"
#include "knockout/commission.hpp"
#include "knockout/io.hpp"
#include "knockout/pattern_builder.hpp"
#include "knockout/profile.hpp"
#include "knockout/tournament.hpp"

using namespace knockout;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures; the first few are kept for the report line.
struct Checker {
  Outcome out;
  int failures = 0;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    out.pass = false;
    if (++failures <= 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) {
    if (out.pass) out.detail += (out.detail.empty() ? "" : "; ") + s;
  }
};

std::string fmt(double v, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data_path(const std::string& name) { return std::string(KNOCKOUT_TEST_DATA) + "/" + name; }

// Row-scan margin, kept separate from the library's position tables.
long long scan_margin(const VotingProfile& p, Candidate i, Candidate j) {
  long long d = 0;
  for (const auto& row : p.rows()) {
    const auto r = row.ranking();
    const auto pi = std::find(r.begin(), r.end(), i);
    const auto pj = std::find(r.begin(), r.end(), j);
    d += pi < pj ? 1 : -1;
  }
  return d;
}

// ---------------------------------------------------------------------------

Outcome base_goldens() {
  Checker c;
  const std::vector<std::pair<Candidate, Candidate>> reference{
      {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 6},
      {3, 8}, {4, 1}, {4, 5}, {4, 8}, {5, 2}, {5, 6}, {5, 7}, {6, 1}, {6, 4}, {6, 7},
      {6, 8}, {7, 1}, {7, 3}, {7, 4}, {7, 8}, {8, 1}, {8, 2}, {8, 5}};
  c.expect(eta_base().edges() == reference, "eta_base edges differ from the 28 reference relations");
  c.expect(io::profile_to_csv(stearns_base()) == slurp(data_path("R0.csv")), "R_0 differs from golden CSV");
  c.expect(io::profile_to_csv(build_profile(1)) == slurp(data_path("R1.csv")), "R_1 differs from golden CSV");
  c.note("28 relations, R_0 10 rows, R_1 14 rows");
  return c.out;
}

Outcome base_brackets_win() {
  Checker c;
  const std::vector<std::vector<Candidate>> reference{
      {1, 2, 3, 4, 5, 6, 7, 8}, {2, 3, 4, 1, 6, 7, 8, 5}, {3, 6, 4, 1, 8, 2, 5, 7}, {4, 1, 8, 2, 5, 6, 7, 3},
      {5, 6, 7, 8, 2, 3, 4, 1}, {6, 7, 8, 5, 1, 2, 3, 4}, {7, 8, 1, 2, 3, 5, 6, 4}, {8, 1, 5, 6, 2, 3, 7, 4}};
  const auto eta0 = eta_base();
  for (Candidate k = 1; k <= 8; ++k) {
    const auto& b = base_bracket(k);
    c.expect(std::vector<Candidate>(b.positions().begin(), b.positions().end()) == reference[k - 1],
             "bracket " + std::to_string(k) + " differs from the reference table");
    c.expect(winner(eta0, Bracket(reference[k - 1])) == k, "reference bracket " + std::to_string(k) + " lost");
  }
  c.note("8/8 winners");
  return c.out;
}

Outcome exhaustive_winner_set() {
  Checker c;
  const auto ws = winner_set(eta_base());
  std::set<Candidate> all;
  for (Candidate k = 1; k <= 8; ++k) all.insert(k);
  c.expect(ws == all, "winner set has " + std::to_string(ws.size()) + " members");
  c.expect(winner_set_reduced(eta_base()) == all, "reduced enumeration disagrees");
  c.note("40320 brackets, |W| = 8");
  return c.out;
}

Outcome small_impossibility() {
  Checker c;
  const auto four = coverage_impossible(2);
  const auto two = coverage_impossible(1);
  c.expect(four.patterns_checked == 64, "expected 64 patterns on 4 candidates");
  c.expect(four.max_coverage == 3 && !four.full_coverage_found, "4 candidates: coverage " +
                                                                     std::to_string(four.max_coverage));
  c.expect(two.patterns_checked == 2, "expected 2 patterns on 2 candidates");
  c.expect(two.max_coverage == 1 && !two.full_coverage_found, "2 candidates: coverage " +
                                                                   std::to_string(two.max_coverage));
  c.note("max coverage 3/4 and 1/2");
  return c.out;
}

Outcome synthesis_sweep() {
  Checker c;
  std::size_t played = 0;
  for (unsigned n = 3; n <= 10; ++n) {
    const auto pattern = eta(n - 3);
    const Candidate m = Candidate{1} << n;
    for (Candidate t = 1; t <= m; ++t) {
      const auto e = winner(pattern, bracket_for_winner_explicit(n, t));
      const auto i = winner(pattern, bracket_for_winner_inductive(n, t));
      played += 2;
      c.expect(e == t, "explicit n=" + std::to_string(n) + " t=" + std::to_string(t) + " won by " +
                           std::to_string(e));
      c.expect(i == t, "inductive n=" + std::to_string(n) + " t=" + std::to_string(t) + " won by " +
                           std::to_string(i));
    }
  }
  c.note(std::to_string(played) + " tournaments");
  return c.out;
}

Outcome explicit_structure() {
  Checker c;
  std::size_t brackets = 0;
  for (unsigned n = 4; n <= 10; ++n) {
    const Candidate m = Candidate{1} << n;
    const Candidate half = m / 2;
    for (Candidate t = 1; t <= m; ++t) {
      const auto b = bracket_for_winner_explicit(n, t);
      ++brackets;
      bool classes = true;
      for (std::uint32_t slot = 1; slot <= m; ++slot)
        classes &= (slot + 7) / 8 == (b.at_slot(slot) + 7) / 8;
      c.expect(classes, "class mixing at n=" + std::to_string(n) + " t=" + std::to_string(t));
      const bool seeds = b.slot_of(1) <= half && b.slot_of(half + 1) > half;
      c.expect(seeds && check_top_seeds(b), "top seeds share a half at n=" + std::to_string(n) +
                                                " t=" + std::to_string(t));
    }
  }
  c.note(std::to_string(brackets) + " explicit brackets");
  return c.out;
}

Outcome profile_generation() {
  Checker c;
  for (unsigned n = 0; n <= 8; ++n) {
    const auto full = build_profile(n);
    const auto trimmed = trim(full);
    const auto target = eta(n);
    const std::string tag = " at n=" + std::to_string(n);
    c.expect(full.row_count() == 4 * n + 10, "R_n size" + tag);
    c.expect(trimmed.row_count() == 4 * n + 9, "trimmed size" + tag);
    c.expect(majority_graph(full) == target, "R_n majority graph" + tag);
    c.expect(majority_graph(trimmed) == target, "trimmed majority graph" + tag);
    bool margins = true;
    const Candidate m = target.size();
    for (Candidate i = 1; i <= m && margins; ++i)
      for (Candidate j = i + 1; j <= m; ++j) {
        const auto d = margin(full, i, j);
        if (d % 2 != 0 || std::llabs(d) < 2) {
          margins = false;
          break;
        }
      }
    c.expect(margins, "odd or small margin" + tag);
  }
  c.note("n=0..8, 2048 candidates at the top");
  return c.out;
}

Outcome interleave_property() {
  Checker c;
  std::mt19937_64 gen(20240607);
  const int cases = 250;
  for (int k = 0; k < cases; ++k) {
    const std::size_t blocks = std::uniform_int_distribution<std::size_t>(2, 4)(gen);
    const std::size_t rows = 2 * std::uniform_int_distribution<std::size_t>(1, 4)(gen);
    std::vector<Candidate> pool(40);
    std::iota(pool.begin(), pool.end(), Candidate{1});
    std::shuffle(pool.begin(), pool.end(), gen);

    std::vector<VotingProfile> parts;
    std::vector<std::vector<Candidate>> sets;
    std::size_t used = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t width = std::uniform_int_distribution<std::size_t>(1, 6)(gen);
      std::vector<Candidate> set(pool.begin() + static_cast<long>(used),
                                 pool.begin() + static_cast<long>(used + width));
      used += width;
      std::vector<PreferenceList> lists;
      for (std::size_t r = 0; r < rows; ++r) {
        std::shuffle(set.begin(), set.end(), gen);
        lists.emplace_back(set);
      }
      parts.emplace_back(std::move(lists));
      sets.push_back(set);
    }
    const auto merged = interleave(parts);
    bool ok = merged.row_count() == rows;
    for (std::size_t a = 0; a < blocks && ok; ++a) {
      for (Candidate i : sets[a]) {
        for (std::size_t b = 0; b < blocks; ++b) {
          for (Candidate j : sets[b]) {
            if (i == j) continue;
            const auto got = scan_margin(merged, i, j);
            ok &= a == b ? got == scan_margin(parts[a], i, j) : got == 0;
          }
        }
      }
    }
    c.expect(ok, "case " + std::to_string(k) + " broke a margin");
  }
  c.note(std::to_string(cases) + " random cases");
  return c.out;
}

// Independent evaluation of sup_t (lambda + mu - lambda e^{-t} - mu e^{t}),
// the exponent bounding P(X <= Y), by golden-section search over t.
double rate_oracle(double lambda, double mu) {
  const auto f = [&](double t) { return lambda + mu - lambda * std::exp(-t) - mu * std::exp(t); };
  double lo = 0.0;
  double hi = std::log(lambda / mu) + 1.0;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 300; ++it) {
    const double a = hi - g * (hi - lo);
    const double b = lo + g * (hi - lo);
    (f(a) < f(b) ? lo : hi) = f(a) < f(b) ? a : b;
  }
  return f((lo + hi) / 2.0);
}

Outcome rate_and_bound() {
  Checker c;
  double worst = 0.0;
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int k = 0; k < 2000; ++k) {
    const double a = std::pow(10.0, u(gen));
    const double b = std::pow(10.0, u(gen));
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    if (hi == lo) continue;
    const double expect = (std::sqrt(hi) - std::sqrt(lo)) * (std::sqrt(hi) - std::sqrt(lo));
    worst = std::max(worst, std::fabs(rate_function_zero(hi, lo) - expect) / expect);
  }
  c.expect(worst <= 1e-12, "closed form relative error " + fmt(worst));

  // Optimisation oracle on well-separated means.
  for (auto [hi, lo] : {std::pair{3.0, 1.0}, std::pair{500.0, 10.0}, std::pair{1.0, 0.04}}) {
    const double ref = rate_oracle(hi, lo);
    c.expect(std::fabs(rate_function_zero(hi, lo) - ref) <= 1e-9 * ref, "optimisation oracle mismatch");
  }

  const double exponent = 1.0 - std::sqrt(24.0) / 5.0;
  for (double lambda : {1.0, 50.0, 400.0, 2000.0}) {
    const double expect = 28.0 * std::exp(-lambda * exponent);
    c.expect(std::fabs(chernoff_bound(0, lambda) - expect) <= 1e-12 * expect,
             "chernoff_bound(0, " + fmt(lambda) + ")");
  }

  const double lam = min_lambda_for(0, 0.01);
  c.expect(lam >= 392.5 && lam <= 394.0, "min_lambda_for(0, 0.01) = " + fmt(lam));
  c.expect(chernoff_bound(0, lam) <= 0.01, "bound at returned lambda " + fmt(chernoff_bound(0, lam)));
  c.note("max rel err " + fmt(worst, 3) + ", lambda* = " + fmt(lam, 7));
  return c.out;
}

Outcome monte_carlo() {
  Checker c;
  SimulationConfig cfg;
  cfg.n = 0;
  cfg.lambda = 400.0;
  cfg.trials = 100000;
  cfg.seed = 20240607;
  cfg.threads = 0;
  const auto parallel = estimate_mismatch(cfg);
  c.expect(parallel.estimate <= 0.01, "estimate " + fmt(parallel.estimate) + " > 0.01");
  c.expect(parallel.estimate <= chernoff_bound(0, 400.0), "estimate exceeds the bound");

  const auto again = estimate_mismatch(cfg);
  c.expect(again.mismatches == parallel.mismatches, "same seed gave a different count");

  auto serial_cfg = cfg;
  serial_cfg.threads = 1;
  const auto serial = estimate_mismatch(serial_cfg);
  c.expect(serial.mismatches == parallel.mismatches, "serial and parallel runs disagree");
  auto four = cfg;
  four.threads = 4;
  c.expect(estimate_mismatch(four).mismatches == parallel.mismatches, "4-thread run disagrees");

  SimulationConfig tiny = cfg;
  tiny.lambda = 1e-6;
  tiny.trials = 1000;
  c.expect(estimate_mismatch(tiny).estimate == 1.0, "tiny lambda estimate is not 1");

  c.note("P(E) ~ " + fmt(parallel.estimate, 4) + " +/- " + fmt(parallel.ci_halfwidth, 2) + ", bound " +
         fmt(parallel.bound, 4));
  return c.out;
}

Outcome cubic_schedule() {
  Checker c;
  const double k = 16.0 * (std::log(2.0) + 0.1);
  std::vector<double> values;
  for (unsigned n = 3; n <= 12; ++n) values.push_back(chernoff_bound(n, k * n * n * n));
  bool decreasing = true;
  for (std::size_t i = 1; i < values.size(); ++i) decreasing &= values[i] < values[i - 1];
  const double at10 = values[10 - 3];
  c.expect(decreasing, "not monotone over n=3..12 (n=3: " + fmt(values.front(), 4) + ", n=9: " +
                           fmt(values[9 - 3], 4) + ", n=10: " + fmt(at10, 4) + ")");
  c.expect(at10 < 1e-3, "bound at n=10 is " + fmt(at10, 4));
  c.note("bound at n=10 is " + fmt(at10, 4));
  return c.out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
  double budget_seconds;  // 0 = no runtime limit
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "base-case goldens", base_goldens, 1.0},
      {2, "eight base brackets win", base_brackets_win, 1.0},
      {3, "exhaustive winner set over 8! brackets", exhaustive_winner_set, 10.0},
      {4, "no full coverage on 2 or 4 candidates", small_impossibility, 1.0},
      {5, "bracket synthesis sweep n=3..10", synthesis_sweep, 60.0},
      {6, "explicit bracket class and top-seed structure", explicit_structure, 0.0},
      {7, "profiles generate the patterns n=0..8", profile_generation, 30.0},
      {8, "interleaving cancels cross-block margins", interleave_property, 0.0},
      {9, "rate function and Chernoff bound", rate_and_bound, 0.0},
      {10, "Monte Carlo commission estimate", monte_carlo, 60.0},
      {11, "cubic lambda schedule drives the bound down", cubic_schedule, 0.0},
  };
  return list;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = c.run();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.budget_seconds > 0 && secs > c.budget_seconds) {
    out.pass = false;
    out.detail += "; over the " + fmt(c.budget_seconds) + " s budget";
  }
  std::printf("[%s] criterion %2d: %s -- %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.title,
              out.detail.c_str(), secs);
  std::fflush(stdout);
  return out.pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion K]\n";
      return 2;
    }
  }
  bool all = true;
  bool found = false;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    found = true;
    all &= run_one(c);
  }
  if (!found) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
