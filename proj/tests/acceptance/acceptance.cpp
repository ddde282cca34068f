// Copyright 2026 The Rainbow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one [PASS] or [FAIL] line per criterion, exit status 1 if
// any criterion fails. Library-level criteria call rainbow::core directly;
// the trend and determinism criteria drive the rainbow executable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "rainbow/census.hpp"
#include "rainbow/colouring.hpp"
#include "rainbow/counterexamples.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/path_forest.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/rotation_glue.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/tree_embed.hpp"
#include "reference.hpp"

namespace rainbow {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// ---- validator soundness ---------------------------------------------------

Outcome validator_soundness() {
  const int sizes[] = {50, 100, 200};
  constexpr int kTrials = 1000;
  int forests = 0, cycles = 0, embeddings = 0, invalid = 0;
  std::string first_violation;
  auto note = [&](const std::string& what, const std::optional<std::string>& err) {
    if (!err) return;
    ++invalid;
    if (first_violation.empty()) first_violation = what + ": " + *err;
  };
  for (int t = 0; t < kTrials; ++t) {
    const int n = sizes[t % 3];
    const auto seed = static_cast<std::uint64_t>(t);
    const EdgeColouring latin = latin_to_colouring(random_latin_square(n, seed));
    const double gamma = std::cbrt(1.0 / n);
    const ColourMask all = full_mask(latin);
    const ForestRun run = long_rainbow_path_forest(latin, all, gamma, 2 * gamma);
    ++forests;
    note("forest seed " + std::to_string(t), check_path_forest(latin, run.forest.paths(), &all));

    const CycleResult cyc = long_rainbow_cycle(latin, cycle_preset("desk", n), seed);
    if (!cyc.cycle.empty()) {
      ++cycles;
      note("cycle seed " + std::to_string(t), check_rainbow_cycle(latin, cyc.cycle));
    }

    const EdgeColouring rr = round_robin_colouring(n);
    const TreeSpec tree = random_tree(n, 4, seed);
    const EmbedResult emb = embed_tree(rr, tree, seed, embed_preset("desk"));
    if (emb.success) {
      ++embeddings;
      auto err = check_embedding(rr, tree, emb.embedding);
      if (!err && !reference::embedding_is_rainbow(rr, tree, emb.embedding)) err = "reference check disagrees";
      note("embedding seed " + std::to_string(t), err);
    }
  }
  Outcome o;
  o.pass = invalid == 0;
  o.detail = std::to_string(forests) + " forests, " + std::to_string(cycles) + " cycles, " +
             std::to_string(embeddings) + " embeddings returned over " + std::to_string(kTrials) +
             " trials at n in {50,100,200}; " + std::to_string(invalid) + " invalid";
  if (!first_violation.empty()) o.detail += " (first: " + first_violation + ")";
  return o;
}

// ---- forest contract -------------------------------------------------------

Outcome forest_contract() {
  Outcome o;
  int runs = 0;
  std::ostringstream worst;
  for (int n : {64, 125, 216, 512}) {
    const double gamma = std::cbrt(1.0 / n);
    const double delta = 2 * gamma;
    const ForestCondition cond = forest_condition(n, gamma, delta);
    int min_edges = n, max_paths = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const EdgeColouring c = latin_to_colouring(random_latin_square(n, seed));
      const ForestRun run = long_rainbow_path_forest(c, full_mask(c), gamma, delta);
      ++runs;
      const int paths = run.forest.path_count(), edges = run.forest.edge_count();
      min_edges = std::min(min_edges, edges);
      max_paths = std::max(max_paths, paths);
      if (paths > gamma * n + 1e-9 || edges < (1 - 3 * delta) * n - 1e-9) o.pass = false;
    }
    worst << " n=" << n << " (condition " << fmt(cond.value, 2) << ", paths<=" << max_paths << "/"
          << fmt(gamma * n, 1) << ", edges>=" << min_edges << "/" << fmt((1 - 3 * delta) * n, 1) << ")";
  }
  o.detail = std::to_string(runs) + " forests;" + worst.str();
  return o;
}

// ---- oracle equivalence ----------------------------------------------------

Outcome oracle_equivalence() {
  Outcome o;
  int instances = 0, runs = 0, skipped = 0, violations = 0;
  for (int n = 2; n <= 4; ++n) {
    const double cube = std::cbrt(1.0 / n);
    const std::vector<std::pair<double, double>> grid = {{cube, 2 * cube}, {0.5, 0.75}, {0.75, 0.75}, {1.0, 0.5}};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const EdgeColouring c = latin_to_colouring(random_latin_square(n, seed));
      const int optimum = brute_max_rainbow_path_forest(c).max_edges;
      ++instances;
      for (const auto& [gamma, delta] : grid) {
        std::optional<ForestRun> attempt;
        try {
          attempt.emplace(long_rainbow_path_forest(c, full_mask(c), gamma, delta));
        } catch (const ParameterError&) {
          ++skipped;  // preconditions fail for this (gamma, delta)
          continue;
        }
        const ForestRun& run = *attempt;
        ++runs;
        const int edges = run.forest.edge_count();
        if (edges > optimum || edges < run.target_edges || run.forest.path_count() > run.condition.max_paths) {
          ++violations;
        }
      }
    }
  }
  const int klein = brute_max_rainbow_path_forest(
                        latin_to_colouring(LatinSquare({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}})))
                        .max_edges;
  o.pass = violations == 0 && runs > 0 && klein == 2;
  o.detail = std::to_string(instances) + " squares of order 2..4, " + std::to_string(runs) + " runs with preconditions (" +
             std::to_string(skipped) + " refused), " + std::to_string(violations) +
             " violations; Klein table optimum " + std::to_string(klein);
  return o;
}

// ---- counterexamples -------------------------------------------------------

Outcome counterexamples() {
  Outcome o;
  const bool mm2 = brute_rainbow_hamilton_path_exists(mm_colouring(2)).exists;
  const bool mm3 = brute_rainbow_hamilton_path_exists(mm_colouring(3)).exists;
  const bool star = brute_rainbow_tree_embedding_exists(round_robin_colouring(4), two_star_tree(4)).exists;
  int nonzero = 0;
  Rng rng(2026);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TreeSpec t = random_all_but_two_odd_tree(8, seed);
    std::vector<Vertex> pi = reference::identity(8);
    rng.shuffle(std::span<Vertex>(pi));
    nonzero += parity_certificate(3, t, pi).evaluated_sum != 0;
  }
  o.pass = !mm2 && !mm3 && !star && nonzero == 100;
  o.detail = std::string("rainbow Hamilton path in mm(2): ") + (mm2 ? "found" : "none") +
             ", mm(3): " + (mm3 ? "found" : "none") + "; two-star(4) into round-robin K4: " +
             (star ? "embeds" : "none") + "; parity certificate nonzero on " + std::to_string(nonzero) + "/100 trees";
  return o;
}

// ---- LLL arithmetic --------------------------------------------------------

Outcome lll_arithmetic() {
  Outcome o;
  const LllResult res = lll_condition(0.25, 4.0, std::ldexp(1.0, -11), std::ldexp(1.0, -38));
  const TreeConstants base = paper_s34_constants();
  const bool base_holds = all_hold(check_constant_relations(base));
  using Perturb = std::function<void(TreeConstants&)>;
  const std::vector<Perturb> past = {
      [](TreeConstants& k) { k.alpha = k.alpha1 / 16 * 1.01; },
      [](TreeConstants& k) { k.alpha2 = k.alpha3 / 16 * 1.01; },
      [](TreeConstants& k) { k.alpha1 = k.alpha3 / 32 * 1.01; },
      [](TreeConstants& k) { k.beta = k.alpha1 * k.alpha1 / 32; },
      [](TreeConstants& k) { k.beta = k.alpha2 * k.alpha2 / 64; },
      [](TreeConstants& k) { k.beta = k.alpha3 * k.alpha3 / 64; },
      [](TreeConstants& k) { k.alpha = k.gamma * k.delta / 2 * 1.01; },
      [](TreeConstants& k) { k.delta = k.alpha2 / 16 * 1.01; },
      [](TreeConstants& k) { k.gamma = k.alpha2 / 2 * 1.01; },
  };
  int detected = 0;
  for (const Perturb& p : past) {
    TreeConstants k = base;
    p(k);
    detected += !all_hold(check_constant_relations(k));
  }
  o.pass = std::abs(res.value - 0.4259) <= 1e-4 && res.holds && base_holds && detected == 9;
  o.detail = "value " + fmt(res.value, 6) + (res.holds ? " (holds)" : " (fails)") + "; relations on preset " +
             (base_holds ? "hold" : "fail") + "; " + std::to_string(detected) + "/9 perturbations detected";
  return o;
}

// ---- census vs bounds ------------------------------------------------------

Outcome census_bounds() {
  Outcome o;
  int violations = 0;
  double worst = 0.0;
  std::string worst_family;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 6 + static_cast<int>(seed % 7);
    const EdgeColouring c = n % 2 == 0 ? round_robin_colouring(n) : symmetric_latin_colouring(n, seed);
    const TreeSpec t = random_tree(n, 4, seed + 1000);
    const PartialEmbedding partial = rge(c, t, order_vertices(t), seed).partial;
    const BadEventCensus census = bad_event_census(c, t, partial, CensusMode::exact);
    const ClaimBounds bounds = claim_bounds(census.params);
    for (std::size_t f = 0; f < 5; ++f) {
      for (int v = 0; v < n; ++v) {
        const double w = census.families[f].per_w[static_cast<std::size_t>(v)];
        const double a = census.families[f].per_a[static_cast<std::size_t>(v)];
        if (w > bounds.w_side[f] || a > bounds.a_side[f]) ++violations;
        for (const auto& [value, bound] : {std::pair{w, bounds.w_side[f]}, std::pair{a, bounds.a_side[f]}}) {
          if (bound > 0 && value / bound > worst) {
            worst = value / bound;
            worst_family = family_name(static_cast<EventFamily>(f));
          }
        }
      }
    }
  }
  o.pass = violations == 0;
  o.detail = "50 instances at n in 6..12, " + std::to_string(violations) + " violations; largest exact/bound ratio " +
             fmt(worst, 3) + (worst_family.empty() ? "" : " (" + worst_family + ")");
  return o;
}

// ---- CLI-driven trend criteria ---------------------------------------------

std::vector<double> bench_means(const std::string& table, const std::string& task) {
  std::vector<double> means;
  std::istringstream in(table);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string name, metric;
    int n = 0;
    double mean = 0;
    if (row >> name >> n >> metric >> mean && name == task) means.push_back(mean);
  }
  return means;
}

Outcome bench_trend(const std::string& task, const std::string& sizes, int trials, const testing::ScratchDir& dir) {
  const std::string table = dir.file(task + "-table.txt");
  const testing::CliRun run =
      testing::run_cli({"bench", task, "--n", sizes, "--trials", std::to_string(trials), "--assert-trend", "-o", table},
                       dir);
  Outcome o;
  const std::vector<double> means = bench_means(testing::slurp(table), task);
  o.pass = run.exit_code == 0;
  o.detail = (task == "cycle" ? "mean deficiency (n-L)/n at n=" : "success rate at n=") + sizes + ": ";
  for (std::size_t i = 0; i < means.size(); ++i) o.detail += (i ? ", " : "") + fmt(means[i], 4);
  o.detail += " over " + std::to_string(trials) + " seeds (exit " + std::to_string(run.exit_code) + ")";
  return o;
}

// ---- determinism -----------------------------------------------------------

Outcome determinism(const testing::ScratchDir& dir) {
  const std::string latin = dir.file("latin150.txt");
  const std::string small = dir.file("latin5.txt");
  const std::string rr = dir.file("rr64.txt");
  const std::string rr6 = dir.file("rr6.txt");
  const std::string tree = dir.file("tree64.txt");
  const std::string tree6 = dir.file("tree6.txt");
  // Inputs shared by the spot checks below.
  testing::run_cli({"gen", "latin", "--n", "150", "--seed", "1", "-o", latin}, dir);
  testing::run_cli({"gen", "latin", "--n", "5", "--seed", "2", "-o", small}, dir);
  testing::run_cli({"gen", "round-robin", "--n", "64", "-o", rr}, dir);
  testing::run_cli({"gen", "round-robin", "--n", "6", "-o", rr6}, dir);
  testing::run_cli({"gen", "tree", "--n", "64", "--max-degree", "4", "--seed", "3", "-o", tree}, dir);
  testing::run_cli({"gen", "tree", "--n", "6", "--max-degree", "3", "--seed", "3", "-o", tree6}, dir);

  struct Spot {
    std::vector<std::string> args;  // without output and manifest flags
    std::vector<std::string> outputs;
  };
  auto out = [&](int i, const std::string& ext = "txt") { return dir.file("spot" + std::to_string(i) + "." + ext); };
  std::vector<Spot> spots = {
      {{"gen", "latin", "--n", "40", "--seed", "7"}, {}},
      {{"gen", "symmetric-latin", "--n", "41", "--seed", "7"}, {}},
      {{"gen", "latin-square", "--n", "12", "--seed", "8"}, {}},
      {{"gen", "mm", "--k", "4"}, {}},
      {{"gen", "round-robin", "--n", "20"}, {}},
      {{"gen", "tree", "--n", "50", "--max-degree", "4", "--seed", "9"}, {}},
      {{"forest", "--input", latin}, {}},
      {{"forest", "--input", latin, "--gamma", "0.2", "--delta", "0.3"}, {}},
      {{"cycle", "--input", latin, "--seed", "4"}, {}},
      {{"cycle", "--input", latin, "--seed", "5", "--p", "0.4"}, {}},
      {{"cycle", "--input", latin, "--seed", "6", "--preset", "desk", "--resamples", "2"}, {}},
      {{"embed-tree", "--colouring", rr, "--tree", tree, "--seed", "1"}, {}},
      {{"embed-tree", "--colouring", rr, "--tree", tree, "--seed", "2", "--repair-steps", "500"}, {}},
      {{"oracle", "forest", "--input", small}, {}},
      {{"oracle", "hamilton", "--input", small}, {}},
      {{"oracle", "cycle", "--input", small}, {}},
      {{"oracle", "tree", "--input", rr6, "--tree", tree6}, {}},
      {{"counterexample", "mm", "--k", "3"}, {}},
      {{"counterexample", "two-star", "--n", "12"}, {}},
      {{"bench", "forest", "--n", "64,125", "--trials", "3", "--threads", "2"}, {}},
  };
  int identical = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < spots.size(); ++i) {
    Spot& s = spots[i];
    const int id = static_cast<int>(i);
    std::vector<std::string> args = s.args;
    args.insert(args.end(), {"-o", out(id)});
    s.outputs.push_back(out(id));
    if (s.args[0] == "forest") {
      args.insert(args.end(), {"--trace", out(id, "trace")});
      s.outputs.push_back(out(id, "trace"));
    }
    const std::string manifest = out(id, "manifest");
    args.insert(args.end(), {"--manifest", manifest});
    const testing::CliRun first = testing::run_cli(args, dir);
    std::vector<std::string> before;
    for (const std::string& path : s.outputs) {
      before.push_back(testing::slurp(path));
      std::filesystem::remove(path);
    }
    const testing::CliRun again = testing::run_cli({"replay", manifest}, dir);
    bool same = first.exit_code == again.exit_code && first.exit_code != 1;
    for (std::size_t k = 0; k < s.outputs.size(); ++k) {
      same = same && !before[k].empty() && testing::slurp(s.outputs[k]) == before[k];
    }
    if (same) {
      ++identical;
    } else if (first_failure.empty()) {
      first_failure = s.args[0] + " (exit " + std::to_string(first.exit_code) + "/" + std::to_string(again.exit_code) + ")";
    }
  }
  Outcome o;
  o.pass = identical == static_cast<int>(spots.size());
  o.detail = std::to_string(identical) + "/" + std::to_string(spots.size()) +
             " commands reproduced byte-identical outputs when replayed from their manifests";
  if (!first_failure.empty()) o.detail += "; first mismatch: " + first_failure;
  return o;
}

}  // namespace
}  // namespace rainbow

int main() {
  using namespace rainbow;
  const testing::ScratchDir dir("acceptance");
  struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"validator soundness", 300, validator_soundness},
      {"forest contract at desk scale", 120, forest_contract},
      {"oracle equivalence", 60, oracle_equivalence},
      {"counterexample reproduction", 180, counterexamples},
      {"local lemma arithmetic", 1, lll_arithmetic},
      {"census within claim bounds", 300, census_bounds},
      {"cycle deficiency trend", 1200, [&] { return bench_trend("cycle", "200,400,800,1600", 20, dir); }},
      {"embedding success rate", 300, [&] { return bench_trend("embed", "64", 200, dir); }},
      {"determinism", 600, [&] { return determinism(dir); }},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(start);
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; runtime over budget";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << o.detail << " [" << fmt(secs, 2) << " s / "
              << c.budget_seconds << " s budget]" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
