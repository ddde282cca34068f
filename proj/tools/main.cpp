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

// rainbow: command-line front end for the rainbow substructure library.
//
// Primary outputs (colourings, forests, cycles, embeddings, tables) are plain
// text and depend only on the arguments and input files, so a rerun from a
// manifest reproduces them byte for byte. Summaries go to stderr, or to stdout
// for commands whose only product is the summary.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "bench.hpp"
#include "manifest.hpp"
#include "rainbow/colouring.hpp"
#include "rainbow/counterexamples.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/path_forest.hpp"
#include "rainbow/rotation_glue.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/tree_embed.hpp"

namespace rainbow::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitParameter = 3;
constexpr int kExitExhausted = 4;

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // oracle node limit; 0 keeps the default
  std::string format = "text";
  std::string manifest;
};

// Result of a command: exit code, one-word outcome and its summary values.
struct Report {
  int exit_code = kExitOk;
  std::string outcome = "ok";
  KeyValues summary;
};

class Session {
 public:
  Session(const Globals& globals, RunManifest& manifest) : globals_(globals), manifest_(manifest) {}

  std::string load(const std::string& path) {
    std::string content = read_file(path);
    manifest_.add_input(path, content);
    return content;
  }

  EdgeColouring colouring(const std::string& path) {
    std::istringstream in(load(path));
    return read_colouring(in);
  }

  TreeSpec tree(const std::string& path) {
    std::istringstream in(load(path));
    return read_tree(in);
  }

  // Writes a primary output to `path`, or to stdout when empty or "-".
  void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
      std::cout << content;
    } else {
      write_file(path, content);
    }
  }

  void summary(std::ostream& out, const KeyValues& values) const {
    if (globals_.format == "json") {
      nlohmann::ordered_json j = nlohmann::ordered_json::object();
      for (const auto& [k, v] : values) j[k] = v;
      out << j.dump(2) << '\n';
    } else {
      write_key_values(out, values);
    }
  }

  OracleBudget oracle_budget() const {
    OracleBudget b;
    if (globals_.budget > 0) b.max_nodes = globals_.budget;
    return b;
  }

  const Globals& globals() const { return globals_; }
  RunManifest& manifest() { return manifest_; }

 private:
  const Globals& globals_;
  RunManifest& manifest_;
};

template <typename Write, typename T>
std::string to_text(Write write, const T& value) {
  std::ostringstream out;
  write(out, value);
  return out.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  int max_degree = 4;
  std::string output;
};

Report cmd_gen(Session& s, const GenArgs& a) {
  const std::uint64_t seed = s.globals().seed;
  s.manifest().set_seed(seed);
  std::string text;
  if (a.kind == "latin") {
    text = to_text(write_colouring, latin_to_colouring(random_latin_square(a.n, seed)));
  } else if (a.kind == "latin-square") {
    text = to_text(write_latin_square, random_latin_square(a.n, seed));
  } else if (a.kind == "symmetric-latin") {
    text = to_text(write_colouring, symmetric_latin_colouring(a.n, seed));
  } else if (a.kind == "mm") {
    text = to_text(write_colouring, mm_colouring(a.k));
  } else if (a.kind == "round-robin") {
    text = to_text(write_colouring, round_robin_colouring(a.n));
  } else if (a.kind == "tree") {
    text = to_text(write_tree, random_tree(a.n, a.max_degree, seed));
  } else {
    throw ParameterError("unknown generator '" + a.kind + "'");
  }
  s.emit(a.output, text);
  return {};
}

// ---- forest ---------------------------------------------------------------

struct ForestArgs {
  std::string input;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::string trace;
  std::string output;
};

Report cmd_forest(Session& s, const ForestArgs& a) {
  const EdgeColouring c = s.colouring(a.input);
  const int n = std::max(1, c.n());
  const double gamma = a.gamma.value_or(std::pow(static_cast<double>(n), -1.0 / 3.0));
  const double delta = a.delta.value_or(2.0 * gamma);
  const ForestRun run = long_rainbow_path_forest(c, full_mask(c), gamma, delta);
  s.emit(a.output, to_text(write_forest, run.forest.paths()));
  if (!a.trace.empty()) write_file(a.trace, to_text(write_cascade_traces, run.cascades));
  Report r;
  r.summary = {{"n", std::to_string(c.n())},
               {"gamma", format_double(gamma)},
               {"delta", format_double(delta)},
               {"condition_value", format_double(run.condition.value)},
               {"edges", std::to_string(run.forest.edge_count())},
               {"paths", std::to_string(run.forest.path_count())},
               {"max_paths", std::to_string(run.condition.max_paths)},
               {"target_edges", std::to_string(run.target_edges)},
               {"greedy_edges", std::to_string(run.greedy_edges)},
               {"cascades", std::to_string(run.cascades.size())}};
  return r;
}

// ---- cycle ----------------------------------------------------------------

struct CycleArgs {
  std::string input;
  std::string preset = "desk";
  std::optional<double> p;
  std::optional<int> b;
  std::optional<int> m;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<int> rounds;
  std::optional<int> resamples;
  std::string stats;
  std::string output;
};

Report cmd_cycle(Session& s, const CycleArgs& a) {
  const EdgeColouring c = s.colouring(a.input);
  CycleParams params = cycle_preset(a.preset, c.n());
  if (a.p) params.p = *a.p;
  if (a.b) params.b = *a.b;
  if (a.m) params.m = *a.m;
  if (a.gamma) params.gamma = *a.gamma;
  if (a.delta) params.delta = *a.delta;
  if (a.rounds) params.rounds = *a.rounds;
  if (a.resamples) params.resamples = *a.resamples;
  s.manifest().set_seed(s.globals().seed);
  s.manifest().set_preset(a.preset);
  const CycleResult result = long_rainbow_cycle(c, params, s.globals().seed);
  s.emit(a.output, to_text(write_cycle, result.cycle));
  const KeyValues stats = cycle_stats_values(result.stats);
  if (!a.stats.empty()) write_file(a.stats, to_text(write_key_values, stats));
  Report r;
  r.summary = stats;
  if (!result.diagnostic.empty()) r.summary.emplace_back("diagnostic", result.diagnostic);
  if (result.cycle.empty()) {
    r.exit_code = kExitExhausted;
    r.outcome = "no_cycle";
  }
  return r;
}

// ---- embed-tree -----------------------------------------------------------

struct EmbedArgs {
  std::string colouring;
  std::string tree;
  std::string preset = "desk";
  std::optional<int> max_retries;
  std::optional<int> repair_steps;
  bool enforce = false;
  std::string log;
  std::string output;
};

Report cmd_embed(Session& s, const EmbedArgs& a) {
  const EdgeColouring c = s.colouring(a.colouring);
  const TreeSpec tree = s.tree(a.tree);
  EmbedParams params = embed_preset(a.preset);
  if (a.max_retries) params.max_retries = *a.max_retries;
  if (a.repair_steps) params.repair_steps = *a.repair_steps;
  params.enforce_hypotheses = a.enforce;
  s.manifest().set_seed(s.globals().seed);
  s.manifest().set_preset(a.preset);
  const EmbedResult result = embed_tree(c, tree, s.globals().seed, params);
  if (!a.log.empty()) {
    std::string text;
    for (const auto& line : result.log) text += line + '\n';
    write_file(a.log, text);
  }
  Report r;
  r.summary = {{"n", std::to_string(c.n())},
               {"success", yes_no(result.success)},
               {"attempts", std::to_string(result.attempts)},
               {"lll_value", format_double(result.lll.value)},
               {"lll_holds", yes_no(result.lll.holds)},
               {"weights_pass", yes_no(result.weight_report.pass)},
               {"relations_hold", yes_no(all_hold(result.relations))}};
  if (result.success) {
    s.emit(a.output, to_text(write_embedding, result.embedding));
  } else {
    for (const auto& e : result.bad_events) {
      r.summary.emplace_back("bad_event", std::string(family_name(e.family)) + " colour " + std::to_string(e.colour));
    }
    r.exit_code = kExitExhausted;
    r.outcome = "retries_exhausted";
  }
  return r;
}

// ---- certify --------------------------------------------------------------

struct CertifyArgs {
  double r = 0.25;
  double D = 4.0;
  double chi = 0.0;
  double alpha = 0.0;
  std::string relations;  // preset whose constants are checked
};

Report cmd_certify(Session& s, const CertifyArgs& a) {
  (void)s;
  const LllResult lll = lll_condition(a.r, a.D, a.chi, a.alpha);
  Report r;
  r.summary = {{"r", format_double(a.r)},     {"D", format_double(a.D)},
               {"chi", format_double(a.chi)}, {"alpha", format_double(a.alpha)},
               {"value", format_double(lll.value)}, {"holds", yes_no(lll.holds)}};
  bool ok = lll.holds;
  if (!a.relations.empty()) {
    for (const auto& check : check_constant_relations(embed_preset(a.relations).constants)) {
      r.summary.emplace_back("relation", check.name + (check.holds ? " holds" : " fails"));
      ok = ok && check.holds;
    }
  }
  if (!ok) {
    r.exit_code = kExitValidation;
    r.outcome = "fails";
  }
  return r;
}

// ---- counterexample -------------------------------------------------------

struct CounterArgs {
  int k = 2;
  int n = 4;
  std::string colouring;
  std::string tree;
  std::string embedding;
  std::string output;
};

bool is_mm_colouring(const EdgeColouring& c, int& k) {
  const int n = c.n();
  if (c.directed() || n < 2 || (n & (n - 1)) != 0) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (c.colour(u, v) != (u ^ v)) return false;
    }
  }
  k = 0;
  while ((1 << k) < n) ++k;
  return true;
}

Report cmd_counter_certify(Session& s, const CounterArgs& a) {
  const EdgeColouring c = s.colouring(a.colouring);
  const TreeSpec tree = s.tree(a.tree);
  std::istringstream in(s.load(a.embedding));
  const std::vector<Vertex> embedding = read_embedding(in);
  Report r;
  int k = 0;
  bool certified = false;
  if (is_mm_colouring(c, k)) {
    const ParityCertificate cert = parity_certificate(k, tree, embedding);
    r.summary = {{"certificate", "parity"},
                 {"k", std::to_string(k)},
                 {"sum", std::to_string(cert.evaluated_sum)},
                 {"pair", std::to_string(cert.even_degree_pair.first) + " " +
                              std::to_string(cert.even_degree_pair.second)},
                 {"all_but_two_even", yes_no(cert.all_but_two_even)},
                 {"colour_xor", std::to_string(embedded_colour_xor(tree, embedding))}};
    certified = cert.evaluated_sum != 0;
  } else {
    const MissingColourWitness w = missing_colour_check(c, tree, embedding);
    r.summary = {{"certificate", "missing-colour"},
                 {"x", std::to_string(w.x)},
                 {"y", std::to_string(w.y)},
                 {"colour", std::to_string(w.colour)},
                 {"absent", yes_no(w.absent)}};
    certified = w.absent;
  }
  r.summary.emplace_back("certified", yes_no(certified));
  if (!certified) {
    r.exit_code = kExitValidation;
    r.outcome = "not_certified";
  }
  return r;
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::string which;
  std::string input;
  std::string tree;
  std::string output;
};

std::string vertex_line(const std::vector<Vertex>& vs) {
  std::string line;
  for (Vertex v : vs) line += (line.empty() ? "" : " ") + std::to_string(v);
  return line;
}

Report cmd_oracle(Session& s, const OracleArgs& a) {
  const EdgeColouring c = s.colouring(a.input);
  const OracleBudget budget = s.oracle_budget();
  Report r;
  if (a.which == "forest") {
    const ForestOracleResult res = brute_max_rainbow_path_forest(c, budget);
    s.emit(a.output, to_text(write_forest, res.witness));
    r.summary = {{"max_edges", std::to_string(res.max_edges)}, {"nodes", std::to_string(res.nodes)}};
  } else if (a.which == "hamilton") {
    const HamiltonOracleResult res = brute_rainbow_hamilton_path_exists(c, budget);
    if (res.exists) s.emit(a.output, vertex_line(res.witness) + "\n");
    r.summary = {{"exists", yes_no(res.exists)}, {"nodes", std::to_string(res.nodes)}};
  } else if (a.which == "tree") {
    if (a.tree.empty()) throw ParameterError("oracle tree needs --tree");
    const TreeOracleResult res = brute_rainbow_tree_embedding_exists(c, s.tree(a.tree), budget);
    if (res.exists) s.emit(a.output, to_text(write_embedding, res.witness));
    r.summary = {{"exists", yes_no(res.exists)}, {"nodes", std::to_string(res.nodes)}};
  } else if (a.which == "cycle") {
    const CycleOracleResult res = brute_max_rainbow_cycle(c, budget);
    if (res.max_length > 0) s.emit(a.output, to_text(write_cycle, res.witness));
    r.summary = {{"max_length", std::to_string(res.max_length)}, {"nodes", std::to_string(res.nodes)}};
  } else {
    throw ParameterError("unknown oracle '" + a.which + "' (expected forest, hamilton, tree or cycle)");
  }
  return r;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string colouring;
  std::string forest;
  std::string cycle;
  std::string embedding;
  std::string tree;
};

Report cmd_verify(Session& s, const VerifyArgs& a) {
  const EdgeColouring c = s.colouring(a.colouring);
  const int given = !a.forest.empty() + !a.cycle.empty() + !a.embedding.empty();
  if (given != 1) throw ParameterError("verify needs exactly one of --forest, --cycle, --embedding");
  std::optional<std::string> violation;
  std::string kind;
  if (!a.forest.empty()) {
    kind = "forest";
    std::istringstream in(s.load(a.forest));
    violation = check_path_forest(c, read_forest(in));
  } else if (!a.cycle.empty()) {
    kind = "cycle";
    std::istringstream in(s.load(a.cycle));
    violation = check_rainbow_cycle(c, read_cycle(in));
  } else {
    kind = "embedding";
    if (a.tree.empty()) throw ParameterError("verify --embedding needs --tree");
    const TreeSpec tree = s.tree(a.tree);
    std::istringstream in(s.load(a.embedding));
    violation = check_embedding(c, tree, read_embedding(in));
  }
  Report r;
  r.summary = {{"structure", kind}, {"result", violation ? "fail" : "pass"}};
  if (violation) {
    r.summary.emplace_back("violation", *violation);
    r.exit_code = kExitValidation;
    r.outcome = "fail";
  }
  return r;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string task;
  std::vector<int> sizes;
  int trials = 5;
  int threads = 0;
  bool assert_trend = false;
  std::string output;
};

Report cmd_bench(Session& s, const BenchArgs& a) {
  BenchOptions options;
  options.task = a.task;
  options.sizes = a.sizes;
  options.trials = a.trials;
  options.seed = s.globals().seed;
  options.threads = a.threads;
  s.manifest().set_seed(options.seed);
  const std::vector<BenchRow> rows = run_bench(options);
  s.emit(a.output, bench_table(a.task, rows));
  Report r;
  const bool trend = trend_holds(a.task, rows);
  r.summary = {{"task", a.task}, {"rows", std::to_string(rows.size())}, {"trend_holds", yes_no(trend)}};
  for (const auto& row : rows) {
    r.summary.emplace_back("seconds_n" + std::to_string(row.n), format_double(row.seconds));
  }
  if (a.assert_trend && !trend) {
    r.exit_code = kExitValidation;
    r.outcome = "trend_fails";
  }
  return r;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::validation:
    case ErrorKind::parse:
      return kExitValidation;
    case ErrorKind::parameter:
      return kExitParameter;
    case ErrorKind::exhausted:
      return kExitExhausted;
  }
  return kExitValidation;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"rainbow: rainbow paths, cycles and spanning trees in properly edge-coloured complete graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for every random choice (default 0)");
  app.add_option("--budget", globals.budget, "Node-expansion limit for the exhaustive oracles");
  app.add_option("--format", globals.format, "Summary format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--manifest", globals.manifest, "Write a run manifest to this path");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a colouring or tree");
  gen_cmd->add_option("kind", gen.kind, "latin | latin-square | symmetric-latin | mm | round-robin | tree")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Number of vertices");
  gen_cmd->add_option("--k", gen.k, "Dimension for mm (n = 2^k)");
  gen_cmd->add_option("--max-degree", gen.max_degree, "Maximum degree for tree");
  gen_cmd->add_option("-o,--output", gen.output, "Output path (default stdout)");

  ForestArgs forest;
  auto* forest_cmd = app.add_subcommand("forest", "Long rainbow path forest in a directed colouring");
  forest_cmd->add_option("--input", forest.input, "Colouring file")->required();
  forest_cmd->add_option("--gamma", forest.gamma, "Path budget fraction (default n^(-1/3))");
  forest_cmd->add_option("--delta", forest.delta, "Deficiency parameter (default 2 gamma)");
  forest_cmd->add_option("--trace", forest.trace, "Write the cascade trace here");
  forest_cmd->add_option("-o,--output", forest.output, "Forest output path (default stdout)");

  CycleArgs cycle;
  auto* cycle_cmd = app.add_subcommand("cycle", "Long rainbow directed cycle");
  cycle_cmd->add_option("--input", cycle.input, "Colouring file")->required();
  cycle_cmd->add_option("--preset", cycle.preset, "desk | paper-s24");
  cycle_cmd->add_option("--p", cycle.p, "Probability a colour is reserved for the expander");
  cycle_cmd->add_option("--b", cycle.b, "Window size for rotations and closing");
  cycle_cmd->add_option("--m", cycle.m, "Minimum position for rotation targets");
  cycle_cmd->add_option("--gamma", cycle.gamma, "Forest path budget fraction");
  cycle_cmd->add_option("--delta", cycle.delta, "Forest deficiency parameter");
  cycle_cmd->add_option("--rounds", cycle.rounds, "Rotation rounds (0 = n)");
  cycle_cmd->add_option("--resamples", cycle.resamples, "Colour-split resamples");
  cycle_cmd->add_option("--stats", cycle.stats, "Write key=value statistics here");
  cycle_cmd->add_option("-o,--output", cycle.output, "Cycle output path (default stdout)");

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed-tree", "Rainbow spanning-tree embedding");
  embed_cmd->add_option("--colouring", embed.colouring, "Undirected colouring file")->required();
  embed_cmd->add_option("--tree", embed.tree, "Tree file")->required();
  embed_cmd->add_option("--preset", embed.preset, "desk | paper-s34");
  embed_cmd->add_option("--max-retries", embed.max_retries, "Completion retries");
  embed_cmd->add_option("--repair-steps", embed.repair_steps, "Tabu repair steps per retry (negative: 100 per vertex)");
  embed_cmd->add_flag("--enforce-hypotheses", embed.enforce, "Refuse instances failing the hypothesis checks");
  embed_cmd->add_option("--log", embed.log, "Write the stage log here");
  embed_cmd->add_option("-o,--output", embed.output, "Embedding output path (default stdout)");

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "Evaluate the local-lemma condition");
  certify_cmd->add_option("--r", certify.r, "Fraction of vertices placed greedily");
  certify_cmd->add_option("--D", certify.D, "Maximum degree among the remaining vertices");
  certify_cmd->add_option("--chi", certify.chi, "Weight bound chi");
  certify_cmd->add_option("--alpha", certify.alpha, "Global boundedness alpha");
  certify_cmd->add_option("--relations", certify.relations, "Also check the constant relations of a preset");

  CounterArgs counter;
  auto* counter_cmd = app.add_subcommand("counterexample", "Counterexample constructions and certificates");
  counter_cmd->require_subcommand(1);
  auto* mm_cmd = counter_cmd->add_subcommand("mm", "XOR colouring of K_{2^k}");
  mm_cmd->add_option("--k", counter.k, "Dimension")->required();
  mm_cmd->add_option("-o,--output", counter.output, "Output path (default stdout)");
  auto* two_star_cmd = counter_cmd->add_subcommand("two-star", "Two-star tree");
  two_star_cmd->add_option("--n", counter.n, "Even number of vertices >= 4")->required();
  two_star_cmd->add_option("-o,--output", counter.output, "Output path (default stdout)");
  auto* cert_cmd = counter_cmd->add_subcommand("certify", "Certify that an embedding is not rainbow");
  cert_cmd->add_option("--colouring", counter.colouring, "Colouring file")->required();
  cert_cmd->add_option("--tree", counter.tree, "Tree file")->required();
  cert_cmd->add_option("--embedding", counter.embedding, "Embedding file")->required();

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search on small instances");
  oracle_cmd->add_option("which", oracle.which, "forest | hamilton | tree | cycle")->required();
  oracle_cmd->add_option("--input", oracle.input, "Colouring file")->required();
  oracle_cmd->add_option("--tree", oracle.tree, "Tree file (oracle tree)");
  oracle_cmd->add_option("-o,--output", oracle.output, "Witness output path (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a structure with the exact validators");
  verify_cmd->add_option("--colouring", verify.colouring, "Colouring file")->required();
  verify_cmd->add_option("--forest", verify.forest, "Forest file");
  verify_cmd->add_option("--cycle", verify.cycle, "Cycle file");
  verify_cmd->add_option("--embedding", verify.embedding, "Embedding file");
  verify_cmd->add_option("--tree", verify.tree, "Tree file (with --embedding)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Seeded trials over a list of sizes");
  bench_cmd->add_option("task", bench.task, "cycle | forest | embed")->required();
  bench_cmd->add_option("--n", bench.sizes, "Sizes")->required()->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Trials per size");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");
  bench_cmd->add_flag("--assert-trend", bench.assert_trend, "Exit 2 unless the trend check passes");
  bench_cmd->add_option("-o,--output", bench.output, "Table output path (default stdout)");

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "Rerun the command recorded in a manifest");
  replay_cmd->add_option("manifest", replay_path, "Manifest written by --manifest")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (replay_cmd->parsed()) {
    std::vector<std::string> args;
    try {
      std::istringstream in(read_file(replay_path));
      args = manifest_args(read_key_values(in));
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return exit_code_for(e);
    }
    if (!args.empty() && args.front() == "replay") {
      std::cerr << "error: manifest records a replay\n";
      return kExitValidation;
    }
    std::vector<char*> replay_argv{argv[0]};
    for (std::string& a : args) replay_argv.push_back(a.data());
    return run(static_cast<int>(replay_argv.size()), replay_argv.data());
  }

  RunManifest manifest(argc, argv);
  Session session(globals, manifest);
  Report report;
  std::string name;
  bool summary_to_stdout = false;
  try {
    if (gen_cmd->parsed()) {
      name = "gen";
      report = cmd_gen(session, gen);
    } else if (forest_cmd->parsed()) {
      name = "forest";
      report = cmd_forest(session, forest);
    } else if (cycle_cmd->parsed()) {
      name = "cycle";
      report = cmd_cycle(session, cycle);
    } else if (embed_cmd->parsed()) {
      name = "embed-tree";
      report = cmd_embed(session, embed);
    } else if (certify_cmd->parsed()) {
      name = "certify";
      summary_to_stdout = true;
      report = cmd_certify(session, certify);
    } else if (counter_cmd->parsed()) {
      if (mm_cmd->parsed()) {
        name = "counterexample mm";
        session.emit(counter.output, to_text(write_colouring, mm_colouring(counter.k)));
      } else if (two_star_cmd->parsed()) {
        name = "counterexample two-star";
        session.emit(counter.output, to_text(write_tree, two_star_tree(counter.n)));
      } else {
        name = "counterexample certify";
        summary_to_stdout = true;
        report = cmd_counter_certify(session, counter);
      }
    } else if (oracle_cmd->parsed()) {
      name = "oracle";
      report = cmd_oracle(session, oracle);
    } else if (verify_cmd->parsed()) {
      name = "verify";
      summary_to_stdout = true;
      report = cmd_verify(session, verify);
    } else if (bench_cmd->parsed()) {
      name = "bench";
      report = cmd_bench(session, bench);
    }
  } catch (const Error& e) {
    report.exit_code = exit_code_for(e);
    report.outcome = "error";
    report.summary = {{"error", e.what()}};
    std::cerr << "error: " << e.what() << '\n';
  }
  if (report.outcome != "error" && !report.summary.empty()) {
    session.summary(summary_to_stdout ? std::cout : std::cerr, report.summary);
  }
  if (!globals.manifest.empty()) {
    manifest.set_subcommand(name);
    for (const auto& [k, v] : report.summary) {
      if (k != "diagnostic" && k.rfind("seconds_", 0) != 0) manifest.add_output(k, v);
    }
    manifest.write(globals.manifest, report.exit_code, report.outcome);
  }
  return report.exit_code;
}

}  // namespace rainbow::cli

int main(int argc, char** argv) {
  try {
    return rainbow::cli::run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
