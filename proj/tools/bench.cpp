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

#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "rainbow/colouring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/path_forest.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/rotation_glue.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/tree_embed.hpp"

namespace rainbow::cli {

namespace {

double run_trial(const std::string& task, int n, std::uint64_t seed, int trial) {
  const std::uint64_t base = substream_seed(substream_seed(seed, static_cast<std::uint64_t>(n)),
                                            static_cast<std::uint64_t>(trial));
  const std::uint64_t instance_seed = substream_seed(base, 0);
  const std::uint64_t algo_seed = substream_seed(base, 1);
  if (task == "cycle") {
    const EdgeColouring c = latin_to_colouring(random_latin_square(n, instance_seed));
    const CycleResult r = long_rainbow_cycle(c, cycle_preset("desk", n), algo_seed);
    return static_cast<double>(n - r.stats.length) / n;
  }
  if (task == "forest") {
    const EdgeColouring c = latin_to_colouring(random_latin_square(n, instance_seed));
    const double gamma = std::pow(static_cast<double>(n), -1.0 / 3.0);
    const ForestRun run = long_rainbow_path_forest(c, full_mask(c), gamma, 2.0 * gamma);
    return static_cast<double>(n - run.forest.edge_count()) / n;
  }
  if (task == "embed") {
    const EdgeColouring c = round_robin_colouring(n);
    const TreeSpec tree = random_tree(n, 4, instance_seed);
    const EmbedResult r = embed_tree(c, tree, algo_seed, embed_preset("desk"));
    return r.success ? 1.0 : 0.0;
  }
  throw ParameterError("unknown bench task '" + task + "' (expected cycle, forest or embed)");
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.trials < 1) throw ParameterError("bench needs at least one trial");
  if (options.sizes.empty()) throw ParameterError("bench needs at least one size");
  struct Job {
    std::size_t row;
    int n;
    int trial;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < options.sizes.size(); ++i) {
    for (int t = 0; t < options.trials; ++t) jobs.push_back({i, options.sizes[i], t});
  }
  std::vector<double> values(jobs.size(), 0.0);
  std::vector<double> seconds(jobs.size(), 0.0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        const auto start = std::chrono::steady_clock::now();
        values[j] = run_trial(options.task, jobs[j].n, options.seed, jobs[j].trial);
        seconds[j] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<BenchRow> rows(options.sizes.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].n = options.sizes[i];
    rows[i].trials = options.trials;
    rows[i].min = 1e300;
    rows[i].max = -1e300;
  }
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    BenchRow& row = rows[jobs[j].row];
    row.mean += values[j];
    row.min = std::min(row.min, values[j]);
    row.max = std::max(row.max, values[j]);
    row.seconds += seconds[j];
  }
  for (auto& row : rows) row.mean /= row.trials;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    BenchRow& row = rows[jobs[j].row];
    row.stddev += (values[j] - row.mean) * (values[j] - row.mean);
  }
  for (auto& row : rows) row.stddev = row.trials > 1 ? std::sqrt(row.stddev / (row.trials - 1)) : 0.0;
  return rows;
}

bool trend_holds(const std::string& task, const std::vector<BenchRow>& rows) {
  if (task == "embed") {
    return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.mean >= 0.95; });
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].mean < rows[i - 1].mean)) return false;
  }
  return true;
}

std::string bench_table(const std::string& task, const std::vector<BenchRow>& rows) {
  const char* metric = task == "embed" ? "success_rate" : "deficiency";
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %6s %-13s %10s %10s %10s %10s\n", "task", "n", "metric", "mean", "stddev",
                "min", "max");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-8s %6d %-13s %10.6f %10.6f %10.6f %10.6f\n", task.c_str(), r.n, metric, r.mean,
                  r.stddev, r.min, r.max);
    out += line;
  }
  return out;
}

}  // namespace rainbow::cli
