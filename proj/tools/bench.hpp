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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rainbow::cli {

struct BenchRow {
  int n = 0;
  int trials = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
  double seconds = 0.0;
};

struct BenchOptions {
  std::string task;  // cycle | forest | embed
  std::vector<int> sizes;
  int trials = 5;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
};

// Per-trial metric: deficiency fraction (n - L) / n for cycle and forest,
// success (0 or 1) for embed. Trial t at size n draws its instance and its
// algorithm seed from substreams of (seed, n, t); rows are ordered by n.
std::vector<BenchRow> run_bench(const BenchOptions& options);

// cycle/forest: the mean strictly decreases with n. embed: every mean (the
// success rate) is at least 0.95.
bool trend_holds(const std::string& task, const std::vector<BenchRow>& rows);

std::string bench_table(const std::string& task, const std::vector<BenchRow>& rows);

}  // namespace rainbow::cli
