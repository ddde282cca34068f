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
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

// Limits for the exhaustive searches. A max_n of 0 selects the oracle's own
// default (forest 6, Hamilton path 8, tree embedding 8, cycle 7). Inputs above
// max_n, or searches exceeding the node or time limit, throw ExhaustedError.
struct OracleBudget {
  int max_n = 0;
  std::uint64_t max_nodes = 200'000'000;
  double timeout_seconds = 60.0;
};

struct ForestOracleResult {
  int max_edges = 0;
  std::vector<std::vector<Vertex>> witness;  // paths realising max_edges
  std::uint64_t nodes = 0;
};

// Exact maximum rainbow path forest (in/out-degree <= 1, acyclic) in a
// directed colouring. Branches over the out-edge of each vertex in turn.
ForestOracleResult brute_max_rainbow_path_forest(const EdgeColouring& c, const OracleBudget& budget = {});

struct HamiltonOracleResult {
  bool exists = false;
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

// Rainbow Hamilton path; edges follow the orientation for directed input.
HamiltonOracleResult brute_rainbow_hamilton_path_exists(const EdgeColouring& c, const OracleBudget& budget = {});

struct TreeOracleResult {
  bool exists = false;
  std::vector<Vertex> witness;  // tree vertex -> host vertex
  std::uint64_t nodes = 0;
};

// Rainbow embedding of a spanning tree into an undirected colouring, placing
// tree vertices in BFS order so each one has a single placed neighbour.
TreeOracleResult brute_rainbow_tree_embedding_exists(const EdgeColouring& c, const TreeSpec& tree,
                                                     const OracleBudget& budget = {});

struct CycleOracleResult {
  int max_length = 0;
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

// Longest rainbow simple cycle (directed; undirected cycles need length >= 3).
CycleOracleResult brute_max_rainbow_cycle(const EdgeColouring& c, const OracleBudget& budget = {});

}  // namespace rainbow
