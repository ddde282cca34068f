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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/io.hpp"
#include "rainbow/path_forest.hpp"

namespace rainbow {

// The reserved subgraph H: every edge of the host whose colour is live. Edges
// are never stored; an edge (u, v) exists iff colour(u, v) is live. In-degrees
// and the live edge count are maintained as colours are consumed.
class ExpanderView {
 public:
  ExpanderView(const EdgeColouring& host, const ColourMask& live);

  const EdgeColouring& host() const { return *host_; }
  bool live(Colour f) const { return live_[static_cast<std::size_t>(f)] != 0; }
  bool has_edge(Vertex u, Vertex v) const { return u != v && live(host_->colour(u, v)); }
  const ColourMask& live_mask() const { return live_; }

  int in_degree(Vertex v) const { return in_degree_[static_cast<std::size_t>(v)]; }
  int min_in_degree() const;
  std::size_t live_edge_count() const { return live_edges_; }
  int live_colour_count() const { return live_colours_; }
  const std::vector<Colour>& deletion_log() const { return deletion_log_; }

  // Removes every edge whose colour is listed. Already consumed colours and
  // repeats are ignored.
  void consume(std::span<const Colour> colours);

 private:
  const EdgeColouring* host_;
  ColourMask live_;
  std::vector<int> in_degree_;
  std::size_t live_edges_ = 0;
  int live_colours_ = 0;
  std::vector<Colour> deletion_log_;
};

enum class RotationStatus { rotated, already_long, shortfall };

struct RotationOutcome {
  PathForest forest;
  std::array<Edge, 3> used;  // e1, e2, e3 (equal entries in cases 1 and 2)
  int case_tag = 0;
  std::optional<std::pair<Vertex, Vertex>> rotation;  // (v_k, v_a) in case 3
};

struct RotationResult {
  RotationStatus status = RotationStatus::shortfall;
  std::optional<RotationOutcome> outcome;
  std::string diagnostic;
};

// One rotation-extension step on the first path of `forest`. Cases are tried
// in the order 1, 2, 3; within a case the candidate that adds the most
// vertices to the first path wins, ties going to the lowest ids. Throws
// ParameterError if m * r > b and ValidationError if H shares a colour with
// the forest.
RotationResult rotate_extend(const PathForest& forest, const ExpanderView& h, int b, int m);

// Colours of the edges in `used`, deduplicated.
std::vector<Colour> used_colours(const EdgeColouring& host, const std::array<Edge, 3>& used);

// Longest cycle obtained from an H-edge leading from the last b vertices of
// `path` back to one of its first b vertices, or std::nullopt.
std::optional<std::vector<Vertex>> close_cycle(std::span<const Vertex> path, const ExpanderView& h, int b);

// Simple directed cycle with pairwise distinct colours (closing edge from the
// last vertex to the first included). Returns the first violation.
std::optional<std::string> check_rainbow_cycle(const EdgeColouring& c, std::span<const Vertex> cycle);

// Pipeline schedule. Unset optionals are fitted per attempt: delta from the
// minimum in-degree of G, gamma as the smallest value passing the forest
// condition, and b as max(b_scale * n^(2/5), m * r).
struct CycleParams {
  std::string preset = "desk";
  double p = 0.0;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<int> b;
  double b_scale = 1.0;
  int m = 1;
  int rounds = 0;
  int resamples = 5;
  double audit_slack = -1.0;  // negative disables the H in-degree audit
};

// "desk" (default) or "paper-s24". Throws ParameterError on other names.
CycleParams cycle_preset(const std::string& name, int n);

struct CycleStats {
  int n = 0;
  int length = 0;        // cycle length, 0 if none was closed
  int path_length = 0;   // first path before closing
  int attempts = 0;
  int rounds = 0;
  int case_counts[3] = {0, 0, 0};
  int forest_edges = 0;
  int forest_paths = 0;
  int h_colours = 0;
  double p = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  int b = 0;
  int m = 0;
  bool already_long = false;
  bool shortfall = false;
  bool closed = false;
};

struct CycleResult {
  std::vector<Vertex> cycle;      // empty when no attempt closed a cycle
  std::vector<Vertex> best_path;  // longest rainbow path seen
  CycleStats stats;
  std::string diagnostic;
};

// Colour split -> rainbow path forest in G -> rotation rounds -> closing.
// Resamples H (new seed substream) up to params.resamples times and keeps the
// best outcome. Deterministic in (c, params, seed).
CycleResult long_rainbow_cycle(const EdgeColouring& c, const CycleParams& params, std::uint64_t seed);

KeyValues cycle_stats_values(const CycleStats& stats);

}  // namespace rainbow
