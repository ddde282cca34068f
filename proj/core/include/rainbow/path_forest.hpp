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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

// Vertex-disjoint directed paths inside a host colouring. Paths are kept as
// ordered vertex lists plus a membership index (path id, position), so
// successor/predecessor queries are O(1).
//
// Mutations keep the structural invariants (disjoint, in/out-degree <= 1, no
// cycle) and throw ValidationError otherwise. Rainbowness is tracked through
// colour multiplicities but not enforced, because an augmentation step holds
// one repeated colour between its add and its delete.
class PathForest {
 public:
  explicit PathForest(const EdgeColouring& host);

  // Throws ValidationError if the lists do not form a path forest.
  static PathForest from_paths(const EdgeColouring& host,
                               const std::vector<std::vector<Vertex>>& paths);

  const EdgeColouring& host() const { return *host_; }
  const std::vector<std::vector<Vertex>>& paths() const { return paths_; }

  int path_count() const { return static_cast<int>(paths_.size()); }
  int edge_count() const { return edges_; }
  int vertex_count() const { return vertices_; }

  bool covers(Vertex v) const { return path_of_[idx(v)] >= 0; }
  int path_of(Vertex v) const { return path_of_[idx(v)]; }
  int position_of(Vertex v) const { return position_of_[idx(v)]; }
  bool is_first(Vertex v) const { return covers(v) && position_of(v) == 0; }
  bool is_last(Vertex v) const;
  Vertex successor(Vertex v) const;
  Vertex predecessor(Vertex v) const;
  Vertex first_of_path(Vertex v) const;
  Vertex last_of_path(Vertex v) const;

  // Colour of the edge v -> successor(v), if any.
  std::optional<Colour> out_colour(Vertex v) const;

  std::vector<Vertex> first_vertices() const;  // sorted
  std::vector<Vertex> last_vertices() const;   // sorted

  int colour_multiplicity(Colour f) const;
  bool uses_colour(Colour f) const { return colour_multiplicity(f) > 0; }
  bool is_rainbow() const { return repeated_colours_ == 0; }
  std::vector<Colour> colours() const;  // sorted, with multiplicity collapsed
  std::vector<Edge> edges() const;      // sorted

  void add_singleton(Vertex v);
  // Adds u -> v where u ends one path and v starts a different path.
  void join(Vertex u, Vertex v);
  // Deletes the edge u -> successor(u); the tail becomes a new path.
  void cut(Vertex u);

  // Full invariant check, including rainbowness. Returns the first violation.
  std::optional<std::string> check() const;

 private:
  std::size_t idx(Vertex v) const { return static_cast<std::size_t>(v); }
  void reindex(int path_id);
  void bump_colour(Colour f, int delta);

  const EdgeColouring* host_;
  std::vector<std::vector<Vertex>> paths_;
  std::vector<int> path_of_;
  std::vector<int> position_of_;
  std::vector<int> colour_mult_;
  int edges_ = 0;
  int vertices_ = 0;
  int repeated_colours_ = 0;
};

// Validates raw path lists: vertex range, branching, repeats, cycles,
// rainbowness and (when given) that every edge colour is allowed.
std::optional<std::string> check_path_forest(const EdgeColouring& host,
                                             const std::vector<std::vector<Vertex>>& paths,
                                             const ColourMask* allowed = nullptr);

// Adds v -> f1 unless that closes a cycle, else v -> f2. Returns the edge.
// Requires v to end a path and f1 != f2 to start paths.
Edge try_append(PathForest& forest, Vertex v, Vertex f1, Vertex f2);

// floor(floor(gamma n) / q) / q > 1 with q = floor(1 / delta).
struct ForestCondition {
  int block_size = 0;   // q
  int max_paths = 0;    // floor(gamma n)
  int block_count = 0;  // s + 1
  double value = 0.0;
  bool holds = false;
};

ForestCondition forest_condition(int n, double gamma, double delta);

struct CascadeStep {
  int index = 0;  // i_k
  Vertex vertex = kNoVertex;  // v_k
  Edge added;
  Colour added_colour = kNoColour;
  std::optional<Edge> deleted;
};

using CascadeTrace = std::vector<CascadeStep>;

// Blocks Q_0..Q_s of first vertices, nested colour sets C_0 <= ... <= C_{s+1}
// (stored as the level at which each colour enters) and the vertex sets
// V_1..V_{s+1}, all computed from one snapshot of the forest.
class AugmentationState {
 public:
  static AugmentationState build(const PathForest& forest, const ColourMask& allowed,
                                 double gamma, double delta);

  double gamma() const { return gamma_; }
  double delta() const { return delta_; }
  int block_size() const { return block_size_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }

  // Smallest i with f in C_i, or -1 when f is in none of C_0..C_{s+1}.
  int colour_level(Colour f) const;
  // |C_i| for i = 0..s+1.
  const std::vector<int>& colour_set_sizes() const { return colour_set_sizes_; }
  // V_i for i = 1..s+1 (element 0 is V_1), sorted.
  const std::vector<std::vector<Vertex>>& vertex_sets() const { return vertex_sets_; }
  // The forest vertex whose out-edge has colour f.
  Vertex colour_witness(Colour f) const;

  // Smallest i (then lowest vertex) with a vertex of V_i that ends a path or
  // is uncovered.
  std::optional<std::pair<int, Vertex>> violating() const;

 private:
  double gamma_ = 0.0;
  double delta_ = 0.0;
  int block_size_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<int> colour_level_;
  std::vector<int> colour_set_sizes_;
  std::vector<std::vector<Vertex>> vertex_sets_;
  std::vector<Vertex> witness_;
  std::vector<std::pair<int, Vertex>> violators_;
};

// One cascade of swaps yielding a rainbow forest with one more edge and no
// more paths than before. Mutates `forest`. Returns std::nullopt when no V_i
// meets l(F) or the uncovered vertices (the stopping state).
std::optional<CascadeTrace> augment_once(PathForest& forest, const ColourMask& allowed,
                                         const AugmentationState& state);

struct ForestRun {
  PathForest forest;
  ForestCondition condition;
  int greedy_edges = 0;
  int target_edges = 0;  // ceil((1 - 3 delta) n), clamped at 0
  std::vector<CascadeTrace> cascades;
  std::vector<int> final_colour_set_sizes;
};

// Rainbow path forest in the digraph of `allowed` colours with at most
// floor(gamma n) paths and at least (1 - 3 delta) n edges. Throws
// ParameterError on a failed parameter condition or min in-degree.
ForestRun long_rainbow_path_forest(const EdgeColouring& host, const ColourMask& allowed,
                                   double gamma, double delta);

// Greedy warm start: extend from the current last vertex to the lowest
// uncovered vertex over an unused allowed colour, opening at most max_paths.
PathForest greedy_path_forest(const EdgeColouring& host, const ColourMask& allowed,
                              int max_paths);

// floor with a small tolerance for values that should be integers.
int stable_floor(double x);

}  // namespace rainbow
