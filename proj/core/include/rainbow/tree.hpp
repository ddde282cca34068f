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
#include <span>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

// An n-vertex tree given by a parent array: parent(0) is kNoVertex and
// parent(i) < i for i >= 1. Degrees and sorted adjacency lists are cached.
class TreeSpec {
 public:
  TreeSpec() = default;

  // `parents` has n entries; entry 0 is ignored. Throws ValidationError when
  // some parent(i) is not in [0, i).
  explicit TreeSpec(std::vector<Vertex> parents);

  int n() const { return static_cast<int>(parents_.size()); }
  Vertex parent(Vertex v) const { return parents_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& parents() const { return parents_; }

  int degree(Vertex v) const { return degrees_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int max_degree() const;

  std::span<const Vertex> neighbours(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  // Edges as (min, max), sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const TreeSpec& a, const TreeSpec& b) { return a.parents_ == b.parents_; }

 private:
  std::vector<Vertex> parents_;
  std::vector<int> degrees_;
  std::vector<std::size_t> offset_;
  std::vector<Vertex> adjacency_;
};

TreeSpec path_tree(int n);
TreeSpec star_tree(int n);

// Random recursive tree: vertex i attaches to a uniform earlier vertex whose
// degree is still below max_degree. Deterministic in (n, max_degree, seed).
TreeSpec random_tree(int n, int max_degree, std::uint64_t seed);

}  // namespace rainbow
