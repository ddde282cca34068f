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

#include "rainbow/tree.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

TreeSpec::TreeSpec(std::vector<Vertex> parents) : parents_(std::move(parents)) {
  const auto n = parents_.size();
  if (n == 0) throw ValidationError("tree must have at least one vertex");
  parents_[0] = kNoVertex;
  degrees_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex p = parents_[i];
    if (p < 0 || static_cast<std::size_t>(p) >= i) {
      throw ValidationError("parent of vertex " + std::to_string(i) + " is " + std::to_string(p) +
                            ", expected a value in [0, " + std::to_string(i) + ")");
    }
    ++degrees_[i];
    ++degrees_[static_cast<std::size_t>(p)];
  }
  offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + static_cast<std::size_t>(degrees_[v]);
  adjacency_.assign(offset_[n], kNoVertex);
  std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
  for (std::size_t i = 1; i < n; ++i) {
    const auto p = static_cast<std::size_t>(parents_[i]);
    adjacency_[fill[i]++] = parents_[i];
    adjacency_[fill[p]++] = static_cast<Vertex>(i);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offset_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offset_[v + 1]));
  }
}

int TreeSpec::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::span<const Vertex> TreeSpec::neighbours(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return {adjacency_.data() + offset_[i], offset_[i + 1] - offset_[i]};
}

bool TreeSpec::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> TreeSpec::edges() const {
  std::vector<Edge> out;
  out.reserve(parents_.size() - 1);
  for (std::size_t i = 1; i < parents_.size(); ++i) {
    out.push_back(Edge{std::min(parents_[i], static_cast<Vertex>(i)), std::max(parents_[i], static_cast<Vertex>(i))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeSpec path_tree(int n) {
  if (n < 1) throw ParameterError("path_tree needs n >= 1");
  std::vector<Vertex> parents(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) parents[static_cast<std::size_t>(i)] = i - 1;
  return TreeSpec(std::move(parents));
}

TreeSpec star_tree(int n) {
  if (n < 1) throw ParameterError("star_tree needs n >= 1");
  return TreeSpec(std::vector<Vertex>(static_cast<std::size_t>(n), 0));
}

TreeSpec random_tree(int n, int max_degree, std::uint64_t seed) {
  if (n < 1) throw ParameterError("random_tree needs n >= 1");
  if (max_degree < 1 || (max_degree == 1 && n > 2)) {
    throw ParameterError("random_tree: max degree " + std::to_string(max_degree) + " too small for n = " +
                         std::to_string(n));
  }
  Rng rng(seed);
  std::vector<Vertex> parents(static_cast<std::size_t>(n), kNoVertex);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> open;  // vertices with spare degree
  open.reserve(static_cast<std::size_t>(n));
  open.push_back(0);
  for (Vertex i = 1; i < n; ++i) {
    const std::size_t slot = rng.below(open.size());
    const Vertex p = open[slot];
    parents[static_cast<std::size_t>(i)] = p;
    if (++degree[static_cast<std::size_t>(p)] >= max_degree) {
      open[slot] = open.back();
      open.pop_back();
    }
    degree[static_cast<std::size_t>(i)] = 1;
    if (max_degree > 1) open.push_back(i);
  }
  return TreeSpec(std::move(parents));
}

}  // namespace rainbow
