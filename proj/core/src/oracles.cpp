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

#include "rainbow/oracles.hpp"

#include <chrono>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

// Node and wall-clock accounting shared by the searches.
class SearchGuard {
 public:
  SearchGuard(const char* name, int n, int default_max_n, const OracleBudget& budget)
      : name_(name), budget_(budget), start_(std::chrono::steady_clock::now()) {
    const int max_n = budget.max_n > 0 ? budget.max_n : default_max_n;
    if (n > max_n) {
      throw ExhaustedError(std::string(name) + " oracle refuses n = " + std::to_string(n) + " (budget " +
                           std::to_string(max_n) + ")");
    }
  }

  void expand() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) {
      throw ExhaustedError(std::string(name_) + " oracle exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    }
    if ((nodes_ & 0xfff) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.timeout_seconds) {
        throw ExhaustedError(std::string(name_) + " oracle timed out");
      }
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const char* name_;
  OracleBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

struct ForestSearch {
  const EdgeColouring& c;
  SearchGuard& guard;
  int n;
  std::vector<Vertex> succ;
  std::vector<Vertex> pred;
  std::vector<std::uint8_t> used;
  int edges = 0;
  int best = 0;
  std::vector<Vertex> best_succ;

  bool closes_cycle(Vertex v, Vertex u) const {
    for (Vertex w = u; w != kNoVertex; w = succ[at(w)]) {
      if (w == v) return true;
    }
    return false;
  }

  void run(Vertex v) {
    guard.expand();
    if (edges > best) {
      best = edges;
      best_succ = succ;
    }
    if (v == n || edges + (n - v) <= best || best == n - 1) return;
    for (Vertex u = 0; u < n; ++u) {
      if (u == v || pred[at(u)] != kNoVertex) continue;
      const Colour f = c.colour(v, u);
      if (used[at(f)] || closes_cycle(v, u)) continue;
      used[at(f)] = 1;
      succ[at(v)] = u;
      pred[at(u)] = v;
      ++edges;
      run(v + 1);
      --edges;
      pred[at(u)] = kNoVertex;
      succ[at(v)] = kNoVertex;
      used[at(f)] = 0;
    }
    run(v + 1);
  }
};

}  // namespace

ForestOracleResult brute_max_rainbow_path_forest(const EdgeColouring& c, const OracleBudget& budget) {
  if (!c.directed()) throw ValidationError("path forest oracle needs a directed colouring");
  SearchGuard guard("forest", c.n(), 6, budget);
  const int n = c.n();
  ForestSearch s{c, guard, n, std::vector<Vertex>(at(n), kNoVertex), std::vector<Vertex>(at(n), kNoVertex),
                 std::vector<std::uint8_t>(at(c.colour_bound()), 0), 0, 0, std::vector<Vertex>(at(n), kNoVertex)};
  if (n > 0) s.run(0);
  ForestOracleResult result;
  result.max_edges = s.best;
  result.nodes = guard.nodes();
  std::vector<bool> has_pred(at(n), false);
  for (Vertex v = 0; v < n; ++v) {
    if (s.best_succ[at(v)] != kNoVertex) has_pred[at(s.best_succ[at(v)])] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (has_pred[at(v)]) continue;
    std::vector<Vertex> path;
    for (Vertex w = v; w != kNoVertex; w = s.best_succ[at(w)]) path.push_back(w);
    result.witness.push_back(std::move(path));
  }
  return result;
}

HamiltonOracleResult brute_rainbow_hamilton_path_exists(const EdgeColouring& c, const OracleBudget& budget) {
  SearchGuard guard("hamilton", c.n(), 8, budget);
  const int n = c.n();
  HamiltonOracleResult result;
  if (n <= 1) {
    result.exists = true;
    if (n == 1) result.witness = {0};
    return result;
  }
  std::vector<Vertex> path;
  std::vector<std::uint8_t> on_path(at(n), 0);
  std::vector<std::uint8_t> used(at(c.colour_bound()), 0);
  auto search = [&](auto&& self) -> bool {
    guard.expand();
    if (static_cast<int>(path.size()) == n) return true;
    const Vertex last = path.back();
    for (Vertex u = 0; u < n; ++u) {
      if (on_path[at(u)]) continue;
      const Colour f = c.colour(last, u);
      if (used[at(f)]) continue;
      used[at(f)] = 1;
      on_path[at(u)] = 1;
      path.push_back(u);
      if (self(self)) return true;
      path.pop_back();
      on_path[at(u)] = 0;
      used[at(f)] = 0;
    }
    return false;
  };
  for (Vertex s = 0; s < n && !result.exists; ++s) {
    path = {s};
    on_path[at(s)] = 1;
    result.exists = search(search);
    on_path[at(s)] = 0;
  }
  if (result.exists) result.witness = path;
  result.nodes = guard.nodes();
  return result;
}

TreeOracleResult brute_rainbow_tree_embedding_exists(const EdgeColouring& c, const TreeSpec& tree,
                                                     const OracleBudget& budget) {
  if (c.directed()) throw ValidationError("tree embedding oracle needs an undirected colouring");
  if (c.n() != tree.n()) throw ValidationError("host and tree sizes differ");
  SearchGuard guard("tree", c.n(), 8, budget);
  const int n = c.n();
  TreeOracleResult result;
  if (n == 0) {
    result.exists = true;
    return result;
  }
  // BFS order from vertex 0: each vertex after the first has one earlier
  // neighbour, recorded in anchor.
  std::vector<Vertex> order{0};
  std::vector<Vertex> anchor(at(n), kNoVertex);
  std::vector<std::uint8_t> seen(at(n), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : tree.neighbours(order[i])) {
      if (seen[at(w)]) continue;
      seen[at(w)] = 1;
      anchor[at(w)] = order[i];
      order.push_back(w);
    }
  }
  std::vector<Vertex> pi(at(n), kNoVertex);
  std::vector<std::uint8_t> taken(at(n), 0);
  std::vector<std::uint8_t> used(at(c.colour_bound()), 0);
  auto search = [&](auto&& self, std::size_t k) -> bool {
    guard.expand();
    if (k == order.size()) return true;
    const Vertex t = order[k];
    const Vertex image_anchor = pi[at(anchor[at(t)])];
    for (Vertex h = 0; h < n; ++h) {
      if (taken[at(h)]) continue;
      const Colour f = c.colour(image_anchor, h);
      if (used[at(f)]) continue;
      used[at(f)] = 1;
      taken[at(h)] = 1;
      pi[at(t)] = h;
      if (self(self, k + 1)) return true;
      pi[at(t)] = kNoVertex;
      taken[at(h)] = 0;
      used[at(f)] = 0;
    }
    return false;
  };
  // The colouring need not be vertex-transitive, so the root tries every image.
  for (Vertex h = 0; h < n && !result.exists; ++h) {
    pi[0] = h;
    taken[at(h)] = 1;
    result.exists = search(search, 1);
    if (!result.exists) {
      taken[at(h)] = 0;
      pi[0] = kNoVertex;
    }
  }
  if (result.exists) result.witness = pi;
  result.nodes = guard.nodes();
  return result;
}

CycleOracleResult brute_max_rainbow_cycle(const EdgeColouring& c, const OracleBudget& budget) {
  SearchGuard guard("cycle", c.n(), 7, budget);
  const int n = c.n();
  const int min_length = c.directed() ? 2 : 3;
  CycleOracleResult result;
  std::vector<Vertex> path;
  std::vector<std::uint8_t> on_path(at(n), 0);
  std::vector<std::uint8_t> used(at(c.colour_bound()), 0);
  // The smallest vertex of the cycle is its start; later vertices are larger.
  auto search = [&](auto&& self, Vertex start) -> void {
    guard.expand();
    const Vertex last = path.back();
    const int len = static_cast<int>(path.size());
    if (len >= min_length && len > result.max_length && !used[at(c.colour(last, start))]) {
      result.max_length = len;
      result.witness = path;
    }
    if (result.max_length == n) return;
    for (Vertex u = start + 1; u < n; ++u) {
      if (on_path[at(u)]) continue;
      const Colour f = c.colour(last, u);
      if (used[at(f)]) continue;
      used[at(f)] = 1;
      on_path[at(u)] = 1;
      path.push_back(u);
      self(self, start);
      path.pop_back();
      on_path[at(u)] = 0;
      used[at(f)] = 0;
    }
  };
  for (Vertex s = 0; s + 1 < n && result.max_length < n - s; ++s) {
    path = {s};
    search(search, s);
  }
  result.nodes = guard.nodes();
  return result;
}

}  // namespace rainbow
