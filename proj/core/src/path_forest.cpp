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

#include "rainbow/path_forest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

int stable_floor(double x) { return static_cast<int>(std::floor(x + 1e-9)); }

PathForest::PathForest(const EdgeColouring& host)
    : host_(&host),
      path_of_(static_cast<std::size_t>(host.n()), -1),
      position_of_(static_cast<std::size_t>(host.n()), -1),
      colour_mult_(static_cast<std::size_t>(host.colour_bound()), 0) {}

PathForest PathForest::from_paths(const EdgeColouring& host,
                                  const std::vector<std::vector<Vertex>>& paths) {
  PathForest forest(host);
  for (const auto& path : paths) {
    if (path.empty()) throw ValidationError("empty path");
    for (Vertex v : path) {
      if (v < 0 || v >= host.n()) throw ValidationError("vertex " + std::to_string(v) + " out of range");
      if (forest.covers(v)) throw ValidationError("vertex " + std::to_string(v) + " repeated");
      forest.path_of_[forest.idx(v)] = 0;  // provisional; reindexed below
    }
    forest.paths_.push_back(path);
    forest.reindex(forest.path_count() - 1);
    forest.vertices_ += static_cast<int>(path.size());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      forest.bump_colour(host.colour(path[i], path[i + 1]), +1);
      ++forest.edges_;
    }
  }
  return forest;
}

bool PathForest::is_last(Vertex v) const {
  if (!covers(v)) return false;
  const auto& path = paths_[static_cast<std::size_t>(path_of(v))];
  return position_of(v) + 1 == static_cast<int>(path.size());
}

Vertex PathForest::successor(Vertex v) const {
  if (!covers(v) || is_last(v)) return kNoVertex;
  return paths_[static_cast<std::size_t>(path_of(v))][static_cast<std::size_t>(position_of(v)) + 1];
}

Vertex PathForest::predecessor(Vertex v) const {
  if (!covers(v) || position_of(v) == 0) return kNoVertex;
  return paths_[static_cast<std::size_t>(path_of(v))][static_cast<std::size_t>(position_of(v)) - 1];
}

Vertex PathForest::first_of_path(Vertex v) const {
  if (!covers(v)) return kNoVertex;
  return paths_[static_cast<std::size_t>(path_of(v))].front();
}

Vertex PathForest::last_of_path(Vertex v) const {
  if (!covers(v)) return kNoVertex;
  return paths_[static_cast<std::size_t>(path_of(v))].back();
}

std::optional<Colour> PathForest::out_colour(Vertex v) const {
  const Vertex next = successor(v);
  if (next == kNoVertex) return std::nullopt;
  return host_->colour(v, next);
}

std::vector<Vertex> PathForest::first_vertices() const {
  std::vector<Vertex> out;
  out.reserve(paths_.size());
  for (const auto& p : paths_) out.push_back(p.front());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> PathForest::last_vertices() const {
  std::vector<Vertex> out;
  out.reserve(paths_.size());
  for (const auto& p : paths_) out.push_back(p.back());
  std::sort(out.begin(), out.end());
  return out;
}

int PathForest::colour_multiplicity(Colour f) const {
  if (f < 0 || f >= static_cast<Colour>(colour_mult_.size())) return 0;
  return colour_mult_[static_cast<std::size_t>(f)];
}

std::vector<Colour> PathForest::colours() const {
  std::vector<Colour> out;
  for (std::size_t f = 0; f < colour_mult_.size(); ++f) {
    if (colour_mult_[f] > 0) out.push_back(static_cast<Colour>(f));
  }
  return out;
}

std::vector<Edge> PathForest::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (const auto& p : paths_) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back(Edge{p[i], p[i + 1]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void PathForest::reindex(int path_id) {
  const auto& path = paths_[static_cast<std::size_t>(path_id)];
  for (std::size_t i = 0; i < path.size(); ++i) {
    path_of_[idx(path[i])] = path_id;
    position_of_[idx(path[i])] = static_cast<int>(i);
  }
}

void PathForest::bump_colour(Colour f, int delta) {
  int& m = colour_mult_[static_cast<std::size_t>(f)];
  const bool was_repeated = m > 1;
  m += delta;
  const bool is_repeated = m > 1;
  repeated_colours_ += static_cast<int>(is_repeated) - static_cast<int>(was_repeated);
}

void PathForest::add_singleton(Vertex v) {
  if (v < 0 || v >= host_->n()) throw ValidationError("vertex " + std::to_string(v) + " out of range");
  if (covers(v)) throw ValidationError("vertex " + std::to_string(v) + " already covered");
  paths_.push_back({v});
  reindex(path_count() - 1);
  ++vertices_;
}

void PathForest::join(Vertex u, Vertex v) {
  if (!is_last(u)) throw ValidationError("join: vertex " + std::to_string(u) + " does not end a path");
  if (!is_first(v)) throw ValidationError("join: vertex " + std::to_string(v) + " does not start a path");
  const int a = path_of(u);
  const int b = path_of(v);
  if (a == b) throw ValidationError("join: edge " + edge_str(u, v) + " closes a cycle");
  auto& head = paths_[static_cast<std::size_t>(a)];
  auto& tail = paths_[static_cast<std::size_t>(b)];
  head.insert(head.end(), tail.begin(), tail.end());
  const int last = path_count() - 1;
  if (b != last) {
    std::swap(paths_[static_cast<std::size_t>(b)], paths_[static_cast<std::size_t>(last)]);
  }
  paths_.pop_back();
  const int head_id = (a == last) ? b : a;
  reindex(head_id);
  if (b != last && head_id != b) reindex(b);
  bump_colour(host_->colour(u, v), +1);
  ++edges_;
}

void PathForest::cut(Vertex u) {
  const Vertex next = successor(u);
  if (next == kNoVertex) throw ValidationError("cut: vertex " + std::to_string(u) + " has no successor");
  auto& path = paths_[static_cast<std::size_t>(path_of(u))];
  const auto split = static_cast<std::size_t>(position_of(u)) + 1;
  std::vector<Vertex> tail(path.begin() + static_cast<std::ptrdiff_t>(split), path.end());
  path.resize(split);
  paths_.push_back(std::move(tail));
  reindex(path_count() - 1);
  bump_colour(host_->colour(u, next), -1);
  --edges_;
}

std::optional<std::string> PathForest::check() const {
  for (int id = 0; id < path_count(); ++id) {
    const auto& path = paths_[static_cast<std::size_t>(id)];
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path_of(path[i]) != id || position_of(path[i]) != static_cast<int>(i)) {
        return "membership index out of sync at vertex " + std::to_string(path[i]);
      }
    }
  }
  return check_path_forest(*host_, paths_);
}

std::optional<std::string> check_path_forest(const EdgeColouring& host,
                                             const std::vector<std::vector<Vertex>>& paths,
                                             const ColourMask* allowed) {
  const auto n = static_cast<std::size_t>(host.n());
  std::vector<int> out_deg(n, 0), in_deg(n, 0), seen_in_path(n, -1), occurrences(n, 0);
  std::vector<Edge> colour_owner(static_cast<std::size_t>(host.colour_bound()), Edge{kNoVertex, kNoVertex});
  for (std::size_t id = 0; id < paths.size(); ++id) {
    const auto& path = paths[id];
    if (path.empty()) return "path " + std::to_string(id) + " is empty";
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Vertex v = path[i];
      if (v < 0 || static_cast<std::size_t>(v) >= n) return "vertex " + std::to_string(v) + " out of range";
      const auto vi = static_cast<std::size_t>(v);
      if (i + 1 < path.size()) {
        const Vertex w = path[i + 1];
        if (w < 0 || static_cast<std::size_t>(w) >= n) return "vertex " + std::to_string(w) + " out of range";
        if (w == v) return "loop at vertex " + std::to_string(v);
        if (++out_deg[vi] > 1) return "vertex " + std::to_string(v) + " has out-degree 2 (branching)";
        if (++in_deg[static_cast<std::size_t>(w)] > 1) {
          return "vertex " + std::to_string(w) + " has in-degree 2 (branching)";
        }
        const Colour f = host.colour(v, w);
        if (allowed != nullptr && !(*allowed)[static_cast<std::size_t>(f)]) {
          return "edge " + edge_str(v, w) + " uses colour " + std::to_string(f) + " outside the allowed set";
        }
        Edge& owner = colour_owner[static_cast<std::size_t>(f)];
        if (owner.from != kNoVertex) {
          return "colour " + std::to_string(f) + " repeated on edges " + edge_str(owner.from, owner.to) +
                 " and " + edge_str(v, w);
        }
        owner = Edge{v, w};
      }
      if (++occurrences[vi] > 1) {
        if (seen_in_path[vi] == static_cast<int>(id)) return "directed cycle through vertex " + std::to_string(v);
        return "vertex " + std::to_string(v) + " appears in two paths";
      }
      seen_in_path[vi] = static_cast<int>(id);
    }
  }
  return std::nullopt;
}

Edge try_append(PathForest& forest, Vertex v, Vertex f1, Vertex f2) {
  if (!forest.is_last(v)) throw ValidationError("try_append: vertex " + std::to_string(v) + " does not end a path");
  if (f1 == f2) throw ValidationError("try_append: the two first vertices must differ");
  if (!forest.is_first(f1) || !forest.is_first(f2)) {
    throw ValidationError("try_append: targets must start paths");
  }
  const Vertex target = forest.path_of(v) != forest.path_of(f1) ? f1 : f2;
  forest.join(v, target);
  return Edge{v, target};
}

ForestCondition forest_condition(int n, double gamma, double delta) {
  ForestCondition cond;
  if (!(delta > 0.0)) return cond;
  cond.block_size = stable_floor(1.0 / delta);
  cond.max_paths = std::max(0, stable_floor(gamma * n));
  if (cond.block_size <= 0) return cond;
  cond.block_count = cond.max_paths / cond.block_size;
  cond.value = static_cast<double>(cond.block_count) / cond.block_size;
  cond.holds = cond.value > 1.0;
  return cond;
}

AugmentationState AugmentationState::build(const PathForest& forest, const ColourMask& allowed,
                                           double gamma, double delta) {
  const EdgeColouring& host = forest.host();
  const int n = host.n();
  AugmentationState st;
  st.gamma_ = gamma;
  st.delta_ = delta;
  const ForestCondition cond = forest_condition(n, gamma, delta);
  st.block_size_ = cond.block_size;

  const auto firsts = forest.first_vertices();
  const int q = std::max(1, cond.block_size);
  const int blocks = std::min(cond.block_count, static_cast<int>(firsts.size()) / q);
  for (int i = 0; i < blocks; ++i) {
    st.blocks_.emplace_back(firsts.begin() + i * q, firsts.begin() + (i + 1) * q);
  }

  const auto bound = static_cast<std::size_t>(host.colour_bound());
  st.colour_level_.assign(bound, -1);
  st.witness_.assign(bound, kNoVertex);
  int c0 = 0;
  for (Colour f : host.colours()) {
    if (allowed[static_cast<std::size_t>(f)] && !forest.uses_colour(f)) {
      st.colour_level_[static_cast<std::size_t>(f)] = 0;
      ++c0;
    }
  }
  for (const auto& path : forest.paths()) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      st.witness_[static_cast<std::size_t>(host.colour(path[i], path[i + 1]))] = path[i];
    }
  }
  st.colour_set_sizes_.push_back(c0);

  for (int i = 1; i <= blocks; ++i) {
    const auto& block = st.blocks_[static_cast<std::size_t>(i - 1)];
    std::vector<Vertex> level_set;
    for (Vertex v = 0; v < n; ++v) {
      int hits = 0;
      for (Vertex target : block) {
        if (target == v) continue;
        const Colour f = host.colour(v, target);
        const int level = st.colour_level_[static_cast<std::size_t>(f)];
        if (allowed[static_cast<std::size_t>(f)] && level >= 0 && level <= i - 1 && ++hits >= 2) break;
      }
      if (hits >= 2) level_set.push_back(v);
    }
    int added = 0;
    for (Vertex v : level_set) {
      if (!forest.covers(v) || forest.is_last(v)) {
        st.violators_.emplace_back(i, v);
        continue;
      }
      const Colour f = *forest.out_colour(v);
      if (st.colour_level_[static_cast<std::size_t>(f)] < 0) {
        st.colour_level_[static_cast<std::size_t>(f)] = i;
        ++added;
      }
    }
    st.colour_set_sizes_.push_back(st.colour_set_sizes_.back() + added);
    st.vertex_sets_.push_back(std::move(level_set));
  }
  return st;
}

int AugmentationState::colour_level(Colour f) const {
  if (f < 0 || f >= static_cast<Colour>(colour_level_.size())) return -1;
  return colour_level_[static_cast<std::size_t>(f)];
}

Vertex AugmentationState::colour_witness(Colour f) const {
  if (f < 0 || f >= static_cast<Colour>(witness_.size())) return kNoVertex;
  return witness_[static_cast<std::size_t>(f)];
}

std::optional<std::pair<int, Vertex>> AugmentationState::violating() const {
  if (violators_.empty()) return std::nullopt;
  return violators_.front();
}

std::optional<CascadeTrace> augment_once(PathForest& forest, const ColourMask& allowed,
                                         const AugmentationState& state) {
  const auto start = state.violating();
  if (!start) return std::nullopt;
  const EdgeColouring& host = forest.host();
  auto [index, vertex] = *start;
  if (!forest.covers(vertex)) forest.add_singleton(vertex);

  CascadeTrace trace;
  const int max_steps = state.block_count() + 1;
  for (int step = 0; step < max_steps; ++step) {
    const auto& block = state.blocks()[static_cast<std::size_t>(index - 1)];
    Vertex targets[2] = {kNoVertex, kNoVertex};
    int found = 0;
    for (Vertex target : block) {
      if (target == vertex) continue;
      const Colour f = host.colour(vertex, target);
      const int level = state.colour_level(f);
      if (allowed[static_cast<std::size_t>(f)] && level >= 0 && level <= index - 1) {
        targets[found++] = target;
        if (found == 2) break;
      }
    }
    if (found < 2) throw std::logic_error("augment_once: vertex lost its two block edges");

    CascadeStep record;
    record.index = index;
    record.vertex = vertex;
    record.added = try_append(forest, vertex, targets[0], targets[1]);
    record.added_colour = host.colour(record.added.from, record.added.to);
    const int level = state.colour_level(record.added_colour);
    if (level == 0) {
      trace.push_back(record);
      return trace;
    }
    const Vertex next = state.colour_witness(record.added_colour);
    const Vertex next_succ = forest.successor(next);
    if (next == kNoVertex || next_succ == kNoVertex ||
        host.colour(next, next_succ) != record.added_colour) {
      throw std::logic_error("augment_once: witness edge already deleted");
    }
    forest.cut(next);
    record.deleted = Edge{next, next_succ};
    trace.push_back(record);
    index = level;
    vertex = next;
  }
  throw std::logic_error("augment_once: cascade exceeded s + 1 steps");
}

PathForest greedy_path_forest(const EdgeColouring& host, const ColourMask& allowed, int max_paths) {
  PathForest forest(host);
  const int n = host.n();
  for (Vertex start = 0; start < n; ++start) {
    if (forest.covers(start)) continue;
    if (forest.path_count() >= max_paths) break;
    forest.add_singleton(start);
    Vertex current = start;
    for (;;) {
      Vertex next = kNoVertex;
      for (Vertex u = 0; u < n; ++u) {
        if (u == current || forest.covers(u)) continue;
        const Colour f = host.colour(current, u);
        if (allowed[static_cast<std::size_t>(f)] && !forest.uses_colour(f)) {
          next = u;
          break;
        }
      }
      if (next == kNoVertex) break;
      forest.add_singleton(next);
      forest.join(current, next);
      current = next;
    }
  }
  return forest;
}

ForestRun long_rainbow_path_forest(const EdgeColouring& host, const ColourMask& allowed,
                                   double gamma, double delta) {
  if (!host.directed()) throw ParameterError("long_rainbow_path_forest needs a directed colouring");
  const int n = host.n();
  ForestRun run{PathForest(host), {}, 0, 0, {}, {}};
  if (n <= 1) return run;
  if (!(gamma > 0.0 && gamma <= delta && delta < 1.0)) {
    throw ParameterError("forest parameters need 0 < gamma <= delta < 1 (gamma=" +
                         std::to_string(gamma) + ", delta=" + std::to_string(delta) + ")");
  }
  run.condition = forest_condition(n, gamma, delta);
  if (!run.condition.holds) {
    throw ParameterError("forest condition floor(gamma*n/floor(1/delta))/floor(1/delta) > 1 fails: value " +
                         std::to_string(run.condition.value) + " (delta^2*gamma*n = " +
                         std::to_string(delta * delta * gamma * n) + " <= 1 in the integral case)");
  }
  const double degree_floor = (1.0 - delta) * n;
  for (Vertex v = 0; v < n; ++v) {
    const int degree = in_degree_within(host, allowed, v);
    if (degree < degree_floor - 1e-9) {
      throw ParameterError("min in-degree condition fails at vertex " + std::to_string(v) + ": in-degree " +
                           std::to_string(degree) + " < (1-delta)*n = " + std::to_string(degree_floor));
    }
  }
  run.target_edges = std::max(0, static_cast<int>(std::ceil((1.0 - 3.0 * delta) * n - 1e-9)));

  run.forest = greedy_path_forest(host, allowed, run.condition.max_paths);
  run.greedy_edges = run.forest.edge_count();
  for (;;) {
    for (Vertex v = 0; v < n && run.forest.path_count() < run.condition.max_paths; ++v) {
      if (!run.forest.covers(v)) run.forest.add_singleton(v);
    }
    const auto state = AugmentationState::build(run.forest, allowed, gamma, delta);
    auto trace = augment_once(run.forest, allowed, state);
    if (!trace) {
      run.final_colour_set_sizes = state.colour_set_sizes();
      break;
    }
    run.cascades.push_back(std::move(*trace));
  }
  return run;
}

}  // namespace rainbow
