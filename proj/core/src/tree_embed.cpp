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

#include "rainbow/tree_embed.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

int quarter(int n) { return (n + 3) / 4; }

void require_undirected_host(const EdgeColouring& c, const TreeSpec& tree) {
  if (c.directed()) throw ParameterError("tree embedding needs an undirected colouring");
  if (c.n() != tree.n()) {
    throw ParameterError("host has " + std::to_string(c.n()) + " vertices but the tree has " +
                         std::to_string(tree.n()));
  }
}

}  // namespace

EmbedOrdering order_vertices(const TreeSpec& tree) {
  const int n = tree.n();
  std::vector<Vertex> by_degree(at(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  auto heavier = [&](Vertex a, Vertex b) {
    return tree.degree(a) != tree.degree(b) ? tree.degree(a) > tree.degree(b) : a < b;
  };
  std::sort(by_degree.begin(), by_degree.end(), heavier);
  const int split = quarter(n);
  std::vector<std::uint8_t> in_r(at(n), 0);
  for (int i = 0; i < split; ++i) in_r[at(by_degree[at(i)])] = 1;

  EmbedOrdering ord;
  ord.split = split;
  std::vector<std::uint8_t> visited(at(n), 0);
  for (int i = 0; i < split; ++i) {
    const Vertex start = by_degree[at(i)];
    if (visited[at(start)]) continue;
    std::deque<Vertex> queue{start};
    visited[at(start)] = 1;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      ord.order.push_back(u);
      std::vector<Vertex> next;
      for (Vertex v : tree.neighbours(u)) {
        if (in_r[at(v)] && !visited[at(v)]) next.push_back(v);
      }
      std::sort(next.begin(), next.end(), heavier);
      for (Vertex v : next) {
        visited[at(v)] = 1;
        queue.push_back(v);
      }
    }
  }
  for (int i = split; i < n; ++i) ord.order.push_back(by_degree[at(i)]);
  return ord;
}

std::optional<std::string> check_ordering(const TreeSpec& tree, const EmbedOrdering& ord) {
  const int n = tree.n();
  if (static_cast<int>(ord.order.size()) != n) return "ordering has the wrong length";
  if (ord.split != quarter(n)) return "split is " + std::to_string(ord.split) + ", expected ceil(n/4)";
  std::vector<int> position(at(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = ord.order[at(i)];
    if (v < 0 || v >= n || position[at(v)] >= 0) return "ordering is not a permutation";
    position[at(v)] = i;
  }
  int min_r = n, max_w = 0;
  for (int i = 0; i < n; ++i) {
    const int d = tree.degree(ord.order[at(i)]);
    if (i < ord.split) {
      min_r = std::min(min_r, d);
    } else {
      max_w = std::max(max_w, d);
      if (d > 4) return "vertex " + std::to_string(ord.order[at(i)]) + " outside R has degree " + std::to_string(d);
    }
  }
  if (ord.split < n && min_r < max_w) return "R does not hold the highest-degree vertices";
  for (int i = 0; i < ord.split; ++i) {
    int earlier = 0;
    for (Vertex v : tree.neighbours(ord.order[at(i)])) {
      if (position[at(v)] < i) ++earlier;
    }
    if (earlier > 1) return "vertex " + std::to_string(ord.order[at(i)]) + " has " + std::to_string(earlier) +
                            " earlier neighbours";
  }
  return std::nullopt;
}

PartialEmbedding PartialEmbedding::empty(int n) {
  PartialEmbedding p;
  p.n = n;
  p.pi.assign(at(n), kNoVertex);
  p.inverse.assign(at(n), kNoVertex);
  p.a_set.resize(at(n));
  std::iota(p.a_set.begin(), p.a_set.end(), 0);
  p.w_set = p.a_set;
  return p;
}

long long Weights::max_w_f() const { return w_f.empty() ? 0 : *std::max_element(w_f.begin(), w_f.end()); }
long long Weights::max_w_g() const { return w_g.empty() ? 0 : *std::max_element(w_g.begin(), w_g.end()); }
long long Weights::max_m_g() const { return m_g.empty() ? 0 : *std::max_element(m_g.begin(), m_g.end()); }

Weights compute_weights(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& partial) {
  const int n = c.n();
  Weights w;
  w.w_f.assign(at(c.colour_bound()), 0);
  w.w_g.assign(at(n), 0);
  w.m_g.assign(at(n), 0);
  std::vector<std::uint8_t> in_t0(at(c.colour_bound()), 0);
  for (Colour f : partial.t0_colours) in_t0[at(f)] = 1;
  std::vector<int> stamp(at(c.colour_bound()), -1);
  for (Vertex b = 0; b < n; ++b) {
    if (!partial.in_b(b)) continue;
    const int d = tree.degree(partial.inverse[at(b)]);
    for (Vertex g = 0; g < n; ++g) {
      if (g == b) continue;
      const Colour f = c.colour(b, g);
      if (stamp[at(f)] == b) continue;
      stamp[at(f)] = b;
      w.w_f[at(f)] += d;
    }
  }
  for (Vertex g = 0; g < n; ++g) {
    if (!partial.in_b(g)) {
      for (Vertex u : partial.roots) {
        const Vertex b = partial.pi[at(u)];
        if (b != g && in_t0[at(c.colour(g, b))]) w.w_g[at(g)] += tree.degree(u);
      }
    }
    for (Vertex a : partial.a_set) {
      if (a != g && in_t0[at(c.colour(a, g))]) ++w.m_g[at(g)];
    }
  }
  return w;
}

WeightTracker::WeightTracker(const EdgeColouring& c, const TreeSpec& tree)
    : c_(&c), tree_(&tree), partial_(PartialEmbedding::empty(c.n())), in_t0_(at(c.colour_bound()), 0) {
  require_undirected_host(c, tree);
  weights_.w_f.assign(at(c.colour_bound()), 0);
  weights_.w_g.assign(at(c.n()), 0);
  weights_.m_g.assign(at(c.n()), 0);
}

void WeightTracker::place(Vertex u, Vertex b) {
  const EdgeColouring& c = *c_;
  const int n = c.n();
  if (u < 0 || u >= n || partial_.placed(u)) throw ValidationError("tree vertex " + std::to_string(u) + " not placeable");
  if (b < 0 || b >= n || partial_.in_b(b)) throw ValidationError("host vertex " + std::to_string(b) + " not free");
  std::vector<Colour> fresh;
  for (Vertex v : tree_->neighbours(u)) {
    if (!partial_.placed(v)) continue;
    const Colour f = c.colour(b, partial_.pi[at(v)]);
    if (in_t0_[at(f)] || std::find(fresh.begin(), fresh.end(), f) != fresh.end()) {
      throw ValidationError("placing tree vertex " + std::to_string(u) + " at " + std::to_string(b) +
                            " repeats colour " + std::to_string(f) + " in T0");
    }
    fresh.push_back(f);
  }
  const long long d = tree_->degree(u);

  // b leaves A.
  for (Vertex g = 0; g < n; ++g) {
    if (g != b && in_t0_[at(c.colour(b, g))]) --weights_.m_g[at(g)];
  }
  weights_.w_g[at(b)] = 0;
  partial_.a_set.erase(std::lower_bound(partial_.a_set.begin(), partial_.a_set.end(), b));
  partial_.w_set.erase(std::lower_bound(partial_.w_set.begin(), partial_.w_set.end(), u));
  for (Vertex g : partial_.a_set) {
    if (in_t0_[at(c.colour(g, b))]) weights_.w_g[at(g)] += d;
  }
  // Each colour present at b counts once, even on an improper host.
  std::vector<std::uint8_t> present(at(c.colour_bound()), 0);
  for (Vertex g = 0; g < n; ++g) {
    if (g == b) continue;
    const Colour f = c.colour(b, g);
    if (present[at(f)]) continue;
    present[at(f)] = 1;
    weights_.w_f[at(f)] += d;
  }
  partial_.pi[at(u)] = b;
  partial_.inverse[at(b)] = u;
  partial_.roots.push_back(u);

  for (Colour f : fresh) {
    in_t0_[at(f)] = 1;
    partial_.t0_colours.insert(std::lower_bound(partial_.t0_colours.begin(), partial_.t0_colours.end(), f), f);
    for (const Edge& e : c.class_of(f)) {
      const bool x_in_a = !partial_.in_b(e.from);
      const bool y_in_a = !partial_.in_b(e.to);
      if (x_in_a) ++weights_.m_g[at(e.to)];
      if (y_in_a) ++weights_.m_g[at(e.from)];
      if (x_in_a && !y_in_a) weights_.w_g[at(e.from)] += tree_->degree(partial_.inverse[at(e.to)]);
      if (y_in_a && !x_in_a) weights_.w_g[at(e.to)] += tree_->degree(partial_.inverse[at(e.from)]);
    }
  }
}

RgeResult rge(const EdgeColouring& c, const TreeSpec& tree, const EmbedOrdering& ord, std::uint64_t seed) {
  require_undirected_host(c, tree);
  const int n = c.n();
  WeightTracker tracker(c, tree);
  Rng rng(seed);
  RgeResult out;
  std::vector<Vertex> feasible;
  feasible.reserve(at(n));
  for (int k = 0; k < ord.split; ++k) {
    const Vertex u = ord.order[at(k)];
    const PartialEmbedding& partial = tracker.partial();
    std::vector<Vertex> anchors;
    for (Vertex v : tree.neighbours(u)) {
      if (partial.placed(v)) anchors.push_back(partial.pi[at(v)]);
    }
    feasible.clear();
    for (Vertex b : partial.a_set) {
      bool ok = true;
      for (std::size_t i = 0; i < anchors.size() && ok; ++i) {
        const Colour f = c.colour(anchors[i], b);
        if (std::binary_search(partial.t0_colours.begin(), partial.t0_colours.end(), f)) ok = false;
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (c.colour(anchors[j], b) == f) ok = false;
        }
      }
      if (ok) feasible.push_back(b);
    }
    const int floor = n - k - static_cast<int>(partial.t0_colours.size());
    out.feasible_counts.push_back(static_cast<int>(feasible.size()));
    out.feasible_floors.push_back(floor);
    if (static_cast<int>(feasible.size()) < floor || feasible.empty()) {
      throw ValidationError("random-greedy step " + std::to_string(k + 1) + ": " + std::to_string(feasible.size()) +
                            " feasible vertices, below the floor " + std::to_string(floor) +
                            " (is the colouring proper?)");
    }
    tracker.place(u, feasible[rng.below(feasible.size())]);
  }
  out.partial = tracker.partial();
  out.weights = tracker.weights();
  return out;
}

WeightReport certify_weights(const Weights& w, int n, double alpha1, double alpha2, double alpha3) {
  WeightReport report;
  const double l1 = alpha1 * n, l2 = alpha2 * n, l3 = alpha3 * n;
  for (std::size_t f = 0; f < w.w_f.size(); ++f) {
    if (static_cast<double>(w.w_f[f]) > l1) report.violations.push_back({"w_f", static_cast<int>(f), w.w_f[f], l1});
  }
  for (std::size_t g = 0; g < w.m_g.size(); ++g) {
    if (static_cast<double>(w.m_g[g]) > l2) report.violations.push_back({"m_g", static_cast<int>(g), w.m_g[g], l2});
  }
  for (std::size_t g = 0; g < w.w_g.size(); ++g) {
    if (static_cast<double>(w.w_g[g]) > l3) report.violations.push_back({"w_g", static_cast<int>(g), w.w_g[g], l3});
  }
  report.pass = report.violations.empty();
  return report;
}

WeightReport certify_weights(const Weights& w, int n, double chi) { return certify_weights(w, n, chi, chi, chi); }

LllResult lll_condition(double r, double D, double chi, double alpha) {
  if (!(r > 0 && r < 1 && chi > 0 && chi < 1 && alpha > 0 && alpha < 1 && D >= 1)) {
    throw ParameterError("lll_condition needs 0 < r, chi, alpha < 1 <= D");
  }
  const double value = 16.0 / std::pow(1.0 - r, 3) * (chi * (3 * D + 11) + alpha * (16 * D + 12));
  return {value, value <= 1.0};
}

TreeConstants paper_s34_constants() {
  return TreeConstants{std::ldexp(1.0, -38), std::ldexp(1.0, -38), std::ldexp(1.0, -16), std::ldexp(1.0, -15),
                       std::ldexp(1.0, -11), std::ldexp(1.0, -16), std::ldexp(1.0, -19)};
}

std::vector<RelationCheck> check_constant_relations(const TreeConstants& k) {
  auto le = [](std::string name, double lhs, double rhs) { return RelationCheck{std::move(name), lhs, rhs, lhs <= rhs}; };
  auto gt = [](std::string name, double lhs, double rhs) { return RelationCheck{std::move(name), lhs, rhs, lhs > rhs}; };
  auto ge = [](std::string name, double lhs, double rhs) { return RelationCheck{std::move(name), lhs, rhs, lhs >= rhs}; };
  return {
      le("16*alpha <= alpha1", 16 * k.alpha, k.alpha1),
      le("16*alpha2 <= alpha3", 16 * k.alpha2, k.alpha3),
      le("32*alpha1 <= alpha3", 32 * k.alpha1, k.alpha3),
      gt("alpha1^2 > 32*beta", k.alpha1 * k.alpha1, 32 * k.beta),
      gt("alpha2^2 > 64*beta", k.alpha2 * k.alpha2, 64 * k.beta),
      gt("alpha3^2 > 64*beta", k.alpha3 * k.alpha3, 64 * k.beta),
      ge("tree.gamma*tree.delta >= 2*alpha", k.gamma * k.delta, 2 * k.alpha),
      le("16*tree.delta <= alpha2", 16 * k.delta, k.alpha2),
      le("2*tree.gamma <= alpha2", 2 * k.gamma, k.alpha2),
  };
}

bool all_hold(const std::vector<RelationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& r) { return r.holds; });
}

const char* family_name(EventFamily family) {
  switch (family) {
    case EventFamily::fr: return "FR";
    case EventFamily::f: return "F";
    case EventFamily::srr: return "SRR";
    case EventFamily::sr: return "SR";
    case EventFamily::s: return "S";
  }
  return "?";
}

namespace {

// 0 = inside R (T0), 1 = between R and W, 2 = inside W.
int edge_type(const PartialEmbedding& partial, const Edge& e) {
  return static_cast<int>(!partial.placed(e.from)) + static_cast<int>(!partial.placed(e.to));
}

EventFamily family_of(int t1, int t2) {
  if (t1 > t2) std::swap(t1, t2);
  if (t1 == 0) return t2 == 1 ? EventFamily::fr : EventFamily::f;
  if (t1 == 1) return t2 == 1 ? EventFamily::srr : EventFamily::sr;
  return EventFamily::s;
}

}  // namespace

std::vector<BadEventInstance> classify_bad_events(const EdgeColouring& c, const TreeSpec& tree,
                                                  const PartialEmbedding& partial,
                                                  const std::vector<Vertex>& embedding) {
  const auto edges = tree.edges();
  std::vector<std::vector<std::size_t>> by_colour(at(c.colour_bound()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    by_colour[at(c.colour(embedding[at(edges[i].from)], embedding[at(edges[i].to)]))].push_back(i);
  }
  std::vector<BadEventInstance> out;
  for (Colour f = 0; f < c.colour_bound(); ++f) {
    const auto& ids = by_colour[at(f)];
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        const Edge& e1 = edges[ids[i]];
        const Edge& e2 = edges[ids[j]];
        out.push_back({family_of(edge_type(partial, e1), edge_type(partial, e2)), e1, e2, f});
      }
    }
  }
  return out;
}

std::optional<std::string> check_embedding(const EdgeColouring& c, const TreeSpec& tree,
                                           const std::vector<Vertex>& embedding) {
  const int n = tree.n();
  if (c.n() != n) return "host and tree sizes differ";
  if (static_cast<int>(embedding.size()) != n) return "embedding has " + std::to_string(embedding.size()) + " entries";
  std::vector<Vertex> owner(at(n), kNoVertex);
  for (Vertex u = 0; u < n; ++u) {
    const Vertex h = embedding[at(u)];
    if (h < 0 || h >= n) return "tree vertex " + std::to_string(u) + " maps outside the host";
    if (owner[at(h)] != kNoVertex) {
      return "host vertex " + std::to_string(h) + " used by tree vertices " + std::to_string(owner[at(h)]) +
             " and " + std::to_string(u);
    }
    owner[at(h)] = u;
  }
  std::vector<Vertex> colour_edge(at(c.colour_bound()), kNoVertex);
  for (const Edge& e : tree.edges()) {
    const Colour f = c.colour(embedding[at(e.from)], embedding[at(e.to)]);
    if (colour_edge[at(f)] != kNoVertex) return "colour " + std::to_string(f) + " repeated";
    colour_edge[at(f)] = e.to;
  }
  return std::nullopt;
}

namespace {

// Colour multiplicities over the embedded tree edges with the excess
// sum(max(0, mult - 1)) kept up to date under image swaps.
class ConflictState {
 public:
  ConflictState(const EdgeColouring& c, const TreeSpec& tree, std::vector<Vertex> embedding)
      : c_(c), tree_(tree), emb_(std::move(embedding)), mult_(at(c.colour_bound()), 0) {
    for (const Edge& e : tree.edges()) add(colour_of(e.from, e.to));
  }

  int excess() const { return excess_; }
  const std::vector<Vertex>& embedding() const { return emb_; }
  int multiplicity(Colour f) const { return mult_[at(f)]; }
  Colour colour_of(Vertex u, Vertex v) const { return c_.colour(emb_[at(u)], emb_[at(v)]); }

  // Change in excess if the images of x and y were swapped.
  int swap_delta(Vertex x, Vertex y) {
    collect(x, y);
    const int before = excess_;
    for (const auto& [u, v] : touched_) remove(colour_of(u, v));
    std::swap(emb_[at(x)], emb_[at(y)]);
    for (const auto& [u, v] : touched_) add(colour_of(u, v));
    const int delta = excess_ - before;
    for (const auto& [u, v] : touched_) remove(colour_of(u, v));
    std::swap(emb_[at(x)], emb_[at(y)]);
    for (const auto& [u, v] : touched_) add(colour_of(u, v));
    return delta;
  }

  void apply_swap(Vertex x, Vertex y) {
    collect(x, y);
    for (const auto& [u, v] : touched_) remove(colour_of(u, v));
    std::swap(emb_[at(x)], emb_[at(y)]);
    for (const auto& [u, v] : touched_) add(colour_of(u, v));
  }

 private:
  void add(Colour f) {
    if (mult_[at(f)]++ >= 1) ++excess_;
  }
  void remove(Colour f) {
    if (--mult_[at(f)] >= 1) --excess_;
  }
  // Tree edges at x or y, except the edge xy whose colour a swap preserves.
  void collect(Vertex x, Vertex y) {
    touched_.clear();
    for (Vertex v : tree_.neighbours(x)) {
      if (v != y) touched_.emplace_back(x, v);
    }
    for (Vertex v : tree_.neighbours(y)) {
      if (v != x) touched_.emplace_back(y, v);
    }
  }

  const EdgeColouring& c_;
  const TreeSpec& tree_;
  std::vector<Vertex> emb_;
  std::vector<int> mult_;
  int excess_ = 0;
  std::vector<std::pair<Vertex, Vertex>> touched_;
};

// Tabu search over swaps of W images. Each step applies the best swap that
// moves a W endpoint of a repeated-colour edge, ties broken at random. A
// vertex may not return to an image it left within the last tenure steps,
// unless that would beat the best excess seen so far.
void repair(ConflictState& state, const TreeSpec& tree, const PartialEmbedding& partial, Rng& rng, int steps) {
  const auto& w = partial.w_set;
  if (w.size() < 2) return;
  const int n = tree.n();
  const int tenure = n / 5 + 2;
  const auto edges = tree.edges();
  std::vector<int> tabu_until(at(n) * at(n), 0);  // (vertex, image) -> step
  std::vector<std::uint8_t> is_hot(at(n), 0);
  std::vector<Vertex> hot;
  int best_ever = state.excess();
  for (int step = 1; step <= steps && state.excess() > 0; ++step) {
    hot.clear();
    for (const Edge& e : edges) {
      if (state.multiplicity(state.colour_of(e.from, e.to)) < 2) continue;
      for (Vertex v : {e.from, e.to}) {
        if (!partial.placed(v) && !is_hot[at(v)]) {
          is_hot[at(v)] = 1;
          hot.push_back(v);
        }
      }
    }
    for (Vertex v : hot) is_hot[at(v)] = 0;
    if (hot.empty()) return;  // only T0 edges conflict: no swap can help
    auto is_tabu = [&](Vertex v, Vertex image) { return tabu_until[at(v) * at(n) + at(image)] > step; };
    int best = 0;
    Vertex best_x = kNoVertex, best_y = kNoVertex;
    std::size_t ties = 0;
    for (Vertex x : hot) {
      for (Vertex y : w) {
        if (y == x) continue;
        const int d = state.swap_delta(x, y);
        const Vertex ix = state.embedding()[at(x)], iy = state.embedding()[at(y)];
        if ((is_tabu(x, iy) || is_tabu(y, ix)) && state.excess() + d >= best_ever) continue;
        if (best_x == kNoVertex || d < best) {
          best = d;
          best_x = x;
          best_y = y;
          ties = 1;
        } else if (d == best && rng.below(++ties) == 0) {
          best_x = x;
          best_y = y;
        }
      }
    }
    if (best_x == kNoVertex) continue;  // every move is tabu this step
    const Vertex ix = state.embedding()[at(best_x)], iy = state.embedding()[at(best_y)];
    state.apply_swap(best_x, best_y);
    const auto until = [&] { return step + tenure + static_cast<int>(rng.below(static_cast<std::uint64_t>(tenure) + 1)); };
    tabu_until[at(best_x) * at(n) + at(ix)] = until();
    tabu_until[at(best_y) * at(n) + at(iy)] = until();
    best_ever = std::min(best_ever, state.excess());
  }
}

}  // namespace

CompletionResult complete_random(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& partial,
                                 std::uint64_t seed, const CompletionOptions& options) {
  require_undirected_host(c, tree);
  const int n = c.n();
  if (partial.a_set.size() != partial.w_set.size()) throw ValidationError("|A| and |W| differ");
  {
    std::vector<std::uint8_t> seen(at(c.colour_bound()), 0);
    for (const Edge& e : tree.edges()) {
      if (!partial.placed(e.from) || !partial.placed(e.to)) continue;
      const Colour f = c.colour(partial.pi[at(e.from)], partial.pi[at(e.to)]);
      if (seen[at(f)]++) throw ValidationError("partial embedding is not rainbow (colour " + std::to_string(f) + ")");
    }
  }
  CompletionResult result;
  int best_excess = -1;
  const int attempts = partial.w_set.empty() ? 1 : std::max(1, options.max_retries);
  for (int k = 0; k < attempts; ++k) {
    Rng rng(substream_seed(seed, static_cast<std::uint64_t>(k)));
    std::vector<Vertex> images = partial.a_set;
    rng.shuffle(std::span<Vertex>(images));
    std::vector<Vertex> emb = partial.pi;
    for (std::size_t i = 0; i < partial.w_set.size(); ++i) emb[at(partial.w_set[i])] = images[i];
    ConflictState state(c, tree, std::move(emb));
    const int steps = options.repair_steps < 0 ? kRepairStepsPerVertex * n : options.repair_steps;
    if (steps > 0) repair(state, tree, partial, rng, steps);
    result.attempts = k + 1;
    if (best_excess < 0 || state.excess() < best_excess) {
      best_excess = state.excess();
      result.embedding = state.embedding();
    }
    if (state.excess() == 0) {
      result.success = true;
      break;
    }
  }
  result.conflicts = best_excess;
  if (!result.success) result.bad_events = classify_bad_events(c, tree, partial, result.embedding);
  return result;
}

EmbedParams embed_preset(const std::string& name) {
  EmbedParams params;
  params.preset = name;
  if (name == "paper-s34") {
    params.constants = paper_s34_constants();
    params.repair_steps = 0;
  } else if (name == "desk") {
    // Scaled thresholds: report-only at desk sizes.
    params.constants = TreeConstants{1.0 / 64, 1.0 / 64, 0.25, 0.25, 0.25, 0.25, 1.0 / 64};
    params.repair_steps = -1;  // scales with n
  } else {
    throw ParameterError("unknown embedding preset '" + name + "' (expected desk or paper-s34)");
  }
  return params;
}

EmbedResult embed_tree(const EdgeColouring& c, const TreeSpec& tree, std::uint64_t seed, const EmbedParams& params) {
  require_undirected_host(c, tree);
  const int n = c.n();
  const ColouringReport report = validate(c);
  if (!report.proper) throw ValidationError("host colouring is not proper");
  EmbedResult out;
  const TreeConstants& k = params.constants;

  const double global_limit = k.alpha * n;
  const bool bounded = report.global_bound <= global_limit;
  out.log.push_back("global bound " + std::to_string(report.global_bound) + (bounded ? " <= " : " > ") +
                    "alpha*n = " + format_double(global_limit));
  const double degree_limit = n > 1 ? k.beta * n / std::log(static_cast<double>(n)) : 0.0;
  const bool degree_ok = tree.max_degree() <= degree_limit;
  out.log.push_back("max tree degree " + std::to_string(tree.max_degree()) + (degree_ok ? " <= " : " > ") +
                    "beta*n/log n = " + format_double(degree_limit));
  if (params.enforce_hypotheses && !(bounded && degree_ok)) {
    throw ParameterError("hypothesis check failed: " + out.log[bounded ? 1 : 0]);
  }
  out.relations = check_constant_relations(k);
  for (const auto& rel : out.relations) {
    out.log.push_back(std::string("relation ") + rel.name + (rel.holds ? ": holds" : ": fails"));
  }

  out.ordering = order_vertices(tree);
  if (auto err = check_ordering(tree, out.ordering)) throw std::logic_error("order_vertices: " + *err);
  out.rge = rge(c, tree, out.ordering, substream_seed(seed, 1));
  out.weight_report = certify_weights(out.rge.weights, n, k.alpha1, k.alpha2, k.alpha3);
  out.log.push_back("weight certificate: " + std::string(out.weight_report.pass ? "pass" : "fail") + " (" +
                    std::to_string(out.weight_report.violations.size()) + " violations)");
  try {
    out.lll = lll_condition(params.r, params.D, k.alpha3, k.alpha);
    out.log.push_back("local lemma condition value " + format_double(out.lll.value) +
                      (out.lll.holds ? " (holds)" : " (fails)"));
  } catch (const ParameterError& e) {
    out.log.push_back(std::string("local lemma condition not evaluated: ") + e.what());
  }

  const CompletionResult completion = complete_random(c, tree, out.rge.partial, substream_seed(seed, 2),
                                                      CompletionOptions{params.max_retries, params.repair_steps});
  out.success = completion.success;
  out.embedding = completion.embedding;
  out.attempts = completion.attempts;
  out.bad_events = completion.bad_events;
  out.log.push_back("completion: " + std::string(out.success ? "rainbow" : "retries exhausted") + " after " +
                    std::to_string(out.attempts) + " attempts");
  return out;
}

EdgeColouring symmetric_latin_colouring(int n, std::uint64_t seed) {
  return symmetrize(latin_to_colouring(symmetric_random_latin_square(n, seed)));
}

}  // namespace rainbow
