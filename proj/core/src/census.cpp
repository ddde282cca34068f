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

#include "rainbow/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

// An event is a set of at most four (W vertex, A vertex) assignments packed
// as sorted byte pairs into one 64-bit key.
using Assignment = std::pair<Vertex, Vertex>;

std::uint64_t pack(std::vector<Assignment> event) {
  std::sort(event.begin(), event.end());
  std::uint64_t key = 0;
  for (const auto& [w, a] : event) {
    key = (key << 16) | (static_cast<std::uint64_t>(w + 1) << 8) | static_cast<std::uint64_t>(a + 1);
  }
  return key;
}

std::vector<Assignment> unpack(std::uint64_t key) {
  std::vector<Assignment> out;
  while (key != 0) {
    out.emplace_back(static_cast<Vertex>((key >> 8) & 0xff) - 1, static_cast<Vertex>(key & 0xff) - 1);
    key >>= 16;
  }
  return out;
}

void finish(std::vector<std::uint64_t>& keys, FamilyTally& tally, int n, int a_size) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  tally.count = keys.size();
  tally.per_w.assign(at(n), 0.0);
  tally.per_a.assign(at(n), 0.0);
  for (std::uint64_t key : keys) {
    const auto event = unpack(key);
    double prob = 1.0;
    for (std::size_t i = 0; i < event.size(); ++i) prob /= static_cast<double>(a_size - static_cast<int>(i));
    tally.probability_sum += prob;
    for (const auto& [w, a] : event) {
      tally.per_w[at(w)] += prob;
      tally.per_a[at(a)] += prob;
    }
  }
}

}  // namespace

InstanceParameters instance_parameters(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& partial) {
  const int n = c.n();
  InstanceParameters p;
  p.r = static_cast<double>(partial.roots.size()) / n;
  int d = 1;
  for (Vertex w : partial.w_set) d = std::max(d, tree.degree(w));
  p.D = d;
  const Weights weights = compute_weights(c, tree, partial);
  const long long chi = std::max({weights.max_w_f(), weights.max_w_g(), weights.max_m_g()});
  p.chi = static_cast<double>(chi) / n;
  p.alpha = static_cast<double>(validate(c).global_bound) / n;
  return p;
}

ClaimBounds claim_bounds(const InstanceParameters& p) {
  const double q = 1.0 - p.r;
  const double q1 = 1.0 / q, q2 = q1 * q1, q3 = q2 * q1;
  ClaimBounds b;
  b.w_side = {p.D * p.chi * q1, 4 * p.D * p.alpha * p.r * q2, 2 * p.D * p.chi * q1, 8 * p.D * p.alpha * q2,
              4 * p.D * p.alpha * q2};
  b.a_side = {p.chi * q1, 4 * p.chi * q2, 2 * p.chi * q2, 4 * p.alpha * q3 + 4 * p.chi * q2, 8 * p.alpha * q3};
  return b;
}

BadEventCensus bad_event_census(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& partial,
                                CensusMode mode, int max_n) {
  if (c.directed() || c.n() != tree.n()) throw ParameterError("census needs an undirected host of the tree's size");
  const int n = c.n();
  BadEventCensus census;
  census.mode = mode;
  census.params = instance_parameters(c, tree, partial);

  if (mode == CensusMode::bound) {
    const ClaimBounds bounds = claim_bounds(census.params);
    for (std::size_t f = 0; f < 5; ++f) {
      auto& t = census.families[f];
      t.per_w.assign(at(n), 0.0);
      t.per_a.assign(at(n), 0.0);
      for (Vertex w : partial.w_set) t.per_w[at(w)] = bounds.w_side[f];
      for (Vertex a : partial.a_set) t.per_a[at(a)] = bounds.a_side[f];
    }
    return census;
  }
  if (n > std::min(max_n, 255)) {
    throw ExhaustedError("exact census refused: n = " + std::to_string(n) + " exceeds the budget " +
                         std::to_string(std::min(max_n, 255)));
  }

  const Colour bound = c.colour_bound();
  std::vector<std::uint8_t> in_t0(at(bound), 0);
  for (Colour f : partial.t0_colours) in_t0[at(f)] = 1;
  std::vector<std::uint8_t> in_a(at(n), 0);
  for (Vertex a : partial.a_set) in_a[at(a)] = 1;
  // Host neighbour of x along colour f.
  std::vector<Vertex> along(at(n) * at(bound), kNoVertex);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x != y) along[at(x) * at(bound) + at(c.colour(x, y))] = y;
    }
  }
  // Tree edges by type: BA as (root, w), AA in both orientations.
  std::vector<std::pair<Vertex, Vertex>> ba, aa;
  for (const Edge& e : tree.edges()) {
    const bool pf = partial.placed(e.from), pt = partial.placed(e.to);
    if (pf && !pt) ba.emplace_back(e.from, e.to);
    if (!pf && pt) ba.emplace_back(e.to, e.from);
    if (!pf && !pt) {
      aa.emplace_back(e.from, e.to);
      aa.emplace_back(e.to, e.from);
    }
  }
  // Ordered pairs (a, b) of distinct A vertices.
  std::vector<std::pair<Vertex, Vertex>> a_pairs;
  for (Vertex a : partial.a_set) {
    for (Vertex b : partial.a_set) {
      if (a != b) a_pairs.emplace_back(a, b);
    }
  }
  const int a_size = static_cast<int>(partial.a_set.size());
  auto pi = [&](Vertex u) { return partial.pi[at(u)]; };

  std::array<std::vector<std::uint64_t>, 5> keys;
  // FR: sigma(v) = a with v0 v in T and c(pi(v0) a) in c(T0).
  for (const auto& [v0, v] : ba) {
    for (Vertex a : partial.a_set) {
      if (in_t0[at(c.colour(pi(v0), a))]) keys[0].push_back(pack({{v, a}}));
    }
  }
  // F: sigma(v) = a, sigma(w) = b with vw in T[W] and c(ab) in c(T0).
  for (const auto& [v, w] : aa) {
    for (const auto& [a, b] : a_pairs) {
      if (in_t0[at(c.colour(a, b))]) keys[1].push_back(pack({{v, a}, {w, b}}));
    }
  }
  // SRR: c(pi(v0) a) = c(pi(w0) b).
  for (const auto& [v0, v] : ba) {
    for (Vertex a : partial.a_set) {
      const Colour f = c.colour(pi(v0), a);
      for (const auto& [w0, w] : ba) {
        if (w == v) continue;
        const Vertex b = along[at(pi(w0)) * at(bound) + at(f)];
        if (b == kNoVertex || b == a || !in_a[at(b)]) continue;
        keys[2].push_back(pack({{v, a}, {w, b}}));
      }
    }
  }
  // SR: c(pi(v0) a) = c(bd) with wx in T[W].
  for (const auto& [v0, v] : ba) {
    for (Vertex a : partial.a_set) {
      const Colour f = c.colour(pi(v0), a);
      for (const Edge& e : c.class_of(f)) {
        for (int flip = 0; flip < 2; ++flip) {
          const Vertex b = flip ? e.to : e.from, d = flip ? e.from : e.to;
          if (!in_a[at(b)] || !in_a[at(d)] || b == a || d == a) continue;
          for (const auto& [w, x] : aa) {
            if (w == v || x == v) continue;
            keys[3].push_back(pack({{v, a}, {w, b}, {x, d}}));
          }
        }
      }
    }
  }
  // S: c(ab) = c(de) with vw, xy disjoint edges of T[W].
  for (const auto& [a, b] : a_pairs) {
    const Colour f = c.colour(a, b);
    for (const Edge& e : c.class_of(f)) {
      for (int flip = 0; flip < 2; ++flip) {
        const Vertex d = flip ? e.to : e.from, ee = flip ? e.from : e.to;
        if (!in_a[at(d)] || !in_a[at(ee)] || d == a || d == b || ee == a || ee == b) continue;
        for (const auto& [v, w] : aa) {
          for (const auto& [x, y] : aa) {
            if (x == v || x == w || y == v || y == w) continue;
            keys[4].push_back(pack({{v, a}, {w, b}, {x, d}, {y, ee}}));
          }
        }
      }
    }
  }
  for (std::size_t f = 0; f < 5; ++f) finish(keys[f], census.families[f], n, a_size);
  return census;
}

}  // namespace rainbow
