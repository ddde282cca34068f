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

// Independent reference computations for cross-checking the library. They
// enumerate everything without pruning and recompute quantities straight
// from their definitions, sharing no code with the implementations under test.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/tree_embed.hpp"

namespace rainbow::reference {

inline bool all_distinct(std::vector<Colour> colours) {
  std::sort(colours.begin(), colours.end());
  return std::adjacent_find(colours.begin(), colours.end()) == colours.end();
}

inline std::vector<Vertex> identity(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Colouring of the complete digraph in which every edge has its own colour
// u * n + v. Proper, and every subgraph is rainbow.
inline EdgeColouring distinct_colour_digraph(int n) {
  std::vector<Colour> m(static_cast<std::size_t>(n * n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(u * n + v)] = u * n + v;
  }
  return EdgeColouring(n, true, std::move(m));
}

// Maximum rainbow path forest by scanning every subset of directed edges.
inline int max_path_forest_by_subsets(const EdgeColouring& c) {
  const int n = c.n();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) edges.emplace_back(u, v);
    }
  }
  const std::size_t m = edges.size();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> out(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> succ(static_cast<std::size_t>(n), -1);
    std::vector<Colour> colours;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      const auto [u, v] = edges[i];
      ok = ++out[static_cast<std::size_t>(u)] == 1 && ++in[static_cast<std::size_t>(v)] == 1;
      succ[static_cast<std::size_t>(u)] = v;
      colours.push_back(c.colour(u, v));
    }
    if (!ok || !all_distinct(colours)) continue;
    for (Vertex s = 0; s < n && ok; ++s) {
      Vertex w = succ[static_cast<std::size_t>(s)];
      for (int steps = 0; w != -1 && steps <= n; ++steps) {
        if (w == s) ok = false;
        w = succ[static_cast<std::size_t>(w)];
      }
    }
    if (ok) best = std::max(best, static_cast<int>(colours.size()));
  }
  return best;
}

// Rainbow Hamilton path by scanning all vertex orderings.
inline bool hamilton_by_permutations(const EdgeColouring& c) {
  std::vector<Vertex> p = identity(c.n());
  do {
    std::vector<Colour> colours;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) colours.push_back(c.colour(p[i], p[i + 1]));
    if (all_distinct(colours)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Longest rainbow simple cycle by scanning every ordering and every prefix.
inline int max_cycle_by_permutations(const EdgeColouring& c) {
  const std::size_t min_len = c.directed() ? 2 : 3;
  int best = 0;
  std::vector<Vertex> p = identity(c.n());
  do {
    for (std::size_t len = min_len; len <= p.size(); ++len) {
      std::vector<Colour> colours;
      for (std::size_t i = 0; i < len; ++i) colours.push_back(c.colour(p[i], p[(i + 1) % len]));
      if (all_distinct(colours)) best = std::max(best, static_cast<int>(len));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool embedding_is_rainbow(const EdgeColouring& c, const TreeSpec& tree, const std::vector<Vertex>& pi) {
  std::vector<Colour> colours;
  for (Vertex v = 1; v < tree.n(); ++v) {
    colours.push_back(c.colour(pi[static_cast<std::size_t>(v)], pi[static_cast<std::size_t>(tree.parent(v))]));
  }
  return all_distinct(colours);
}

// Rainbow tree embedding by scanning all n! bijections.
inline std::optional<std::vector<Vertex>> tree_embedding_by_permutations(const EdgeColouring& c,
                                                                        const TreeSpec& tree) {
  std::vector<Vertex> pi = identity(c.n());
  do {
    if (embedding_is_rainbow(c, tree, pi)) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

inline bool present_at(const EdgeColouring& c, Colour f, Vertex x) {
  for (Vertex y = 0; y < c.n(); ++y) {
    if (y != x && c.colour(x, y) == f) return true;
  }
  return false;
}

inline std::set<Colour> t0_colours(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& p) {
  std::set<Colour> out;
  for (Vertex v = 1; v < tree.n(); ++v) {
    const Vertex u = tree.parent(v);
    if (p.placed(u) && p.placed(v)) {
      out.insert(c.colour(p.pi[static_cast<std::size_t>(u)], p.pi[static_cast<std::size_t>(v)]));
    }
  }
  return out;
}

// w_f, w_g and m_g evaluated term by term from their definitions.
inline Weights weights_from_definitions(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& p) {
  const int n = c.n();
  const std::set<Colour> t0 = t0_colours(c, tree, p);
  Weights w;
  w.w_f.assign(static_cast<std::size_t>(c.colour_bound()), 0);
  w.w_g.assign(static_cast<std::size_t>(n), 0);
  w.m_g.assign(static_cast<std::size_t>(n), 0);
  for (Colour f : c.colours()) {
    for (Vertex u = 0; u < n; ++u) {
      if (p.placed(u) && present_at(c, f, p.pi[static_cast<std::size_t>(u)])) {
        w.w_f[static_cast<std::size_t>(f)] += tree.degree(u);
      }
    }
  }
  for (Vertex g = 0; g < n; ++g) {
    const bool in_b = std::any_of(p.pi.begin(), p.pi.end(), [&](Vertex b) { return b == g; });
    if (!in_b) {
      for (Vertex u = 0; u < n; ++u) {
        if (p.placed(u) && t0.count(c.colour(g, p.pi[static_cast<std::size_t>(u)]))) {
          w.w_g[static_cast<std::size_t>(g)] += tree.degree(u);
        }
      }
    }
    for (Vertex a = 0; a < n; ++a) {
      const bool in_a = std::none_of(p.pi.begin(), p.pi.end(), [&](Vertex b) { return b == a; });
      if (in_a && a != g && t0.count(c.colour(a, g))) ++w.m_g[static_cast<std::size_t>(g)];
    }
  }
  return w;
}

// Bad events of the five families, each a set of (tree vertex, host vertex)
// assignments, enumerated from the defining conditions.
struct CensusTally {
  std::size_t count = 0;
  std::map<Vertex, double> per_w;
  std::map<Vertex, double> per_a;
};

inline std::array<CensusTally, 5> census_by_definition(const EdgeColouring& c, const TreeSpec& tree,
                                                       const PartialEmbedding& p) {
  const int n = c.n();
  const std::set<Colour> t0 = t0_colours(c, tree, p);
  std::vector<Vertex> w_set, a_set;
  for (Vertex v = 0; v < n; ++v) {
    if (!p.placed(v)) w_set.push_back(v);
    if (std::none_of(p.pi.begin(), p.pi.end(), [&](Vertex b) { return b == v; })) a_set.push_back(v);
  }
  auto image = [&](Vertex u) { return p.pi[static_cast<std::size_t>(u)]; };
  // (root, W vertex) tree edges and ordered W-W tree edges.
  std::vector<std::pair<Vertex, Vertex>> rw, ww;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y || !tree.adjacent(x, y)) continue;
      if (p.placed(x) && !p.placed(y)) rw.emplace_back(x, y);
      if (!p.placed(x) && !p.placed(y)) ww.emplace_back(x, y);
    }
  }
  using Event = std::set<std::pair<Vertex, Vertex>>;
  std::array<std::set<Event>, 5> events;
  for (const auto& [v0, v] : rw) {
    for (Vertex a : a_set) {
      if (t0.count(c.colour(image(v0), a))) events[0].insert(Event{std::pair{v, a}});
    }
  }
  for (const auto& [v, w] : ww) {
    for (Vertex a : a_set) {
      for (Vertex b : a_set) {
        if (a != b && t0.count(c.colour(a, b))) events[1].insert(Event{{v, a}, {w, b}});
      }
    }
  }
  for (const auto& [v0, v] : rw) {
    for (const auto& [w0, w] : rw) {
      if (v == w) continue;
      for (Vertex a : a_set) {
        for (Vertex b : a_set) {
          if (a != b && c.colour(image(v0), a) == c.colour(image(w0), b)) events[2].insert(Event{{v, a}, {w, b}});
        }
      }
    }
  }
  for (const auto& [v0, v] : rw) {
    for (const auto& [w, x] : ww) {
      if (v == w || v == x) continue;
      for (Vertex a : a_set) {
        for (Vertex b : a_set) {
          for (Vertex d : a_set) {
            if (a == b || a == d || b == d) continue;
            if (c.colour(image(v0), a) == c.colour(b, d)) events[3].insert(Event{{v, a}, {w, b}, {x, d}});
          }
        }
      }
    }
  }
  for (const auto& [v, w] : ww) {
    for (const auto& [x, y] : ww) {
      if (x == v || x == w || y == v || y == w) continue;
      for (Vertex a : a_set) {
        for (Vertex b : a_set) {
          if (a == b) continue;
          for (Vertex d : a_set) {
            if (d == a || d == b) continue;
            for (Vertex e : a_set) {
              if (e == a || e == b || e == d) continue;
              if (c.colour(a, b) == c.colour(d, e)) events[4].insert(Event{{v, a}, {w, b}, {x, d}, {y, e}});
            }
          }
        }
      }
    }
  }
  std::array<CensusTally, 5> out;
  const double size = static_cast<double>(a_set.size());
  for (std::size_t f = 0; f < 5; ++f) {
    out[f].count = events[f].size();
    for (const Event& e : events[f]) {
      double prob = 1.0;
      for (std::size_t i = 0; i < e.size(); ++i) prob /= size - static_cast<double>(i);
      for (const auto& [w, a] : e) {
        out[f].per_w[w] += prob;
        out[f].per_a[a] += prob;
      }
    }
  }
  return out;
}

}  // namespace rainbow::reference
