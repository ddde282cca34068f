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

#include "rainbow/rotation_glue.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

ExpanderView::ExpanderView(const EdgeColouring& host, const ColourMask& live)
    : host_(&host),
      live_(static_cast<std::size_t>(host.colour_bound()), 0),
      in_degree_(static_cast<std::size_t>(host.n()), 0) {
  for (Colour f : host.colours()) {
    if (static_cast<std::size_t>(f) >= live.size() || !live[static_cast<std::size_t>(f)]) continue;
    live_[static_cast<std::size_t>(f)] = 1;
    ++live_colours_;
    for (const Edge& e : host.class_of(f)) {
      ++in_degree_[static_cast<std::size_t>(e.to)];
      ++live_edges_;
      if (!host.directed()) ++in_degree_[static_cast<std::size_t>(e.from)];
    }
  }
}

int ExpanderView::min_in_degree() const {
  return in_degree_.empty() ? 0 : *std::min_element(in_degree_.begin(), in_degree_.end());
}

void ExpanderView::consume(std::span<const Colour> colours) {
  for (Colour f : colours) {
    if (f < 0 || f >= host_->colour_bound() || !live(f)) continue;
    live_[static_cast<std::size_t>(f)] = 0;
    --live_colours_;
    deletion_log_.push_back(f);
    for (const Edge& e : host_->class_of(f)) {
      --in_degree_[static_cast<std::size_t>(e.to)];
      --live_edges_;
      if (!host_->directed()) --in_degree_[static_cast<std::size_t>(e.from)];
    }
  }
}

std::vector<Colour> used_colours(const EdgeColouring& host, const std::array<Edge, 3>& used) {
  std::vector<Colour> out;
  for (const Edge& e : used) out.push_back(host.colour(e.from, e.to));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct Location {
  int path = -1;
  int pos = -1;  // 0-indexed position, t = pos + 1
};

// Q1 = P_s[0..pos], P_s' = P_s[pos+1..]; other paths keep their order with
// the new first path in front.
PathForest rebuild(const PathForest& forest, const std::vector<Vertex>& first, int s, int pos) {
  const auto& paths = forest.paths();
  std::vector<std::vector<Vertex>> out;
  out.reserve(paths.size());
  out.push_back(first);
  for (int i = 1; i < static_cast<int>(paths.size()); ++i) {
    const auto& p = paths[static_cast<std::size_t>(i)];
    if (i == s) {
      if (pos + 1 < static_cast<int>(p.size())) out.emplace_back(p.begin() + pos + 1, p.end());
    } else {
      out.push_back(p);
    }
  }
  return PathForest::from_paths(forest.host(), out);
}

std::vector<Vertex> prefix(const std::vector<Vertex>& path, int pos) {
  return std::vector<Vertex>(path.begin(), path.begin() + pos + 1);
}

}  // namespace

RotationResult rotate_extend(const PathForest& forest, const ExpanderView& h, int b, int m) {
  const EdgeColouring& host = forest.host();
  const auto& paths = forest.paths();
  const int r = forest.path_count();
  if (b < 1 || m < 1) throw ParameterError("rotate_extend needs b >= 1 and m >= 1");
  if (static_cast<long long>(m) * r > b) {
    throw ParameterError("rotate_extend needs m*r <= b (m=" + std::to_string(m) + ", r=" + std::to_string(r) +
                         ", b=" + std::to_string(b) + ")");
  }
  for (Colour f : forest.colours()) {
    if (h.live(f)) throw ValidationError("H shares colour " + std::to_string(f) + " with the path forest");
  }
  RotationResult result;
  if (r == 0) {
    result.status = RotationStatus::already_long;
    return result;
  }
  const auto& p1 = paths[0];
  const int len1 = static_cast<int>(p1.size());
  if (len1 >= forest.vertex_count() - 2 * b) {
    result.status = RotationStatus::already_long;
    return result;
  }
  const Vertex v1 = p1[0];

  // B' = vertices at 1-indexed position >= m on the other paths; B0 = its b
  // smallest ids.
  std::vector<Vertex> b_prime;
  for (int i = 1; i < r; ++i) {
    const auto& p = paths[static_cast<std::size_t>(i)];
    for (int pos = m - 1; pos < static_cast<int>(p.size()); ++pos) b_prime.push_back(p[static_cast<std::size_t>(pos)]);
  }
  std::sort(b_prime.begin(), b_prime.end());
  const std::vector<Vertex> b0(b_prime.begin(), b_prime.begin() + std::min<std::ptrdiff_t>(b, std::ssize(b_prime)));
  auto locate = [&](Vertex u) { return Location{forest.path_of(u), forest.position_of(u)}; };

  // Case 1: an H-edge from B' into v1.
  {
    Vertex best = kNoVertex;
    int best_pos = -1;
    for (Vertex u : b_prime) {
      if (!h.has_edge(u, v1)) continue;
      const int pos = forest.position_of(u);
      if (pos > best_pos) {
        best = u;
        best_pos = pos;
      }
    }
    if (best != kNoVertex) {
      const Location loc = locate(best);
      auto first = prefix(paths[static_cast<std::size_t>(loc.path)], loc.pos);
      first.insert(first.end(), p1.begin(), p1.end());
      const Edge e{best, v1};
      result.status = RotationStatus::rotated;
      result.outcome = RotationOutcome{rebuild(forest, first, loc.path, loc.pos), {e, e, e}, 1, std::nullopt};
      return result;
    }
  }

  // Case 2: x outside the forest with x -> v1 and an edge f from B0 into x
  // whose colour differs from c(x v1).
  {
    Vertex best_x = kNoVertex, best_u = kNoVertex;
    int best_pos = -1;
    for (Vertex x = 0; x < host.n(); ++x) {
      if (forest.covers(x) || !h.has_edge(x, v1)) continue;
      const Colour cx = host.colour(x, v1);
      for (Vertex u : b0) {
        if (!h.has_edge(u, x) || host.colour(u, x) == cx) continue;
        const int pos = forest.position_of(u);
        if (pos > best_pos) {
          best_pos = pos;
          best_x = x;
          best_u = u;
        }
      }
    }
    if (best_x != kNoVertex) {
      const Location loc = locate(best_u);
      auto first = prefix(paths[static_cast<std::size_t>(loc.path)], loc.pos);
      first.push_back(best_x);
      first.insert(first.end(), p1.begin(), p1.end());
      const Edge f{best_u, best_x};
      result.status = RotationStatus::rotated;
      result.outcome =
          RotationOutcome{rebuild(forest, first, loc.path, loc.pos), {f, f, Edge{best_x, v1}}, 2, std::nullopt};
      return result;
    }
  }

  // Case 3: a good vertex v_k (2 <= k <= 2b) with friend v_a (2b < a < |P1|)
  // and an edge f1 from B0 into v_k avoiding both rotation colours.
  {
    std::vector<int> friend_candidates;  // 1-indexed a with v_a -> v1 in H
    for (int a = 2 * b + 1; a < len1; ++a) {
      if (h.has_edge(p1[static_cast<std::size_t>(a - 1)], v1)) friend_candidates.push_back(a);
    }
    int best_k = -1, best_a = -1, best_pos = -1;
    Vertex best_u = kNoVertex;
    if (!friend_candidates.empty()) {
      const int k_max = std::min(2 * b, len1);
      for (int k = 2; k <= k_max; ++k) {
        const Vertex vk = p1[static_cast<std::size_t>(k - 1)];
        const Vertex vk_prev = p1[static_cast<std::size_t>(k - 2)];
        // Up to three B0 in-edges of v_k with the largest t; proper colouring
        // means at most two of them can clash with the rotation colours.
        std::vector<Vertex> attach;
        for (Vertex u : b0) {
          if (h.has_edge(u, vk)) attach.push_back(u);
        }
        if (attach.empty()) continue;
        std::stable_sort(attach.begin(), attach.end(),
                         [&](Vertex x, Vertex y) { return forest.position_of(x) > forest.position_of(y); });
        if (attach.size() > 3) attach.resize(3);
        if (forest.position_of(attach.front()) <= best_pos) continue;
        for (int a : friend_candidates) {
          const Vertex va = p1[static_cast<std::size_t>(a - 1)];
          const Vertex va_next = p1[static_cast<std::size_t>(a)];
          if (!h.has_edge(vk_prev, va_next)) continue;
          const Colour c1 = host.colour(vk_prev, va_next);
          const Colour c2 = host.colour(va, v1);
          if (c1 == c2) continue;
          for (Vertex u : attach) {
            const Colour cf = host.colour(u, vk);
            if (cf == c1 || cf == c2) continue;
            if (forest.position_of(u) > best_pos) {
              best_pos = forest.position_of(u);
              best_u = u;
              best_k = k;
              best_a = a;
            }
            break;
          }
        }
      }
    }
    if (best_k > 0) {
      const Location loc = locate(best_u);
      auto first = prefix(paths[static_cast<std::size_t>(loc.path)], loc.pos);
      // P1(v_k, v_a) = R2 + v_a v_1 + R1 + v_{k-1} v_{a+1} + R3.
      first.insert(first.end(), p1.begin() + (best_k - 1), p1.begin() + best_a);  // R2
      first.insert(first.end(), p1.begin(), p1.begin() + (best_k - 1));           // R1
      first.insert(first.end(), p1.begin() + best_a, p1.end());                   // R3
      const Vertex vk = p1[static_cast<std::size_t>(best_k - 1)];
      const Vertex va = p1[static_cast<std::size_t>(best_a - 1)];
      const Edge e1{p1[static_cast<std::size_t>(best_k - 2)], p1[static_cast<std::size_t>(best_a)]};
      const Edge e2{va, v1};
      const Edge e3{best_u, vk};
      result.status = RotationStatus::rotated;
      result.outcome = RotationOutcome{rebuild(forest, first, loc.path, loc.pos), {e1, e2, e3}, 3,
                                       std::make_pair(vk, va)};
      return result;
    }
  }

  result.status = RotationStatus::shortfall;
  result.diagnostic = "expansion shortfall: none of the three cases applies (|P1|=" + std::to_string(len1) +
                      ", v(P)=" + std::to_string(forest.vertex_count()) + ", b=" + std::to_string(b) + ")";
  return result;
}

std::optional<std::vector<Vertex>> close_cycle(std::span<const Vertex> path, const ExpanderView& h, int b) {
  const int len = static_cast<int>(path.size());
  if (len < 2 || b < 1) return std::nullopt;
  int best_i = -1, best_j = -1;
  for (int i = len - 1; i >= std::max(0, len - b); --i) {
    for (int j = 0; j < std::min(b, i); ++j) {
      if (i - j <= best_i - best_j) break;
      if (h.has_edge(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(j)])) {
        best_i = i;
        best_j = j;
        break;
      }
    }
  }
  if (best_i < 0) return std::nullopt;
  if (!h.host().directed() && best_i - best_j < 2) return std::nullopt;
  return std::vector<Vertex>(path.begin() + best_j, path.begin() + best_i + 1);
}

std::optional<std::string> check_rainbow_cycle(const EdgeColouring& c, std::span<const Vertex> cycle) {
  const int len = static_cast<int>(cycle.size());
  const int min_len = c.directed() ? 2 : 3;
  if (len < min_len) return "cycle has " + std::to_string(len) + " vertices, need at least " + std::to_string(min_len);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(c.n()), 0);
  std::vector<std::uint8_t> colour_seen(static_cast<std::size_t>(c.colour_bound()), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= c.n()) return "vertex " + std::to_string(v) + " out of range";
    if (seen[static_cast<std::size_t>(v)]++) return "vertex " + std::to_string(v) + " repeated";
  }
  for (int i = 0; i < len; ++i) {
    const Vertex u = cycle[static_cast<std::size_t>(i)];
    const Vertex v = cycle[static_cast<std::size_t>((i + 1) % len)];
    const Colour f = c.colour(u, v);
    if (colour_seen[static_cast<std::size_t>(f)]++) {
      return "colour " + std::to_string(f) + " repeated (edge " + std::to_string(u) + "->" + std::to_string(v) + ")";
    }
  }
  return std::nullopt;
}

namespace {

int round_at_least_one(double x) { return std::max(1, static_cast<int>(std::lround(x))); }

std::string condition_message(int n, double gamma, double delta, const ForestCondition& cond) {
  return "forest condition fails: delta^2*gamma*n = " + format_double(delta * delta * gamma * n) +
         " <= 1 (floor form " + format_double(cond.value) + ", n=" + std::to_string(n) +
         ", gamma=" + format_double(gamma) + ", delta=" + format_double(delta) + ")";
}

// Smallest gamma (and, if needed, a larger delta) passing the forest
// condition with gamma <= delta < 1. Returns false if none exists.
bool fit_gamma_delta(int n, double& gamma, double& delta) {
  for (int q = stable_floor(1.0 / delta); q >= 1; --q) {
    const double d = (q == stable_floor(1.0 / delta)) ? delta : std::min(1.0 / q, 1.0 - 1e-9);
    if (!(d < 1.0) || stable_floor(1.0 / d) != q) continue;
    const double g = (static_cast<double>(q) * (q + 1) + 0.5) / n;
    if (g <= d) {
      gamma = g;
      delta = d;
      return forest_condition(n, gamma, delta).holds;
    }
  }
  return false;
}

struct Attempt {
  std::vector<Vertex> cycle;
  std::vector<Vertex> path;
  CycleStats stats;
  std::string diagnostic;
};

void check_degree_decay(const ExpanderView& h, const std::vector<int>& initial, int round) {
  for (Vertex v = 0; v < h.host().n(); ++v) {
    if (h.in_degree(v) < initial[static_cast<std::size_t>(v)] - 3 * round) {
      throw std::logic_error("H in-degree of vertex " + std::to_string(v) + " dropped by more than 3 per round");
    }
  }
}

Attempt run_attempt(const EdgeColouring& c, const CycleParams& params, std::uint64_t seed) {
  const int n = c.n();
  Attempt out;
  out.stats.n = n;
  out.stats.p = params.p;
  out.stats.m = params.m;
  const SplitResult split = sample_colour_split(c, params.p, seed);
  out.stats.h_colours = static_cast<int>(split.h_colours.size());
  ExpanderView h(c, split.h_mask(c.colour_bound()));
  if (params.audit_slack >= 0.0) {
    const double pn = params.p * n;
    const double lo = 5.5 / 6.0 * pn * (1.0 - params.audit_slack);
    const double hi = 7.0 / 6.0 * pn * (1.0 + params.audit_slack);
    for (Vertex v = 0; v < n; ++v) {
      if (h.in_degree(v) < lo || h.in_degree(v) > hi) {
        out.diagnostic = "H in-degree audit failed at vertex " + std::to_string(v) + " (in-degree " +
                         std::to_string(h.in_degree(v)) + " outside [" + format_double(lo) + ", " +
                         format_double(hi) + "])";
        return out;
      }
    }
  }
  const ColourMask g_mask = split.g_mask(c.colour_bound());
  double gamma = 0.0, delta = 0.0;
  if (params.delta) {
    delta = *params.delta;
  } else {
    int min_in = n;
    for (Vertex v = 0; v < n; ++v) min_in = std::min(min_in, in_degree_within(c, g_mask, v));
    delta = static_cast<double>(n - min_in) / n;
    if (!(delta < 1.0)) {
      out.diagnostic = "G has a vertex with in-degree 0";
      return out;
    }
  }
  if (params.gamma) {
    gamma = *params.gamma;
  } else if (!fit_gamma_delta(n, gamma, delta)) {
    out.diagnostic = "no gamma satisfies the forest condition for delta=" + format_double(delta);
    return out;
  }
  out.stats.gamma = gamma;
  out.stats.delta = delta;

  ForestRun run = [&] {
    try {
      return long_rainbow_path_forest(c, g_mask, gamma, delta);
    } catch (const ParameterError& e) {
      // The condition was checked up front, so this is the split's G failing
      // the in-degree hypothesis: resample.
      throw ExhaustedError(e.what());
    }
  }();
  out.stats.forest_edges = run.forest.edge_count();
  out.stats.forest_paths = run.forest.path_count();

  // Longest path first, remaining order kept.
  auto paths = run.forest.paths();
  std::stable_sort(paths.begin(), paths.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  PathForest forest = PathForest::from_paths(c, paths);

  const int r = forest.path_count();
  int b = 0;
  if (params.b) {
    b = *params.b;
  } else {
    b = std::max({round_at_least_one(params.b_scale * std::pow(n, 0.4)), params.m * r, 1});
  }
  out.stats.b = b;

  std::vector<int> initial(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) initial[static_cast<std::size_t>(v)] = h.in_degree(v);
  const int max_rounds = params.rounds > 0 ? params.rounds : n;
  for (int round = 0; round < max_rounds; ++round) {
    RotationResult step = rotate_extend(forest, h, b, params.m);
    if (step.status == RotationStatus::already_long) {
      out.stats.already_long = true;
      break;
    }
    if (step.status == RotationStatus::shortfall) {
      out.stats.shortfall = true;
      out.diagnostic = step.diagnostic;
      break;
    }
    const auto consumed = used_colours(c, step.outcome->used);
    h.consume(consumed);
    forest = std::move(step.outcome->forest);
    ++out.stats.rounds;
    ++out.stats.case_counts[step.outcome->case_tag - 1];
    check_degree_decay(h, initial, out.stats.rounds);
  }
  if (forest.path_count() > 0) out.path = forest.paths()[0];
  out.stats.path_length = static_cast<int>(out.path.size());
  if (auto cycle = close_cycle(out.path, h, b)) {
    out.cycle = std::move(*cycle);
    out.stats.closed = true;
    out.stats.length = static_cast<int>(out.cycle.size());
  } else if (out.diagnostic.empty()) {
    out.diagnostic = "no closing edge between the last and first " + std::to_string(b) + " vertices";
  }
  return out;
}

}  // namespace

CycleParams cycle_preset(const std::string& name, int n) {
  CycleParams params;
  params.preset = name;
  const double nn = std::max(1, n);
  if (name == "paper-s24") {
    params.p = 6.0 * std::pow(nn, -0.2);
    params.b = round_at_least_one(std::pow(nn, 0.8));
    params.m = round_at_least_one(std::pow(nn, 0.4));
    params.gamma = std::pow(nn, -0.6);
    params.delta = 7.0 * std::pow(nn, -0.2);
    params.rounds = round_at_least_one(std::pow(nn, 0.6));
    params.audit_slack = 0.0;
  } else if (name == "desk") {
    params.p = std::min(0.9, std::pow(nn, -0.2));
    params.b_scale = 1.0;
    params.m = 1;
    params.rounds = 0;
  } else {
    throw ParameterError("unknown cycle preset '" + name + "' (expected desk or paper-s24)");
  }
  return params;
}

CycleResult long_rainbow_cycle(const EdgeColouring& c, const CycleParams& params, std::uint64_t seed) {
  if (!c.directed()) throw ParameterError("long_rainbow_cycle needs a directed colouring");
  const int n = c.n();
  if (params.gamma && params.delta) {
    const ForestCondition cond = forest_condition(n, *params.gamma, *params.delta);
    if (!cond.holds) throw ParameterError(condition_message(n, *params.gamma, *params.delta, cond));
  }
  if (!(params.p > 0.0 && params.p < 1.0)) {
    throw ParameterError("colour split probability p=" + format_double(params.p) + " must lie in (0, 1)");
  }
  if (params.m < 1) throw ParameterError("m must be at least 1");
  if (params.resamples < 1) throw ParameterError("resamples must be at least 1");

  CycleResult best;
  best.stats.n = n;
  std::string last_diagnostic;
  for (int attempt = 0; attempt < params.resamples; ++attempt) {
    Attempt a;
    try {
      a = run_attempt(c, params, substream_seed(seed, static_cast<std::uint64_t>(attempt)));
    } catch (const ExhaustedError& e) {
      a.diagnostic = e.what();
    }
    a.stats.attempts = attempt + 1;
    if (!a.diagnostic.empty()) last_diagnostic = "attempt " + std::to_string(attempt) + ": " + a.diagnostic;
    const bool better = a.cycle.size() > best.cycle.size() ||
                        (a.cycle.size() == best.cycle.size() && a.path.size() > best.best_path.size());
    if (better || attempt == 0) {
      best.cycle = a.cycle;
      best.best_path = a.path;
      best.stats = a.stats;
    }
    best.stats.attempts = attempt + 1;
    if (a.stats.closed && !a.stats.shortfall) break;
  }
  if (best.cycle.empty()) best.diagnostic = last_diagnostic;
  return best;
}

KeyValues cycle_stats_values(const CycleStats& s) {
  return {
      {"n", std::to_string(s.n)},
      {"length", std::to_string(s.length)},
      {"deficiency", std::to_string(s.n - s.length)},
      {"path_length", std::to_string(s.path_length)},
      {"closed", s.closed ? "1" : "0"},
      {"attempts", std::to_string(s.attempts)},
      {"resamples", std::to_string(s.attempts - 1)},
      {"rounds", std::to_string(s.rounds)},
      {"case1", std::to_string(s.case_counts[0])},
      {"case2", std::to_string(s.case_counts[1])},
      {"case3", std::to_string(s.case_counts[2])},
      {"already_long", s.already_long ? "1" : "0"},
      {"shortfall", s.shortfall ? "1" : "0"},
      {"forest_edges", std::to_string(s.forest_edges)},
      {"forest_paths", std::to_string(s.forest_paths)},
      {"h_colours", std::to_string(s.h_colours)},
      {"p", format_double(s.p)},
      {"gamma", format_double(s.gamma)},
      {"delta", format_double(s.delta)},
      {"b", std::to_string(s.b)},
      {"m", std::to_string(s.m)},
  };
}

}  // namespace rainbow
