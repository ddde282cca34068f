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
#include <cstddef>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/tree_embed.hpp"

namespace rainbow {

enum class CensusMode { exact, bound };

// Instance-true parameters: r = |R| / n, D = max degree over W (at least 1),
// chi = max(w_f, w_g, m_g) / n, alpha = largest colour class / n.
struct InstanceParameters {
  double r = 0.0;
  double D = 1.0;
  double chi = 0.0;
  double alpha = 0.0;
};

InstanceParameters instance_parameters(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& partial);

struct FamilyTally {
  std::size_t count = 0;         // distinct events
  double probability_sum = 0.0;  // sum of their probabilities
  std::vector<double> per_w;     // by tree vertex (entries outside W are 0)
  std::vector<double> per_a;     // by host vertex (entries outside A are 0)
};

struct BadEventCensus {
  CensusMode mode = CensusMode::exact;
  InstanceParameters params;
  std::array<FamilyTally, 5> families;  // indexed by EventFamily

  const FamilyTally& operator[](EventFamily f) const { return families[static_cast<std::size_t>(f)]; }
};

// Per-element ceilings for each family, W side and A side.
struct ClaimBounds {
  std::array<double, 5> w_side{};
  std::array<double, 5> a_side{};
};

ClaimBounds claim_bounds(const InstanceParameters& p);

// Exact mode enumerates every event of the five families as a set of
// (W vertex, A vertex) assignments, counted once however many labels name
// it, with probability 1 / (|A|)_j for j assignments under a uniform
// bijection W -> A. Bound mode fills the per-element entries with the
// ceilings of claim_bounds. Exact mode throws ExhaustedError when n exceeds
// max_n (hard cap 255).
BadEventCensus bad_event_census(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& partial,
                                CensusMode mode, int max_n = 14);

}  // namespace rainbow
