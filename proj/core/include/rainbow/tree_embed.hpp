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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

// order[0..split) is R, the ceil(n/4) highest-degree tree vertices, listed so
// that each has at most one earlier neighbour; the rest is W.
struct EmbedOrdering {
  std::vector<Vertex> order;
  int split = 0;
};

// R: top ceil(n/4) by degree (ties by id), in BFS order inside T[R] with
// components started from their highest-degree vertex. W: by degree
// descending, then id.
EmbedOrdering order_vertices(const TreeSpec& tree);

// Checks the permutation, the split size, the degree dominance of R over W,
// 1-degeneracy inside R and the degree <= 4 fact for W.
std::optional<std::string> check_ordering(const TreeSpec& tree, const EmbedOrdering& ord);

// Injection of the root set R into the host.
struct PartialEmbedding {
  int n = 0;
  std::vector<Vertex> roots;       // R in embedding order
  std::vector<Vertex> pi;          // tree vertex -> host vertex, kNoVertex if unplaced
  std::vector<Vertex> inverse;     // host vertex -> tree vertex, kNoVertex if free
  std::vector<Colour> t0_colours;  // sorted colours of pi(T[R])
  std::vector<Vertex> a_set;       // sorted free host vertices (A)
  std::vector<Vertex> w_set;       // sorted unplaced tree vertices (W)

  static PartialEmbedding empty(int n);
  bool placed(Vertex u) const { return pi[static_cast<std::size_t>(u)] != kNoVertex; }
  bool in_b(Vertex g) const { return inverse[static_cast<std::size_t>(g)] != kNoVertex; }
};

// w_f by colour id, w_g and m_g by host vertex.
struct Weights {
  std::vector<long long> w_f;
  std::vector<long long> w_g;
  std::vector<long long> m_g;

  long long max_w_f() const;
  long long max_w_g() const;
  long long max_m_g() const;
  friend bool operator==(const Weights&, const Weights&) = default;
};

// From-scratch evaluation of the three weight definitions.
Weights compute_weights(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& partial);

// Partial embedding plus incrementally maintained weights.
class WeightTracker {
 public:
  // Keeps references to c and tree; both must outlive the tracker.
  WeightTracker(const EdgeColouring& c, const TreeSpec& tree);
  WeightTracker(EdgeColouring&&, const TreeSpec&) = delete;
  WeightTracker(const EdgeColouring&, TreeSpec&&) = delete;

  // Embeds tree vertex u at free host vertex b. Throws ValidationError if the
  // step would make T0 non-rainbow.
  void place(Vertex u, Vertex b);

  const Weights& weights() const { return weights_; }
  const PartialEmbedding& partial() const { return partial_; }

 private:
  const EdgeColouring* c_;
  const TreeSpec* tree_;
  PartialEmbedding partial_;
  Weights weights_;
  std::vector<std::uint8_t> in_t0_;
};

struct RgeResult {
  PartialEmbedding partial;
  Weights weights;
  std::vector<int> feasible_counts;  // per step
  std::vector<int> feasible_floors;  // n - (k-1) - |c(T[b_1..b_{k-1}])|
};

// Random-greedy embedding of R: at step k the image of order[k] is uniform
// over free host vertices keeping T0 rainbow. Throws ValidationError naming
// the step when the feasible set falls below its proper-colouring floor.
RgeResult rge(const EdgeColouring& c, const TreeSpec& tree, const EmbedOrdering& ord, std::uint64_t seed);

struct WeightViolation {
  std::string kind;  // "w_f", "m_g" or "w_g"
  int id = 0;        // colour or host vertex
  long long value = 0;
  double limit = 0.0;
};

struct WeightReport {
  bool pass = true;
  std::vector<WeightViolation> violations;
};

// w_f <= alpha1 n, m_g <= alpha2 n, w_g <= alpha3 n.
WeightReport certify_weights(const Weights& w, int n, double alpha1, double alpha2, double alpha3);
WeightReport certify_weights(const Weights& w, int n, double chi);

struct LllResult {
  double value = 0.0;
  bool holds = false;
};

// 16 (1-r)^-3 (chi (3D + 11) + alpha (16D + 12)) <= 1. Throws ParameterError
// unless 0 < r, chi, alpha < 1 <= D.
LllResult lll_condition(double r, double D, double chi, double alpha);

// Constants of the weight lemma. gamma and delta here are the tree-stage
// constants, unrelated to the forest parameters of the same names.
struct TreeConstants {
  double alpha = 0.0;
  double beta = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

struct RelationCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

TreeConstants paper_s34_constants();

// The six relations tying alpha, beta, alpha1..3 together and the three
// tying tree.gamma, tree.delta to alpha and alpha2.
std::vector<RelationCheck> check_constant_relations(const TreeConstants& k);
bool all_hold(const std::vector<RelationCheck>& checks);

enum class EventFamily { fr, f, srr, sr, s };
const char* family_name(EventFamily family);

// Two tree edges whose images share a colour, classified by where the edges
// lie: T0 (inside R), BA (R to W) or AA (inside W).
struct BadEventInstance {
  EventFamily family = EventFamily::fr;
  Edge first;   // tree edges, (min, max)
  Edge second;
  Colour colour = kNoColour;
};

std::vector<BadEventInstance> classify_bad_events(const EdgeColouring& c, const TreeSpec& tree,
                                                  const PartialEmbedding& partial,
                                                  const std::vector<Vertex>& embedding);

// Bijection onto the host with n - 1 distinct edge colours. Returns the first
// violation.
std::optional<std::string> check_embedding(const EdgeColouring& c, const TreeSpec& tree,
                                           const std::vector<Vertex>& embedding);

// Tabu-search steps per host vertex used when repair_steps is negative.
inline constexpr int kRepairStepsPerVertex = 100;

struct CompletionOptions {
  int max_retries = 200;
  // Tabu-search swap steps per attempt, applied to a uniform start; 0 keeps
  // attempts purely uniform, a negative value means kRepairStepsPerVertex * n.
  int repair_steps = 0;
};

struct CompletionResult {
  bool success = false;
  std::vector<Vertex> embedding;  // best attempt
  int attempts = 0;
  int conflicts = 0;              // repeated-colour excess of the best attempt
  std::vector<BadEventInstance> bad_events;
};

// Draws bijections W -> A (attempt k uses substream k of seed) until the full
// embedding is rainbow or the retries run out.
CompletionResult complete_random(const EdgeColouring& c, const TreeSpec& tree, const PartialEmbedding& partial,
                                 std::uint64_t seed, const CompletionOptions& options);

struct EmbedParams {
  std::string preset = "desk";
  TreeConstants constants;
  double r = 0.25;
  double D = 4.0;
  int max_retries = 200;
  int repair_steps = 0;  // as in CompletionOptions
  // When set, a failed global-boundedness or max-degree check is an error
  // rather than a log line.
  bool enforce_hypotheses = false;
};

// "paper-s34" or "desk". Throws ParameterError on other names.
EmbedParams embed_preset(const std::string& name);

struct EmbedResult {
  bool success = false;
  std::vector<Vertex> embedding;
  int attempts = 0;
  EmbedOrdering ordering;
  RgeResult rge;
  WeightReport weight_report;
  LllResult lll;
  std::vector<RelationCheck> relations;
  std::vector<BadEventInstance> bad_events;
  std::vector<std::string> log;
};

// order_vertices -> rge -> certify_weights -> lll_condition -> complete_random.
// Needs an undirected proper colouring with as many vertices as the tree.
EmbedResult embed_tree(const EdgeColouring& c, const TreeSpec& tree, std::uint64_t seed, const EmbedParams& params);

// Undirected proper colouring from a symmetric random Latin square.
EdgeColouring symmetric_latin_colouring(int n, std::uint64_t seed);

}  // namespace rainbow
