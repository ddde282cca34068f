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

#include "rainbow/counterexamples.hpp"

#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

void require_embedding_size(const TreeSpec& tree, const std::vector<Vertex>& embedding) {
  if (static_cast<int>(embedding.size()) != tree.n()) {
    throw ValidationError("embedding has " + std::to_string(embedding.size()) + " entries for a tree on " +
                          std::to_string(tree.n()) + " vertices");
  }
}

}  // namespace

TreeSpec two_star_tree(int n) {
  if (n < 4 || n % 2 != 0) throw ParameterError("two_star_tree needs an even n >= 4, got " + std::to_string(n));
  const int leaves_x = n / 2;  // ceil((n - 1) / 2) for even n
  const Vertex y = leaves_x + 1;
  std::vector<Vertex> parents(at(n), kNoVertex);
  for (Vertex v = 1; v <= leaves_x; ++v) parents[at(v)] = 0;
  parents[at(y)] = 1;
  for (Vertex v = y + 1; v < n; ++v) parents[at(v)] = y;
  return TreeSpec(std::move(parents));
}

TwoStarRoles two_star_roles(const TreeSpec& tree) {
  const int n = tree.n();
  Vertex x = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (tree.degree(v) > tree.degree(x)) x = v;
  }
  // Every edge avoiding x must share one vertex y.
  Vertex y = kNoVertex;
  bool found_edge = false;
  std::vector<int> hits(at(n), 0);
  int others = 0;
  for (const Edge& e : tree.edges()) {
    if (e.from == x || e.to == x) continue;
    found_edge = true;
    ++others;
    ++hits[at(e.from)];
    ++hits[at(e.to)];
  }
  if (found_edge) {
    for (Vertex v = 0; v < n; ++v) {
      if (hits[at(v)] == others && v != x && !tree.adjacent(x, v)) {
        y = v;
        break;
      }
    }
  }
  if (y == kNoVertex) {
    throw ValidationError("tree is not a two-star: no non-adjacent pair covers every edge");
  }
  return x < y ? TwoStarRoles{x, y} : TwoStarRoles{y, x};
}

ParityCertificate parity_certificate(int k, const TreeSpec& tree, const std::vector<Vertex>& embedding) {
  if (k < 1 || k > 14) throw ParameterError("group dimension k must lie in [1, 14]");
  const int n = 1 << k;
  if (tree.n() != n) throw ValidationError("tree must have 2^k = " + std::to_string(n) + " vertices");
  require_embedding_size(tree, embedding);
  std::vector<Vertex> even, odd;
  for (Vertex v = 0; v < n; ++v) (tree.degree(v) % 2 == 0 ? even : odd).push_back(v);
  ParityCertificate cert;
  cert.group_dim = k;
  if (even.size() == 2) {
    cert.even_degree_pair = {even[0], even[1]};
  } else if (odd.size() == 2) {
    cert.even_degree_pair = {odd[0], odd[1]};
    cert.all_but_two_even = true;
  } else {
    std::string list;
    for (Vertex v : even) list += (list.empty() ? "" : " ") + std::to_string(v);
    throw ValidationError("degree pattern needs exactly two even-degree vertices (or exactly two odd); even-degree "
                          "vertices: " + list);
  }
  for (Vertex v = 0; v < n; ++v) {
    const Vertex h = embedding[at(v)];
    if (h < 0 || h >= n) throw ValidationError("embedding maps vertex " + std::to_string(v) + " outside Z_2^k");
    if (tree.degree(v) % 2 == 1) cert.evaluated_sum ^= static_cast<std::uint32_t>(h);
  }
  cert.pair_xor = static_cast<std::uint32_t>(embedding[at(cert.even_degree_pair.first)]) ^
                  static_cast<std::uint32_t>(embedding[at(cert.even_degree_pair.second)]);
  return cert;
}

std::uint32_t embedded_colour_xor(const TreeSpec& tree, const std::vector<Vertex>& embedding) {
  require_embedding_size(tree, embedding);
  std::uint32_t sum = 0;
  for (const Edge& e : tree.edges()) {
    sum ^= static_cast<std::uint32_t>(embedding[at(e.from)]) ^ static_cast<std::uint32_t>(embedding[at(e.to)]);
  }
  return sum;
}

bool is_one_factorisation(const EdgeColouring& c) {
  if (c.directed() || c.n() < 2 || c.n() % 2 != 0) return false;
  if (c.colour_count() != c.n() - 1) return false;
  return validate(c).proper;
}

MissingColourWitness missing_colour_check(const EdgeColouring& c, const TreeSpec& tree,
                                          const std::vector<Vertex>& embedding) {
  if (!is_one_factorisation(c)) {
    throw ValidationError("host is not a 1-factorisation (needs an undirected proper colouring with n - 1 colours)");
  }
  if (c.n() != tree.n()) throw ValidationError("host and tree sizes differ");
  require_embedding_size(tree, embedding);
  const TwoStarRoles roles = two_star_roles(tree);
  MissingColourWitness w;
  w.x = roles.x;
  w.y = roles.y;
  w.colour = c.colour(embedding[at(roles.x)], embedding[at(roles.y)]);
  w.absent = true;
  for (const Edge& e : tree.edges()) {
    if (c.colour(embedding[at(e.from)], embedding[at(e.to)]) == w.colour) w.absent = false;
  }
  return w;
}

TreeSpec random_all_but_two_odd_tree(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw ParameterError("need an even n >= 4 for exactly two even-degree vertices");
  for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
    TreeSpec t = random_tree(n, n - 1, substream_seed(seed, attempt));
    int even = 0;
    for (Vertex v = 0; v < n; ++v) even += t.degree(v) % 2 == 0;
    if (even == 2) return t;
  }
  throw ExhaustedError("no tree with exactly two even degrees found");
}

}  // namespace rainbow
