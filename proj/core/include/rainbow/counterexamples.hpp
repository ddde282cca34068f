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

#include <cstdint>
#include <utility>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

// Two stars with non-adjacent centres x and y that share one leaf. Vertex 0 is
// x with ceil((n-1)/2) leaves 1..L (vertex 1 is the shared leaf), y = L + 1
// hangs off vertex 1, and y's own leaves follow. Requires even n >= 4.
TreeSpec two_star_tree(int n);

struct TwoStarRoles {
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
};

// Finds non-adjacent x < y such that every tree edge meets x or y. Throws
// ValidationError when the tree has no such pair.
TwoStarRoles two_star_roles(const TreeSpec& tree);

struct ParityCertificate {
  int group_dim = 0;
  // XOR of the labels of odd-degree tree vertices, i.e. sum d_T(a) a in Z_2^k.
  std::uint32_t evaluated_sum = 0;
  // The two even-degree vertices, or the two path ends when every other
  // vertex has even degree.
  std::pair<Vertex, Vertex> even_degree_pair{kNoVertex, kNoVertex};
  bool all_but_two_even = false;
  // Label of pi(x) XOR label of pi(y); equals evaluated_sum.
  std::uint32_t pair_xor = 0;
};

// Certificate for an embedding of a 2^k-vertex tree into mm_colouring(k)
// (labels are host vertex ids). Throws ValidationError listing the even-degree
// vertices when neither degree pattern applies.
ParityCertificate parity_certificate(int k, const TreeSpec& tree, const std::vector<Vertex>& embedding);

// XOR of the colours of the embedded tree edges in mm_colouring(k).
std::uint32_t embedded_colour_xor(const TreeSpec& tree, const std::vector<Vertex>& embedding);

struct MissingColourWitness {
  Colour colour = kNoColour;  // c(pi(x) pi(y))
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  bool absent = false;  // colour missing from the embedded edges
};

// Throws ValidationError unless c is a 1-factorisation and the tree has the
// two-star shape.
MissingColourWitness missing_colour_check(const EdgeColouring& c, const TreeSpec& tree,
                                          const std::vector<Vertex>& embedding);

bool is_one_factorisation(const EdgeColouring& c);

// Random tree on n vertices with exactly two even-degree vertices, by
// rejection from random_tree. Throws ExhaustedError after many rejections.
TreeSpec random_all_but_two_odd_tree(int n, std::uint64_t seed);

}  // namespace rainbow
