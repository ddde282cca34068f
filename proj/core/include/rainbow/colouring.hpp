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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

// A total colouring of the complete graph K_n (undirected) or of the complete
// digraph on n vertices (directed). Colour ids are non-negative and bounded
// by colour_bound(), so colour-indexed arrays can be sized by it.
//
// Properness is not an invariant of the type: validate() reports it, and the
// algorithms check it as a precondition.
class EdgeColouring {
 public:
  EdgeColouring() = default;

  // `matrix` is row-major n*n; diagonal entries are ignored. Undirected input
  // must be symmetric. Throws ValidationError on a missing or negative colour
  // or on an asymmetric undirected matrix.
  EdgeColouring(int n, bool directed, std::vector<Colour> matrix);

  int n() const { return n_; }
  bool directed() const { return directed_; }

  Colour colour(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(v)];
  }

  int colour_count() const { return colour_count_; }
  Colour colour_bound() const { return colour_bound_; }

  // Distinct colours in increasing order.
  const std::vector<Colour>& colours() const { return colours_; }

  // Edges of colour f: all ordered pairs when directed, u < v otherwise.
  std::span<const Edge> class_of(Colour f) const;

  // n(n-1) when directed, n(n-1)/2 otherwise.
  std::size_t edge_count() const;

  // Row-major matrix with kNoColour on the diagonal.
  const std::vector<Colour>& matrix() const { return matrix_; }

  friend bool operator==(const EdgeColouring& a, const EdgeColouring& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.matrix_ == b.matrix_;
  }

 private:
  int n_ = 0;
  bool directed_ = false;
  std::vector<Colour> matrix_;
  std::vector<Colour> colours_;
  int colour_count_ = 0;
  Colour colour_bound_ = 0;
  std::vector<std::size_t> class_offset_;
  std::vector<Edge> class_edges_;
};

struct ColouringReport {
  bool proper = true;
  // Largest number of same-coloured edges at one vertex (directed: counted
  // separately over out-edges and over in-edges).
  int local_bound = 0;
  // Largest colour class (directed colourings count directed edges).
  int global_bound = 0;
};

ColouringReport validate(const EdgeColouring& c);

class LatinSquare {
 public:
  LatinSquare() = default;

  // Throws ValidationError naming the first offending row or column.
  LatinSquare(int n, std::vector<int> cells);
  explicit LatinSquare(const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int cell(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(col)];
  }
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

// Directed colouring where edge (i, j) gets cell(i, j); loops are dropped.
EdgeColouring latin_to_colouring(const LatinSquare& square);

// Undirected colouring of K_{2^k} on labels Z_2^k with edge {a, b} coloured
// a XOR b. A 1-factorisation with colours 1..2^k-1.
EdgeColouring mm_colouring(int k);

// Both orientations of every undirected edge receive the original colour.
EdgeColouring directed_double(const EdgeColouring& c);

// Circle-method 1-factorisation of K_n, n even: colours 0..n-2.
EdgeColouring round_robin_colouring(int n);

// Cayley table of Z_n with independently shuffled rows, columns and symbols.
LatinSquare random_latin_square(int n, std::uint64_t seed);

// Cayley table of Z_n with one shared row/column shuffle and a shuffled
// alphabet. The square is symmetric, so symmetrize(latin_to_colouring(.)) is
// a proper colouring of K_n.
LatinSquare symmetric_random_latin_square(int n, std::uint64_t seed);

// Undirected colouring taking the colour of the (min, max) orientation.
EdgeColouring symmetrize(const EdgeColouring& c);

// Edge (perm[u], perm[v]) of the result carries the colour of (u, v), renamed
// through colour_map (indexed by old id) when one is given.
EdgeColouring relabel(const EdgeColouring& c, std::span<const Vertex> perm,
                      std::span<const Colour> colour_map = {});

struct SplitResult {
  std::vector<Colour> h_colours;
  std::vector<Colour> g_colours;
  double p = 0.0;
  std::uint64_t seed = 0;

  ColourMask h_mask(Colour colour_bound) const;
  ColourMask g_mask(Colour colour_bound) const;
};

// Each colour independently joins H with probability p. Membership depends
// only on (colour id, seed, p).
SplitResult sample_colour_split(const EdgeColouring& c, double p,
                                std::uint64_t seed);

bool in_colour_split(Colour f, double p, std::uint64_t seed);

// In-degree of v counting only edges whose colour is selected by mask.
int in_degree_within(const EdgeColouring& c, const ColourMask& mask, Vertex v);

ColourMask full_mask(const EdgeColouring& c);

}  // namespace rainbow
