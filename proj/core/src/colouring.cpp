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

#include "rainbow/colouring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

std::size_t idx(int n, Vertex u, Vertex v) {
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(v);
}

std::vector<int> identity(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Shuffled Cayley table of Z_n: cell(i, j) = symbols[(rows[i] + cols[j]) % n].
LatinSquare cayley(int n, const std::vector<int>& rows,
                   const std::vector<int>& cols,
                   const std::vector<int>& symbols) {
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cells[idx(n, i, j)] = symbols[static_cast<std::size_t>(
          (rows[static_cast<std::size_t>(i)] + cols[static_cast<std::size_t>(j)]) % n)];
    }
  }
  return LatinSquare(n, std::move(cells));
}

}  // namespace

EdgeColouring::EdgeColouring(int n, bool directed, std::vector<Colour> matrix)
    : n_(n), directed_(directed), matrix_(std::move(matrix)) {
  if (n < 0) throw ValidationError("negative vertex count");
  if (matrix_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ValidationError("colour matrix has " + std::to_string(matrix_.size()) +
                          " entries, expected " + std::to_string(n * n));
  }
  Colour max_colour = -1;
  for (Vertex u = 0; u < n; ++u) {
    matrix_[idx(n, u, u)] = kNoColour;
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const Colour f = matrix_[idx(n, u, v)];
      if (f < 0) {
        throw ValidationError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has no colour");
      }
      if (!directed && f != matrix_[idx(n, v, u)]) {
        throw ValidationError("undirected colouring is asymmetric at (" +
                              std::to_string(u) + "," + std::to_string(v) + ")");
      }
      max_colour = std::max(max_colour, f);
    }
  }
  colour_bound_ = max_colour + 1;

  std::vector<std::size_t> counts(static_cast<std::size_t>(colour_bound_) + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u != v) ++counts[static_cast<std::size_t>(colour(u, v)) + 1];
    }
  }
  for (Colour f = 0; f < colour_bound_; ++f) {
    if (counts[static_cast<std::size_t>(f) + 1] > 0) colours_.push_back(f);
  }
  colour_count_ = static_cast<int>(colours_.size());
  std::partial_sum(counts.begin(), counts.end(), counts.begin());
  class_offset_ = counts;
  class_edges_.resize(class_offset_.back());
  std::vector<std::size_t> fill(class_offset_.begin(), class_offset_.end() - 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      class_edges_[fill[static_cast<std::size_t>(colour(u, v))]++] = Edge{u, v};
    }
  }
}

std::span<const Edge> EdgeColouring::class_of(Colour f) const {
  if (f < 0 || f >= colour_bound_) return {};
  const auto begin = class_offset_[static_cast<std::size_t>(f)];
  const auto end = class_offset_[static_cast<std::size_t>(f) + 1];
  return std::span<const Edge>(class_edges_).subspan(begin, end - begin);
}

std::size_t EdgeColouring::edge_count() const {
  const auto n = static_cast<std::size_t>(n_);
  if (n < 2) return 0;
  return directed_ ? n * (n - 1) : n * (n - 1) / 2;
}

ColouringReport validate(const EdgeColouring& c) {
  ColouringReport report;
  const int n = c.n();
  std::vector<int> seen_out(static_cast<std::size_t>(c.colour_bound()), 0);
  std::vector<int> seen_in(static_cast<std::size_t>(c.colour_bound()), 0);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(seen_out.begin(), seen_out.end(), 0);
    std::fill(seen_in.begin(), seen_in.end(), 0);
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      const auto out = static_cast<std::size_t>(c.colour(v, u));
      report.local_bound = std::max(report.local_bound, ++seen_out[out]);
      if (c.directed()) {
        const auto in = static_cast<std::size_t>(c.colour(u, v));
        report.local_bound = std::max(report.local_bound, ++seen_in[in]);
      }
    }
  }
  for (Colour f : c.colours()) {
    report.global_bound =
        std::max(report.global_bound, static_cast<int>(c.class_of(f).size()));
  }
  report.proper = report.local_bound <= 1;
  return report;
}

LatinSquare::LatinSquare(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
  if (n < 0) throw ValidationError("negative order");
  if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ValidationError("latin square needs n*n cells");
  }
  std::vector<int> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const int s = cell(i, j);
      if (s < 0 || s >= n) {
        throw ValidationError("symbol " + std::to_string(s) + " out of range at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (seen[static_cast<std::size_t>(s)]++) {
        throw ValidationError("symbol repeated in row " + std::to_string(i));
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(cell(i, j))]++) {
        throw ValidationError("symbol repeated in column " + std::to_string(j));
      }
    }
  }
}

namespace {

std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
  std::vector<int> cells;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ValidationError("latin square rows must have length n");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return cells;
}

}  // namespace

LatinSquare::LatinSquare(const std::vector<std::vector<int>>& rows)
    : LatinSquare(static_cast<int>(rows.size()), flatten(rows)) {}

EdgeColouring latin_to_colouring(const LatinSquare& square) {
  return EdgeColouring(square.n(), true,
                       std::vector<Colour>(square.cells().begin(), square.cells().end()));
}

EdgeColouring mm_colouring(int k) {
  if (k < 1) throw ParameterError("mm_colouring needs k >= 1");
  if (k > 14) throw ParameterError("mm_colouring: k too large");
  const int n = 1 << k;
  std::vector<Colour> matrix(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) matrix[idx(n, a, b)] = a ^ b;
  }
  return EdgeColouring(n, false, std::move(matrix));
}

EdgeColouring directed_double(const EdgeColouring& c) {
  if (c.directed()) throw ParameterError("directed_double expects an undirected colouring");
  return EdgeColouring(c.n(), true, c.matrix());
}

EdgeColouring round_robin_colouring(int n) {
  if (n < 2 || n % 2 != 0) {
    throw ParameterError("round-robin colouring needs an even n >= 2, got " + std::to_string(n));
  }
  const int rounds = n - 1;
  const int half = n / 2;  // inverse of 2 modulo n - 1
  std::vector<Colour> matrix(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      Colour f;
      if (u == n - 1) {
        f = v;
      } else if (v == n - 1) {
        f = u;
      } else {
        f = static_cast<Colour>((static_cast<long long>(u + v) * half) % rounds);
      }
      matrix[idx(n, u, v)] = f;
    }
  }
  return EdgeColouring(n, false, std::move(matrix));
}

LatinSquare random_latin_square(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("latin square order must be >= 1");
  Rng rng(seed);
  auto rows = identity(n);
  auto cols = identity(n);
  auto symbols = identity(n);
  rng.shuffle(std::span<int>(rows));
  rng.shuffle(std::span<int>(cols));
  rng.shuffle(std::span<int>(symbols));
  return cayley(n, rows, cols, symbols);
}

LatinSquare symmetric_random_latin_square(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("latin square order must be >= 1");
  Rng rng(seed);
  auto order = identity(n);
  auto symbols = identity(n);
  rng.shuffle(std::span<int>(order));
  rng.shuffle(std::span<int>(symbols));
  return cayley(n, order, order, symbols);
}

EdgeColouring symmetrize(const EdgeColouring& c) {
  const int n = c.n();
  std::vector<Colour> matrix(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kNoColour);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      matrix[idx(n, u, v)] = matrix[idx(n, v, u)] = c.colour(u, v);
    }
  }
  return EdgeColouring(n, false, std::move(matrix));
}

EdgeColouring relabel(const EdgeColouring& c, std::span<const Vertex> perm,
                      std::span<const Colour> colour_map) {
  const int n = c.n();
  if (perm.size() != static_cast<std::size_t>(n)) throw ParameterError("relabel: permutation size");
  std::vector<Colour> matrix(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kNoColour);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      Colour f = c.colour(u, v);
      if (!colour_map.empty()) f = colour_map[static_cast<std::size_t>(f)];
      matrix[idx(n, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])] = f;
    }
  }
  return EdgeColouring(n, c.directed(), std::move(matrix));
}

bool in_colour_split(Colour f, double p, std::uint64_t seed) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return unit_from_bits(substream_seed(seed, static_cast<std::uint64_t>(f))) < p;
}

SplitResult sample_colour_split(const EdgeColouring& c, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("split probability must lie in [0, 1]");
  SplitResult out;
  out.p = p;
  out.seed = seed;
  for (Colour f : c.colours()) {
    (in_colour_split(f, p, seed) ? out.h_colours : out.g_colours).push_back(f);
  }
  return out;
}

namespace {

ColourMask mask_of(const std::vector<Colour>& colours, Colour bound) {
  ColourMask mask(static_cast<std::size_t>(bound), 0);
  for (Colour f : colours) {
    if (f >= 0 && f < bound) mask[static_cast<std::size_t>(f)] = 1;
  }
  return mask;
}

}  // namespace

ColourMask SplitResult::h_mask(Colour colour_bound) const { return mask_of(h_colours, colour_bound); }
ColourMask SplitResult::g_mask(Colour colour_bound) const { return mask_of(g_colours, colour_bound); }

int in_degree_within(const EdgeColouring& c, const ColourMask& mask, Vertex v) {
  int degree = 0;
  for (Vertex u = 0; u < c.n(); ++u) {
    if (u != v && mask[static_cast<std::size_t>(c.colour(u, v))]) ++degree;
  }
  return degree;
}

ColourMask full_mask(const EdgeColouring& c) { return mask_of(c.colours(), c.colour_bound()); }

}  // namespace rainbow
