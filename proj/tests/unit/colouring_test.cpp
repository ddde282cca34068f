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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "rainbow/colouring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"
#include "reference.hpp"

namespace rainbow {
namespace {

LatinSquare cayley_cyclic(int n) {
  std::vector<int> cells;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cells.push_back((i + j) % n);
  }
  return LatinSquare(n, cells);
}

LatinSquare cayley_klein() {
  std::vector<int> cells;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) cells.push_back(i ^ j);
  }
  return LatinSquare(4, cells);
}

TEST(LatinToColouring, CyclicOrderThreeIsProperWithThreeColours) {
  const EdgeColouring c = latin_to_colouring(cayley_cyclic(3));
  EXPECT_TRUE(c.directed());
  EXPECT_EQ(c.n(), 3);
  EXPECT_EQ(c.colour_count(), 3);
  EXPECT_TRUE(validate(c).proper);
}

TEST(LatinToColouring, RejectsRepeatedSymbolNamingTheRow) {
  try {
    LatinSquare bad(std::vector<std::vector<int>>{{0, 0}, {1, 1}});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("symbol repeated in row 0"), std::string::npos) << e.what();
  }
}

TEST(LatinToColouring, KleinTableHasMaximumCycleFreeTransversalTwo) {
  const EdgeColouring c = latin_to_colouring(cayley_klein());
  EXPECT_TRUE(validate(c).proper);
  EXPECT_EQ(reference::max_path_forest_by_subsets(c), 2);
}

TEST(LatinToColouring, EveryRandomSquareGivesProperDigraph) {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const EdgeColouring c = latin_to_colouring(random_latin_square(n, seed));
      EXPECT_TRUE(validate(c).proper) << "n=" << n << " seed=" << seed;
    }
  }
}

TEST(Validate, MmColouringOfK4) {
  const ColouringReport r = validate(mm_colouring(2));
  EXPECT_TRUE(r.proper);
  EXPECT_EQ(r.local_bound, 1);
  EXPECT_EQ(r.global_bound, 2);
}

TEST(Validate, DetectsTwoSameColouredEdgesAtOneVertex) {
  // K_3 with edges 01 and 02 both coloured 0.
  std::vector<Colour> m = {-1, 0, 0, 0, -1, 1, 0, 1, -1};
  const ColouringReport r = validate(EdgeColouring(3, false, m));
  EXPECT_FALSE(r.proper);
  EXPECT_EQ(r.local_bound, 2);
}

TEST(Validate, RoundRobinSixHasGlobalBoundThree) {
  const ColouringReport r = validate(round_robin_colouring(6));
  EXPECT_TRUE(r.proper);
  EXPECT_EQ(r.global_bound, 3);
}

TEST(MmColouring, SmallCases) {
  const EdgeColouring k1 = mm_colouring(1);
  EXPECT_EQ(k1.n(), 2);
  EXPECT_EQ(k1.colour_count(), 1);
  const EdgeColouring k3 = mm_colouring(3);
  EXPECT_EQ(k3.n(), 8);
  EXPECT_EQ(k3.colour_count(), 7);
  for (Colour f : k3.colours()) EXPECT_EQ(k3.class_of(f).size(), 4u);
  EXPECT_THROW(mm_colouring(0), ParameterError);
}

TEST(MmColouring, EdgeColourIsXorAndColourSumVanishes) {
  for (int k = 1; k <= 5; ++k) {
    const EdgeColouring c = mm_colouring(k);
    for (Vertex u = 0; u < c.n(); ++u) {
      for (Vertex v = 0; v < c.n(); ++v) {
        if (u != v) {
          EXPECT_EQ(c.colour(u, v), u ^ v);
        }
      }
    }
    Colour sum = 0;
    for (Colour f : c.colours()) sum ^= f;
    if (k >= 2) {
      EXPECT_EQ(sum, 0) << "k=" << k;
    }
  }
}

TEST(MmColouring, K4HasNoRainbowHamiltonPath) {
  EXPECT_FALSE(reference::hamilton_by_permutations(mm_colouring(2)));
}

TEST(DirectedDouble, KeepsColoursAndProperness) {
  const EdgeColouring u = mm_colouring(2);
  const EdgeColouring d = directed_double(u);
  EXPECT_TRUE(d.directed());
  EXPECT_TRUE(validate(d).proper);
  for (Colour f : u.colours()) EXPECT_EQ(d.class_of(f).size(), 2 * u.class_of(f).size());
  const EdgeColouring k2 = directed_double(mm_colouring(1));
  EXPECT_EQ(k2.colour(0, 1), k2.colour(1, 0));
  EXPECT_THROW(directed_double(d), ParameterError);
}

TEST(DirectedDouble, DoubledK4HasNoDirectedRainbowHamiltonPath) {
  EXPECT_FALSE(reference::hamilton_by_permutations(directed_double(mm_colouring(2))));
}

TEST(RoundRobin, IsOneFactorisation) {
  for (int n : {2, 4, 6, 10, 32}) {
    const EdgeColouring c = round_robin_colouring(n);
    EXPECT_TRUE(validate(c).proper);
    EXPECT_EQ(c.colour_count(), n - 1);
    for (Colour f : c.colours()) EXPECT_EQ(c.class_of(f).size(), static_cast<std::size_t>(n / 2));
  }
  EXPECT_THROW(round_robin_colouring(7), ParameterError);
}

TEST(RandomLatinSquare, SmallAndDeterministic) {
  EXPECT_EQ(random_latin_square(1, 99).cells(), std::vector<int>{0});
  EXPECT_EQ(random_latin_square(5, 7), random_latin_square(5, 7));
  const LatinSquare s = random_latin_square(4, 1);
  for (int i = 0; i < 4; ++i) {
    std::vector<int> row, col;
    for (int j = 0; j < 4; ++j) {
      row.push_back(s.cell(i, j));
      col.push_back(s.cell(j, i));
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    EXPECT_EQ(row, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(col, (std::vector<int>{0, 1, 2, 3}));
  }
}

TEST(SymmetricHelpers, SymmetrizedSymmetricSquareIsProper) {
  for (int n = 2; n <= 20; ++n) {
    const EdgeColouring c = symmetrize(latin_to_colouring(symmetric_random_latin_square(n, 3)));
    EXPECT_FALSE(c.directed());
    EXPECT_TRUE(validate(c).proper) << n;
  }
}

TEST(Relabel, PreservesReport) {
  const EdgeColouring c = round_robin_colouring(8);
  std::vector<Vertex> perm = reference::identity(8);
  Rng rng(5);
  rng.shuffle(std::span<Vertex>(perm));
  const EdgeColouring r = relabel(c, perm);
  EXPECT_TRUE(validate(r).proper);
  EXPECT_EQ(r.colour(perm[1], perm[2]), c.colour(1, 2));
}

TEST(ColourSplit, ExtremesAndPartition) {
  const EdgeColouring c = latin_to_colouring(random_latin_square(30, 2));
  EXPECT_TRUE(sample_colour_split(c, 0.0, 1).h_colours.empty());
  EXPECT_TRUE(sample_colour_split(c, 1.0, 1).g_colours.empty());
  const SplitResult s = sample_colour_split(c, 0.4, 11);
  std::vector<Colour> all = s.h_colours;
  all.insert(all.end(), s.g_colours.begin(), s.g_colours.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, c.colours());
  for (Colour f : s.h_colours) EXPECT_TRUE(in_colour_split(f, 0.4, 11));
  for (Colour f : s.g_colours) EXPECT_FALSE(in_colour_split(f, 0.4, 11));
  // Membership depends on (colour id, seed, p) only, not on the colouring.
  const SplitResult other = sample_colour_split(latin_to_colouring(random_latin_square(30, 9)), 0.4, 11);
  EXPECT_EQ(other.h_colours, s.h_colours);
}

TEST(ColourSplit, InDegreeConcentratesAroundNp) {
  const int n = 500;
  const double p = 0.3;
  const EdgeColouring c = latin_to_colouring(random_latin_square(n, 4));
  const double centre = n * p;
  const double window = 5.0 * std::sqrt(centre * std::log(static_cast<double>(n)));
  int inside = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const SplitResult s = sample_colour_split(c, p, static_cast<std::uint64_t>(t));
    const ColourMask mask = s.h_mask(c.colour_bound());
    int min_degree = n;
    for (Vertex v = 0; v < n; ++v) min_degree = std::min(min_degree, in_degree_within(c, mask, v));
    if (std::abs(min_degree - centre) <= window) ++inside;
  }
  EXPECT_GE(inside, 198);
}

}  // namespace
}  // namespace rainbow
