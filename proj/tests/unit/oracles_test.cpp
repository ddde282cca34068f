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
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "rainbow/colouring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/path_forest.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/rotation_glue.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/tree_embed.hpp"
#include "reference.hpp"

namespace rainbow {
namespace {

LatinSquare klein_table() {
  return LatinSquare({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

EdgeColouring shuffled(const EdgeColouring& c, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> perm = reference::identity(c.n());
  rng.shuffle(std::span<Vertex>(perm));
  std::vector<Colour> rename(static_cast<std::size_t>(c.colour_bound()));
  std::iota(rename.begin(), rename.end(), 0);
  rng.shuffle(std::span<Colour>(rename));
  return relabel(c, perm, rename);
}

TEST(ForestOracle, KleinTableOptimumIsTwo) {
  const ForestOracleResult r = brute_max_rainbow_path_forest(latin_to_colouring(klein_table()));
  EXPECT_EQ(r.max_edges, 2);
  EXPECT_FALSE(check_path_forest(latin_to_colouring(klein_table()), r.witness).has_value());
}

TEST(ForestOracle, CyclicTablesReachNMinusOneAtOddOrder) {
  for (int n : {3, 5}) {
    const ForestOracleResult r = brute_max_rainbow_path_forest(latin_to_colouring(random_latin_square(n, 1)));
    EXPECT_EQ(r.max_edges, n - 1) << n;
  }
}

TEST(ForestOracle, AgreesWithSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const EdgeColouring c = latin_to_colouring(random_latin_square(n, seed));
    const ForestOracleResult r = brute_max_rainbow_path_forest(c);
    EXPECT_EQ(r.max_edges, reference::max_path_forest_by_subsets(c)) << seed;
    int witness_edges = 0;
    for (const auto& p : r.witness) witness_edges += static_cast<int>(p.size()) - 1;
    EXPECT_EQ(witness_edges, r.max_edges);
    EXPECT_FALSE(check_path_forest(c, r.witness).has_value());
  }
}

TEST(ForestOracle, InvariantUnderRelabelling) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const EdgeColouring c = latin_to_colouring(random_latin_square(5, seed));
    EXPECT_EQ(brute_max_rainbow_path_forest(c).max_edges,
              brute_max_rainbow_path_forest(shuffled(c, seed + 1)).max_edges);
  }
}

TEST(ForestOracle, RejectsUndirectedAndOversizedInput) {
  EXPECT_THROW(brute_max_rainbow_path_forest(mm_colouring(2)), ValidationError);
  EXPECT_THROW(brute_max_rainbow_path_forest(latin_to_colouring(random_latin_square(7, 0))), ExhaustedError);
  OracleBudget tiny;
  tiny.max_nodes = 10;
  EXPECT_THROW(brute_max_rainbow_path_forest(latin_to_colouring(random_latin_square(6, 0)), tiny), ExhaustedError);
}

TEST(HamiltonOracle, MatchesPermutationScan) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const EdgeColouring c =
        seed % 2 ? latin_to_colouring(random_latin_square(n, seed)) : symmetric_latin_colouring(n, seed);
    const HamiltonOracleResult r = brute_rainbow_hamilton_path_exists(c);
    EXPECT_EQ(r.exists, reference::hamilton_by_permutations(c)) << seed;
    if (r.exists) {
      ASSERT_EQ(static_cast<int>(r.witness.size()), n);
      std::vector<Colour> colours;
      for (std::size_t i = 0; i + 1 < r.witness.size(); ++i) colours.push_back(c.colour(r.witness[i], r.witness[i + 1]));
      EXPECT_TRUE(reference::all_distinct(colours));
    }
  }
  EXPECT_TRUE(brute_rainbow_hamilton_path_exists(round_robin_colouring(2)).exists);
}

TEST(HamiltonOracle, RespectsBudget) {
  EXPECT_THROW(brute_rainbow_hamilton_path_exists(mm_colouring(4)), ExhaustedError);
  OracleBudget wide;
  wide.max_n = 16;
  wide.max_nodes = 1000;
  EXPECT_THROW(brute_rainbow_hamilton_path_exists(mm_colouring(4), wide), ExhaustedError);
}

TEST(TreeOracle, MatchesPermutationScan) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const EdgeColouring c = n % 2 == 0 && seed % 3 == 0 ? round_robin_colouring(n) : symmetric_latin_colouring(n, seed);
    const TreeSpec t = random_tree(n, 3, seed);
    const TreeOracleResult r = brute_rainbow_tree_embedding_exists(c, t);
    EXPECT_EQ(r.exists, reference::tree_embedding_by_permutations(c, t).has_value()) << seed;
    if (r.exists) {
      EXPECT_FALSE(check_embedding(c, t, r.witness).has_value());
    }
  }
  EXPECT_THROW(brute_rainbow_tree_embedding_exists(directed_double(mm_colouring(2)), path_tree(4)), ValidationError);
}

TEST(CycleOracle, MatchesPermutationScan) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const EdgeColouring c = latin_to_colouring(random_latin_square(n, seed));
    const CycleOracleResult r = brute_max_rainbow_cycle(c);
    EXPECT_EQ(r.max_length, reference::max_cycle_by_permutations(c)) << seed;
    if (r.max_length > 0) {
      EXPECT_FALSE(check_rainbow_cycle(c, r.witness).has_value());
    }
  }
}

TEST(CycleOracle, UndirectedCyclesHaveLengthAtLeastThree) {
  // K_4 with colours a XOR b: triangles use three distinct colours.
  EXPECT_EQ(brute_max_rainbow_cycle(mm_colouring(2)).max_length, 3);
  EXPECT_EQ(brute_max_rainbow_cycle(round_robin_colouring(2)).max_length, 0);
}

}  // namespace
}  // namespace rainbow
