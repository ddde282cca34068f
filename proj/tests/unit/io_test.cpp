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

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "rainbow/colouring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/path_forest.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {
namespace {

// Writes, reads back and writes again; both serialisations must match.
template <typename Write, typename Read, typename T>
void expect_round_trip(Write write, Read read, const T& value) {
  std::ostringstream first;
  write(first, value);
  std::istringstream in(first.str());
  const auto parsed = read(in);
  std::ostringstream second;
  write(second, parsed);
  EXPECT_EQ(first.str(), second.str());
}

TEST(IoRoundTrip, Colourings) {
  expect_round_trip(write_colouring, read_colouring, mm_colouring(3));
  expect_round_trip(write_colouring, read_colouring, latin_to_colouring(random_latin_square(7, 3)));
  expect_round_trip(write_colouring, read_colouring, round_robin_colouring(6));
  std::ostringstream out;
  write_colouring(out, mm_colouring(2));
  std::istringstream in(out.str());
  EXPECT_EQ(read_colouring(in), mm_colouring(2));
}

TEST(IoRoundTrip, LatinSquareTreeForestEmbeddingCycle) {
  expect_round_trip(write_latin_square, read_latin_square, random_latin_square(6, 2));
  expect_round_trip(write_tree, read_tree, random_tree(30, 4, 1));
  expect_round_trip(write_tree, read_tree, TreeSpec({kNoVertex}));
  expect_round_trip(write_forest, read_forest, PathList{{3, 1, 4}, {0}, {2, 5}});
  expect_round_trip(write_embedding, read_embedding, std::vector<Vertex>{2, 0, 1, 3});
  expect_round_trip(write_cycle, read_cycle, std::vector<Vertex>{0, 4, 2, 1});
  expect_round_trip(write_key_values, read_key_values, KeyValues{{"n", "5"}, {"p", format_double(0.1)}});
}

TEST(IoRoundTrip, CascadeTraces) {
  CascadeStep a{3, 7, Edge{7, 2}, 5, Edge{4, 9}};
  CascadeStep b{1, 4, Edge{4, 0}, 8, std::nullopt};
  const std::vector<CascadeTrace> traces{{a, b}, {b}};
  expect_round_trip(write_cascade_traces, read_cascade_traces, traces);
  std::ostringstream out;
  write_cascade_traces(out, traces);
  std::istringstream in(out.str());
  const auto back = read_cascade_traces(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0][0].deleted, (std::optional<Edge>{Edge{4, 9}}));
  EXPECT_FALSE(back[0][1].deleted.has_value());
}

TEST(IoRoundTrip, FormatDoubleIsShortestExact) {
  EXPECT_EQ(format_double(0.25), "0.25");
  EXPECT_EQ(format_double(4.0), "4");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

void expect_parse_error_at_line(const std::string& text, int line,
                                auto read) {
  std::istringstream in(text);
  try {
    read(in);
    FAIL() << "expected ParseError for: " << text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)), std::string::npos) << e.what();
  }
}

TEST(IoErrors, ReportLineNumbers) {
  expect_parse_error_at_line("directed 2 2\n0 1 0\n1 x 1\n", 3, [](std::istream& in) { return read_colouring(in); });
  expect_parse_error_at_line("sideways 2 1\n", 1, [](std::istream& in) { return read_colouring(in); });
  expect_parse_error_at_line("3\n0 q\n", 2, [](std::istream& in) { return read_tree(in); });
  expect_parse_error_at_line("0 1\n1 x\n", 2, [](std::istream& in) { return read_embedding(in); });
  expect_parse_error_at_line("novalue\n", 1, [](std::istream& in) { return read_key_values(in); });
}

}  // namespace
}  // namespace rainbow
