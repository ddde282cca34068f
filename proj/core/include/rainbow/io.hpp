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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/path_forest.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

// Plain-text formats. Every reader throws ParseError with a line number on
// malformed input; every writer's output is accepted by the matching reader
// and re-serialises byte-identically.

// `directed n C` or `undirected n C`, then `u v colour` per edge (directed:
// every ordered pair; undirected: u < v), in lexicographic order.
void write_colouring(std::ostream& out, const EdgeColouring& c);
EdgeColouring read_colouring(std::istream& in);

// n, then n rows of n symbols.
void write_latin_square(std::ostream& out, const LatinSquare& square);
LatinSquare read_latin_square(std::istream& in);

// One path per line, vertex ids separated by spaces.
using PathList = std::vector<std::vector<Vertex>>;
void write_forest(std::ostream& out, const PathList& paths);
PathList read_forest(std::istream& in);

// n, then the parents of vertices 1..n-1 on one line.
void write_tree(std::ostream& out, const TreeSpec& tree);
TreeSpec read_tree(std::istream& in);

// One `tree_vertex host_vertex` line per tree vertex, in tree-vertex order.
// The returned vector maps tree vertex -> host vertex.
void write_embedding(std::ostream& out, const std::vector<Vertex>& embedding);
std::vector<Vertex> read_embedding(std::istream& in);

// A single line of vertex ids; the closing edge is implicit.
void write_cycle(std::ostream& out, const std::vector<Vertex>& cycle);
std::vector<Vertex> read_cycle(std::istream& in);

// `key=value` lines, order preserved.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
void write_key_values(std::ostream& out, const KeyValues& values);
KeyValues read_key_values(std::istream& in);
const std::string* find_value(const KeyValues& values, const std::string& key);

// Shortest decimal form that round-trips.
std::string format_double(double x);

// One `cascade k` header per cascade, then `step i v add u w colour f` lines
// with an optional trailing `del x y`.
void write_cascade_traces(std::ostream& out, const std::vector<CascadeTrace>& traces);
std::vector<CascadeTrace> read_cascade_traces(std::istream& in);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rainbow
