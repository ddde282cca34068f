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

#include "rainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

// Line-oriented reader that tracks line numbers for error messages.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::string require(const char* what) {
    std::string line;
    if (!next(line)) fail(std::string("unexpected end of input, expected ") + what);
    return line;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("line " + std::to_string(number_) + ": " + message);
  }

  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream ss(line);
  std::string w;
  while (ss >> w) words.push_back(w);
  return words;
}

template <typename T>
T parse_number(const LineReader& reader, const std::string& word) {
  T value{};
  const char* begin = word.data();
  const char* end = begin + word.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) reader.fail("expected an integer, got '" + word + "'");
  return value;
}

std::vector<int> parse_ints(const LineReader& reader, const std::string& line) {
  std::vector<int> out;
  for (const auto& w : split_words(line)) out.push_back(parse_number<int>(reader, w));
  return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

void write_ids(std::ostream& out, const std::vector<Vertex>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out << ' ';
    out << ids[i];
  }
  out << '\n';
}

}  // namespace

void write_colouring(std::ostream& out, const EdgeColouring& c) {
  out << (c.directed() ? "directed" : "undirected") << ' ' << c.n() << ' ' << c.colour_count() << '\n';
  for (Vertex u = 0; u < c.n(); ++u) {
    for (Vertex v = c.directed() ? 0 : u + 1; v < c.n(); ++v) {
      if (u == v) continue;
      out << u << ' ' << v << ' ' << c.colour(u, v) << '\n';
    }
  }
}

EdgeColouring read_colouring(std::istream& in) {
  LineReader reader(in);
  const auto header = split_words(reader.require("colouring header"));
  if (header.size() != 3 || (header[0] != "directed" && header[0] != "undirected")) {
    reader.fail("expected header 'directed n C' or 'undirected n C'");
  }
  const bool directed = header[0] == "directed";
  const int n = parse_number<int>(reader, header[1]);
  const int declared = parse_number<int>(reader, header[2]);
  if (n < 0) reader.fail("negative vertex count");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Colour> matrix(nn * nn, kNoColour);
  const std::size_t expected = directed ? nn * (nn - (n > 0 ? 1 : 0)) : nn * (nn - (n > 0 ? 1 : 0)) / 2;
  std::size_t seen = 0;
  std::set<Colour> distinct;
  std::string line;
  while (reader.next(line)) {
    if (blank(line)) continue;
    const auto f = parse_ints(reader, line);
    if (f.size() != 3) reader.fail("expected 'u v colour'");
    const int u = f[0], v = f[1], col = f[2];
    if (u < 0 || v < 0 || u >= n || v >= n) reader.fail("vertex out of range");
    if (u == v) reader.fail("loop edge");
    if (!directed && u > v) reader.fail("undirected edges must be listed with u < v");
    if (col < 0) reader.fail("negative colour");
    auto& cell = matrix[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)];
    if (cell != kNoColour) reader.fail("edge listed twice");
    cell = col;
    if (!directed) matrix[static_cast<std::size_t>(v) * nn + static_cast<std::size_t>(u)] = col;
    distinct.insert(col);
    ++seen;
  }
  if (seen != expected) {
    throw ParseError("expected " + std::to_string(expected) + " edges, found " + std::to_string(seen));
  }
  if (static_cast<int>(distinct.size()) != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " colours, found " +
                     std::to_string(distinct.size()));
  }
  return EdgeColouring(n, directed, std::move(matrix));
}

void write_latin_square(std::ostream& out, const LatinSquare& square) {
  out << square.n() << '\n';
  for (int i = 0; i < square.n(); ++i) {
    for (int j = 0; j < square.n(); ++j) {
      if (j > 0) out << ' ';
      out << square.cell(i, j);
    }
    out << '\n';
  }
}

LatinSquare read_latin_square(std::istream& in) {
  LineReader reader(in);
  const auto header = split_words(reader.require("order"));
  if (header.size() != 1) reader.fail("expected the order n");
  const int n = parse_number<int>(reader, header[0]);
  if (n < 0) reader.fail("negative order");
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto row = parse_ints(reader, reader.require("a row"));
    if (static_cast<int>(row.size()) != n) reader.fail("row " + std::to_string(i) + " has the wrong length");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return LatinSquare(n, std::move(cells));
}

void write_forest(std::ostream& out, const PathList& paths) {
  for (const auto& p : paths) write_ids(out, p);
}

PathList read_forest(std::istream& in) {
  LineReader reader(in);
  PathList paths;
  std::string line;
  while (reader.next(line)) {
    if (blank(line)) continue;
    paths.push_back(parse_ints(reader, line));
  }
  return paths;
}

void write_tree(std::ostream& out, const TreeSpec& tree) {
  out << tree.n() << '\n';
  for (Vertex v = 1; v < tree.n(); ++v) {
    if (v > 1) out << ' ';
    out << tree.parent(v);
  }
  out << '\n';
}

TreeSpec read_tree(std::istream& in) {
  LineReader reader(in);
  const auto header = split_words(reader.require("vertex count"));
  if (header.size() != 1) reader.fail("expected the vertex count n");
  const int n = parse_number<int>(reader, header[0]);
  if (n < 1) reader.fail("tree needs at least one vertex");
  std::string line;
  if (!reader.next(line)) line.clear();
  const auto parents = parse_ints(reader, line);
  if (static_cast<int>(parents.size()) != n - 1) {
    reader.fail("expected " + std::to_string(n - 1) + " parent entries, found " + std::to_string(parents.size()));
  }
  std::vector<Vertex> full(static_cast<std::size_t>(n), kNoVertex);
  std::copy(parents.begin(), parents.end(), full.begin() + 1);
  return TreeSpec(std::move(full));
}

void write_embedding(std::ostream& out, const std::vector<Vertex>& embedding) {
  for (std::size_t v = 0; v < embedding.size(); ++v) out << v << ' ' << embedding[v] << '\n';
}

std::vector<Vertex> read_embedding(std::istream& in) {
  LineReader reader(in);
  std::vector<std::pair<int, int>> pairs;
  std::string line;
  while (reader.next(line)) {
    if (blank(line)) continue;
    const auto f = parse_ints(reader, line);
    if (f.size() != 2) reader.fail("expected 'tree_vertex host_vertex'");
    pairs.emplace_back(f[0], f[1]);
  }
  std::vector<Vertex> embedding(pairs.size(), kNoVertex);
  for (const auto& [t, h] : pairs) {
    if (t < 0 || static_cast<std::size_t>(t) >= pairs.size()) {
      throw ParseError("tree vertex " + std::to_string(t) + " out of range");
    }
    if (embedding[static_cast<std::size_t>(t)] != kNoVertex) {
      throw ParseError("tree vertex " + std::to_string(t) + " listed twice");
    }
    embedding[static_cast<std::size_t>(t)] = h;
  }
  return embedding;
}

void write_cycle(std::ostream& out, const std::vector<Vertex>& cycle) { write_ids(out, cycle); }

std::vector<Vertex> read_cycle(std::istream& in) {
  LineReader reader(in);
  std::vector<Vertex> cycle;
  std::string line;
  bool found = false;
  while (reader.next(line)) {
    if (blank(line)) continue;
    if (found) reader.fail("a cycle file holds a single line");
    cycle = parse_ints(reader, line);
    found = true;
  }
  return cycle;
}

void write_key_values(std::ostream& out, const KeyValues& values) {
  for (const auto& [k, v] : values) out << k << '=' << v << '\n';
}

KeyValues read_key_values(std::istream& in) {
  LineReader reader(in);
  KeyValues values;
  std::string line;
  while (reader.next(line)) {
    if (blank(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) reader.fail("expected key=value");
    values.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  return values;
}

const std::string* find_value(const KeyValues& values, const std::string& key) {
  for (const auto& [k, v] : values) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void write_cascade_traces(std::ostream& out, const std::vector<CascadeTrace>& traces) {
  for (std::size_t k = 0; k < traces.size(); ++k) {
    out << "cascade " << k << '\n';
    for (const auto& s : traces[k]) {
      out << "step " << s.index << ' ' << s.vertex << " add " << s.added.from << ' ' << s.added.to << " colour "
          << s.added_colour;
      if (s.deleted) out << " del " << s.deleted->from << ' ' << s.deleted->to;
      out << '\n';
    }
  }
}

std::vector<CascadeTrace> read_cascade_traces(std::istream& in) {
  LineReader reader(in);
  std::vector<CascadeTrace> traces;
  std::string line;
  while (reader.next(line)) {
    if (blank(line)) continue;
    const auto w = split_words(line);
    if (w[0] == "cascade") {
      if (w.size() != 2) reader.fail("expected 'cascade k'");
      traces.emplace_back();
      continue;
    }
    if (w[0] != "step" || traces.empty()) reader.fail("expected a 'step' line inside a cascade");
    if ((w.size() != 8 && w.size() != 11) || w[3] != "add" || w[6] != "colour") {
      reader.fail("expected 'step i v add u w colour f [del x y]'");
    }
    CascadeStep s;
    s.index = parse_number<int>(reader, w[1]);
    s.vertex = parse_number<int>(reader, w[2]);
    s.added = Edge{parse_number<int>(reader, w[4]), parse_number<int>(reader, w[5])};
    s.added_colour = parse_number<int>(reader, w[7]);
    if (w.size() == 11) {
      if (w[8] != "del") reader.fail("expected 'del x y'");
      s.deleted = Edge{parse_number<int>(reader, w[9]), parse_number<int>(reader, w[10])};
    }
    traces.back().push_back(s);
  }
  return traces;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

}  // namespace rainbow
