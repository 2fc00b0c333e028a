// Copyright 2026 The Arbor Authors
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

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "arbor/error.hpp"
#include "arbor/io.hpp"

namespace arbor {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next line with content, comments stripped. False at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      tokens.clear();
      std::istringstream ss(line);
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(source_ + ":" + std::to_string(line_no_) + ": " + what);
  }

  long long integer(std::string_view token) const {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("expected an integer, got '" + std::string(token) + "'");
    return value;
  }

  int line() const { return line_no_; }

 private:
  std::istream& in_;
  std::string source_;
  int line_no_ = 0;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<std::string> tok;
  if (!reader.next(tok)) reader.fail("missing header line \"n m\"");
  if (tok.size() != 2) reader.fail("header must be \"n m\"");
  const auto n = reader.integer(tok[0]);
  const auto m = reader.integer(tok[1]);
  if (n < 0 || m < 0 || n > (1 << 24)) reader.fail("bad header counts");
  std::vector<Edge> edges;
  edges.reserve(m);
  while (reader.next(tok)) {
    if (tok.size() != 2) reader.fail("edge line must be \"u v\"");
    if (static_cast<long long>(edges.size()) == m) reader.fail("more edges than the header declares");
    const auto u = reader.integer(tok[0]);
    const auto v = reader.integer(tok[1]);
    if (u < 0 || v < 0 || u >= n || v >= n) reader.fail("vertex id out of range 0.." + std::to_string(n - 1));
    if (u == v) reader.fail("loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError(source + ": header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return build_graph(static_cast<int>(n), edges);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

RotationSystem read_rotation(std::istream& in, const Graph& g, const std::string& source) {
  LineReader reader(in, source);
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> lists(n);
  std::vector<char> seen(n, 0);
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    std::string head = tok[0];
    std::size_t first = 1;
    if (head.back() == ':') {
      head.pop_back();
    } else if (tok.size() > 1 && tok[1] == ":") {
      first = 2;
    } else {
      reader.fail("rotation line must start with \"v:\"");
    }
    const auto v = reader.integer(head);
    if (v < 0 || v >= n) reader.fail("vertex id out of range");
    if (seen[v]) reader.fail("vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    for (std::size_t i = first; i < tok.size(); ++i) {
      const auto w = reader.integer(tok[i]);
      if (w < 0 || w >= n) reader.fail("neighbour id out of range");
      lists[v].push_back(static_cast<Vertex>(w));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) throw InputError(source + ": vertex " + std::to_string(v) + " has no rotation line");
  }
  RotationSystem rot(std::move(lists));
  try {
    validate_rotation(g, rot);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
  return rot;
}

void write_rotation(std::ostream& out, const RotationSystem& rot) {
  for (Vertex v = 0; v < rot.vertex_count(); ++v) {
    out << v << ':';
    for (Vertex w : rot.around(v)) out << ' ' << w;
    out << '\n';
  }
}

TwoColoring read_coloring(std::istream& in, int vertex_count, const std::string& source) {
  LineReader reader(in, source);
  TwoColoring f(vertex_count);
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok.size() != 2) reader.fail("coloring line must be \"v c\"");
    const auto v = reader.integer(tok[0]);
    const auto c = reader.integer(tok[1]);
    if (v < 0 || v >= vertex_count) reader.fail("vertex id out of range");
    if (c != 1 && c != 2) reader.fail("color must be 1 or 2");
    if (f.is_colored(static_cast<Vertex>(v))) reader.fail("vertex " + std::to_string(v) + " colored twice");
    f.set(static_cast<Vertex>(v), static_cast<Color>(c));
  }
  return f;
}

void write_coloring(std::ostream& out, const TwoColoring& f) {
  for (Vertex v = 0; v < f.size(); ++v) {
    if (auto c = f.get(v)) out << v << ' ' << to_int(*c) << '\n';
  }
}

Graph load_graph(const std::string& path) {
  auto in = open(path);
  return read_graph(in, path);
}

RotationSystem load_rotation(const std::string& path, const Graph& g) {
  auto in = open(path);
  return read_rotation(in, g, path);
}

TwoColoring load_coloring(const std::string& path, int vertex_count) {
  auto in = open(path);
  return read_coloring(in, vertex_count, path);
}

}  // namespace arbor
