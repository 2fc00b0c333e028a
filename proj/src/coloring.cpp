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

#include "arbor/coloring.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "arbor/error.hpp"
#include "union_find.hpp"

namespace arbor {

std::optional<Color> TwoColoring::get(Vertex v) const {
  if (colors_[v] == 0) return std::nullopt;
  return static_cast<Color>(colors_[v]);
}

Color TwoColoring::at(Vertex v) const {
  if (v < 0 || v >= size() || colors_[v] == 0) {
    throw InputError("vertex " + std::to_string(v) + " is not colored");
  }
  return static_cast<Color>(colors_[v]);
}

int TwoColoring::colored_count() const {
  return static_cast<int>(std::count_if(colors_.begin(), colors_.end(), [](auto c) { return c != 0; }));
}

TwoColoring TwoColoring::swapped() const {
  TwoColoring out = *this;
  for (auto& c : out.colors_) {
    if (c != 0) c = static_cast<std::uint8_t>(3 - c);
  }
  return out;
}

namespace {

// Path from `from` to `to` in the forest given by `adj`.
std::vector<Vertex> forest_path(const std::vector<std::vector<Vertex>>& adj, Vertex from, Vertex to) {
  std::vector<Vertex> prev(adj.size(), -1);
  std::queue<Vertex> q;
  prev[from] = from;
  q.push(from);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    if (v == to) break;
    for (Vertex w : adj[v]) {
      if (prev[w] == -1) {
        prev[w] = v;
        q.push(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = to; v != from; v = prev[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<MonochromaticCycle> find_monochromatic_cycle(const Graph& g, const TwoColoring& f) {
  if (f.size() != g.vertex_count()) {
    throw InputError("coloring covers " + std::to_string(f.size()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  }
  const auto edges = g.edges();
  for (Color c : {Color::kOne, Color::kTwo}) {
    detail::UnionFind uf(g.vertex_count());
    std::vector<std::vector<Vertex>> forest(g.vertex_count());
    for (const auto& [u, v] : edges) {
      if (f.get(u) != c || f.get(v) != c) continue;
      if (!uf.unite(u, v)) return MonochromaticCycle{c, forest_path(forest, u, v)};
      forest[u].push_back(v);
      forest[v].push_back(u);
    }
  }
  return std::nullopt;
}

}  // namespace arbor
