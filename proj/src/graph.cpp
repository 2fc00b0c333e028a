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

#include "arbor/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <unordered_map>

#include "arbor/error.hpp"

namespace arbor {

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (v == 0 || degree(v) < best) best = degree(v);
  }
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count " + std::to_string(n));
  Graph g;
  g.adjacency_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an id outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& a = g.adjacency_[v];
    std::sort(a.begin(), a.end());
    auto dup = std::adjacent_find(a.begin(), a.end());
    if (dup != a.end()) {
      throw InputError("duplicate edge (" + std::to_string(std::min(v, *dup)) + "," +
                       std::to_string(std::max(v, *dup)) + ")");
    }
  }
  g.edge_count_ = static_cast<int>(edges.size());
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.to_parent.assign(keep.begin(), keep.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const Vertex p = out.to_parent[i];
    if (p < 0 || p >= g.vertex_count() || local[p] != -1) {
      throw InputError("induced_subgraph: bad or repeated vertex " + std::to_string(p));
    }
    local[p] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(out.to_parent[i])) {
      if (local[w] > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), local[w]});
    }
  }
  out.graph = build_graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex v : drop) gone.at(v) = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::array<Vertex, 4>> find_four_cycle(const Graph& g) {
  // (a, b) with a < b  ->  first common neighbour seen.
  std::unordered_map<std::uint64_t, Vertex> middle;
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    const auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const auto key = (static_cast<std::uint64_t>(nb[i]) << 32) | static_cast<std::uint32_t>(nb[j]);
        auto [it, inserted] = middle.emplace(key, c);
        if (!inserted) return std::array<Vertex, 4>{nb[i], it->second, nb[j], c};
      }
    }
  }
  return std::nullopt;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  std::queue<Vertex> q;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      if (2 * dist[v] >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
    q = {};
  }
  if (best > n) return std::nullopt;
  return best;
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      // merge the sorted lists above v
      const auto a = g.neighbors(u);
      const auto b = g.neighbors(v);
      auto i = std::upper_bound(a.begin(), a.end(), v);
      auto j = std::upper_bound(b.begin(), b.end(), v);
      while (i != a.end() && j != b.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          out.push_back({u, v, *i});
          ++i;
          ++j;
        }
      }
    }
  }
  return out;
}

}  // namespace arbor
