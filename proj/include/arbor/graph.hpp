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

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace arbor {

using Vertex = int;

/// Undirected edge. Graph::edges() always reports u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph on the dense vertex range 0..n-1.
///
/// Adjacency lists are kept sorted so every traversal in the library is
/// deterministic. Instances are immutable once built; use build_graph() or
/// induced_subgraph() to make new ones.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// 0 for the empty graph.
  int min_degree() const;
  int max_degree() const;

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// Strict constructor: rejects loops, out-of-range ids and repeated edges
/// with InputError.
Graph build_graph(int n, std::span<const Edge> edges);

struct InducedSubgraph {
  Graph graph;
  /// Local vertex i of `graph` is vertex to_parent[i] of the parent.
  std::vector<Vertex> to_parent;
};

/// Subgraph induced by `keep` (any order, no repeats). Local ids follow the
/// sorted order of `keep`.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Induced subgraph on all vertices except `drop`.
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> drop);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Some 4-cycle (a, b, c, d) in cyclic order, if one exists. Two vertices
/// with two common neighbours are exactly the certificate searched for.
std::optional<std::array<Vertex, 4>> find_four_cycle(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Vertex triple sorted ascending.
using Triangle = std::array<Vertex, 3>;

/// Every triangle once, in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);

}  // namespace arbor
