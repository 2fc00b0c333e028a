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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// Degree-4 vertices lying in at least two triangles.
std::vector<Vertex> bad_vertices(const Graph& g);

/// Edge of the triangle graph: the two triangles a and b share `bad_vertex`.
struct AuxEdge {
  int a = 0;
  int b = 0;
  Vertex bad_vertex = 0;
};

/// Triangles touching a bad vertex, joined whenever a bad vertex lies in
/// both. Node ids index `nodes`, which is sorted.
struct AuxGraph {
  std::vector<Triangle> nodes;
  std::vector<AuxEdge> edges;  // ordered by bad vertex

  int node_count() const { return static_cast<int>(nodes.size()); }
  /// Edge ids incident to each node.
  std::vector<std::vector<int>> incidence() const;
  std::vector<int> degrees() const;
  /// Node index of triangle t, or -1.
  int find(const Triangle& t) const;
};

/// Throws PreconditionError when g contains a 4-cycle.
AuxGraph build_aux_graph(const Graph& g);

enum class ComponentKind { kCycle, kTree, kOther };

const char* to_string(ComponentKind kind);

struct AuxComponent {
  std::vector<int> nodes;  // sorted node ids
  std::vector<int> edges;  // sorted edge ids
  ComponentKind kind = ComponentKind::kOther;
};

/// Components ordered by smallest node id.
std::vector<AuxComponent> classify_components(const AuxGraph& h);

struct DegreeCensus {
  int z1 = 0;
  int z2 = 0;
  int z3 = 0;
};

/// Degree counts inside a tree component. Throws PreconditionError for
/// non-tree components or nodes of degree above 3.
DegreeCensus degree_census(const AuxGraph& h, const AuxComponent& component);

/// Cycle v1..vs of degree-4 vertices with an apex u adjacent to v1 and v2,
/// where S = {v1..vs, u} is 4-regular in G and G[S] is exactly the cycle
/// plus the two apex edges.
struct TriangularCycleConfig {
  std::vector<Vertex> cycle;
  Vertex apex = -1;
  /// external[i] = N(cycle[i]) \ S, sorted. Two entries except for v1, v2.
  std::vector<std::vector<Vertex>> external;
  /// N(u) \ {v1, v2}, sorted.
  std::vector<Vertex> apex_external;

  int length() const { return static_cast<int>(cycle.size()); }
  /// S, sorted.
  std::vector<Vertex> vertex_set() const;
};

/// Fills in the neighbour lists for (cycle, apex) and validates; throws
/// PreconditionError naming the first violated invariant.
TriangularCycleConfig make_config(const Graph& g, std::vector<Vertex> cycle, Vertex apex);

/// First violated invariant, or nullopt when cfg is valid in g.
std::optional<std::string> config_violation(const Graph& g, const TriangularCycleConfig& cfg);

struct ConfigSearchOptions {
  std::int64_t node_budget = 1'000'000;
};

struct ConfigSearchResult {
  std::optional<TriangularCycleConfig> config;
  bool budget_exhausted = false;
  std::int64_t nodes_expanded = 0;
};

/// Exhaustive search, shortest cycles first, then by the triangle edge
/// v1 < v2 in lexicographic order, then by apex. `config` absent with
/// budget_exhausted false means no configuration exists.
ConfigSearchResult search_triangular_cycle_config(const Graph& g, const ConfigSearchOptions& options = {});

/// As above; throws BudgetExhausted instead of returning an undecided result.
std::optional<TriangularCycleConfig> find_triangular_cycle_config(const Graph& g,
                                                                  const ConfigSearchOptions& options = {});

}  // namespace arbor
