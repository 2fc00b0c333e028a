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

// Deterministic instance generators and a few named graphs.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/embedding.hpp"
#include "arbor/graph.hpp"
#include "arbor/triangle_structures.hpp"

namespace arbor {

Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph heawood_graph();

enum class Family { kPlanarC4Free, kToroidalC4Free, kConfigBearing, kTreeH, kCycleH };

const char* to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct GenParams {
  std::uint64_t seed = 1;
  int min_vertices = 8;
  int max_vertices = 30;
  Family family = Family::kPlanarC4Free;
  /// Cycle length for config_bearing; ignored otherwise.
  int cycle_length = 5;
};

struct Instance {
  Graph graph;
  std::optional<RotationSystem> rotation;
  /// Name of the starting construction, e.g. "petersen" or "honeycomb-4x6".
  std::string base;
};

/// Throws InputError when the family cannot be realised within the size
/// bounds. Identical params give identical instances.
Instance gen_instance(const GenParams& params);

struct ConfigInstance {
  Graph graph;
  TriangularCycleConfig config;
  /// Adjacent to the outside neighbour of cycle[0] and to apex_outside[0].
  Vertex bridge = -1;
  /// The apex's two neighbours outside the config.
  std::array<Vertex, 2> apex_outside{};
  /// Inner vertices of a path apex_outside[0] - p0 - p1 - apex_outside[1].
  std::array<Vertex, 2> apex_path{};
};

/// A 2-connected, 4-regular, 4-cycle-free graph containing a planted
/// triangular cycle config with |C| = s. Throws InputError for s < 5.
ConfigInstance gen_config_instance(std::uint64_t seed, int s);

/// "GEN family=... seed=... min=... max=... cycle_length=... base=... n=... m=..."
std::string manifest_line(const GenParams& params, const Instance& instance);

/// Enumerates rotation systems (first neighbour of each list fixed) until
/// one of the requested genus turns up. Gives up after `budget` systems.
std::optional<RotationSystem> find_rotation_with_genus(const Graph& g, int target_genus, long budget = 1'000'000);

/// Mutable rotation system with the local surgery moves the generators use.
/// None of the moves changes the genus.
class EmbeddedBuilder {
 public:
  explicit EmbeddedBuilder(std::vector<std::vector<Vertex>> rotation) : rot_(std::move(rotation)) {}

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  const std::vector<Vertex>& around(Vertex v) const { return rot_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_common_neighbor(Vertex a, Vertex b) const;
  /// True when a path a - x - y - b exists, i.e. edge ab would close a 4-cycle.
  bool has_three_path(Vertex a, Vertex b) const;

  /// Leaf w hung in the corner of `corner.to` that follows `corner.from`.
  Vertex add_pendant(DirectedEdge corner);
  /// Triangle on the edge (a, b), placed in the face that traverses a -> b.
  Vertex add_ear(DirectedEdge e);
  /// Edge between the corners (p, a) and (r, c) of one face.
  void add_chord(DirectedEdge at_a, DirectedEdge at_c);
  Vertex subdivide(Vertex u, Vertex v);

  std::vector<Face> faces() const;
  Graph graph() const;
  RotationSystem rotation() const { return RotationSystem(rot_); }

 private:
  void insert_after(Vertex at, Vertex after, Vertex x);

  std::vector<std::vector<Vertex>> rot_;
};

}  // namespace arbor
