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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// Cyclic order of neighbours around every vertex. Determines an orientable
/// cellular embedding of each connected component.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<Vertex>> rotation) : rotation_(std::move(rotation)) {}

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  const std::vector<Vertex>& around(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& lists() const { return rotation_; }

  bool operator==(const RotationSystem&) const = default;

 private:
  std::vector<std::vector<Vertex>> rotation_;
};

/// Throws InputError unless every rotation(v) is a permutation of N(v).
void validate_rotation(const Graph& g, const RotationSystem& rot);

struct DirectedEdge {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const DirectedEdge&) const = default;
};

/// A face as the closed walk walk[0] -> walk[1] -> ... -> walk[0].
struct Face {
  std::vector<Vertex> walk;

  int degree() const { return static_cast<int>(walk.size()); }
  DirectedEdge edge(std::size_t i) const { return {walk[i], walk[(i + 1) % walk.size()]}; }
};

/// Faces are canonical: each walk starts at its lexicographically smallest
/// directed edge, and faces are sorted by that edge.
struct FaceSet {
  std::vector<Face> faces;

  int total_degree() const;
};

/// Face tracing: the walk leaving along (u, v) continues with (v, w) where w
/// follows u in rotation(v). A lone vertex yields one face of degree 0.
FaceSet trace_faces(const Graph& g, const RotationSystem& rot);

/// Euler genus (2 - |V| + |E| - |F|) / 2 of the embedding. Throws
/// PreconditionError for disconnected graphs.
int genus(const Graph& g, const RotationSystem& rot);

struct EmbeddingReport {
  int vertex_count = 0;
  int edge_count = 0;
  bool connected = false;
  int min_degree = 0;
  bool has_four_cycle = false;
  std::optional<std::array<Vertex, 4>> four_cycle;
  std::optional<int> face_count;
  std::optional<int> genus;
  std::optional<std::string> rotation_error;

  /// No 4-cycle and a known embedding of genus at most 1.
  bool toroidal_c4_free() const { return genus.has_value() && *genus <= 1 && !has_four_cycle; }
};

/// Never throws on bad rotations or disconnected graphs; those land in the
/// report instead.
EmbeddingReport check_preconditions(const Graph& g, const std::optional<RotationSystem>& rot);

}  // namespace arbor
