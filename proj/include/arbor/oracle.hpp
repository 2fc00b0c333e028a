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

// Exhaustive ground truth for small graphs. Nothing here shares code with
// the constructive solver.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arbor/coloring.hpp"
#include "arbor/graph.hpp"

namespace arbor {

/// Largest graph the exhaustive k >= 2 search accepts.
inline constexpr int kOracleMaxVertices = 24;

/// Class index in 0..k-1 per vertex, each class inducing a forest, or nullopt
/// when none exists. Vertex 0 always lands in class 0. Throws
/// PreconditionError for k >= 2 on more than kOracleMaxVertices vertices.
std::optional<std::vector<int>> find_forest_partition(const Graph& g, int k);

/// True iff V(g) splits into k induced forests.
bool arboricity_at_most(const Graph& g, int k);

/// Smallest such k. Same size limit.
int vertex_arboricity(const Graph& g);

/// Constraints for the randomized good-coloring search below.
struct ColoringConstraints {
  std::vector<std::pair<Vertex, Color>> fixed;
  /// Pairs that must receive different colors.
  std::vector<std::pair<Vertex, Vertex>> differ;
  /// 0 tries color 1 first everywhere; other values shuffle the order.
  std::uint64_t seed = 0;
  std::int64_t node_budget = 2'000'000;
};

/// Total good 2-coloring of g honouring the constraints, found by
/// backtracking. nullopt when none exists or the budget runs out. No size
/// limit; intended for test fixtures on graphs with plenty of good colorings.
std::optional<TwoColoring> search_good_coloring(const Graph& g, const ColoringConstraints& constraints);

}  // namespace arbor
