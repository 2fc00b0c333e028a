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
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "arbor/blocks.hpp"
#include "arbor/coloring.hpp"
#include "arbor/graph.hpp"
#include "arbor/triangle_structures.hpp"

namespace arbor {

/// A cycle v1..vs whose vertices each have exactly two neighbours (x_i, y_i)
/// off the cycle.
struct ExtensionContext {
  std::vector<Vertex> cycle;
  std::vector<std::array<Vertex, 2>> external;
  /// Set when the cycle is the C of a triangular cycle configuration; the apex
  /// then appears in the pairs of v1 and v2.
  std::optional<Vertex> apex;

  int length() const { return static_cast<int>(cycle.size()); }

  /// Reads the pairs off g. Throws InputError unless g[cycle] is exactly the
  /// cycle and each cycle vertex has exactly two other neighbours.
  static ExtensionContext from_graph(const Graph& g, std::vector<Vertex> cycle);
};

enum class ExtensionCase {
  kExtended,
  /// Every external neighbour carries the same color.
  kCaseOne,
  /// Every pair is bichromatic and the cycle is odd.
  kCaseTwo,
};

const char* to_string(ExtensionCase c);

struct ExtensionOutcome {
  ExtensionCase tag = ExtensionCase::kExtended;
  /// The input coloring plus the cycle; only meaningful for kExtended.
  TwoColoring coloring;
};

/// Colors the cycle from the colors of the external pairs, or reports which
/// of the two obstructing cases holds. Throws InputError for malformed
/// contexts or uncolored external neighbours.
ExtensionOutcome extend_over_cycle(const ExtensionContext& ctx, const TwoColoring& f);

/// Colors v, whose degree is at most 3 and whose neighbours are all colored,
/// with a color used at most once around it (color 1 on ties).
TwoColoring extend_low_degree(const Graph& g, const TwoColoring& f, Vertex v);

/// Which candidate extend_triangular_config() settled on.
enum class TriangularBranch {
  kExtended,
  kCaseOne,
  kCaseOneApexFlip,
  kCaseTwo,
  kCaseTwoFlipped,
};

const char* to_string(TriangularBranch b);

struct TriangularExtension {
  TwoColoring coloring;
  TriangularBranch branch = TriangularBranch::kExtended;
};

/// Extends f, good on g - C (the apex stays colored), to all of g. Throws
/// PreconditionError for an invalid cfg or f, and InternalError if no
/// candidate is good.
TriangularExtension extend_triangular_config(const Graph& g, const TriangularCycleConfig& cfg, const TwoColoring& f);

/// Combines per-block colorings (each over g's full vertex range, colored on
/// its block) by flipping whole blocks until cut vertices agree.
TwoColoring merge_block_colorings(const BlockDecomposition& decomp, std::span<const TwoColoring> per_block);

enum class StepKind { kBase, kComponents, kBlocks, kLowDegree, kConfig };

const char* to_string(StepKind kind);

struct TraceEntry {
  StepKind kind = StepKind::kBase;
  /// base: the whole subgraph; components: one representative per component;
  /// blocks: the cut vertices; low_degree: the removed vertex; config: the
  /// cycle v1..vs followed by the apex. Ids refer to the input graph.
  std::vector<Vertex> vertices;
};

struct PartitionOptions {
  std::int64_t config_budget = 1'000'000;
  int base_case_size = 8;
};

struct PartitionResult {
  std::optional<TwoColoring> coloring;
  std::vector<TraceEntry> trace;
  std::optional<std::string> failure;
  bool budget_exhausted = false;

  bool ok() const { return coloring.has_value(); }
};

/// Splits V(g) into two induced forests by reducing to smaller instances:
/// brute force on tiny graphs, then components, blocks, a vertex of degree
/// at most 3, and finally a triangular cycle configuration. Every returned
/// coloring, including intermediate ones, is checked for goodness.
PartitionResult partition(const Graph& g, const PartitionOptions& options = {});

/// One "STEP kind v..." line per entry.
void write_trace(std::ostream& out, std::span<const TraceEntry> trace);

}  // namespace arbor
