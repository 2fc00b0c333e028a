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

// Plain-text formats. '#' starts a comment everywhere; blank lines are
// skipped. Parse failures throw InputError naming the source and line.
//
//   graph:     "n m" then m lines "u v" (0-based ids)
//   rotation:  one line "v: a b c ..." per vertex, neighbours in cyclic order
//   coloring:  lines "v c" with c in {1, 2}

#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "arbor/coloring.hpp"
#include "arbor/embedding.hpp"
#include "arbor/graph.hpp"

namespace arbor {

Graph read_graph(std::istream& in, const std::string& source = "<graph>");
/// Edges sorted lexicographically.
void write_graph(std::ostream& out, const Graph& g);

/// Vertices listed in order 0..n-1; validated against g.
RotationSystem read_rotation(std::istream& in, const Graph& g, const std::string& source = "<rotation>");
void write_rotation(std::ostream& out, const RotationSystem& rot);

/// Vertices missing from the file stay uncolored.
TwoColoring read_coloring(std::istream& in, int vertex_count, const std::string& source = "<coloring>");
/// Writes only colored vertices.
void write_coloring(std::ostream& out, const TwoColoring& f);

Graph load_graph(const std::string& path);
RotationSystem load_rotation(const std::string& path, const Graph& g);
TwoColoring load_coloring(const std::string& path, int vertex_count);

}  // namespace arbor
