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

#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// Blocks are the maximal 2-connected subgraphs, bridges, and isolated
/// vertices. Each block is a sorted vertex list; blocks are ordered
/// lexicographically. Every edge lies in exactly one block.
struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
};

BlockDecomposition block_decomposition(const Graph& g);

}  // namespace arbor
