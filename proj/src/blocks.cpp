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

#include "arbor/blocks.hpp"

#include <algorithm>

namespace arbor {

namespace {

struct Frame {
  Vertex v;
  Vertex parent;
  std::size_t next;
};

}  // namespace

// Iterative Hopcroft-Tarjan with an explicit edge stack.
BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Frame> frames;
  int clock = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      out.blocks.push_back({root});
      disc[root] = clock++;
      continue;
    }
    int root_children = 0;
    disc[root] = low[root] = clock++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& top = frames.back();
      const Vertex v = top.v;
      const auto nb = g.neighbors(v);
      if (top.next < nb.size()) {
        const Vertex w = nb[top.next++];
        if (disc[w] == -1) {
          edge_stack.push_back({v, w});
          disc[w] = low[w] = clock++;
          frames.push_back({w, v, 0});
        } else if (w != top.parent && disc[w] < disc[v]) {
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      frames.pop_back();
      if (frames.empty()) break;
      const Vertex u = frames.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        std::vector<Vertex> block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == u && e.v == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
        if (u == root) {
          ++root_children;
        } else {
          is_cut[u] = 1;
        }
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }

  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(v);
  }
  return out;
}

}  // namespace arbor
