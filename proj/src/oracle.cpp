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

#include "arbor/oracle.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <string>

#include "arbor/error.hpp"
#include "union_find.hpp"

namespace arbor {

namespace {

// BFS order per component, components by smallest vertex. Puts vertex 0
// first so the symmetry fix below applies to it.
std::vector<Vertex> search_order(const Graph& g, const std::vector<Vertex>& first) {
  std::vector<Vertex> order;
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<Vertex> q;
  auto flood = [&](Vertex s) {
    if (seen[s]) return;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
  };
  for (Vertex v : first) {
    if (!seen[v]) {
      seen[v] = 1;
      order.push_back(v);
    }
  }
  for (Vertex v : first) {
    for (Vertex w : g.neighbors(v)) flood(w);
  }
  for (Vertex s = 0; s < g.vertex_count(); ++s) flood(s);
  return order;
}

// Shared backtracking core: assigns classes in `order`; a class may only be
// used when it keeps that class acyclic. One union-find suffices because
// only same-class edges are ever united.
class ForestSearch {
 public:
  ForestSearch(const Graph& g, int k) : g_(g), k_(k), cls_(g.vertex_count(), -1), uf_(g.vertex_count()) {}

  bool try_assign(Vertex v, int c) {
    const auto mark = uf_.checkpoint();
    for (Vertex w : g_.neighbors(v)) {
      if (cls_[w] != c) continue;
      if (!uf_.unite(v, w)) {
        uf_.rollback(mark);
        return false;
      }
    }
    cls_[v] = c;
    marks_.push_back(mark);
    return true;
  }

  void undo(Vertex v) {
    cls_[v] = -1;
    uf_.rollback(marks_.back());
    marks_.pop_back();
  }

  int cls(Vertex v) const { return cls_[v]; }
  const std::vector<int>& classes() const { return cls_; }
  int k() const { return k_; }

 private:
  const Graph& g_;
  int k_;
  std::vector<int> cls_;
  detail::UnionFind uf_;
  std::vector<std::size_t> marks_;
};

bool is_forest(const Graph& g) {
  detail::UnionFind uf(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_forest_partition(const Graph& g, int k) {
  if (k < 1) throw InputError("forest partition needs k >= 1");
  const int n = g.vertex_count();
  if (k == 1) {
    if (!is_forest(g)) return std::nullopt;
    return std::vector<int>(n, 0);
  }
  if (n > kOracleMaxVertices) {
    throw PreconditionError("exhaustive oracle accepts at most " + std::to_string(kOracleMaxVertices) +
                            " vertices, got " + std::to_string(n));
  }
  if (n == 0) return std::vector<int>{};
  const auto order = search_order(g, {0});
  ForestSearch search(g, k);
  // Classes are interchangeable: position i may open at most one new class.
  std::vector<int> used_upto(n + 1, 0);
  std::vector<int> next(n, 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == n) return search.classes();
    const Vertex v = order[depth];
    const int limit = std::min(k, used_upto[depth] + 1);
    bool placed = false;
    while (next[depth] < limit) {
      const int c = next[depth]++;
      if (search.try_assign(v, c)) {
        used_upto[depth + 1] = std::max(used_upto[depth], c + 1);
        placed = true;
        break;
      }
    }
    if (placed) {
      ++depth;
      if (depth < n) next[depth] = 0;
      continue;
    }
    next[depth] = 0;
    --depth;
    if (depth >= 0) search.undo(order[depth]);
  }
  return std::nullopt;
}

bool arboricity_at_most(const Graph& g, int k) { return find_forest_partition(g, k).has_value(); }

int vertex_arboricity(const Graph& g) {
  if (g.vertex_count() > kOracleMaxVertices) {
    throw PreconditionError("exhaustive oracle accepts at most " + std::to_string(kOracleMaxVertices) + " vertices");
  }
  int k = 1;
  while (!arboricity_at_most(g, k)) ++k;
  return k;
}

std::optional<TwoColoring> search_good_coloring(const Graph& g, const ColoringConstraints& constraints) {
  const int n = g.vertex_count();
  std::vector<int> forced(n, -1);
  for (const auto& [v, c] : constraints.fixed) {
    const int want = to_int(c) - 1;
    if (forced.at(v) != -1 && forced[v] != want) return std::nullopt;
    forced[v] = want;
  }
  std::vector<std::vector<Vertex>> differ(n);
  std::vector<Vertex> first;
  for (const auto& [v, c] : constraints.fixed) first.push_back(v);
  for (const auto& [a, b] : constraints.differ) {
    differ.at(a).push_back(b);
    differ.at(b).push_back(a);
    first.push_back(a);
    first.push_back(b);
  }
  const auto order = search_order(g, first);

  std::mt19937_64 rng(constraints.seed);
  std::vector<std::array<int, 2>> choice(n);
  for (auto& ch : choice) {
    ch = {0, 1};
    if (constraints.seed != 0 && (rng() & 1)) std::swap(ch[0], ch[1]);
  }

  ForestSearch search(g, 2);
  std::vector<int> next(n + 1, 0);
  std::int64_t nodes = 0;
  int depth = 0;
  while (depth >= 0) {
    if (depth == n) {
      TwoColoring f(n);
      for (Vertex v = 0; v < n; ++v) f.set(v, search.cls(v) == 0 ? Color::kOne : Color::kTwo);
      return f;
    }
    if (++nodes > constraints.node_budget) return std::nullopt;
    const Vertex v = order[depth];
    bool placed = false;
    while (next[depth] < 2) {
      const int c = choice[v][next[depth]++];
      if (forced[v] != -1 && forced[v] != c) continue;
      bool clash = false;
      for (Vertex w : differ[v]) clash |= search.cls(w) == c;
      if (clash) continue;
      if (search.try_assign(v, c)) {
        placed = true;
        break;
      }
    }
    if (placed) {
      next[++depth] = 0;
      continue;
    }
    --depth;
    if (depth >= 0) search.undo(order[depth]);
  }
  return std::nullopt;
}

}  // namespace arbor
