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

#include "arbor/triangle_structures.hpp"

#include <algorithm>
#include <queue>

#include "arbor/error.hpp"

namespace arbor {

namespace {

std::vector<std::vector<int>> triangles_at(const Graph& g, const std::vector<Triangle>& tris) {
  std::vector<std::vector<int>> at(g.vertex_count());
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (Vertex v : tris[i]) at[v].push_back(static_cast<int>(i));
  }
  return at;
}

}  // namespace

std::vector<Vertex> bad_vertices(const Graph& g) {
  const auto tris = triangles(g);
  const auto at = triangles_at(g, tris);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 4 && at[v].size() >= 2) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> AuxGraph::incidence() const {
  std::vector<std::vector<int>> inc(nodes.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].a].push_back(static_cast<int>(e));
    inc[edges[e].b].push_back(static_cast<int>(e));
  }
  return inc;
}

std::vector<int> AuxGraph::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (const auto& e : edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

int AuxGraph::find(const Triangle& t) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
  if (it == nodes.end() || *it != t) return -1;
  return static_cast<int>(it - nodes.begin());
}

AuxGraph build_aux_graph(const Graph& g) {
  if (auto c4 = find_four_cycle(g)) {
    throw PreconditionError("auxiliary graph needs a 4-cycle-free graph; found 4-cycle " + std::to_string((*c4)[0]) +
                            " " + std::to_string((*c4)[1]) + " " + std::to_string((*c4)[2]) + " " +
                            std::to_string((*c4)[3]));
  }
  const auto tris = triangles(g);
  const auto at = triangles_at(g, tris);
  AuxGraph h;
  const auto bad = bad_vertices(g);
  std::vector<char> keep(tris.size(), 0);
  for (Vertex b : bad) {
    for (int t : at[b]) keep[t] = 1;
  }
  std::vector<int> node_of(tris.size(), -1);
  for (std::size_t t = 0; t < tris.size(); ++t) {
    if (!keep[t]) continue;
    node_of[t] = h.node_count();
    h.nodes.push_back(tris[t]);
  }
  for (Vertex b : bad) {
    // Without 4-cycles a degree-4 vertex lies in at most two triangles.
    if (at[b].size() != 2) throw InternalError("bad vertex in more than two triangles");
    h.edges.push_back({node_of[at[b][0]], node_of[at[b][1]], b});
  }
  return h;
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kCycle:
      return "cycle";
    case ComponentKind::kTree:
      return "tree";
    case ComponentKind::kOther:
      return "other";
  }
  return "?";
}

std::vector<AuxComponent> classify_components(const AuxGraph& h) {
  const auto inc = h.incidence();
  const auto deg = h.degrees();
  std::vector<char> seen(h.node_count(), 0);
  std::vector<AuxComponent> out;
  for (int s = 0; s < h.node_count(); ++s) {
    if (seen[s]) continue;
    AuxComponent comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      comp.nodes.push_back(x);
      for (int e : inc[x]) {
        comp.edges.push_back(e);
        const int y = h.edges[e].a == x ? h.edges[e].b : h.edges[e].a;
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.nodes.begin(), comp.nodes.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    comp.edges.erase(std::unique(comp.edges.begin(), comp.edges.end()), comp.edges.end());
    const auto n = comp.nodes.size();
    const auto m = comp.edges.size();
    const bool all_two = std::all_of(comp.nodes.begin(), comp.nodes.end(), [&](int x) { return deg[x] == 2; });
    if (m == n && all_two) {
      comp.kind = ComponentKind::kCycle;
    } else if (m + 1 == n) {
      comp.kind = ComponentKind::kTree;
    } else {
      comp.kind = ComponentKind::kOther;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

DegreeCensus degree_census(const AuxGraph& h, const AuxComponent& component) {
  if (component.kind != ComponentKind::kTree) {
    throw PreconditionError(std::string("degree census needs a tree component, got ") + to_string(component.kind));
  }
  const auto deg = h.degrees();
  DegreeCensus c;
  for (int x : component.nodes) {
    switch (deg[x]) {
      case 0:
        break;
      case 1:
        ++c.z1;
        break;
      case 2:
        ++c.z2;
        break;
      case 3:
        ++c.z3;
        break;
      default:
        throw PreconditionError("tree node of degree " + std::to_string(deg[x]) + " exceeds 3");
    }
  }
  return c;
}

std::vector<Vertex> TriangularCycleConfig::vertex_set() const {
  std::vector<Vertex> s = cycle;
  s.push_back(apex);
  std::sort(s.begin(), s.end());
  return s;
}

std::optional<std::string> config_violation(const Graph& g, const TriangularCycleConfig& cfg) {
  const int s = cfg.length();
  if (s < 5) return "cycle length " + std::to_string(s) + " is below 5";
  const int n = g.vertex_count();
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };
  if (!in_range(cfg.apex)) return std::string("apex out of range");
  std::vector<char> in_s(n, 0);
  for (Vertex v : cfg.cycle) {
    if (!in_range(v)) return "cycle vertex " + std::to_string(v) + " out of range";
    if (in_s[v]) return "cycle vertex " + std::to_string(v) + " repeated";
    in_s[v] = 1;
  }
  if (in_s[cfg.apex]) return std::string("apex lies on the cycle");
  in_s[cfg.apex] = 1;
  for (Vertex v : cfg.vertex_set()) {
    if (g.degree(v) != 4) return "vertex " + std::to_string(v) + " of S has degree " + std::to_string(g.degree(v));
  }
  for (int i = 0; i < s; ++i) {
    if (!g.has_edge(cfg.cycle[i], cfg.cycle[(i + 1) % s])) {
      return "cycle edge " + std::to_string(cfg.cycle[i]) + "-" + std::to_string(cfg.cycle[(i + 1) % s]) + " missing";
    }
  }
  if (!g.has_edge(cfg.apex, cfg.cycle[0]) || !g.has_edge(cfg.apex, cfg.cycle[1])) {
    return std::string("apex is not adjacent to both v1 and v2");
  }
  int induced = 0;
  for (Vertex v : cfg.vertex_set()) {
    for (Vertex w : g.neighbors(v)) induced += in_s[w];
  }
  if (induced / 2 != s + 2) return "G[S] has " + std::to_string(induced / 2) + " edges, expected " + std::to_string(s + 2);
  if (static_cast<int>(cfg.external.size()) != s) return std::string("external list count mismatch");
  for (int i = 0; i < s; ++i) {
    std::vector<Vertex> ext;
    for (Vertex w : g.neighbors(cfg.cycle[i])) {
      if (!in_s[w]) ext.push_back(w);
    }
    if (ext != cfg.external[i]) return "external list of v" + std::to_string(i + 1) + " does not match the graph";
    const std::size_t want = i < 2 ? 1 : 2;
    if (ext.size() != want) return "v" + std::to_string(i + 1) + " has " + std::to_string(ext.size()) + " external neighbours";
  }
  std::vector<Vertex> apex_ext;
  for (Vertex w : g.neighbors(cfg.apex)) {
    if (w != cfg.cycle[0] && w != cfg.cycle[1]) apex_ext.push_back(w);
  }
  if (apex_ext != cfg.apex_external) return std::string("apex external list does not match the graph");
  return std::nullopt;
}

TriangularCycleConfig make_config(const Graph& g, std::vector<Vertex> cycle, Vertex apex) {
  TriangularCycleConfig cfg;
  cfg.cycle = std::move(cycle);
  cfg.apex = apex;
  std::vector<char> in_s(g.vertex_count(), 0);
  for (Vertex v : cfg.cycle) {
    if (v >= 0 && v < g.vertex_count()) in_s[v] = 1;
  }
  if (apex >= 0 && apex < g.vertex_count()) {
    in_s[apex] = 1;
    for (Vertex w : g.neighbors(apex)) {
      if (cfg.cycle.size() < 2 || (w != cfg.cycle[0] && w != cfg.cycle[1])) cfg.apex_external.push_back(w);
    }
  }
  for (Vertex v : cfg.cycle) {
    auto& ext = cfg.external.emplace_back();
    if (v < 0 || v >= g.vertex_count()) continue;
    for (Vertex w : g.neighbors(v)) {
      if (!in_s[w]) ext.push_back(w);
    }
  }
  if (auto why = config_violation(g, cfg)) throw PreconditionError("invalid triangular cycle configuration: " + *why);
  return cfg;
}

namespace {

class ConfigSearch {
 public:
  ConfigSearch(const Graph& g, std::int64_t budget)
      : g_(g), budget_(budget), in_path_(g.vertex_count(), 0), blocked_(g.vertex_count(), 0),
        dist_(g.vertex_count(), -1) {}

  ConfigSearchResult run() {
    ConfigSearchResult result;
    struct Seed {
      Vertex v1, v2, u;
    };
    std::vector<Seed> seeds;
    int degree_four = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) degree_four += g_.degree(v) == 4;
    for (const auto& [a, b] : g_.edges()) {
      if (g_.degree(a) != 4 || g_.degree(b) != 4) continue;
      for (Vertex u : g_.neighbors(a)) {
        if (u != b && g_.degree(u) == 4 && g_.has_edge(u, b)) seeds.push_back({a, b, u});
      }
    }
    // S holds s cycle vertices plus the apex.
    for (int s = 5; s + 1 <= degree_four; ++s) {
      for (const auto& seed : seeds) {
        if (auto cfg = try_seed(seed.v1, seed.v2, seed.u, s)) {
          result.config = std::move(cfg);
          result.nodes_expanded = expanded_;
          return result;
        }
        if (exhausted_) {
          result.budget_exhausted = true;
          result.nodes_expanded = expanded_;
          return result;
        }
      }
    }
    result.nodes_expanded = expanded_;
    return result;
  }

 private:
  std::optional<TriangularCycleConfig> try_seed(Vertex v1, Vertex v2, Vertex u, int s) {
    // blocked: u and its neighbours other than v1, v2 can never join the cycle.
    blocked_[u] = 1;
    for (Vertex w : g_.neighbors(u)) {
      if (w != v1 && w != v2) blocked_[w] = 1;
    }
    distances_to(v1, v2);
    path_ = {v1, v2};
    in_path_[v1] = in_path_[v2] = 1;
    std::optional<TriangularCycleConfig> found;
    if (extend(s)) found = make_config(g_, path_, u);
    for (Vertex v : path_) in_path_[v] = 0;
    blocked_[u] = 0;
    for (Vertex w : g_.neighbors(u)) blocked_[w] = 0;
    return found;
  }

  // BFS from v1 through admissible vertices, never through v2.
  void distances_to(Vertex v1, Vertex v2) {
    std::fill(dist_.begin(), dist_.end(), -1);
    std::queue<Vertex> q;
    dist_[v1] = 0;
    q.push(v1);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g_.neighbors(x)) {
        if (dist_[y] != -1 || y == v2 || blocked_[y] || g_.degree(y) != 4) continue;
        dist_[y] = dist_[x] + 1;
        q.push(y);
      }
    }
  }

  bool extend(int s) {
    if (++expanded_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const int k = static_cast<int>(path_.size());
    if (k == s) return true;
    const Vertex last = path_.back();
    const Vertex v1 = path_.front();
    for (Vertex y : g_.neighbors(last)) {
      if (in_path_[y] || blocked_[y] || g_.degree(y) != 4) continue;
      if (dist_[y] == -1 || dist_[y] > s - k) continue;
      const bool closes = g_.has_edge(y, v1);
      if (closes != (k == s - 1)) continue;
      bool chord = false;
      for (Vertex w : g_.neighbors(y)) {
        if (w != last && w != v1 && in_path_[w]) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      path_.push_back(y);
      in_path_[y] = 1;
      const bool ok = extend(s);
      if (ok) return true;
      in_path_[y] = 0;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::int64_t budget_;
  std::int64_t expanded_ = 0;
  bool exhausted_ = false;
  std::vector<char> in_path_;
  std::vector<char> blocked_;
  std::vector<int> dist_;
  std::vector<Vertex> path_;
};

}  // namespace

ConfigSearchResult search_triangular_cycle_config(const Graph& g, const ConfigSearchOptions& options) {
  return ConfigSearch(g, options.node_budget).run();
}

std::optional<TriangularCycleConfig> find_triangular_cycle_config(const Graph& g, const ConfigSearchOptions& options) {
  auto result = search_triangular_cycle_config(g, options);
  if (result.budget_exhausted) {
    throw BudgetExhausted("configuration search exhausted its budget of " + std::to_string(options.node_budget) +
                          " nodes");
  }
  return std::move(result.config);
}

}  // namespace arbor
