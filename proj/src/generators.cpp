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

#include "arbor/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "arbor/blocks.hpp"
#include "arbor/error.hpp"

namespace arbor {

namespace {

// std distributions are implementation-defined; draws here are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(int num, int den) { return below(den) < static_cast<std::uint64_t>(num); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 gen_;
};

using Lists = std::vector<std::vector<Vertex>>;

Graph graph_from_lists(const Lists& adj) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u) {
    for (Vertex v : adj[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return build_graph(static_cast<int>(adj.size()), edges);
}

Lists lists_of(const Graph& g) {
  Lists adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return adj;
}

int count_faces(const Lists& rot) {
  std::vector<std::size_t> offset(rot.size() + 1, 0);
  for (std::size_t v = 0; v < rot.size(); ++v) offset[v + 1] = offset[v] + rot[v].size();
  std::vector<char> used(offset.back(), 0);
  auto pos = [&](Vertex at, Vertex nb) {
    const auto& r = rot[at];
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), nb) - r.begin());
  };
  int faces = 0;
  for (Vertex u = 0; u < static_cast<Vertex>(rot.size()); ++u) {
    for (std::size_t k = 0; k < rot[u].size(); ++k) {
      if (used[offset[u] + k]) continue;
      ++faces;
      Vertex a = u;
      std::size_t i = k;
      while (!used[offset[a] + i]) {
        used[offset[a] + i] = 1;
        const Vertex b = rot[a][i];
        const auto& rb = rot[b];
        const std::size_t j = (pos(b, a) + 1) % rb.size();
        a = b;
        i = j;
      }
    }
  }
  return faces;
}

// Rotation of a straight-line plane drawing: neighbours by increasing angle.
Lists rotation_from_drawing(const Lists& adj, const std::vector<std::pair<double, double>>& xy) {
  Lists rot = adj;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    auto angle = [&](Vertex w) { return std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first); };
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return rot;
}

void add_edge(Lists& adj, Vertex a, Vertex b) {
  adj[a].push_back(b);
  adj[b].push_back(a);
}

bool adjacent(const Lists& adj, Vertex a, Vertex b) {
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

bool three_path(const Lists& adj, Vertex a, Vertex b) {
  for (Vertex x : adj[a]) {
    if (x == b) continue;
    for (Vertex y : adj[x]) {
      if (y == a || y == b) continue;
      if (adjacent(adj, y, b)) return true;
    }
  }
  return false;
}

// ---- seed embeddings ---------------------------------------------------

EmbeddedBuilder cycle_seed(int k) {
  Lists rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + 1) % k, (i + k - 1) % k};
  return EmbeddedBuilder(rot);
}

const RotationSystem& cached_rotation(const std::string& name) {
  static const RotationSystem petersen = *find_rotation_with_genus(petersen_graph(), 1);
  static const RotationSystem heawood = *find_rotation_with_genus(heawood_graph(), 1);
  static const RotationSystem k5 = *find_rotation_with_genus(complete_graph(5), 1);
  static const RotationSystem k33 = *find_rotation_with_genus(complete_bipartite_graph(3, 3), 1);
  if (name == "petersen") return petersen;
  if (name == "heawood") return heawood;
  if (name == "k5") return k5;
  return k33;
}

EmbeddedBuilder subdivide_all(const Lists& rot) {
  EmbeddedBuilder b(rot);
  for (Vertex u = 0; u < static_cast<Vertex>(rot.size()); ++u) {
    for (Vertex v : rot[u]) {
      if (u < v) b.subdivide(u, v);
    }
  }
  return b;
}

EmbeddedBuilder k7_subdivided() {
  Lists rot(7);
  for (int i = 0; i < 7; ++i) {
    for (int d : {1, 3, 2, 6, 4, 5}) rot[i].push_back((i + d) % 7);
  }
  return subdivide_all(rot);
}

// Torus grid C_a x C_b (b != 4) with every horizontal edge subdivided.
EmbeddedBuilder grid_seed(int a, int b) {
  Lists rot(a * b);
  auto id = [&](int x, int y) { return ((y + b) % b) * a + (x + a) % a; };
  for (int y = 0; y < b; ++y) {
    for (int x = 0; x < a; ++x) rot[id(x, y)] = {id(x + 1, y), id(x, y + 1), id(x - 1, y), id(x, y - 1)};
  }
  EmbeddedBuilder builder(rot);
  for (int y = 0; y < b; ++y) {
    for (int x = 0; x < a; ++x) builder.subdivide(id(x, y), id(x + 1, y));
  }
  return builder;
}

// Brick-wall hexagonal torus plus one chord per hexagon, the chords forming
// a perfect matching: a 4-regular toroidal graph without 4-cycles.
std::optional<EmbeddedBuilder> honeycomb_seed(int rows, int cols, Rng& rng) {
  Lists rot(rows * cols);
  auto id = [&](int r, int c) { return ((r + rows) % rows) * cols + (c + cols) % cols; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if ((r + c) % 2 == 0) {
        rot[id(r, c)] = {id(r, c + 1), id(r + 1, c), id(r, c - 1)};
      } else {
        rot[id(r, c)] = {id(r, c + 1), id(r, c - 1), id(r - 1, c)};
      }
    }
  }
  EmbeddedBuilder builder(rot);
  const auto hexagons = builder.faces();
  Lists adj = rot;
  std::vector<char> matched(rot.size(), 0);
  std::vector<int> choice(hexagons.size(), -1);
  long nodes = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == hexagons.size()) return true;
    if (++nodes > 200000) return false;
    const auto& w = hexagons[k].walk;
    std::vector<int> opts = {0, 1, 2, 3, 4, 5};
    rng.shuffle(opts);
    for (int i : opts) {
      const Vertex a = w[i];
      const Vertex c = w[(i + 2) % 6];
      if (matched[a] || matched[c] || adjacent(adj, a, c) || three_path(adj, a, c)) continue;
      add_edge(adj, a, c);
      matched[a] = matched[c] = 1;
      choice[k] = i;
      if (place(k + 1)) return true;
      adj[a].pop_back();
      adj[c].pop_back();
      matched[a] = matched[c] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  for (std::size_t k = 0; k < hexagons.size(); ++k) {
    const auto& w = hexagons[k].walk;
    const int i = choice[k];
    builder.add_chord({w[(i + 5) % 6], w[i]}, {w[(i + 1) % 6], w[(i + 2) % 6]});
  }
  return builder;
}

// ---- random growth ------------------------------------------------------

// Each move is applied only when it keeps the graph free of 4-cycles.
void grow(EmbeddedBuilder& b, Rng& rng, int target) {
  int stall = 0;
  while (b.vertex_count() < target && stall < 20000) {
    const auto faces = b.faces();
    const auto& f = rng.pick(faces);
    if (f.walk.empty()) {
      ++stall;
      continue;
    }
    const auto& w = f.walk;
    const std::size_t d = w.size();
    const std::size_t i = rng.below(d);
    const DirectedEdge corner{w[(i + d - 1) % d], w[i]};
    const int op = static_cast<int>(rng.below(100));
    if (op < 40) {
      const std::size_t j = rng.below(d);
      const Vertex a = w[i];
      const Vertex c = w[j];
      if (a == c || b.has_edge(a, c) || b.has_three_path(a, c)) {
        ++stall;
        continue;
      }
      b.add_chord(corner, {w[(j + d - 1) % d], c});
    } else if (op < 70) {
      const DirectedEdge e = f.edge(i);
      if (b.has_common_neighbor(e.from, e.to)) {
        ++stall;
        continue;
      }
      b.add_ear(e);
    } else if (op < 85) {
      b.add_pendant(corner);
    } else {
      const DirectedEdge e = f.edge(i);
      if (b.has_common_neighbor(e.from, e.to)) {
        ++stall;
        continue;
      }
      b.subdivide(e.from, e.to);
    }
  }
}

// Leaves hung on vertices accepted by `allowed` until the target is met.
void pad_with_pendants(EmbeddedBuilder& b, Rng& rng, int target, const std::function<bool(Vertex)>& allowed) {
  std::vector<Vertex> hosts;
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    if (allowed(v)) hosts.push_back(v);
  }
  while (b.vertex_count() < target && !hosts.empty()) {
    const Vertex v = rng.pick(hosts);
    const auto& r = b.around(v);
    const Vertex from = r[rng.below(r.size())];
    hosts.push_back(b.add_pendant({from, v}));
  }
}

Instance finish(const EmbeddedBuilder& b, std::string base) {
  return Instance{b.graph(), b.rotation(), std::move(base)};
}

void check_bounds(const GenParams& p, int smallest) {
  if (p.min_vertices > p.max_vertices) {
    throw InputError("size bounds: min " + std::to_string(p.min_vertices) + " exceeds max " +
                     std::to_string(p.max_vertices));
  }
  if (p.max_vertices < smallest) {
    throw InputError(std::string("family ") + to_string(p.family) + " needs at least " + std::to_string(smallest) +
                     " vertices, max is " + std::to_string(p.max_vertices));
  }
}

Instance gen_planar(const GenParams& p, Rng& rng) {
  check_bounds(p, 3);
  int k = rng.between(3, std::min(7, p.max_vertices));
  if (k == 4) k = 3;
  auto b = cycle_seed(k);
  grow(b, rng, rng.between(std::max(p.min_vertices, k), p.max_vertices));
  return finish(b, "cycle-" + std::to_string(k));
}

Instance gen_toroidal(const GenParams& p, Rng& rng) {
  check_bounds(p, 10);
  struct Base {
    std::string name;
    int size;
  };
  std::vector<Base> bases = {{"petersen", 10}, {"heawood", 14}, {"k5-subdivided", 15}, {"k33-subdivided", 15},
                             {"k7-subdivided", 28}};
  for (int a = 3; a <= 6; ++a) {
    for (int bb : {3, 5}) bases.push_back({"grid-" + std::to_string(a) + "x" + std::to_string(bb), 2 * a * bb});
  }
  for (auto [r, c] : {std::pair{4, 6}, {4, 8}, {6, 6}, {4, 10}, {8, 6}, {6, 8}}) {
    bases.push_back({"honeycomb-" + std::to_string(r) + "x" + std::to_string(c), r * c});
  }
  std::erase_if(bases, [&](const Base& b) { return b.size > p.max_vertices; });
  const Base base = rng.pick(bases);
  std::optional<EmbeddedBuilder> b;
  if (base.name == "petersen" || base.name == "heawood") {
    b.emplace(cached_rotation(base.name).lists());
  } else if (base.name == "k5-subdivided") {
    b = subdivide_all(cached_rotation("k5").lists());
  } else if (base.name == "k33-subdivided") {
    b = subdivide_all(cached_rotation("k33").lists());
  } else if (base.name == "k7-subdivided") {
    b = k7_subdivided();
  } else if (base.name.starts_with("grid-")) {
    int a = 0, bb = 0;
    std::sscanf(base.name.c_str(), "grid-%dx%d", &a, &bb);
    b = grid_seed(a, bb);
  } else {
    int r = 0, c = 0;
    std::sscanf(base.name.c_str(), "honeycomb-%dx%d", &r, &c);
    for (int tries = 0; !b && tries < 20; ++tries) b = honeycomb_seed(r, c, rng);
    if (!b) throw InternalError("no chord matching found for " + base.name);
    if (base.size >= p.min_vertices && rng.chance(1, 2)) return finish(*b, base.name);
  }
  grow(*b, rng, rng.between(std::max(p.min_vertices, base.size), p.max_vertices));
  return finish(*b, base.name);
}

// Triangle cactus whose triangle graph is a random tree of maximum degree 3.
Instance gen_tree_h(const GenParams& p, Rng& rng) {
  check_bounds(p, 5);
  const int t = rng.between(2, (p.max_vertices - 1) / 2);
  Lists rot;
  std::vector<std::vector<Vertex>> free_corners;  // per triangle
  std::vector<int> tree_degree;
  std::vector<char> shared;
  auto new_vertex = [&] {
    rot.emplace_back();
    shared.push_back(0);
    return static_cast<Vertex>(rot.size() - 1);
  };
  auto orient = [&](Vertex a, Vertex b, Vertex c) {
    for (auto [x, y, z] : {std::array{a, b, c}, std::array{b, c, a}, std::array{c, a, b}}) {
      rot[x].push_back(y);
      rot[x].push_back(z);
    }
  };
  {
    const Vertex a = new_vertex(), b = new_vertex(), c = new_vertex();
    orient(a, b, c);
    free_corners.push_back({a, b, c});
    tree_degree.push_back(0);
  }
  for (int x = 1; x < t; ++x) {
    std::vector<int> parents;
    for (int y = 0; y < x; ++y) {
      if (tree_degree[y] < 3 && !free_corners[y].empty()) parents.push_back(y);
    }
    const int parent = rng.pick(parents);
    auto& corners = free_corners[parent];
    const std::size_t k = rng.below(corners.size());
    const Vertex c = corners[k];
    corners.erase(corners.begin() + static_cast<std::ptrdiff_t>(k));
    shared[c] = 1;
    const Vertex a = new_vertex(), b = new_vertex();
    orient(c, a, b);
    free_corners.push_back({a, b});
    tree_degree[parent] += 1;
    tree_degree.push_back(1);
  }
  EmbeddedBuilder b(rot);
  pad_with_pendants(b, rng, rng.between(std::max(p.min_vertices, 2 * t + 1), p.max_vertices),
                    [&](Vertex v) { return !shared[v]; });
  return finish(b, "cactus-" + std::to_string(t));
}

// Cycle c_0..c_{k-1} with an apex on every edge; the triangle graph is C_k.
Instance gen_cycle_h(const GenParams& p, Rng& rng) {
  check_bounds(p, 10);
  const int k = rng.between(5, p.max_vertices / 2);
  Lists adj(2 * k);
  std::vector<std::pair<double, double>> xy(2 * k);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < k; ++i) {
    const double t = 2 * pi * i / k;
    const double m = 2 * pi * (i + 0.5) / k;
    xy[i] = {std::cos(t), std::sin(t)};
    xy[k + i] = {2 * std::cos(m), 2 * std::sin(m)};
    add_edge(adj, i, (i + 1) % k);
    add_edge(adj, k + i, i);
    add_edge(adj, k + i, (i + 1) % k);
  }
  EmbeddedBuilder b(rotation_from_drawing(adj, xy));
  pad_with_pendants(b, rng, rng.between(std::max(p.min_vertices, 2 * k), p.max_vertices),
                    [&](Vertex v) { return v >= k; });
  return finish(b, "sun-" + std::to_string(k));
}

}  // namespace

// ---- named graphs -------------------------------------------------------

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return build_graph(a + b, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return build_graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return build_graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return build_graph(10, edges);
}

Graph heawood_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 14; ++i) {
    const Vertex j = (i + 1) % 14;
    edges.push_back({std::min(i, j), std::max(i, j)});
    if (i % 2 == 0) {
      const Vertex k = (i + 5) % 14;
      edges.push_back({std::min(i, k), std::max(i, k)});
    }
  }
  return build_graph(14, edges);
}

const char* to_string(Family family) {
  switch (family) {
    case Family::kPlanarC4Free:
      return "planar_c4free";
    case Family::kToroidalC4Free:
      return "toroidal_c4free";
    case Family::kConfigBearing:
      return "config_bearing";
    case Family::kTreeH:
      return "tree_H";
    case Family::kCycleH:
      return "cycle_H";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kPlanarC4Free, Family::kToroidalC4Free, Family::kConfigBearing, Family::kTreeH,
                   Family::kCycleH}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

// ---- EmbeddedBuilder ----------------------------------------------------

bool EmbeddedBuilder::has_edge(Vertex a, Vertex b) const { return adjacent(rot_, a, b); }

bool EmbeddedBuilder::has_common_neighbor(Vertex a, Vertex b) const {
  for (Vertex x : rot_[a]) {
    if (adjacent(rot_, x, b)) return true;
  }
  return false;
}

bool EmbeddedBuilder::has_three_path(Vertex a, Vertex b) const { return three_path(rot_, a, b); }

void EmbeddedBuilder::insert_after(Vertex at, Vertex after, Vertex x) {
  auto& r = rot_[at];
  const auto it = std::find(r.begin(), r.end(), after);
  if (it == r.end()) throw InputError("vertex " + std::to_string(after) + " is not a neighbour of " + std::to_string(at));
  r.insert(it + 1, x);
}

Vertex EmbeddedBuilder::add_pendant(DirectedEdge corner) {
  const Vertex w = vertex_count();
  insert_after(corner.to, corner.from, w);
  rot_.push_back({corner.to});
  return w;
}

Vertex EmbeddedBuilder::add_ear(DirectedEdge e) {
  const auto& r = rot_[e.from];
  const auto it = std::find(r.begin(), r.end(), e.to);
  if (it == r.end()) throw InputError("ear on a missing edge");
  const Vertex p = it == r.begin() ? r.back() : *(it - 1);
  const Vertex w = add_pendant({p, e.from});
  add_chord({e.from, w}, {e.from, e.to});
  return w;
}

void EmbeddedBuilder::add_chord(DirectedEdge at_a, DirectedEdge at_c) {
  if (at_a.to == at_c.to) throw InputError("chord would be a loop");
  if (has_edge(at_a.to, at_c.to)) throw InputError("chord would duplicate an edge");
  insert_after(at_a.to, at_a.from, at_c.to);
  insert_after(at_c.to, at_c.from, at_a.to);
}

Vertex EmbeddedBuilder::subdivide(Vertex u, Vertex v) {
  auto& ru = rot_[u];
  auto& rv = rot_[v];
  const auto iu = std::find(ru.begin(), ru.end(), v);
  const auto iv = std::find(rv.begin(), rv.end(), u);
  if (iu == ru.end() || iv == rv.end()) throw InputError("subdividing a missing edge");
  const Vertex w = vertex_count();
  *iu = w;
  *iv = w;
  rot_.push_back({u, v});
  return w;
}

std::vector<Face> EmbeddedBuilder::faces() const {
  const Graph g = graph();
  return trace_faces(g, RotationSystem(rot_)).faces;
}

Graph EmbeddedBuilder::graph() const { return graph_from_lists(rot_); }

// ---- searches -----------------------------------------------------------

std::optional<RotationSystem> find_rotation_with_genus(const Graph& g, int target_genus, long budget) {
  if (!is_connected(g)) throw PreconditionError("rotation search needs a connected graph");
  const int want_faces = 2 - 2 * target_genus - g.vertex_count() + g.edge_count();
  if (want_faces < 1) return std::nullopt;
  Lists rot = lists_of(g);
  const int n = g.vertex_count();
  for (long tried = 0; tried < budget; ++tried) {
    if (count_faces(rot) == want_faces) return RotationSystem(rot);
    int v = 0;
    for (; v < n; ++v) {
      auto& r = rot[v];
      if (r.size() > 2 && std::next_permutation(r.begin() + 1, r.end())) break;
    }
    if (v == n) return std::nullopt;
  }
  return std::nullopt;
}

ConfigInstance gen_config_instance(std::uint64_t seed, int s) {
  if (s < 5) throw InputError("config cycle length must be at least 5, got " + std::to_string(s));
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(s));
  for (int attempt = 0; attempt < 5000; ++attempt) {
    const int filler = rng.between(s, 2 * s + 8) + attempt / 100;
    Lists adj;
    auto fresh = [&] {
      adj.emplace_back();
      return static_cast<Vertex>(adj.size() - 1);
    };
    std::vector<Vertex> cycle;
    for (int i = 0; i < s; ++i) cycle.push_back(fresh());
    const Vertex u = fresh();
    for (int i = 0; i < s; ++i) add_edge(adj, cycle[i], cycle[(i + 1) % s]);
    add_edge(adj, u, cycle[0]);
    add_edge(adj, u, cycle[1]);
    const Vertex ext0 = fresh();
    add_edge(adj, cycle[0], ext0);
    add_edge(adj, cycle[1], fresh());
    for (int i = 2; i < s; ++i) {
      add_edge(adj, cycle[i], fresh());
      add_edge(adj, cycle[i], fresh());
    }
    const Vertex z0 = fresh(), z1 = fresh(), bridge = fresh(), p0 = fresh(), p1 = fresh();
    add_edge(adj, u, z0);
    add_edge(adj, u, z1);
    add_edge(adj, bridge, ext0);
    add_edge(adj, bridge, z0);
    add_edge(adj, z0, p0);
    add_edge(adj, p0, p1);
    add_edge(adj, p1, z1);
    for (int i = 0; i < filler; ++i) fresh();

    const int n = static_cast<int>(adj.size());
    std::vector<char> in_s(n, 0);
    for (Vertex v : cycle) in_s[v] = 1;
    in_s[u] = 1;
    bool stuck = false;
    while (!stuck) {
      std::vector<Vertex> open;
      int most = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (in_s[v]) continue;
        const int deficit = 4 - static_cast<int>(adj[v].size());
        if (deficit <= 0) continue;
        if (deficit > most) {
          most = deficit;
          open.clear();
        }
        if (deficit == most) open.push_back(v);
      }
      if (open.empty()) break;
      const Vertex v = rng.pick(open);
      std::vector<Vertex> partners;
      for (Vertex w = 0; w < n; ++w) {
        if (w == v || in_s[w] || adj[w].size() >= 4 || adjacent(adj, v, w) || three_path(adj, v, w)) continue;
        partners.push_back(w);
      }
      if (partners.empty()) {
        stuck = true;
      } else {
        add_edge(adj, v, rng.pick(partners));
      }
    }
    if (stuck) continue;
    Graph g = graph_from_lists(adj);
    if (!is_connected(g) || !block_decomposition(g).cut_vertices.empty() || find_four_cycle(g)) continue;
    auto cfg = make_config(g, cycle, u);
    if (config_violation(g, cfg)) continue;
    ConfigInstance out{std::move(g), std::move(cfg), bridge, {z0, z1}, {p0, p1}};
    return out;
  }
  throw InternalError("gen_config_instance: no completion found for s=" + std::to_string(s));
}

Instance gen_instance(const GenParams& params) {
  Rng rng(params.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(params.family));
  switch (params.family) {
    case Family::kPlanarC4Free:
      return gen_planar(params, rng);
    case Family::kToroidalC4Free:
      return gen_toroidal(params, rng);
    case Family::kTreeH:
      return gen_tree_h(params, rng);
    case Family::kCycleH:
      return gen_cycle_h(params, rng);
    case Family::kConfigBearing: {
      auto ci = gen_config_instance(params.seed, params.cycle_length);
      if (ci.graph.vertex_count() > params.max_vertices) {
        throw InputError("config_bearing with s=" + std::to_string(params.cycle_length) + " needs " +
                         std::to_string(ci.graph.vertex_count()) + " vertices, max is " +
                         std::to_string(params.max_vertices));
      }
      return Instance{std::move(ci.graph), std::nullopt, "config-" + std::to_string(params.cycle_length)};
    }
  }
  throw InputError("unknown family");
}

std::string manifest_line(const GenParams& params, const Instance& instance) {
  std::ostringstream out;
  out << "GEN family=" << to_string(params.family) << " seed=" << params.seed << " min=" << params.min_vertices
      << " max=" << params.max_vertices << " cycle_length=" << params.cycle_length << " base=" << instance.base
      << " n=" << instance.graph.vertex_count() << " m=" << instance.graph.edge_count();
  return out.str();
}

}  // namespace arbor
