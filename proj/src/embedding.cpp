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

#include "arbor/embedding.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/error.hpp"

namespace arbor {

void validate_rotation(const Graph& g, const RotationSystem& rot) {
  if (rot.vertex_count() != g.vertex_count()) {
    throw InputError("rotation covers " + std::to_string(rot.vertex_count()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto sorted = rot.around(v);
    std::sort(sorted.begin(), sorted.end());
    const auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw InputError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
    }
  }
}

int FaceSet::total_degree() const {
  return std::accumulate(faces.begin(), faces.end(), 0, [](int acc, const Face& f) { return acc + f.degree(); });
}

FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  FaceSet out;
  if (g.vertex_count() == 1) {
    out.faces.push_back({});
    return out;
  }

  // position[v][k]: index of neighbour g.neighbors(v)[k] inside rot.around(v)
  const int n = g.vertex_count();
  std::vector<std::vector<int>> position(n);
  std::vector<std::vector<char>> used(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    position[v].resize(nb.size());
    used[v].assign(nb.size(), 0);
    const auto& around = rot.around(v);
    for (std::size_t i = 0; i < around.size(); ++i) {
      const auto k = std::lower_bound(nb.begin(), nb.end(), around[i]) - nb.begin();
      position[v][k] = static_cast<int>(i);
    }
  }
  auto slot = [&](Vertex v, Vertex w) {
    const auto nb = g.neighbors(v);
    return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  };

  for (Vertex u = 0; u < n; ++u) {
    const auto nb = g.neighbors(u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (used[u][k]) continue;
      Face face;
      Vertex a = u;
      Vertex b = nb[k];
      used[a][k] = 1;
      while (true) {
        face.walk.push_back(a);
        const auto& around = rot.around(b);
        const int at = position[b][slot(b, a)];
        const Vertex c = around[(at + 1) % around.size()];
        const auto next = slot(b, c);
        if (b == u && c == nb[k]) break;
        if (used[b][next]) throw InternalError("face tracing revisited a directed edge");
        used[b][next] = 1;
        a = b;
        b = c;
      }
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

int genus(const Graph& g, const RotationSystem& rot) {
  if (!is_connected(g)) throw PreconditionError("genus is only defined here for connected graphs");
  if (g.vertex_count() == 0) return 0;
  const int faces = static_cast<int>(trace_faces(g, rot).faces.size());
  const int twice = 2 - g.vertex_count() + g.edge_count() - faces;
  if (twice < 0 || twice % 2 != 0) throw InternalError("Euler characteristic is not that of an orientable surface");
  return twice / 2;
}

EmbeddingReport check_preconditions(const Graph& g, const std::optional<RotationSystem>& rot) {
  EmbeddingReport r;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.connected = is_connected(g);
  r.min_degree = g.min_degree();
  r.four_cycle = find_four_cycle(g);
  r.has_four_cycle = r.four_cycle.has_value();
  if (!rot) return r;
  try {
    r.face_count = static_cast<int>(trace_faces(g, *rot).faces.size());
    if (r.connected) {
      r.genus = genus(g, *rot);
    } else {
      r.rotation_error = "graph is disconnected; genus not computed";
    }
  } catch (const Error& e) {
    r.rotation_error = e.what();
  }
  return r;
}

}  // namespace arbor
