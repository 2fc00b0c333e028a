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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "arbor/embedding.hpp"
#include "arbor/error.hpp"
#include "arbor/generators.hpp"
#include "arbor/io.hpp"
#include "test_support.hpp"

namespace arbor {
namespace {

using testing::make_graph;

Graph cube() {
  return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// Outer square 0..3 around inner square 4..7, neighbours counter-clockwise.
RotationSystem cube_planar() {
  return RotationSystem({{1, 4, 3}, {2, 5, 0}, {3, 6, 1}, {2, 0, 7}, {5, 7, 0}, {6, 4, 1}, {2, 7, 5}, {6, 3, 4}});
}

TEST(TraceFaces, Triangle) {
  const Graph g = cycle_graph(3);
  const RotationSystem rot({{1, 2}, {2, 0}, {0, 1}});
  const auto fs = trace_faces(g, rot);
  ASSERT_EQ(fs.faces.size(), 2u);
  for (const auto& f : fs.faces) EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(genus(g, rot), 0);
}

TEST(TraceFaces, CubePlanar) {
  const Graph g = cube();
  const auto fs = trace_faces(g, cube_planar());
  ASSERT_EQ(fs.faces.size(), 6u);
  for (const auto& f : fs.faces) EXPECT_EQ(f.degree(), 4);
  EXPECT_EQ(fs.total_degree(), 24);
  EXPECT_EQ(genus(g, cube_planar()), 0);
}

TEST(TraceFaces, EveryDirectedEdgeOnce) {
  const Graph g = cube();
  const auto fs = trace_faces(g, cube_planar());
  std::set<DirectedEdge> seen;
  for (const auto& f : fs.faces) {
    for (std::size_t i = 0; i < f.walk.size(); ++i) EXPECT_TRUE(seen.insert(f.edge(i)).second);
  }
  EXPECT_EQ(seen.size(), 2u * g.edge_count());
}

TEST(TraceFaces, Canonical) {
  const auto fs = trace_faces(cube(), cube_planar());
  for (std::size_t k = 0; k < fs.faces.size(); ++k) {
    const auto& f = fs.faces[k];
    for (std::size_t i = 1; i < f.walk.size(); ++i) EXPECT_LT(f.edge(0), f.edge(i));
    if (k > 0) {
      EXPECT_LT(fs.faces[k - 1].edge(0), f.edge(0));
    }
  }
}

TEST(TraceFaces, FollowsSuccessorRule) {
  const Graph g = cube();
  const RotationSystem rot = cube_planar();
  for (const auto& f : trace_faces(g, rot).faces) {
    for (std::size_t i = 0; i < f.walk.size(); ++i) {
      const Vertex u = f.walk[i];
      const Vertex v = f.walk[(i + 1) % f.walk.size()];
      const Vertex w = f.walk[(i + 2) % f.walk.size()];
      const auto& r = rot.around(v);
      const auto it = std::find(r.begin(), r.end(), u);
      EXPECT_EQ(r[(it - r.begin() + 1) % r.size()], w);
    }
  }
}

TEST(TraceFaces, K5OnTheTorus) {
  const Graph g = complete_graph(5);
  const auto rot = find_rotation_with_genus(g, 1);
  ASSERT_TRUE(rot.has_value());
  EXPECT_EQ(trace_faces(g, *rot).faces.size(), 5u);
  EXPECT_EQ(genus(g, *rot), 1);
}

TEST(TraceFaces, RejectsBadRotation) {
  const Graph g = cycle_graph(3);
  EXPECT_THROW(trace_faces(g, RotationSystem({{1, 2}, {2, 0}, {0}})), InputError);
  EXPECT_THROW(trace_faces(g, RotationSystem({{1, 1}, {2, 0}, {0, 1}})), InputError);
  EXPECT_THROW(trace_faces(g, RotationSystem({{1, 2}, {2, 0}})), InputError);
}

TEST(TraceFaces, LoneVertex) {
  const Graph g = make_graph(1, {});
  const RotationSystem lone(std::vector<std::vector<Vertex>>(1));
  const auto fs = trace_faces(g, lone);
  ASSERT_EQ(fs.faces.size(), 1u);
  EXPECT_EQ(fs.faces[0].degree(), 0);
  EXPECT_EQ(genus(g, lone), 0);
}

TEST(Genus, PetersenOnTheTorus) {
  const Graph g = petersen_graph();
  const auto rot = find_rotation_with_genus(g, 1);
  ASSERT_TRUE(rot.has_value());
  EXPECT_EQ(trace_faces(g, *rot).faces.size(), 5u);
  EXPECT_EQ(genus(g, *rot), 1);
  EXPECT_EQ(10 - 15 + 5, 0);
}

TEST(Genus, PetersenIsNotPlanar) { EXPECT_FALSE(find_rotation_with_genus(petersen_graph(), 0).has_value()); }

TEST(Genus, RejectsDisconnected) {
  const Graph g = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(genus(g, RotationSystem({{1}, {0}, {3}, {2}})), PreconditionError);
}

TEST(CheckPreconditions, PetersenTorus) {
  const Graph g = petersen_graph();
  const auto r = check_preconditions(g, find_rotation_with_genus(g, 1));
  EXPECT_EQ(r.genus, 1);
  EXPECT_EQ(r.face_count, 5);
  EXPECT_FALSE(r.has_four_cycle);
  EXPECT_EQ(r.min_degree, 3);
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.toroidal_c4_free());
}

TEST(CheckPreconditions, C4Planar) {
  const Graph g = cycle_graph(4);
  const auto r = check_preconditions(g, RotationSystem({{1, 3}, {2, 0}, {3, 1}, {0, 2}}));
  EXPECT_TRUE(r.has_four_cycle);
  EXPECT_EQ(r.genus, 0);
  EXPECT_FALSE(r.toroidal_c4_free());
}

TEST(CheckPreconditions, K5Torus) {
  const Graph g = complete_graph(5);
  const auto r = check_preconditions(g, find_rotation_with_genus(g, 1));
  EXPECT_TRUE(r.has_four_cycle);
  EXPECT_EQ(r.genus, 1);
  EXPECT_FALSE(r.toroidal_c4_free());
}

TEST(CheckPreconditions, NeverThrows) {
  const Graph g = make_graph(4, {{0, 1}, {2, 3}});
  const auto r = check_preconditions(g, RotationSystem({{1}, {0}, {3}, {2}}));
  EXPECT_FALSE(r.connected);
  EXPECT_FALSE(r.genus.has_value());
  const auto bad = check_preconditions(cycle_graph(3), RotationSystem({{1}, {2}, {0}}));
  EXPECT_TRUE(bad.rotation_error.has_value());
  const auto none = check_preconditions(cycle_graph(5), std::nullopt);
  EXPECT_FALSE(none.genus.has_value());
  EXPECT_FALSE(none.has_four_cycle);
}

TEST(RotationIo, RoundTrip) {
  const Graph g = cube();
  std::stringstream s;
  write_rotation(s, cube_planar());
  EXPECT_EQ(read_rotation(s, g), cube_planar());
}

TEST(RotationIo, MissingVertex) {
  std::istringstream in("0: 1 2\n1: 2 0\n");
  EXPECT_THROW(read_rotation(in, cycle_graph(3)), InputError);
}

TEST(RotationIo, NotAPermutation) {
  std::istringstream in("0: 1 2\n1: 2 0\n2: 0 0\n");
  EXPECT_THROW(read_rotation(in, cycle_graph(3)), InputError);
}

TEST(Builder, MovesPreserveGenus) {
  EmbeddedBuilder b({{1, 4}, {2, 0}, {3, 1}, {4, 2}, {0, 3}});
  b.subdivide(0, 1);
  b.add_pendant({1, 2});
  b.add_ear({2, 3});
  EXPECT_EQ(b.vertex_count(), 8);
  EXPECT_EQ(b.faces().size(), 3u);
  EXPECT_EQ(genus(b.graph(), b.rotation()), 0);
}

TEST(Builder, ChordSplitsFace) {
  EmbeddedBuilder b({{1, 5}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {0, 4}});
  const auto faces = b.faces();
  const auto& w = faces[0].walk;
  const std::size_t d = w.size();
  b.add_chord({w[d - 1], w[0]}, {w[2], w[3]});
  EXPECT_EQ(b.faces().size(), faces.size() + 1);
  EXPECT_EQ(genus(b.graph(), b.rotation()), 0);
  EXPECT_THROW(b.add_chord({w[d - 1], w[0]}, {w[2], w[3]}), InputError);
}

TEST(Builder, TorusSeedsStayOnTheTorus) {
  for (const auto& g : {petersen_graph(), heawood_graph()}) {
    const auto rot = find_rotation_with_genus(g, 1);
    ASSERT_TRUE(rot.has_value());
    EmbeddedBuilder b(rot->lists());
    const auto faces = b.faces();
    const auto& w = faces[0].walk;
    b.subdivide(w[0], w[1]);
    b.add_pendant({w[1], w[2]});
    EXPECT_EQ(genus(b.graph(), b.rotation()), 1);
  }
}

}  // namespace
}  // namespace arbor
