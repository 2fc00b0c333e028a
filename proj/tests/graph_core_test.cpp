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

#include <set>
#include <sstream>

#include "arbor/blocks.hpp"
#include "arbor/coloring.hpp"
#include "arbor/error.hpp"
#include "arbor/generators.hpp"
#include "arbor/graph.hpp"
#include "arbor/io.hpp"
#include "test_support.hpp"

namespace arbor {
namespace {

using testing::make_coloring;
using testing::make_graph;

TEST(BuildGraph, Triangle) {
  const Graph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(0, 0));
}

TEST(BuildGraph, RejectsLoop) {
  const std::vector<Edge> edges = {{0, 0}};
  EXPECT_THROW(build_graph(2, edges), InputError);
}

TEST(BuildGraph, RejectsOutOfRange) {
  const std::vector<Edge> edges = {{0, 2}};
  EXPECT_THROW(build_graph(2, edges), InputError);
  const std::vector<Edge> negative = {{-1, 0}};
  EXPECT_THROW(build_graph(2, negative), InputError);
}

TEST(BuildGraph, RejectsDuplicate) {
  const std::vector<Edge> edges = {{0, 1}, {1, 0}};
  EXPECT_THROW(build_graph(2, edges), InputError);
}

TEST(BuildGraph, PetersenIsCubic) {
  const Graph g = petersen_graph();
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_EQ(g.edge_count(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(BuildGraph, EdgesSortedAndSymmetric) {
  const Graph g = make_graph(4, {{3, 1}, {0, 2}, {1, 0}});
  const std::vector<Edge> want = {{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(g.edges(), want);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v : g.neighbors(u)) EXPECT_TRUE(g.has_edge(v, u));
  }
  EXPECT_EQ(g.min_degree(), 1);
  EXPECT_EQ(g.max_degree(), 2);
}

TEST(InducedSubgraph, KeepsLocalOrder) {
  const Graph g = cycle_graph(5);
  const std::vector<Vertex> keep = {4, 0, 1};
  const auto sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{0, 1, 4}));
  EXPECT_EQ(sub.graph.edge_count(), 2);
  EXPECT_TRUE(sub.graph.has_edge(0, 1));
  EXPECT_TRUE(sub.graph.has_edge(0, 2));
  const std::vector<Vertex> drop = {2};
  EXPECT_EQ(remove_vertices(g, drop).graph.edge_count(), 3);
}

TEST(Components, OrderedBySmallestVertex) {
  const Graph g = make_graph(6, {{5, 1}, {2, 3}, {3, 0}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 2, 3}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{1, 5}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{4}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(cycle_graph(4)));
}

TEST(FourCycle, C4ReturnsItself) {
  const auto c = find_four_cycle(cycle_graph(4));
  ASSERT_TRUE(c.has_value());
  std::set<Vertex> seen(c->begin(), c->end());
  EXPECT_EQ(seen, (std::set<Vertex>{0, 1, 2, 3}));
}

TEST(FourCycle, WitnessIsACycle) {
  for (const Graph& g : {complete_graph(5), complete_bipartite_graph(2, 3), cycle_graph(4)}) {
    const auto c = find_four_cycle(g);
    ASSERT_TRUE(c.has_value());
    for (int i = 0; i < 4; ++i) EXPECT_TRUE(g.has_edge((*c)[i], (*c)[(i + 1) % 4]));
    EXPECT_EQ(std::set<Vertex>(c->begin(), c->end()).size(), 4u);
  }
}

TEST(FourCycle, PetersenHasNone) {
  EXPECT_FALSE(find_four_cycle(petersen_graph()).has_value());
  EXPECT_FALSE(testing::naive_has_four_cycle(petersen_graph()));
  EXPECT_FALSE(find_four_cycle(cycle_graph(5)).has_value());
}

TEST(Girth, Basics) {
  EXPECT_FALSE(girth(path_graph(5)).has_value());
  EXPECT_EQ(girth(cycle_graph(3)), 3);
  EXPECT_EQ(girth(petersen_graph()), 5);
  EXPECT_EQ(testing::naive_girth(petersen_graph()), 5);
  EXPECT_EQ(girth(heawood_graph()), 6);
  EXPECT_EQ(girth(complete_bipartite_graph(3, 3)), 4);
  EXPECT_EQ(girth(cycle_graph(9)), 9);
}

TEST(Triangles, Counts) {
  EXPECT_TRUE(triangles(cycle_graph(5)).empty());
  EXPECT_EQ(triangles(complete_graph(4)).size(), 4u);
  const auto k5 = triangles(complete_graph(5));
  EXPECT_EQ(k5.size(), 10u);
  EXPECT_TRUE(std::is_sorted(k5.begin(), k5.end()));
  for (const auto& t : k5) EXPECT_TRUE(t[0] < t[1] && t[1] < t[2]);
}

TEST(MonochromaticCycle, AllOnesTriangle) {
  const Graph g = cycle_graph(3);
  const auto c = find_monochromatic_cycle(g, make_coloring({1, 1, 1}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->color, Color::kOne);
  EXPECT_EQ(std::set<Vertex>(c->cycle.begin(), c->cycle.end()), (std::set<Vertex>{0, 1, 2}));
}

TEST(MonochromaticCycle, PathIsFine) {
  EXPECT_FALSE(find_monochromatic_cycle(cycle_graph(3), make_coloring({1, 1, 2})).has_value());
}

TEST(MonochromaticCycle, UncoloredVerticesIgnored) {
  EXPECT_TRUE(is_good(cycle_graph(3), make_coloring({1, 1, 0})));
  EXPECT_FALSE(is_good(cycle_graph(5), make_coloring({2, 2, 2, 2, 2})));
}

TEST(MonochromaticCycle, WitnessIsARealCycle) {
  const Graph g = petersen_graph();
  const auto f = make_coloring({2, 2, 2, 2, 2, 1, 1, 1, 1, 1});
  const auto c = find_monochromatic_cycle(g, f);
  ASSERT_TRUE(c.has_value());
  ASSERT_GE(c->cycle.size(), 3u);
  for (std::size_t i = 0; i < c->cycle.size(); ++i) {
    EXPECT_TRUE(g.has_edge(c->cycle[i], c->cycle[(i + 1) % c->cycle.size()]));
    EXPECT_EQ(f.at(c->cycle[i]), c->color);
  }
}

TEST(MonochromaticCycle, SizeMismatchRejected) {
  EXPECT_THROW(find_monochromatic_cycle(cycle_graph(3), TwoColoring(2)), InputError);
}

TEST(TwoColoring, Accessors) {
  TwoColoring f(3);
  EXPECT_EQ(f.colored_count(), 0);
  EXPECT_FALSE(f.get(1).has_value());
  EXPECT_THROW(f.at(1), InputError);
  f.set(1, Color::kTwo);
  EXPECT_EQ(f.at(1), Color::kTwo);
  EXPECT_EQ(f.swapped().at(1), Color::kOne);
  EXPECT_FALSE(f.is_total());
  f.set(0, Color::kOne);
  f.set(2, Color::kOne);
  EXPECT_TRUE(f.is_total());
  f.clear(2);
  EXPECT_EQ(f.colored_count(), 2);
}

TEST(Blocks, TwoTrianglesSharingAVertex) {
  const Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  const auto d = block_decomposition(g);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(d.blocks[1], (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(d.cut_vertices, (std::vector<Vertex>{2}));
}

TEST(Blocks, CycleIsOneBlock) {
  const auto d = block_decomposition(cycle_graph(6));
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0].size(), 6u);
  EXPECT_TRUE(d.cut_vertices.empty());
}

TEST(Blocks, PathHasBridges) {
  const auto d = block_decomposition(path_graph(4));
  ASSERT_EQ(d.blocks.size(), 3u);
  for (const auto& b : d.blocks) EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(d.cut_vertices, (std::vector<Vertex>{1, 2}));
}

TEST(Blocks, IsolatedVertexIsABlock) {
  const Graph g = make_graph(3, {{0, 1}});
  const auto d = block_decomposition(g);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[1], (std::vector<Vertex>{2}));
  EXPECT_TRUE(d.cut_vertices.empty());
}

TEST(GraphIo, RoundTrip) {
  const Graph g = petersen_graph();
  std::stringstream s;
  write_graph(s, g);
  const Graph back = read_graph(s);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.vertex_count(), 10);
}

TEST(GraphIo, CommentsAndBlankLines) {
  std::istringstream in("# triangle\n3 3\n\n0 1 # first\n1 2\n2 0\n");
  const Graph g = read_graph(in);
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(GraphIo, ErrorsNameTheLine) {
  std::istringstream in("3 2\n0 1\n1 1\n");
  try {
    read_graph(in, "tri.adj");
    FAIL() << "expected an InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("tri.adj:3"), std::string::npos) << e.what();
  }
}

TEST(GraphIo, EdgeCountMismatch) {
  std::istringstream in("3 3\n0 1\n1 2\n");
  EXPECT_THROW(read_graph(in), InputError);
}

TEST(ColoringIo, RoundTripAndPartial) {
  const auto f = make_coloring({1, 0, 2});
  std::stringstream s;
  write_coloring(s, f);
  EXPECT_EQ(s.str(), "0 1\n2 2\n");
  const auto back = read_coloring(s, 3);
  EXPECT_EQ(back, f);
}

TEST(ColoringIo, RejectsBadColor) {
  std::istringstream in("0 3\n");
  EXPECT_THROW(read_coloring(in, 2), InputError);
  std::istringstream dup("0 1\n0 2\n");
  EXPECT_THROW(read_coloring(dup, 2), InputError);
}

}  // namespace
}  // namespace arbor
