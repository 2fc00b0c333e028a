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

// End-to-end: generate, serialise, reload, partition, verify, audit.

#include <gtest/gtest.h>

#include <sstream>

#include "arbor/discharging.hpp"
#include "arbor/embedding.hpp"
#include "arbor/forest_partition.hpp"
#include "arbor/generators.hpp"
#include "arbor/io.hpp"
#include "arbor/oracle.hpp"

namespace arbor {
namespace {

struct Reloaded {
  Graph graph;
  std::optional<RotationSystem> rotation;
};

Reloaded round_trip(const Instance& inst) {
  std::stringstream gs, rs;
  write_graph(gs, inst.graph);
  Graph g = read_graph(gs);
  std::optional<RotationSystem> rot;
  if (inst.rotation) {
    write_rotation(rs, *inst.rotation);
    rot = read_rotation(rs, g);
  }
  return {std::move(g), std::move(rot)};
}

class Pipeline : public ::testing::TestWithParam<Family> {};

TEST_P(Pipeline, EndToEnd) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenParams p;
    p.family = GetParam();
    p.seed = seed;
    p.max_vertices = 60;
    const auto inst = gen_instance(p);
    const auto re = round_trip(inst);
    ASSERT_EQ(re.graph.edges(), inst.graph.edges());

    if (re.rotation) {
      const auto pre = check_preconditions(re.graph, re.rotation);
      EXPECT_FALSE(pre.has_four_cycle);
      EXPECT_LE(*pre.genus, 1);
    }

    const auto r = partition(re.graph);
    ASSERT_TRUE(r.ok()) << manifest_line(p, inst) << ": " << r.failure.value_or("");
    std::stringstream cs;
    write_coloring(cs, *r.coloring);
    const auto f = read_coloring(cs, re.graph.vertex_count());
    EXPECT_EQ(f, *r.coloring);
    EXPECT_TRUE(is_good(re.graph, f));

    std::ostringstream trace;
    write_trace(trace, r.trace);
    EXPECT_EQ(trace.str().rfind("STEP ", 0), 0u);

    if (re.rotation) {
      const auto run = run_discharging(re.graph, *re.rotation);
      EXPECT_TRUE(run.report.claim("conservation")->holds);
      EXPECT_TRUE(run.report.claim("euler_total")->holds);
    }
    if (re.graph.vertex_count() <= 16) {
      EXPECT_LE(vertex_arboricity(re.graph), 2);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Families, Pipeline,
                         ::testing::Values(Family::kPlanarC4Free, Family::kToroidalC4Free, Family::kConfigBearing,
                                           Family::kTreeH, Family::kCycleH),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Pipeline, ConfigInstancesUseTheConfigStep) {
  for (int s = 5; s <= 9; ++s) {
    const auto ci = gen_config_instance(static_cast<std::uint64_t>(s), s);
    const auto r = partition(ci.graph);
    ASSERT_TRUE(r.ok()) << r.failure.value_or("");
    EXPECT_TRUE(is_good(ci.graph, *r.coloring));
    bool saw_config = false;
    for (const auto& t : r.trace) saw_config |= t.kind == StepKind::kConfig;
    EXPECT_TRUE(saw_config);
  }
}

}  // namespace
}  // namespace arbor
