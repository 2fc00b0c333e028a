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

#include <sstream>

#include "arbor/discharging.hpp"
#include "arbor/error.hpp"
#include "arbor/generators.hpp"
#include "arbor/rational.hpp"
#include "discharging_fixtures.hpp"
#include "test_support.hpp"

namespace arbor {
namespace {

using testing::Embedded;

DischargeRun run(const Embedded& e) { return run_discharging(e.graph, e.rotation); }

Rational face_share(int d) { return Rational(2 * d - 6, d); }

TEST(Rational, Normalises) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(1, -2).str(), "-1/2");
  EXPECT_EQ(Rational(0).str(), "0/1");
  EXPECT_EQ(Rational(-6, 5).str(), "-6/5");
  EXPECT_THROW(Rational(1, 0), InputError);
  EXPECT_THROW(Rational(1) / Rational(0), InputError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 5) * 3, Rational(6, 5));
  EXPECT_EQ(Rational(4, 5) + Rational(4, 5) + Rational(2, 5) - 2, Rational(0));
  EXPECT_LT(Rational(-1, 3), Rational(0));
  EXPECT_EQ((Rational(3, 4) / Rational(3, 2)).str(), "1/2");
  EXPECT_EQ(-Rational(1, 7), Rational(-1, 7));
}

TEST(Arithmetic, FaceShares) {
  EXPECT_EQ(face_share(3), Rational(0));
  EXPECT_EQ(face_share(5), Rational(4, 5));
  EXPECT_EQ(face_share(7), Rational(8, 7));
  EXPECT_EQ(bank_unit(), Rational(2, 5));
  // The four closed-form bounds.
  EXPECT_EQ(Rational(-2) + 2 * Rational(4, 5) + Rational(2, 5), Rational(0));
  EXPECT_EQ(Rational(-2) + 3 * Rational(4, 5) - Rational(2, 5), Rational(0));
  EXPECT_EQ(Rational(-1) + 3 * Rational(4, 5) - 2 * Rational(2, 5), Rational(3, 5));
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(Rational(2, 5) * (n + 2) - Rational(2, 5) * (n - 1), Rational(6, 5));
}

TEST(Fixtures, ArePlaneAndFourCycleFree) {
  for (const auto& e : {testing::bad_vertex_fixture(), testing::good_degree4_fixture(), testing::degree5_fixture()}) {
    EXPECT_EQ(genus(e.graph, e.rotation), 0);
    EXPECT_FALSE(testing::naive_has_four_cycle(e.graph));
  }
}

TEST(Initial, ChargesAndTotal) {
  const auto e = testing::bad_vertex_fixture();
  const auto r = run(e);
  const auto& init = r.phases[0];
  EXPECT_EQ(init.vertex_charge[0], Rational(-2));
  EXPECT_EQ(init.vertex_charge[5], Rational(-4));
  for (std::size_t i = 0; i < r.faces.faces.size(); ++i) {
    EXPECT_EQ(init.face_charge[i], Rational(2 * r.faces.faces[i].degree() - 6));
  }
  EXPECT_EQ(init.total(), Rational(-12));
  EXPECT_EQ(r.report.initial_total, Rational(-12));
}

TEST(Initial, TorusTotalIsZero) {
  const Graph g = petersen_graph();
  const auto rot = find_rotation_with_genus(g, 1);
  ASSERT_TRUE(rot.has_value());
  const auto r = run_discharging(g, *rot);
  EXPECT_EQ(r.report.initial_total, Rational(0));
  EXPECT_EQ(r.report.genus, 1);
  EXPECT_TRUE(r.report.claim("euler_total")->holds);
}

TEST(R1, FacesSpreadEvenly) {
  const auto r = run(testing::bad_vertex_fixture());
  // Two triangles and two pentagons at vertex 0.
  EXPECT_EQ(r.phases[1].vertex_charge[0], Rational(-2) + 2 * Rational(4, 5));
  for (std::size_t i = 0; i < r.faces.faces.size(); ++i) EXPECT_TRUE(r.phases[1].face_charge[i].is_zero());
}

TEST(R1, Heptagon) {
  const Graph g = cycle_graph(7);
  std::vector<std::vector<Vertex>> rot(7);
  for (int i = 0; i < 7; ++i) rot[i] = {(i + 1) % 7, (i + 6) % 7};
  const auto r = run_discharging(g, RotationSystem(rot));
  ASSERT_EQ(r.faces.faces.size(), 2u);
  for (int v = 0; v < 7; ++v) EXPECT_EQ(r.phases[1].vertex_charge[v], Rational(-4) + 2 * Rational(8, 7));
}

TEST(R2, GoodVertexPaysPerTriangle) {
  const auto r5 = run(testing::degree5_fixture());
  EXPECT_EQ(r5.phases[2].vertex_charge[0] - r5.phases[1].vertex_charge[0], Rational(-4, 5));
  const auto r4 = run(testing::good_degree4_fixture());
  EXPECT_EQ(r4.phases[2].vertex_charge[0] - r4.phases[1].vertex_charge[0], Rational(-2, 5));
  // x1 in the bad-vertex fixture lies on no triangle.
  const auto rb = run(testing::bad_vertex_fixture());
  EXPECT_EQ(rb.phases[2].vertex_charge[5], rb.phases[1].vertex_charge[5]);
  // The bad vertex itself pays nothing.
  EXPECT_EQ(rb.phases[2].vertex_charge[0], rb.phases[1].vertex_charge[0]);
}

TEST(R3, BanksPayPerEdge) {
  const auto rb = run(testing::bad_vertex_fixture());
  ASSERT_EQ(rb.phases[3].bank_charge.size(), 1u);
  EXPECT_EQ(rb.phases[2].bank_charge[0], Rational(8, 5));
  EXPECT_EQ(rb.phases[3].bank_charge[0], Rational(6, 5));
  EXPECT_EQ(rb.phases[3].vertex_charge[0], Rational(0));
}

TEST(R3, NoBanksWithoutBadVertices) {
  const Graph g = petersen_graph();
  const auto r = run_discharging(g, *find_rotation_with_genus(g, 1));
  EXPECT_TRUE(r.phases[3].bank_charge.empty());
  EXPECT_EQ(r.phases[2].vertex_charge, r.phases[3].vertex_charge);
  EXPECT_EQ(r.phases[2].vertex_charge, r.phases[1].vertex_charge);
}

TEST(Final, BoundsAreTight) {
  EXPECT_EQ(run(testing::bad_vertex_fixture()).phases[3].vertex_charge[0], Rational(0));
  EXPECT_EQ(run(testing::good_degree4_fixture()).phases[3].vertex_charge[0], Rational(0));
  EXPECT_EQ(run(testing::degree5_fixture()).phases[3].vertex_charge[0], Rational(3, 5));
}

TEST(Final, CycleBankIsZero) {
  GenParams p;
  p.family = Family::kCycleH;
  p.min_vertices = p.max_vertices = 10;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    p.seed = seed;
    const auto inst = gen_instance(p);
    ASSERT_TRUE(inst.rotation.has_value());
    const auto r = run_discharging(inst.graph, *inst.rotation);
    ASSERT_EQ(r.phases[3].bank_charge.size(), 1u);
    EXPECT_EQ(r.phases[2].bank_charge[0], Rational(2));
    EXPECT_EQ(r.phases[3].bank_charge[0], Rational(0));
    EXPECT_TRUE(r.report.claim("cycle_bank_nonnegative")->holds);
  }
}

TEST(Final, TreeBanksEndAtSixFifths) {
  GenParams p;
  p.family = Family::kTreeH;
  p.min_vertices = 20;
  p.max_vertices = 40;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    p.seed = seed;
    const auto inst = gen_instance(p);
    const auto r = run_discharging(inst.graph, *inst.rotation);
    for (const auto& b : r.phases[3].bank_charge) EXPECT_EQ(b, Rational(6, 5));
    EXPECT_TRUE(r.report.claim("tree_bank_identity")->holds);
    EXPECT_TRUE(r.report.claim("conservation")->holds);
    EXPECT_TRUE(r.report.claim("faces_zero")->holds);
  }
}

TEST(Phases, OutOfOrderThrows) {
  const auto e = testing::bad_vertex_fixture();
  const auto fs = trace_faces(e.graph, e.rotation);
  const auto h = build_aux_graph(e.graph);
  const auto init = initial_charges(e.graph, fs, h);
  EXPECT_THROW(apply_r2(init, e.graph, h), PreconditionError);
  EXPECT_THROW(apply_r3(init, e.graph, h), PreconditionError);
  EXPECT_THROW(audit(init, e.graph, fs, h), PreconditionError);
  const auto r1 = apply_r1(init, fs);
  EXPECT_THROW(apply_r1(r1, fs), PreconditionError);
  EXPECT_EQ(r1.phase, Phase::kAfterR1);
  EXPECT_EQ(r1.phase_totals.size(), 2u);
}

TEST(Audit, ReportsFailuresWithWitnesses) {
  // The planar fixtures carry total -12, so some vertex must end negative.
  const auto r = run(testing::bad_vertex_fixture());
  EXPECT_FALSE(r.report.all_hold());
  const auto* c = r.report.claim("vertex_nonnegative");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->holds);
  EXPECT_FALSE(c->witnesses.empty());
  EXPECT_TRUE(r.report.claim("conservation")->holds);
  EXPECT_TRUE(r.report.claim("euler_total")->holds);
  EXPECT_EQ(r.report.claim("no_such_claim"), nullptr);
}

TEST(Ledger, Format) {
  const auto r = run(testing::bad_vertex_fixture());
  std::ostringstream out;
  write_ledger(out, r);
  const std::string text = out.str();
  EXPECT_NE(text.find("vertex 0 initial -2/1\n"), std::string::npos);
  EXPECT_NE(text.find("vertex 0 after_R3 0/1\n"), std::string::npos);
  EXPECT_NE(text.find("bank 0 after_R3 6/5\n"), std::string::npos);
  EXPECT_NE(text.find("TOTAL -12/1 GENUS 0"), std::string::npos);
  std::ostringstream audit_out;
  write_audit(audit_out, r.report);
  EXPECT_NE(audit_out.str().find("CLAIM conservation pass\n"), std::string::npos);
  EXPECT_NE(audit_out.str().find("CLAIM vertex_nonnegative fail\n"), std::string::npos);
  EXPECT_NE(audit_out.str().find("  WITNESS vertex "), std::string::npos);
}

}  // namespace
}  // namespace arbor
