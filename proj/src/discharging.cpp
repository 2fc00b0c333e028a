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

#include "arbor/discharging.hpp"

#include <algorithm>

#include "arbor/error.hpp"

namespace arbor {

namespace {

std::vector<int> component_of_node(const AuxGraph& h, const std::vector<AuxComponent>& comps) {
  std::vector<int> of(h.node_count(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int x : comps[c].nodes) of[x] = static_cast<int>(c);
  }
  return of;
}

std::vector<char> bad_mask(const Graph& g) {
  std::vector<char> bad(g.vertex_count(), 0);
  for (Vertex v : bad_vertices(g)) bad[v] = 1;
  return bad;
}

void expect_phase(const ChargeLedger& ledger, Phase want, const char* rule) {
  if (ledger.phase != want) {
    throw PreconditionError(std::string(rule) + " expects a ledger in phase " + to_string(want) + ", got " +
                            to_string(ledger.phase));
  }
}

}  // namespace

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::kInitial:
      return "initial";
    case Phase::kAfterR1:
      return "after_R1";
    case Phase::kAfterR2:
      return "after_R2";
    case Phase::kAfterR3:
      return "after_R3";
  }
  return "?";
}

Rational ChargeLedger::total() const {
  Rational sum;
  for (const auto& c : vertex_charge) sum += c;
  for (const auto& c : face_charge) sum += c;
  for (const auto& c : bank_charge) sum += c;
  return sum;
}

Rational bank_unit() { return Rational(2, 5); }

ChargeLedger initial_charges(const Graph& g, const FaceSet& faces, const AuxGraph& h) {
  ChargeLedger ledger;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ledger.vertex_charge.emplace_back(g.degree(v) - 6);
  for (const auto& f : faces.faces) ledger.face_charge.emplace_back(2 * f.degree() - 6);
  ledger.bank_charge.assign(classify_components(h).size(), Rational(0));
  ledger.phase = Phase::kInitial;
  ledger.phase_totals.push_back(ledger.total());
  return ledger;
}

ChargeLedger apply_r1(ChargeLedger ledger, const FaceSet& faces) {
  expect_phase(ledger, Phase::kInitial, "R1");
  if (faces.faces.size() != ledger.face_charge.size()) throw PreconditionError("R1: face count mismatch");
  for (std::size_t i = 0; i < faces.faces.size(); ++i) {
    const auto& face = faces.faces[i];
    if (face.degree() == 0) continue;  // lone vertex: nothing to hand out to
    const Rational share = ledger.face_charge[i] / Rational(face.degree());
    for (Vertex v : face.walk) {
      ledger.vertex_charge[v] += share;
      ledger.face_charge[i] -= share;
    }
  }
  ledger.phase = Phase::kAfterR1;
  ledger.phase_totals.push_back(ledger.total());
  return ledger;
}

ChargeLedger apply_r2(ChargeLedger ledger, const Graph& g, const AuxGraph& h) {
  expect_phase(ledger, Phase::kAfterR1, "R2");
  const auto comps = classify_components(h);
  const auto comp = component_of_node(h, comps);
  const auto bad = bad_mask(g);
  const Rational unit = bank_unit();
  for (int x = 0; x < h.node_count(); ++x) {
    for (Vertex v : h.nodes[x]) {
      if (bad[v]) continue;
      ledger.vertex_charge[v] -= unit;
      ledger.bank_charge[comp[x]] += unit;
    }
  }
  ledger.phase = Phase::kAfterR2;
  ledger.phase_totals.push_back(ledger.total());
  return ledger;
}

ChargeLedger apply_r3(ChargeLedger ledger, const Graph& g, const AuxGraph& h) {
  expect_phase(ledger, Phase::kAfterR2, "R3");
  (void)g;
  const auto comps = classify_components(h);
  const auto comp = component_of_node(h, comps);
  const Rational unit = bank_unit();
  for (const auto& e : h.edges) {
    ledger.bank_charge[comp[e.a]] -= unit;
    ledger.vertex_charge[e.bad_vertex] += unit;
  }
  ledger.phase = Phase::kAfterR3;
  ledger.phase_totals.push_back(ledger.total());
  return ledger;
}

bool AuditReport::all_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.holds; });
}

const ClaimResult* AuditReport::claim(const std::string& name) const {
  for (const auto& c : claims) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AuditReport audit(const ChargeLedger& ledger, const Graph& g, const FaceSet& faces, const AuxGraph& h) {
  expect_phase(ledger, Phase::kAfterR3, "audit");
  AuditReport report;
  const auto comps = classify_components(h);
  auto fail = [](ClaimResult& c, std::string witness) {
    c.holds = false;
    c.witnesses.push_back(std::move(witness));
  };

  ClaimResult nonneg{"vertex_nonnegative", true, {}};
  ClaimResult deg5{"degree5_positive", true, {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& c = ledger.vertex_charge[v];
    if (c.sign() < 0) fail(nonneg, "vertex " + std::to_string(v) + " " + c.str());
    if (g.degree(v) >= 5 && c.sign() <= 0) fail(deg5, "vertex " + std::to_string(v) + " " + c.str());
    if (c.sign() > 0) report.positive_elements.push_back("vertex " + std::to_string(v) + " " + c.str());
  }

  ClaimResult cycle_bank{"cycle_bank_nonnegative", true, {}};
  ClaimResult tree_bank{"tree_bank_positive", true, {}};
  ClaimResult tree_identity{"tree_bank_identity", true, {}};
  ClaimResult shapes{"components_cycle_or_tree", true, {}};
  const Rational unit = bank_unit();
  for (std::size_t b = 0; b < comps.size(); ++b) {
    const auto& c = ledger.bank_charge[b];
    const std::string tag = "bank " + std::to_string(b) + " ";
    if (c.sign() > 0) report.positive_elements.push_back(tag + c.str());
    switch (comps[b].kind) {
      case ComponentKind::kCycle:
        if (c.sign() < 0) fail(cycle_bank, tag + c.str());
        break;
      case ComponentKind::kTree: {
        if (c.sign() <= 0) fail(tree_bank, tag + c.str());
        const auto census = degree_census(h, comps[b]);
        const Rational n(static_cast<std::int64_t>(comps[b].nodes.size()));
        const Rational predicted = Rational(4, 5) * Rational(census.z1) + Rational(2, 5) * Rational(census.z2);
        const Rational received = c + unit * Rational(static_cast<std::int64_t>(comps[b].edges.size()));
        if (census.z1 != census.z3 + 2) {
          fail(tree_identity, tag + "z1=" + std::to_string(census.z1) + " z3=" + std::to_string(census.z3));
        } else if (predicted != Rational(2, 5) * n + Rational(4, 5) || received != predicted) {
          fail(tree_identity, tag + "received " + received.str() + " predicted " + predicted.str());
        }
        break;
      }
      case ComponentKind::kOther:
        fail(shapes, tag + "nodes " + std::to_string(comps[b].nodes.size()) + " edges " +
                         std::to_string(comps[b].edges.size()));
        break;
    }
  }

  ClaimResult faces_zero{"faces_zero", true, {}};
  for (std::size_t i = 0; i < ledger.face_charge.size(); ++i) {
    if (!ledger.face_charge[i].is_zero()) fail(faces_zero, "face " + std::to_string(i) + " " + ledger.face_charge[i].str());
  }

  ClaimResult conservation{"conservation", true, {}};
  Rational initial;
  for (Vertex v = 0; v < g.vertex_count(); ++v) initial += Rational(g.degree(v) - 6);
  for (const auto& f : faces.faces) initial += Rational(2 * f.degree() - 6);
  report.initial_total = initial;
  for (std::size_t p = 0; p < ledger.phase_totals.size(); ++p) {
    if (ledger.phase_totals[p] != initial) {
      fail(conservation, std::string("phase ") + to_string(static_cast<Phase>(p)) + " total " + ledger.phase_totals[p].str());
    }
  }
  if (ledger.total() != initial) fail(conservation, "final total " + ledger.total().str());

  ClaimResult euler{"euler_total", true, {}};
  const int V = g.vertex_count();
  const int E = g.edge_count();
  const int F = static_cast<int>(faces.faces.size());
  if (initial != Rational(6LL * E - 6LL * V - 6LL * F)) fail(euler, "sum " + initial.str() + " != 6E-6V-6F");
  if (is_connected(g) && V > 0) {
    const int twice = 2 - V + E - F;
    if (twice >= 0 && twice % 2 == 0) {
      report.genus = twice / 2;
      if (initial != Rational(12LL * (*report.genus - 1))) fail(euler, "total " + initial.str() + " != 12(g-1)");
    } else {
      fail(euler, "Euler characteristic " + std::to_string(V - E + F) + " is not orientable");
    }
  } else {
    fail(euler, "graph is disconnected; genus undefined");
  }

  report.claims = {nonneg, deg5, cycle_bank, tree_bank, tree_identity, shapes, faces_zero, conservation, euler};
  return report;
}

DischargeRun run_discharging(const Graph& g, const RotationSystem& rot) {
  DischargeRun run;
  run.faces = trace_faces(g, rot);
  run.aux = build_aux_graph(g);
  run.phases.push_back(initial_charges(g, run.faces, run.aux));
  run.phases.push_back(apply_r1(run.phases.back(), run.faces));
  run.phases.push_back(apply_r2(run.phases.back(), g, run.aux));
  run.phases.push_back(apply_r3(run.phases.back(), g, run.aux));
  run.report = audit(run.phases.back(), g, run.faces, run.aux);
  return run;
}

void write_ledger(std::ostream& out, const DischargeRun& run) {
  for (const auto& ledger : run.phases) {
    const char* phase = to_string(ledger.phase);
    for (std::size_t i = 0; i < ledger.vertex_charge.size(); ++i) {
      out << "vertex " << i << ' ' << phase << ' ' << ledger.vertex_charge[i] << '\n';
    }
    for (std::size_t i = 0; i < ledger.face_charge.size(); ++i) {
      out << "face " << i << ' ' << phase << ' ' << ledger.face_charge[i] << '\n';
    }
    for (std::size_t i = 0; i < ledger.bank_charge.size(); ++i) {
      out << "bank " << i << ' ' << phase << ' ' << ledger.bank_charge[i] << '\n';
    }
  }
  out << "TOTAL " << run.report.initial_total << " GENUS ";
  if (run.report.genus) {
    out << *run.report.genus;
  } else {
    out << '-';
  }
  out << '\n';
}

void write_audit(std::ostream& out, const AuditReport& report) {
  for (const auto& c : report.claims) {
    out << "CLAIM " << c.name << ' ' << (c.holds ? "pass" : "fail") << '\n';
    for (const auto& w : c.witnesses) out << "  WITNESS " << w << '\n';
  }
  for (const auto& p : report.positive_elements) out << "POSITIVE " << p << '\n';
}

}  // namespace arbor
