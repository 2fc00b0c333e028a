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

// Charge accounting on an embedded graph.
//
// Vertices start at d(v) - 6, faces at 2 d(f) - 6, and one bank per
// component of the triangle graph H at 0. Then:
//   R1  every face splits its charge evenly over its corners;
//   R2  every good vertex pays 2/5 to the bank of each H-triangle it lies on;
//   R3  every bank pays 2/5 to each bad vertex labelling an edge of its
//       component.
// All arithmetic is exact.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "arbor/embedding.hpp"
#include "arbor/graph.hpp"
#include "arbor/rational.hpp"
#include "arbor/triangle_structures.hpp"

namespace arbor {

enum class Phase { kInitial, kAfterR1, kAfterR2, kAfterR3 };

const char* to_string(Phase phase);

struct ChargeLedger {
  std::vector<Rational> vertex_charge;
  std::vector<Rational> face_charge;  // indexed like FaceSet::faces
  std::vector<Rational> bank_charge;  // indexed like classify_components()
  Phase phase = Phase::kInitial;
  /// Total charge recorded after each phase so far.
  std::vector<Rational> phase_totals;

  Rational total() const;
};

/// The charge every bank transaction moves.
Rational bank_unit();

ChargeLedger initial_charges(const Graph& g, const FaceSet& faces, const AuxGraph& h);

/// Each of these throws PreconditionError when the ledger is not in the
/// phase the rule expects.
ChargeLedger apply_r1(ChargeLedger ledger, const FaceSet& faces);
ChargeLedger apply_r2(ChargeLedger ledger, const Graph& g, const AuxGraph& h);
ChargeLedger apply_r3(ChargeLedger ledger, const Graph& g, const AuxGraph& h);

struct ClaimResult {
  std::string name;
  bool holds = true;
  /// Offending elements with their exact charge, e.g. "vertex 3 -2/5".
  std::vector<std::string> witnesses;
};

struct AuditReport {
  std::vector<ClaimResult> claims;
  Rational initial_total;
  std::optional<int> genus;
  /// Every vertex and bank that ends with positive charge.
  std::vector<std::string> positive_elements;

  bool all_hold() const;
  const ClaimResult* claim(const std::string& name) const;
};

/// Checks, on the concrete instance:
///   vertex_nonnegative, degree5_positive, cycle_bank_nonnegative,
///   tree_bank_positive, tree_bank_identity, components_cycle_or_tree,
///   faces_zero, conservation, euler_total.
/// Failures are reported, never thrown.
AuditReport audit(const ChargeLedger& ledger, const Graph& g, const FaceSet& faces, const AuxGraph& h);

struct DischargeRun {
  FaceSet faces;
  AuxGraph aux;
  std::vector<ChargeLedger> phases;  // initial, after R1, after R2, after R3
  AuditReport report;
};

/// Whole pipeline for one embedded instance. Throws what trace_faces() and
/// build_aux_graph() throw.
DischargeRun run_discharging(const Graph& g, const RotationSystem& rot);

/// "kind id phase num/den" per element and phase, then a summary line
/// "TOTAL num/den GENUS g" ("GENUS -" when unknown).
void write_ledger(std::ostream& out, const DischargeRun& run);
void write_audit(std::ostream& out, const AuditReport& report);

}  // namespace arbor
