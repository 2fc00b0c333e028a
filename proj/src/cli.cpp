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

#include "arbor/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>

#include "arbor/coloring.hpp"
#include "arbor/discharging.hpp"
#include "arbor/embedding.hpp"
#include "arbor/error.hpp"
#include "arbor/forest_partition.hpp"
#include "arbor/generators.hpp"
#include "arbor/io.hpp"
#include "arbor/oracle.hpp"

namespace arbor::cli {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  return file;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
  } else {
    auto file = open_output(path);
    fn(file);
  }
}

struct PartitionArgs {
  std::string graph;
  std::string rotation;
  std::string output;
  std::string trace;
  bool require_embedding = false;
  std::int64_t budget = 1'000'000;
};

int do_partition(const PartitionArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(a.graph);
  if (a.require_embedding) {
    if (a.rotation.empty()) throw InputError("--require-embedding needs --rotation");
    const auto report = check_preconditions(g, load_rotation(a.rotation, g));
    if (!report.toroidal_c4_free()) {
      err << "precondition: ";
      if (report.has_four_cycle) {
        const auto& c = *report.four_cycle;
        err << "4-cycle " << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << '\n';
      } else if (!report.genus) {
        err << "genus unavailable (" << report.rotation_error.value_or("disconnected graph") << ")\n";
      } else {
        err << "genus " << *report.genus << " exceeds 1\n";
      }
      return kPreconditionViolation;
    }
  } else if (!a.rotation.empty()) {
    load_rotation(a.rotation, g);
  }
  PartitionOptions options;
  options.config_budget = a.budget;
  const auto result = partition(g, options);
  if (!a.trace.empty()) emit(a.trace, out, [&](std::ostream& o) { write_trace(o, result.trace); });
  if (!result.ok()) {
    err << "partition: " << result.failure.value_or("failed") << '\n';
    return result.budget_exhausted ? kBudgetExhausted : kPreconditionViolation;
  }
  emit(a.output, out, [&](std::ostream& o) { write_coloring(o, *result.coloring); });
  return kSuccess;
}

int do_verify(const std::string& graph_path, const std::string& coloring_path, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const TwoColoring f = load_coloring(coloring_path, g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!f.is_colored(v)) {
      out << "UNCOLORED " << v << '\n';
      return kPropertyFalse;
    }
  }
  if (const auto cycle = find_monochromatic_cycle(g, f)) {
    out << "BAD color " << to_int(cycle->color) << " cycle";
    for (Vertex v : cycle->cycle) out << ' ' << v;
    out << '\n';
    return kPropertyFalse;
  }
  out << "GOOD\n";
  return kSuccess;
}

int do_audit(const std::string& graph_path, const std::string& rotation_path, const std::string& ledger_path,
             std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const RotationSystem rot = load_rotation(rotation_path, g);
  const auto run = run_discharging(g, rot);
  emit(ledger_path, out, [&](std::ostream& o) { write_ledger(o, run); });
  if (!ledger_path.empty()) {
    out << "TOTAL " << run.report.initial_total << " GENUS ";
    if (run.report.genus) {
      out << *run.report.genus << '\n';
    } else {
      out << "-\n";
    }
  }
  write_audit(out, run.report);
  return run.report.all_hold() ? kSuccess : kPropertyFalse;
}

int do_oracle(const std::string& graph_path, std::optional<int> k, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  if (k) {
    if (*k < 1) throw InputError("--k must be at least 1");
    const bool yes = arboricity_at_most(g, *k);
    out << "ARBORICITY_AT_MOST " << *k << ' ' << (yes ? "true" : "false") << '\n';
    return yes ? kSuccess : kPropertyFalse;
  }
  out << "ARBORICITY " << vertex_arboricity(g) << '\n';
  return kSuccess;
}

struct GenArgs {
  std::string family = "planar_c4free";
  std::uint64_t seed = 1;
  int size = 30;
  int min_size = -1;
  int cycle_length = 5;
  std::string out;
};

int do_gen(const GenArgs& a, std::ostream& out) {
  const auto family = parse_family(a.family);
  if (!family) throw InputError("unknown family '" + a.family + "'");
  GenParams p;
  p.family = *family;
  p.seed = a.seed;
  p.max_vertices = a.size;
  p.min_vertices = a.min_size >= 0 ? a.min_size : std::min(8, a.size);
  p.cycle_length = a.cycle_length;
  if (*family == Family::kConfigBearing && a.min_size < 0) p.min_vertices = 0;
  const Instance inst = gen_instance(p);
  const std::string manifest = manifest_line(p, inst);
  {
    auto f = open_output(a.out + ".adj");
    write_graph(f, inst.graph);
  }
  if (inst.rotation) {
    auto f = open_output(a.out + ".rot");
    write_rotation(f, *inst.rotation);
  }
  {
    auto f = open_output(a.out + ".manifest");
    f << manifest << '\n';
  }
  out << manifest << '\n';
  return kSuccess;
}

int do_check(const std::string& graph_path, const std::string& rotation_path, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  std::optional<RotationSystem> rot;
  if (!rotation_path.empty()) {
    // Parse only; permutation errors belong in the report.
    std::ifstream in(rotation_path);
    if (!in) throw InputError("cannot open " + rotation_path);
    std::vector<std::vector<Vertex>> lists(g.vertex_count());
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ls(line);
      long v = -1;
      char colon = 0;
      if (!(ls >> v >> colon) || colon != ':' || v < 0 || v >= g.vertex_count()) {
        throw InputError(rotation_path + ":" + std::to_string(line_no) + ": expected 'v: neighbours'");
      }
      long w = 0;
      while (ls >> w) lists[v].push_back(static_cast<Vertex>(w));
      if (!ls.eof()) throw InputError(rotation_path + ":" + std::to_string(line_no) + ": bad neighbour id");
    }
    rot = RotationSystem(std::move(lists));
  }
  const auto r = check_preconditions(g, rot);
  out << "VERTICES " << r.vertex_count << '\n';
  out << "EDGES " << r.edge_count << '\n';
  out << "CONNECTED " << (r.connected ? "yes" : "no") << '\n';
  out << "MIN_DEGREE " << r.min_degree << '\n';
  out << "FOUR_CYCLE ";
  if (r.four_cycle) {
    out << (*r.four_cycle)[0] << ' ' << (*r.four_cycle)[1] << ' ' << (*r.four_cycle)[2] << ' ' << (*r.four_cycle)[3]
        << '\n';
  } else {
    out << "none\n";
  }
  if (r.face_count) out << "FACES " << *r.face_count << '\n';
  if (r.genus) out << "GENUS " << *r.genus << '\n';
  if (r.rotation_error) out << "ROTATION_ERROR " << *r.rotation_error << '\n';
  const bool valid = rot ? r.toroidal_c4_free() : !r.has_four_cycle;
  out << "VALID " << (valid ? "yes" : "no") << '\n';
  return valid ? kSuccess : kPropertyFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-forest partitions of 4-cycle-free toroidal graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  PartitionArgs pa;
  auto* partition_cmd = app.add_subcommand("partition", "Split the vertices into two induced forests");
  partition_cmd->add_option("graph", pa.graph, "Graph file")->required();
  partition_cmd->add_option("--rotation", pa.rotation, "Rotation system file");
  partition_cmd->add_flag("--require-embedding", pa.require_embedding,
                          "Reject inputs without a genus <= 1 embedding and no 4-cycle");
  partition_cmd->add_option("--budget", pa.budget, "Node budget of the configuration search")
      ->check(CLI::PositiveNumber);
  partition_cmd->add_option("--trace", pa.trace, "Write the reduction trace to this file");
  partition_cmd->add_option("-o,--output", pa.output, "Coloring output file (default stdout)");

  std::string verify_graph, verify_coloring;
  auto* verify_cmd = app.add_subcommand("verify", "Check that both color classes induce forests");
  verify_cmd->add_option("graph", verify_graph, "Graph file")->required();
  verify_cmd->add_option("coloring", verify_coloring, "Coloring file")->required();

  std::string audit_graph, audit_rotation, audit_ledger;
  auto* audit_cmd = app.add_subcommand("audit", "Run the charge ledger and check its claims");
  audit_cmd->add_option("graph", audit_graph, "Graph file")->required();
  audit_cmd->add_option("rotation", audit_rotation, "Rotation system file")->required();
  audit_cmd->add_option("--ledger", audit_ledger, "Write the ledger here instead of stdout");

  std::string oracle_graph;
  std::optional<int> oracle_k;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive vertex arboricity");
  oracle_cmd->add_option("graph", oracle_graph, "Graph file")->required();
  oracle_cmd->add_option("--k", oracle_k, "Decide a(G) <= k instead of computing a(G)");

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", ga.family, "planar_c4free, toroidal_c4free, config_bearing, tree_H, cycle_H");
  gen_cmd->add_option("--seed", ga.seed, "PRNG seed");
  gen_cmd->add_option("--size", ga.size, "Maximum vertex count");
  gen_cmd->add_option("--min-size", ga.min_size, "Minimum vertex count");
  gen_cmd->add_option("--cycle-length", ga.cycle_length, "Cycle length for config_bearing");
  gen_cmd->add_option("--out", ga.out, "Output prefix for .adj, .rot and .manifest")->required();

  std::string check_graph, check_rotation;
  auto* check_cmd = app.add_subcommand("check", "Report connectivity, 4-cycles and genus");
  check_cmd->add_option("graph", check_graph, "Graph file")->required();
  check_cmd->add_option("rotation", check_rotation, "Rotation system file");

  std::vector<const char*> argv{"arbor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*partition_cmd) return do_partition(pa, out, err);
    if (*verify_cmd) return do_verify(verify_graph, verify_coloring, out);
    if (*audit_cmd) return do_audit(audit_graph, audit_rotation, audit_ledger, out);
    if (*oracle_cmd) return do_oracle(oracle_graph, oracle_k, out);
    if (*gen_cmd) return do_gen(ga, out);
    if (*check_cmd) return do_check(check_graph, check_rotation, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kPreconditionViolation;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace arbor::cli
