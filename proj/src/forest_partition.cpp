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

#include "arbor/forest_partition.hpp"

#include <algorithm>
#include <map>

#include "arbor/error.hpp"
#include "arbor/oracle.hpp"

namespace arbor {

ExtensionContext ExtensionContext::from_graph(const Graph& g, std::vector<Vertex> cycle) {
  ExtensionContext ctx;
  ctx.cycle = std::move(cycle);
  const int s = ctx.length();
  if (s < 3) throw InputError("extension cycle needs at least 3 vertices");
  std::vector<int> index(g.vertex_count(), -1);
  for (int i = 0; i < s; ++i) {
    const Vertex v = ctx.cycle[i];
    if (v < 0 || v >= g.vertex_count() || index[v] != -1) throw InputError("bad cycle vertex " + std::to_string(v));
    index[v] = i;
  }
  for (int i = 0; i < s; ++i) {
    const Vertex v = ctx.cycle[i];
    std::vector<Vertex> outside;
    for (Vertex w : g.neighbors(v)) {
      if (index[w] == -1) {
        outside.push_back(w);
        continue;
      }
      const int d = (index[w] - i + s) % s;
      if (d != 1 && d != s - 1) throw InputError("chord " + std::to_string(v) + "-" + std::to_string(w) + " on the cycle");
    }
    if (!g.has_edge(v, ctx.cycle[(i + 1) % s])) throw InputError("cycle edge missing after " + std::to_string(v));
    if (outside.size() != 2) {
      throw InputError("cycle vertex " + std::to_string(v) + " has " + std::to_string(outside.size()) +
                       " neighbours off the cycle, expected 2");
    }
    ctx.external.push_back({outside[0], outside[1]});
  }
  return ctx;
}

const char* to_string(ExtensionCase c) {
  switch (c) {
    case ExtensionCase::kExtended:
      return "extended";
    case ExtensionCase::kCaseOne:
      return "case_one";
    case ExtensionCase::kCaseTwo:
      return "case_two";
  }
  return "?";
}

ExtensionOutcome extend_over_cycle(const ExtensionContext& ctx, const TwoColoring& f) {
  const int s = ctx.length();
  if (s < 3 || static_cast<int>(ctx.external.size()) != s) throw InputError("malformed extension context");
  std::vector<std::array<Color, 2>> pair(s);
  for (int i = 0; i < s; ++i) {
    const auto [x, y] = ctx.external[i];
    if (x == y) throw InputError("external pair of cycle vertex " + std::to_string(ctx.cycle[i]) + " repeats a vertex");
    const auto cx = x >= 0 && x < f.size() ? f.get(x) : std::nullopt;
    const auto cy = y >= 0 && y < f.size() ? f.get(y) : std::nullopt;
    if (!cx || !cy) throw InputError("external neighbour of " + std::to_string(ctx.cycle[i]) + " is uncolored");
    pair[i] = {*cx, *cy};
  }

  const Color first = pair[0][0];
  const bool all_same = std::all_of(pair.begin(), pair.end(), [&](const auto& p) { return p[0] == first && p[1] == first; });
  if (all_same) return {ExtensionCase::kCaseOne, {}};
  const bool all_mixed = std::all_of(pair.begin(), pair.end(), [](const auto& p) { return p[0] != p[1]; });
  if (all_mixed && s % 2 == 1) return {ExtensionCase::kCaseTwo, {}};

  ExtensionOutcome out{ExtensionCase::kExtended, f};
  TwoColoring& h = out.coloring;
  if (all_mixed) {
    for (int i = 0; i < s; ++i) h.set(ctx.cycle[i], i % 2 == 0 ? Color::kOne : Color::kTwo);
    return out;
  }
  // Opposite color at every monochromatic pair, then alternate forward from
  // the first of them around the rest of the cycle.
  int j = -1;
  std::vector<char> fixed(s, 0);
  for (int i = 0; i < s; ++i) {
    if (pair[i][0] == pair[i][1]) {
      h.set(ctx.cycle[i], other(pair[i][0]));
      fixed[i] = 1;
      if (j == -1) j = i;
    }
  }
  for (int step = 1; step < s; ++step) {
    const int i = (j + step) % s;
    const int prev = (i + s - 1) % s;
    if (!fixed[i]) h.set(ctx.cycle[i], other(h.at(ctx.cycle[prev])));
  }
  return out;
}

TwoColoring extend_low_degree(const Graph& g, const TwoColoring& f, Vertex v) {
  if (g.degree(v) > 3) throw InputError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + " > 3");
  int count[3] = {0, 0, 0};
  for (Vertex w : g.neighbors(v)) {
    const auto c = f.get(w);
    if (!c) throw InputError("neighbour " + std::to_string(w) + " of " + std::to_string(v) + " is uncolored");
    ++count[to_int(*c)];
  }
  TwoColoring out = f;
  out.set(v, count[1] <= 1 ? Color::kOne : Color::kTwo);
  return out;
}

const char* to_string(TriangularBranch b) {
  switch (b) {
    case TriangularBranch::kExtended:
      return "extended";
    case TriangularBranch::kCaseOne:
      return "case_one";
    case TriangularBranch::kCaseOneApexFlip:
      return "case_one_apex_flip";
    case TriangularBranch::kCaseTwo:
      return "case_two";
    case TriangularBranch::kCaseTwoFlipped:
      return "case_two_flipped";
  }
  return "?";
}

TriangularExtension extend_triangular_config(const Graph& g, const TriangularCycleConfig& cfg, const TwoColoring& f) {
  if (auto why = config_violation(g, cfg)) throw PreconditionError("invalid configuration: " + *why);
  if (f.size() != g.vertex_count()) throw PreconditionError("coloring does not cover the graph");
  TwoColoring base = f;
  for (Vertex v : cfg.cycle) base.clear(v);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!base.is_colored(v) && std::find(cfg.cycle.begin(), cfg.cycle.end(), v) == cfg.cycle.end()) {
      throw PreconditionError("vertex " + std::to_string(v) + " outside the cycle is uncolored");
    }
  }
  if (!is_good(g, base)) throw PreconditionError("coloring of G - C is not good");

  auto ctx = ExtensionContext::from_graph(g, cfg.cycle);
  ctx.apex = cfg.apex;
  auto outcome = extend_over_cycle(ctx, base);
  if (outcome.tag == ExtensionCase::kExtended) {
    if (!is_good(g, outcome.coloring)) throw InternalError("cycle extension produced a monochromatic cycle");
    return {std::move(outcome.coloring), TriangularBranch::kExtended};
  }

  const int s = cfg.length();
  const Vertex u = cfg.apex;
  auto v = [&](int i) { return cfg.cycle[i - 1]; };  // 1-based, as v1..vs

  if (outcome.tag == ExtensionCase::kCaseOne) {
    // Normalize so every external neighbour has color 1.
    const bool flip = base.at(u) != Color::kOne;
    TwoColoring h = flip ? base.swapped() : base;
    h.set(v(1), Color::kOne);
    for (int i = 2; i <= s; ++i) h.set(v(i), Color::kTwo);
    if (is_good(g, h)) return {flip ? h.swapped() : h, TriangularBranch::kCaseOne};
    h.set(u, Color::kTwo);
    if (is_good(g, h)) return {flip ? h.swapped() : h, TriangularBranch::kCaseOneApexFlip};
    throw InternalError("no good extension in the all-equal case");
  }

  // Case two: normalize so u has color 2 and the other neighbours of v1, v2
  // have color 1.
  const bool flip = base.at(u) != Color::kTwo;
  TwoColoring h = flip ? base.swapped() : base;
  h.set(v(1), Color::kTwo);
  for (int i = 2; i <= s; ++i) h.set(v(i), i % 2 == 1 ? Color::kOne : Color::kTwo);
  h.set(u, Color::kOne);
  if (is_good(g, h)) return {flip ? h.swapped() : h, TriangularBranch::kCaseTwo};
  for (int i = 2; i <= s; ++i) h.set(v(i), i % 2 == 1 ? Color::kTwo : Color::kOne);
  h.set(u, Color::kTwo);
  if (is_good(g, h)) return {flip ? h.swapped() : h, TriangularBranch::kCaseTwoFlipped};
  throw InternalError("no good extension in the odd bichromatic case");
}

TwoColoring merge_block_colorings(const BlockDecomposition& decomp, std::span<const TwoColoring> per_block) {
  if (per_block.size() != decomp.blocks.size()) throw InputError("one coloring per block expected");
  if (per_block.empty()) return TwoColoring(0);
  const int n = per_block.front().size();
  std::vector<std::vector<int>> blocks_at(n);
  for (std::size_t b = 0; b < decomp.blocks.size(); ++b) {
    if (per_block[b].size() != n) throw InputError("block colorings disagree on the vertex range");
    for (Vertex v : decomp.blocks[b]) {
      if (v < 0 || v >= n) throw InputError("block vertex out of range");
      if (!per_block[b].is_colored(v)) throw InputError("block " + std::to_string(b) + " leaves vertex " + std::to_string(v) + " uncolored");
      blocks_at[v].push_back(static_cast<int>(b));
    }
  }

  TwoColoring merged(n);
  std::vector<char> placed(decomp.blocks.size(), 0);
  auto place = [&](int b, bool flip) {
    for (Vertex v : decomp.blocks[b]) {
      const Color c = flip ? other(per_block[b].at(v)) : per_block[b].at(v);
      if (merged.is_colored(v) && merged.at(v) != c) {
        throw InputError("block tree inconsistency at vertex " + std::to_string(v));
      }
      merged.set(v, c);
    }
    placed[b] = 1;
  };
  for (std::size_t root = 0; root < decomp.blocks.size(); ++root) {
    if (placed[root]) continue;
    place(static_cast<int>(root), false);
    std::vector<int> queue{static_cast<int>(root)};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex v : decomp.blocks[queue[head]]) {
        for (int b : blocks_at[v]) {
          if (placed[b]) continue;
          place(b, per_block[b].at(v) != merged.at(v));
          queue.push_back(b);
        }
      }
    }
  }
  return merged;
}

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kBase:
      return "base";
    case StepKind::kComponents:
      return "components";
    case StepKind::kBlocks:
      return "blocks";
    case StepKind::kLowDegree:
      return "low_degree";
    case StepKind::kConfig:
      return "config";
  }
  return "?";
}

namespace {

struct SolveFailure {
  std::string message;
  bool budget = false;
};

class Solver {
 public:
  explicit Solver(const PartitionOptions& options) : options_(options) {}

  std::vector<TraceEntry> trace;

  // labels[i] is the input-graph id of local vertex i.
  TwoColoring solve(const Graph& g, const std::vector<Vertex>& labels) {
    TwoColoring f = reduce(g, labels);
    if (!f.is_total() || !is_good(g, f)) {
      throw InternalError("solver produced a bad coloring on a subgraph of " + std::to_string(g.vertex_count()) +
                          " vertices");
    }
    return f;
  }

 private:
  TwoColoring reduce(const Graph& g, const std::vector<Vertex>& labels) {
    const int n = g.vertex_count();
    if (n <= options_.base_case_size) {
      trace.push_back({StepKind::kBase, labels});
      const auto classes = find_forest_partition(g, 2);
      if (!classes) {
        throw SolveFailure{"base case: the " + std::to_string(n) +
                           "-vertex subgraph has no partition into two induced forests"};
      }
      TwoColoring f(n);
      for (Vertex v = 0; v < n; ++v) f.set(v, (*classes)[v] == 0 ? Color::kOne : Color::kTwo);
      return f;
    }

    const auto comps = connected_components(g);
    if (comps.size() > 1) {
      std::vector<Vertex> reps;
      for (const auto& c : comps) reps.push_back(labels[c.front()]);
      trace.push_back({StepKind::kComponents, reps});
      TwoColoring f(n);
      for (const auto& c : comps) lift(solve_part(g, labels, c), f);
      return f;
    }

    const auto decomp = block_decomposition(g);
    if (!decomp.cut_vertices.empty()) {
      std::vector<Vertex> cuts;
      for (Vertex v : decomp.cut_vertices) cuts.push_back(labels[v]);
      trace.push_back({StepKind::kBlocks, cuts});
      std::vector<TwoColoring> per_block;
      for (const auto& block : decomp.blocks) {
        TwoColoring f(n);
        lift(solve_part(g, labels, block), f);
        per_block.push_back(std::move(f));
      }
      return merge_block_colorings(decomp, per_block);
    }

    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) > 3) continue;
      trace.push_back({StepKind::kLowDegree, {labels[v]}});
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < n; ++w) {
        if (w != v) rest.push_back(w);
      }
      TwoColoring f(n);
      lift(solve_part(g, labels, rest), f);
      return extend_low_degree(g, f, v);
    }

    const auto search = search_triangular_cycle_config(g, {options_.config_budget});
    if (search.budget_exhausted) {
      throw SolveFailure{"configuration search exhausted its budget on a block of " + std::to_string(n) +
                             " vertices with minimum degree " + std::to_string(g.min_degree()),
                         true};
    }
    if (!search.config) {
      throw SolveFailure{"no reduction applies to a 2-connected block of " + std::to_string(n) +
                         " vertices with minimum degree " + std::to_string(g.min_degree()) +
                         ": no triangular cycle configuration exists"};
    }
    const auto& cfg = *search.config;
    std::vector<Vertex> involved;
    for (Vertex v : cfg.cycle) involved.push_back(labels[v]);
    involved.push_back(labels[cfg.apex]);
    trace.push_back({StepKind::kConfig, involved});

    std::vector<char> on_cycle(n, 0);
    for (Vertex v : cfg.cycle) on_cycle[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex w = 0; w < n; ++w) {
      if (!on_cycle[w]) rest.push_back(w);
    }
    TwoColoring f(n);
    lift(solve_part(g, labels, rest), f);
    return extend_triangular_config(g, cfg, f).coloring;
  }

  struct Part {
    TwoColoring coloring;
    std::vector<Vertex> to_parent;
  };

  Part solve_part(const Graph& g, const std::vector<Vertex>& labels, const std::vector<Vertex>& keep) {
    auto sub = induced_subgraph(g, keep);
    std::vector<Vertex> sub_labels;
    sub_labels.reserve(sub.to_parent.size());
    for (Vertex p : sub.to_parent) sub_labels.push_back(labels[p]);
    return {solve(sub.graph, sub_labels), std::move(sub.to_parent)};
  }

  static void lift(const Part& part, TwoColoring& into) {
    for (std::size_t i = 0; i < part.to_parent.size(); ++i) {
      into.set(part.to_parent[i], part.coloring.at(static_cast<Vertex>(i)));
    }
  }

  PartitionOptions options_;
};

}  // namespace

PartitionResult partition(const Graph& g, const PartitionOptions& options) {
  PartitionResult result;
  Solver solver(options);
  std::vector<Vertex> labels(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels[v] = v;
  try {
    result.coloring = solver.solve(g, labels);
  } catch (const SolveFailure& failure) {
    result.failure = failure.message;
    result.budget_exhausted = failure.budget;
  }
  result.trace = std::move(solver.trace);
  return result;
}

void write_trace(std::ostream& out, std::span<const TraceEntry> trace) {
  for (const auto& entry : trace) {
    out << "STEP " << to_string(entry.kind);
    for (Vertex v : entry.vertices) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace arbor
