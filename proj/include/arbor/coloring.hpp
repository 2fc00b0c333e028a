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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

enum class Color : std::uint8_t { kOne = 1, kTwo = 2 };

constexpr Color other(Color c) { return c == Color::kOne ? Color::kTwo : Color::kOne; }
constexpr int to_int(Color c) { return static_cast<int>(c); }

/// Partial assignment of colors {1, 2} to the vertices 0..n-1.
///
/// A coloring is *good* on a graph when each color class induces a forest;
/// see find_monochromatic_cycle().
class TwoColoring {
 public:
  TwoColoring() = default;
  explicit TwoColoring(int vertex_count) : colors_(vertex_count, 0) {}

  int size() const { return static_cast<int>(colors_.size()); }

  bool is_colored(Vertex v) const { return colors_[v] != 0; }
  std::optional<Color> get(Vertex v) const;
  /// Throws InputError when v is uncolored.
  Color at(Vertex v) const;

  void set(Vertex v, Color c) { colors_[v] = static_cast<std::uint8_t>(c); }
  void clear(Vertex v) { colors_[v] = 0; }

  int colored_count() const;
  bool is_total() const { return colored_count() == size(); }

  /// The global 1 <-> 2 swap; preserves goodness.
  TwoColoring swapped() const;

  bool operator==(const TwoColoring&) const = default;

 private:
  std::vector<std::uint8_t> colors_;
};

struct MonochromaticCycle {
  Color color = Color::kOne;
  std::vector<Vertex> cycle;  // consecutive vertices, closing edge implied
};

/// A cycle of g whose vertices are all colored with one color, if any. The
/// coloring must cover g's vertex range (uncolored vertices are ignored).
std::optional<MonochromaticCycle> find_monochromatic_cycle(const Graph& g, const TwoColoring& f);

inline bool is_good(const Graph& g, const TwoColoring& f) {
  return !find_monochromatic_cycle(g, f).has_value();
}

}  // namespace arbor
