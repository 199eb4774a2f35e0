// Copyright 2026 The bipartest Authors
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

// Reference oracles for tests. They are deliberately naive and share no code
// with the library's solvers.

#include <cstdint>
#include <limits>
#include <vector>

#include "bipartest/graph.hpp"

namespace bipartest::testing {

/// Minimum monochromatic edge count over all 2^n colorings, by plain loops.
inline Count brute_bipartite_distance(const Graph& g) {
  const Vertex n = g.vertex_count();
  Count best = std::numeric_limits<Count>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Count bad = 0;
    for (const auto& e : g.edges()) {
      const bool a = (mask >> e.u) & 1U;
      const bool b = (mask >> e.v) & 1U;
      if (a == b) ++bad;
    }
    best = std::min(best, bad);
  }
  return n == 0 ? 0 : best;
}

inline Count brute_xor_distance(const XorGame& game) {
  const Vertex n = game.vertex_count();
  Count best = std::numeric_limits<Count>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Count bad = 0;
    for (const auto& c : game.constraints()) {
      const bool a = (mask >> c.u) & 1U;
      const bool b = (mask >> c.v) & 1U;
      const bool equal = a == b;
      if (equal != (c.label == Label::Eq)) ++bad;
    }
    best = std::min(best, bad);
  }
  return n == 0 ? 0 : best;
}

/// Every S with 1 <= |S| <= n/2 has at least alpha |S| edges leaving it.
inline bool brute_expander(const Graph& g, double alpha) {
  const Vertex n = g.vertex_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<unsigned>(__builtin_popcountll(mask));
    if (2 * size > n) continue;
    Count cut = 0;
    for (const auto& e : g.edges())
      if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U)) ++cut;
    if (static_cast<double>(cut) < alpha * size) return false;
  }
  return true;
}

/// Odd cycle check straight from the definition.
inline bool is_simple_odd_cycle(const Graph& g, const std::vector<Vertex>& c) {
  if (c.size() < 3 || c.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] == c[j]) return false;
    const Vertex a = c[i];
    const Vertex b = c[(i + 1) % c.size()];
    bool found = false;
    for (const auto& e : g.edges())
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace bipartest::testing
