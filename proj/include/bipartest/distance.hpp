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

#include <cstdint>
#include <vector>

#include "bipartest/graph.hpp"

namespace bipartest {

/// Largest vertex count accepted by the exact enumerators (2^25 colorings).
inline constexpr Vertex kExactThreshold = 26;

/// Largest vertex count accepted by expander_check.
inline constexpr Vertex kExpanderCheckLimit = 20;

struct ExactDistance {
  Count distance = 0;
  /// A coloring attaining `distance`.
  std::vector<std::uint8_t> side;
};

/// Minimum number of monochromatic edges over all 2-colorings (parallel
/// edges counted with multiplicity, loops always monochromatic). Throws
/// SizeLimitError above kExactThreshold vertices.
ExactDistance exact_bipartite_coloring(const Graph& g);
Count exact_bipartite_distance(const Graph& g);

/// Minimum number of violated constraints over all assignments.
ExactDistance exact_xor_assignment(const XorGame& game);
Count exact_xor_distance(const XorGame& game);

/// Best monochromatic-edge count found by `effort` restarts of single-vertex
/// flip local search (BFS-seeded and random starts alternate). Always >= the
/// exact distance; 0 only when a proper 2-coloring was found.
Count heuristic_bipartite_distance(const Graph& g, unsigned effort, std::uint64_t seed);

struct DistanceEvidence {
  Count value = 0;
  bool exact = false;
};

/// Exact distance when g fits the threshold, heuristic upper-bound evidence
/// otherwise.
DistanceEvidence distance_evidence(const Graph& g, unsigned effort, std::uint64_t seed);

/// True iff every vertex set S with 1 <= |S| <= n/2 has at least alpha*|S|
/// edges leaving it. Brute force; throws SizeLimitError above 20 vertices.
bool expander_check(const Graph& g, double alpha);

}  // namespace bipartest
