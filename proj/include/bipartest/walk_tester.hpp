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

#include <optional>
#include <vector>

#include "bipartest/graph.hpp"
#include "bipartest/oracle.hpp"

namespace bipartest {

/// Lazy walk trajectory. `steps` holds len + 1 vertices and `indices` the
/// len drawn neighbor indices. Parity counts real moves only.
struct WalkRecord {
  Vertex start = 0;
  std::vector<Vertex> steps;
  std::vector<std::size_t> indices;
  std::uint8_t parity = 0;

  Vertex end() const { return steps.back(); }
};

struct WalkParams {
  Count starts = 1;
  Count walks_per_start = 1;
  Count walk_length = 1;
  double delta = 1.0;
};

/// starts = c3 / delta, walks = c1 sqrt(n) (log2 n / delta)^3,
/// length = c2 (log2 n / delta)^2, each rounded up and clamped to max_*.
struct WalkCoefficients {
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 10.0;
  std::optional<Count> max_starts;
  std::optional<Count> max_walks;
  std::optional<Count> max_length;
};

WalkParams walk_params(Vertex n, double delta, const WalkCoefficients& coeff = {});

WalkRecord random_walk(ListOracle& oracle, Vertex start, Count len, Rng& rng);

/// One traversed edge of a closed walk. The edge was answered by
/// neighbor_query(owner, index) == other and is crossed from owner to other,
/// or from other to owner when `reversed`.
struct WalkEdge {
  Vertex owner;
  std::size_t index;
  Vertex other;
  bool reversed;

  Vertex from() const { return reversed ? other : owner; }
  Vertex to() const { return reversed ? owner : other; }
};

/// Vertex sequence of a closed walk, first vertex repeated at the end.
std::vector<Vertex> walk_vertices(Vertex start, const std::vector<WalkEdge>& edges);

struct WalkDetection {
  Vertex start = 0;
  std::vector<WalkEdge> closed_walk;  // odd number of edges
  OddCycleWitness cycle;              // simple, inside closed_walk
};

struct GrResult {
  std::optional<WalkDetection> detection;
  Count walks = 0;

  bool rejected() const { return detection.has_value(); }
};

/// Random-walk tester for bounded-degree list oracles. For each random start
/// it indexes walk endpoints by (end, parity) and stops at the first walk
/// whose endpoint was already reached with the opposite parity.
/// Charges go to phase "walk".
GrResult gr_test(ListOracle& oracle, const WalkParams& params, Rng& rng);

}  // namespace bipartest
