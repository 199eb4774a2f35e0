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

#include <vector>

#include "bipartest/oracle.hpp"

namespace bipartest {

/// Sampling constants: each vertex draws ceil(sample_factor * n log2 n / d)
/// partners and is high-degree iff more than threshold_factor * log2 n of
/// them are neighbors.
struct DegreeSplitParams {
  double sample_factor = 24.0;
  double threshold_factor = 24.0;
};

struct DegreePartition {
  std::vector<Vertex> high;
  std::vector<Vertex> low;
  std::vector<std::uint8_t> is_high;  // indexed by vertex
  std::size_t d = 0;
};

/// Classifies every vertex of the oracle's graph as high or low degree.
/// Partners are drawn with replacement from the other n-1 vertices, fresh
/// per vertex. Queries are charged to phase "degree-split".
DegreePartition split_by_degree(PairOracle& oracle, std::size_t d, Rng& rng,
                                const DegreeSplitParams& params = {});

}  // namespace bipartest
