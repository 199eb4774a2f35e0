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

#include "bipartest/degree_split.hpp"

namespace bipartest {

DegreePartition split_by_degree(PairOracle& oracle, std::size_t d, Rng& rng,
                                const DegreeSplitParams& params) {
  const Vertex n = oracle.vertex_count();
  if (d < 1 || d > n) throw ParameterError("split_by_degree: need 1 <= d <= n");
  ScopedPhase phase(oracle.ledger(), "degree-split");

  const double logn = log2n(n);
  const Count samples = n < 2 ? 0 : ceil_count(params.sample_factor * n * logn / static_cast<double>(d));
  const double threshold = params.threshold_factor * logn;

  DegreePartition part;
  part.d = d;
  part.is_high.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    Count hits = 0;
    for (Count s = 0; s < samples; ++s) {
      if (oracle.pair_query(v, uniform_other_vertex(rng, n, v))) ++hits;
    }
    if (static_cast<double>(hits) > threshold) {
      part.is_high[v] = 1;
      part.high.push_back(v);
    } else {
      part.low.push_back(v);
    }
  }
  return part;
}

}  // namespace bipartest
