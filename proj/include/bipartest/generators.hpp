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

#include "bipartest/graph.hpp"

namespace bipartest {

/// Union of d independent uniform perfect matchings on n vertices (n even,
/// d >= 1). Every vertex has degree exactly d, counting parallel edges.
Graph generate_matchings_graph(Vertex n, unsigned d, std::uint64_t seed);

/// k-blowup: vertex b becomes the group {b*k, ..., b*k + k-1} and every base
/// edge becomes a complete k x k bipartite graph between groups.
Graph generate_blowup(const Graph& base, unsigned k);

/// Cycle C_l for odd l >= 3.
Graph generate_odd_cycle(unsigned l);

/// Cycle C_l for any l >= 3.
Graph cycle_graph(unsigned l);
Graph path_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph star_graph(unsigned leaves);

/// Vertices of a then vertices of b (shifted by a.vertex_count()).
Graph disjoint_union(const Graph& a, const Graph& b);

/// Random bipartite graph: each vertex gets a uniform side, each cross pair
/// is an edge with probability p.
Graph random_bipartite(Vertex n, double p, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph random_graph(Vertex n, double p, std::uint64_t seed);

/// Random tree on n vertices (uniform attachment).
Graph random_tree(Vertex n, std::uint64_t seed);

/// Blowup of an odd cycle sized for N vertices: l is the largest odd number
/// <= sqrt(N) (at least 3), k = floor(N / l), padded with isolated vertices
/// up to exactly N. Distance to bipartite is k^2.
struct BlowupCycleShape {
  unsigned cycle_length;
  unsigned group_size;
  Vertex padding;
};
BlowupCycleShape blowup_cycle_shape(Vertex n);
Graph generate_blowup_cycle_family(Vertex n);

}  // namespace bipartest
