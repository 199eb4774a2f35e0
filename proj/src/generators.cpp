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

#include "bipartest/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bipartest {

Graph generate_matchings_graph(Vertex n, unsigned d, std::uint64_t seed) {
  if (n == 0 || n % 2 != 0) throw ParameterError("generate_matchings_graph: n must be even and positive");
  if (d == 0) throw ParameterError("generate_matchings_graph: d must be at least 1");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n / 2) * d);
  for (unsigned j = 0; j < d; ++j) {
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Vertex i = 0; i < n; i += 2) {
      edges.push_back({std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1])});
    }
  }
  return Graph(n, std::move(edges));
}

Graph generate_blowup(const Graph& base, unsigned k) {
  if (k == 0) throw ParameterError("generate_blowup: k must be at least 1");
  if (base.has_loops()) throw ParameterError("generate_blowup: base graph has loops");
  std::vector<Edge> edges;
  edges.reserve(base.edge_count() * k * k);
  for (const auto& e : base.edges()) {
    for (unsigned a = 0; a < k; ++a) {
      for (unsigned b = 0; b < k; ++b) {
        edges.push_back({e.u * k + a, e.v * k + b});
      }
    }
  }
  return Graph(base.vertex_count() * k, std::move(edges));
}

Graph cycle_graph(unsigned l) {
  if (l < 3) throw ParameterError("cycle_graph: length must be at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < l; ++i) edges.push_back({i, (i + 1) % l});
  return Graph(l, std::move(edges));
}

Graph generate_odd_cycle(unsigned l) {
  if (l < 3 || l % 2 == 0) throw ParameterError("generate_odd_cycle: length must be odd and >= 3");
  return cycle_graph(l);
}

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph star_graph(unsigned leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const Vertex shift = a.vertex_count();
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph random_bipartite(Vertex n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution keep(std::clamp(p, 0.0, 1.0));
  std::vector<std::uint8_t> side(n);
  for (auto& s : side) s = coin(rng) ? 1 : 0;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (side[u] != side[v] && keep(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_graph(Vertex n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution keep(std::clamp(p, 0.0, 1.0));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_tree(Vertex n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.push_back({static_cast<Vertex>(uniform_below(rng, v)), v});
  }
  return Graph(n, std::move(edges));
}

BlowupCycleShape blowup_cycle_shape(Vertex n) {
  if (n < 3) throw ParameterError("blowup_cycle_shape: need at least 3 vertices");
  auto l = static_cast<unsigned>(std::floor(std::sqrt(static_cast<double>(n))));
  if (l % 2 == 0) --l;
  l = std::max(l, 3u);
  const unsigned k = n / l;
  return {l, k, n - l * k};
}

Graph generate_blowup_cycle_family(Vertex n) {
  const auto shape = blowup_cycle_shape(n);
  const Graph core = generate_blowup(generate_odd_cycle(shape.cycle_length), shape.group_size);
  return disjoint_union(core, Graph(shape.padding));
}

}  // namespace bipartest
