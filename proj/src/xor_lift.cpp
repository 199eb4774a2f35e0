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

#include "bipartest/xor_lift.hpp"

#include <map>
#include <utility>

namespace bipartest {

LiftedOracle::LiftedOracle(XorListOracle& source, std::size_t anchors)
    : source_(source), n_(source.vertex_count()), anchors_(anchors) {
  if (n_ >= (Vertex{1} << 31)) throw SizeLimitError("LiftedOracle: source too large");
}

std::optional<Vertex> LiftedOracle::neighbor_query(Vertex x, std::size_t i) {
  if (x >= vertex_count()) throw ParameterError("LiftedOracle: vertex out of range");
  if (i == 0) throw ParameterError("LiftedOracle: indices start at 1");
  if (i <= anchors_) return twin(x);
  const auto ans = source_.neighbor_query(base(x), i - anchors_);
  if (!ans) return std::nullopt;
  const bool same_layer = ans->label == Label::Neq;
  return (upper(x) == same_layer) ? ans->vertex + n_ : ans->vertex;
}

Graph materialize(ListOracle& oracle) {
  // A proper edge appears in both endpoint lists; a loop appears once per copy.
  std::map<std::pair<Vertex, Vertex>, Count> seen;
  for (Vertex x = 0; x < oracle.vertex_count(); ++x) {
    for (std::size_t i = 1; i <= oracle.degree_bound(); ++i) {
      const auto y = oracle.neighbor_query(x, i);
      if (!y) break;
      ++seen[{std::min(x, *y), std::max(x, *y)}];
    }
  }
  std::vector<Edge> edges;
  for (const auto& [key, count] : seen) {
    const Count copies = key.first == key.second ? count : (count + 1) / 2;
    for (Count k = 0; k < copies; ++k) edges.push_back({key.first, key.second});
  }
  return Graph(oracle.vertex_count(), std::move(edges));
}

Graph lift_game(const XorGame& game, std::size_t anchors) {
  const Vertex n = game.vertex_count();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t k = 0; k < anchors; ++k) edges.push_back({v, v + n});
  for (const auto& c : game.constraints()) {
    if (c.label == Label::Neq) {
      edges.push_back({c.u, c.v});
      if (c.u != c.v) edges.push_back({c.u + n, c.v + n});
      else edges.push_back({c.u + n, c.u + n});
    } else if (c.u == c.v) {
      edges.push_back({c.u, c.u + n});
    } else {
      edges.push_back({c.u, c.v + n});
      edges.push_back({c.u + n, c.v});
    }
  }
  return Graph(2 * n, std::move(edges));
}

}  // namespace bipartest
