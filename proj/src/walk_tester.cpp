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

#include "bipartest/walk_tester.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "bipartest/witness.hpp"

namespace bipartest {

namespace {

Count clamp_to(Count value, const std::optional<Count>& cap) {
  return cap ? std::min(value, *cap) : value;
}

std::vector<WalkEdge> moves_of(const WalkRecord& w) {
  std::vector<WalkEdge> moves;
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    if (w.indices[k] == 0) continue;
    moves.push_back({w.steps[k], w.indices[k], w.steps[k + 1], false});
  }
  return moves;
}

}  // namespace

WalkParams walk_params(Vertex n, double delta, const WalkCoefficients& coeff) {
  if (!(delta > 0.0)) throw ParameterError("walk_params: delta must be positive");
  const double ratio = log2n(n) / delta;
  WalkParams p;
  p.delta = delta;
  p.starts = clamp_to(std::max<Count>(1, ceil_count(coeff.c3 / delta)), coeff.max_starts);
  p.walks_per_start = clamp_to(
      std::max<Count>(1, ceil_count(coeff.c1 * std::sqrt(static_cast<double>(n)) * ratio * ratio *
                                    ratio)),
      coeff.max_walks);
  p.walk_length =
      clamp_to(std::max<Count>(1, ceil_count(coeff.c2 * ratio * ratio)), coeff.max_length);
  return p;
}

WalkRecord random_walk(ListOracle& oracle, Vertex start, Count len, Rng& rng) {
  if (start >= oracle.vertex_count()) throw ParameterError("random_walk: start out of range");
  WalkRecord w;
  w.start = start;
  w.steps.reserve(len + 1);
  w.indices.reserve(len);
  w.steps.push_back(start);
  const std::size_t bound = oracle.degree_bound();
  Vertex at = start;
  for (Count s = 0; s < len; ++s) {
    if (bound == 0) {
      w.indices.push_back(0);  // nothing to draw: a forced stay
      w.steps.push_back(at);
      continue;
    }
    const std::size_t i = 1 + uniform_below(rng, bound);
    const auto next = oracle.neighbor_query(at, i);
    if (next) {
      at = *next;
      w.parity ^= 1U;
      w.indices.push_back(i);
    } else {
      w.indices.push_back(0);  // lazy stay
    }
    w.steps.push_back(at);
  }
  return w;
}

std::vector<Vertex> walk_vertices(Vertex start, const std::vector<WalkEdge>& edges) {
  std::vector<Vertex> out{start};
  for (const auto& e : edges) {
    if (e.from() != out.back()) throw InternalError("walk_vertices: edges do not chain");
    out.push_back(e.to());
  }
  return out;
}

GrResult gr_test(ListOracle& oracle, const WalkParams& params, Rng& rng) {
  ScopedPhase phase(oracle.ledger(), "walk");
  GrResult result;
  const Vertex n = oracle.vertex_count();
  if (n == 0) return result;
  for (Count s = 0; s < params.starts; ++s) {
    const auto start = static_cast<Vertex>(uniform_below(rng, n));
    // (end, parity) -> moves of the first walk that got there.
    std::unordered_map<std::uint64_t, std::vector<WalkEdge>> seen;
    auto key = [](Vertex end, unsigned parity) {
      return (std::uint64_t{end} << 1) | (parity & 1U);
    };
    seen.emplace(key(start, 0), std::vector<WalkEdge>{});
    for (Count k = 0; k < params.walks_per_start; ++k) {
      const WalkRecord w = random_walk(oracle, start, params.walk_length, rng);
      ++result.walks;
      auto other = seen.find(key(w.end(), w.parity ^ 1U));
      if (other == seen.end()) {
        seen.try_emplace(key(w.end(), w.parity), moves_of(w));
        continue;
      }
      WalkDetection det;
      det.start = start;
      det.closed_walk = moves_of(w);
      for (auto it = other->second.rbegin(); it != other->second.rend(); ++it) {
        WalkEdge back = *it;
        back.reversed = !back.reversed;
        det.closed_walk.push_back(back);
      }
      auto vertices = walk_vertices(start, det.closed_walk);
      vertices.pop_back();
      det.cycle.vertices = simple_odd_cycle(vertices);
      result.detection = std::move(det);
      return result;
    }
  }
  return result;
}

}  // namespace bipartest
