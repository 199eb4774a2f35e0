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

#include "bipartest/distance.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>

namespace bipartest {
namespace {

// Per-vertex neighbor masks split by multiplicity level: level l holds the
// neighbors joined to v by more than l parallel edges. Loops excluded.
struct LeveledMasks {
  std::vector<std::vector<std::uint32_t>> levels;
  std::vector<std::uint32_t> degree;

  explicit LeveledMasks(Vertex n) : levels(n), degree(n, 0) {}

  void add(Vertex v, Vertex w) {
    const std::uint32_t bit = std::uint32_t{1} << w;
    ++degree[v];
    for (auto& mask : levels[v]) {
      if (!(mask & bit)) {
        mask |= bit;
        return;
      }
    }
    levels[v].push_back(bit);
  }

  std::uint32_t count(Vertex v, std::uint32_t set) const {
    std::uint32_t c = 0;
    for (auto mask : levels[v]) c += static_cast<std::uint32_t>(std::popcount(mask & set));
    return c;
  }
};

void require_exact_size(Vertex n, const char* what) {
  if (n > kExactThreshold) {
    throw SizeLimitError(std::string(what) + ": " + std::to_string(n) +
                         " vertices exceeds the exact threshold of " +
                         std::to_string(kExactThreshold) +
                         "; use heuristic_bipartite_distance instead");
  }
}

std::vector<std::uint8_t> unpack(std::uint32_t colors, Vertex n) {
  std::vector<std::uint8_t> side(n);
  for (Vertex v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>((colors >> v) & 1U);
  return side;
}

}  // namespace

ExactDistance exact_bipartite_coloring(const Graph& g) {
  const Vertex n = g.vertex_count();
  require_exact_size(n, "exact_bipartite_distance");
  LeveledMasks masks(n);
  Count loops = 0;
  Count plain = 0;
  for (const auto& e : g.edges()) {
    if (e.u == e.v) {
      ++loops;
      continue;
    }
    masks.add(e.u, e.v);
    masks.add(e.v, e.u);
    ++plain;
  }
  if (n <= 1) return {loops, std::vector<std::uint8_t>(n, 0)};

  const std::uint32_t full = n == 32 ? ~0U : ((std::uint32_t{1} << n) - 1);
  // The last vertex keeps color 0; the Gray code walks the other n-1 bits.
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  std::uint32_t colors = 0;
  std::int64_t current = static_cast<std::int64_t>(plain);
  std::int64_t best = current;
  std::uint32_t best_colors = 0;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<Vertex>(std::countr_zero(i));
    const std::uint32_t bit = std::uint32_t{1} << v;
    const std::uint32_t same_side = (colors & bit) ? colors : (~colors & full);
    const auto same = static_cast<std::int64_t>(masks.count(v, same_side));
    current += static_cast<std::int64_t>(masks.degree[v]) - 2 * same;
    colors ^= bit;
    if (current < best) {
      best = current;
      best_colors = colors;
    }
  }
  return {static_cast<Count>(best) + loops, unpack(best_colors, n)};
}

Count exact_bipartite_distance(const Graph& g) { return exact_bipartite_coloring(g).distance; }

ExactDistance exact_xor_assignment(const XorGame& game) {
  const Vertex n = game.vertex_count();
  require_exact_size(n, "exact_xor_distance");
  LeveledMasks eq(n);
  LeveledMasks neq(n);
  std::vector<std::uint32_t> degree(n, 0);
  Count neq_loops = 0;
  Count neq_plain = 0;
  for (const auto& c : game.constraints()) {
    if (c.u == c.v) {
      if (c.label == Label::Neq) ++neq_loops;
      continue;
    }
    auto& masks = c.label == Label::Eq ? eq : neq;
    masks.add(c.u, c.v);
    masks.add(c.v, c.u);
    ++degree[c.u];
    ++degree[c.v];
    if (c.label == Label::Neq) ++neq_plain;
  }
  if (n <= 1) return {neq_loops, std::vector<std::uint8_t>(n, 0)};

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  std::uint32_t colors = 0;
  std::int64_t current = static_cast<std::int64_t>(neq_plain);
  std::int64_t best = current;
  std::uint32_t best_colors = 0;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<Vertex>(std::countr_zero(i));
    const std::uint32_t bit = std::uint32_t{1} << v;
    const std::uint32_t same_side = (colors & bit) ? colors : (~colors & full);
    const std::uint32_t other_side = ~same_side & full;
    const auto violated =
        static_cast<std::int64_t>(eq.count(v, other_side) + neq.count(v, same_side));
    current += static_cast<std::int64_t>(degree[v]) - 2 * violated;
    colors ^= bit;
    if (current < best) {
      best = current;
      best_colors = colors;
    }
  }
  return {static_cast<Count>(best) + neq_loops, unpack(best_colors, n)};
}

Count exact_xor_distance(const XorGame& game) { return exact_xor_assignment(game).distance; }

namespace {

void bfs_seed_coloring(const Graph& g, Rng& rng, std::vector<std::uint8_t>& side) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint8_t> seen(n, 0);
  std::deque<Vertex> queue;
  for (Vertex root : order) {
    if (seen[root]) continue;
    seen[root] = 1;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          side[w] = static_cast<std::uint8_t>(1 - side[v]);
          queue.push_back(w);
        }
      }
    }
  }
}

// Incident monochromatic minus bichromatic non-loop edges: flipping v
// reduces the violation count by exactly this amount.
std::int64_t flip_gain(const Graph& g, const std::vector<std::uint8_t>& side, Vertex v) {
  std::int64_t gain = 0;
  for (Vertex w : g.neighbors(v)) {
    if (w == v) continue;
    gain += side[w] == side[v] ? 1 : -1;
  }
  return gain;
}

void local_search(const Graph& g, std::vector<std::uint8_t>& side) {
  const Vertex n = g.vertex_count();
  std::deque<Vertex> pending(n);
  std::iota(pending.begin(), pending.end(), Vertex{0});
  std::vector<std::uint8_t> queued(n, 1);
  while (!pending.empty()) {
    const Vertex v = pending.front();
    pending.pop_front();
    queued[v] = 0;
    if (flip_gain(g, side, v) <= 0) continue;
    side[v] ^= 1;
    for (Vertex w : g.neighbors(v)) {
      if (!queued[w]) {
        queued[w] = 1;
        pending.push_back(w);
      }
    }
  }
}

}  // namespace

Count heuristic_bipartite_distance(const Graph& g, unsigned effort, std::uint64_t seed) {
  const Vertex n = g.vertex_count();
  Rng rng(seed);
  Bipartition coloring{std::vector<std::uint8_t>(n, 0)};
  Count best = coloring.monochromatic_edges(g);
  std::bernoulli_distribution coin(0.5);
  for (unsigned r = 0; r < std::max(effort, 1u) && best > 0; ++r) {
    if (r % 2 == 0) {
      bfs_seed_coloring(g, rng, coloring.side);
    } else {
      for (auto& s : coloring.side) s = coin(rng) ? 1 : 0;
    }
    local_search(g, coloring.side);
    best = std::min(best, coloring.monochromatic_edges(g));
  }
  return best;
}

DistanceEvidence distance_evidence(const Graph& g, unsigned effort, std::uint64_t seed) {
  if (g.vertex_count() <= kExactThreshold) return {exact_bipartite_distance(g), true};
  return {heuristic_bipartite_distance(g, effort, seed), false};
}

bool expander_check(const Graph& g, double alpha) {
  const Vertex n = g.vertex_count();
  if (n > kExpanderCheckLimit) {
    throw SizeLimitError("expander_check: " + std::to_string(n) + " vertices exceeds " +
                         std::to_string(kExpanderCheckLimit));
  }
  if (n < 2) return true;
  LeveledMasks masks(n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    masks.add(e.u, e.v);
    masks.add(e.v, e.u);
  }
  // Gray-code walk over all subsets, maintaining |S| and |E(S, complement)|.
  std::uint32_t set = 0;
  std::int64_t cut = 0;
  unsigned size = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<Vertex>(std::countr_zero(i));
    const std::uint32_t bit = std::uint32_t{1} << v;
    const auto inside = static_cast<std::int64_t>(masks.count(v, set & ~bit));
    if (set & bit) {
      cut -= static_cast<std::int64_t>(masks.degree[v]) - 2 * inside;
      --size;
    } else {
      cut += static_cast<std::int64_t>(masks.degree[v]) - 2 * inside;
      ++size;
    }
    set ^= bit;
    if (size >= 1 && 2 * size <= n && static_cast<double>(cut) < alpha * size) return false;
  }
  return true;
}

}  // namespace bipartest
