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

#include "bipartest/high_degree_scan.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace bipartest {

ParityForest ParityForest::build(Vertex n, std::span<const Edge> edges,
                                 std::span<const std::uint8_t> members) {
  if (members.size() != n) throw ParameterError("ParityForest::build: membership size mismatch");
  ParityForest f;
  f.parent_.assign(n, kNone);
  f.root_.assign(n, kNone);
  f.parity_.assign(n, 0);
  f.depth_.assign(n, 0);

  std::vector<Vertex> uf(n);
  std::iota(uf.begin(), uf.end(), Vertex{0});
  auto find = [&uf](Vertex x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  };
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n || !members[e.u] || !members[e.v]) continue;
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) continue;
    uf[a] = b;
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
    f.tree_edges_.push_back(e);
  }

  std::deque<Vertex> queue;
  for (Vertex r = 0; r < n; ++r) {
    if (!members[r] || f.root_[r] != kNone) continue;
    f.roots_.push_back(r);
    f.root_[r] = r;
    queue.push_back(r);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : adjacency[v]) {
        if (f.root_[w] != kNone) continue;
        f.root_[w] = r;
        f.parent_[w] = v;
        f.parity_[w] = static_cast<std::uint8_t>(f.parity_[v] ^ 1U);
        f.depth_[w] = f.depth_[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return f;
}

std::optional<Vertex> ParityForest::parent(Vertex v) const {
  const Vertex p = parent_.at(v);
  if (p == kNone) return std::nullopt;
  return p;
}

std::vector<Vertex> ParityForest::path(Vertex u, Vertex w) const {
  if (!contains(u) || !contains(w) || root_[u] != root_[w]) return {};
  std::vector<Vertex> up;
  std::vector<Vertex> down;
  Vertex a = u;
  Vertex b = w;
  while (depth_[a] > depth_[b]) {
    up.push_back(a);
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    down.push_back(b);
    b = parent_[b];
  }
  while (a != b) {
    up.push_back(a);
    down.push_back(b);
    a = parent_[a];
    b = parent_[b];
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

ForestParity forest_parity(const ParityForest& forest, Vertex u, Vertex w) {
  if (!forest.contains(u) || !forest.contains(w) || forest.root(u) != forest.root(w)) {
    return ForestParity::Disconnected;
  }
  return (forest.parity_to_root(u) ^ forest.parity_to_root(w)) ? ForestParity::Odd
                                                              : ForestParity::Even;
}

OddCycleDetector::OddCycleDetector(Vertex n)
    : parent_(n), parity_(n, 0), rank_(n, 0), tree_adjacency_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

std::pair<Vertex, std::uint8_t> OddCycleDetector::find(Vertex v) {
  // Two passes: locate the root, then point every vertex on the path at it
  // with its accumulated parity.
  Vertex root = v;
  std::uint8_t total = 0;
  while (parent_[root] != root) {
    total ^= parity_[root];
    root = parent_[root];
  }
  std::uint8_t remaining = total;
  Vertex x = v;
  while (parent_[x] != x) {
    const Vertex next = parent_[x];
    const std::uint8_t step = parity_[x];
    parent_[x] = root;
    parity_[x] = remaining;
    remaining ^= step;
    x = next;
  }
  return {root, total};
}

std::vector<Vertex> OddCycleDetector::tree_path(Vertex from, Vertex to) const {
  std::vector<Vertex> previous(parent_.size(), static_cast<Vertex>(-1));
  std::deque<Vertex> queue{from};
  previous[from] = from;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (Vertex w : tree_adjacency_[v]) {
      if (previous[w] == static_cast<Vertex>(-1)) {
        previous[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (previous[to] == static_cast<Vertex>(-1)) throw InternalError("OddCycleDetector: forest path missing");
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(previous[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<OddCycleWitness> OddCycleDetector::add_edge(Vertex u, Vertex v) {
  const auto [ru, pu] = find(u);
  const auto [rv, pv] = find(v);
  if (ru != rv) {
    Vertex a = ru;
    Vertex b = rv;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    parity_[b] = static_cast<std::uint8_t>(pu ^ pv ^ 1U);
    if (rank_[a] == rank_[b]) ++rank_[a];
    tree_adjacency_[u].push_back(v);
    tree_adjacency_[v].push_back(u);
    return std::nullopt;
  }
  if (pu != pv) return std::nullopt;
  // Same parity to a shared root: the even tree path u..v plus (v, u).
  return OddCycleWitness{tree_path(u, v)};
}

std::optional<OddCycleWitness> detect_odd_cycle(Vertex n, std::span<const Edge> edges) {
  OddCycleDetector detector(n);
  for (const auto& e : edges) {
    if (auto w = detector.add_edge(e.u, e.v)) return w;
  }
  return std::nullopt;
}

ScanResult scan_high_degree(PairOracle& oracle, const DegreePartition& part, double m, Rng& rng,
                            const HighDegreeScanParams& params) {
  const Vertex n = oracle.vertex_count();
  if (!(m > 0.0)) throw ParameterError("scan_high_degree: m must be positive");
  if (part.is_high.size() != n || part.d == 0) {
    throw ParameterError("scan_high_degree: partition does not match the oracle");
  }
  ScopedPhase phase(oracle.ledger(), "high-degree-scan");

  const double logn = log2n(n);
  const double d = static_cast<double>(part.d);
  ScanResult result;
  if (n >= 2) {
    result.rows = ceil_count(params.row_factor * n * logn / d);
    result.random_pairs =
        ceil_count(params.pair_factor * std::pow(static_cast<double>(n), 3) * logn * logn / (m * d));
  }

  QueriedEdgeSet queried;
  OddCycleDetector detector(n);
  auto record = [&](Vertex u, Vertex v, EdgeSource from) -> std::optional<OddCycleWitness> {
    queried.add({u, v}, from);
    return detector.add_edge(u, v);
  };

  for (Count r = 0; r < result.rows; ++r) {
    const auto v = static_cast<Vertex>(uniform_below(rng, n));
    for (Vertex w = 0; w < n; ++w) {
      if (w == v || !oracle.pair_query(v, w)) continue;
      if (auto cycle = record(v, w, EdgeSource::Row)) {
        result.outcome = std::move(*cycle);
        return result;
      }
    }
  }
  for (Count t = 0; t < result.random_pairs; ++t) {
    const auto u = static_cast<Vertex>(uniform_below(rng, n));
    const Vertex v = uniform_other_vertex(rng, n, u);
    if (!oracle.pair_query(u, v)) continue;
    if (auto cycle = record(u, v, EdgeSource::RandomPair)) {
      result.outcome = std::move(*cycle);
      return result;
    }
  }

  ScanForest found;
  found.forest = ParityForest::build(n, queried.edges, part.is_high);
  found.queried = std::move(queried);
  result.outcome = std::move(found);
  return result;
}

}  // namespace bipartest
