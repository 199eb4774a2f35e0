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
#include <span>
#include <variant>
#include <vector>

#include "bipartest/degree_split.hpp"
#include "bipartest/oracle.hpp"

namespace bipartest {

enum class EdgeSource : std::uint8_t { Row, RandomPair };

/// Edges the oracle confirmed present, in discovery order.
struct QueriedEdgeSet {
  std::vector<Edge> edges;
  std::vector<EdgeSource> source;

  void add(Edge e, EdgeSource from) {
    edges.push_back(e);
    source.push_back(from);
  }
  std::size_t size() const { return edges.size(); }
};

/// Rooted spanning forest over a vertex subset with parity-to-root labels.
/// Vertices outside the subset are not part of the forest.
class ParityForest {
 public:
  ParityForest() = default;

  /// Maximal forest of the edges whose endpoints are both members. Each tree
  /// is rooted at its smallest vertex.
  static ParityForest build(Vertex n, std::span<const Edge> edges,
                            std::span<const std::uint8_t> members);

  Vertex vertex_count() const { return static_cast<Vertex>(root_.size()); }
  bool contains(Vertex v) const { return v < root_.size() && root_[v] != kNone; }
  Vertex root(Vertex v) const { return root_.at(v); }
  std::optional<Vertex> parent(Vertex v) const;
  std::uint8_t parity_to_root(Vertex v) const { return parity_.at(v); }
  const std::vector<Vertex>& roots() const { return roots_; }
  std::span<const Edge> forest_edges() const { return tree_edges_; }

  /// Tree path u, ..., w (both included); empty when u and w are in
  /// different trees or outside the forest.
  std::vector<Vertex> path(Vertex u, Vertex w) const;

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  std::vector<Vertex> parent_;
  std::vector<Vertex> root_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint32_t> depth_;
  std::vector<Vertex> roots_;
  std::vector<Edge> tree_edges_;
};

enum class ForestParity { Even, Odd, Disconnected };

ForestParity forest_parity(const ParityForest& forest, Vertex u, Vertex w);

/// Incremental odd-cycle detection: a parity union-find (path compression,
/// parity accumulation) plus the explicit spanning-forest edges needed to
/// rebuild the cycle when an added edge closes an odd one.
class OddCycleDetector {
 public:
  explicit OddCycleDetector(Vertex n);

  /// Adds edge (u, v); returns a simple odd cycle through it if the edges
  /// seen so far stop being bipartite.
  std::optional<OddCycleWitness> add_edge(Vertex u, Vertex v);

 private:
  std::pair<Vertex, std::uint8_t> find(Vertex v);
  std::vector<Vertex> tree_path(Vertex from, Vertex to) const;

  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> parity_;  // parity to parent_
  std::vector<std::uint8_t> rank_;
  std::vector<std::vector<Vertex>> tree_adjacency_;
};

/// None iff the edge set is bipartite; otherwise a simple odd cycle made of
/// its edges.
std::optional<OddCycleWitness> detect_odd_cycle(Vertex n, std::span<const Edge> edges);

/// s = ceil(row_factor * n log2 n / d) full rows, then
/// t = ceil(pair_factor * n^3 (log2 n)^2 / (m d)) uniform pairs.
struct HighDegreeScanParams {
  double row_factor = 10.0;
  double pair_factor = 40.0;
};

struct ScanForest {
  QueriedEdgeSet queried;
  ParityForest forest;  // over the high-degree vertices only
};

struct ScanResult {
  std::variant<OddCycleWitness, ScanForest> outcome;
  Count rows = 0;          // s
  Count random_pairs = 0;  // t

  bool found_odd_cycle() const { return std::holds_alternative<OddCycleWitness>(outcome); }
};

/// Queries full rows of s uniform vertices and t uniform pairs, stopping at
/// the first odd cycle among the confirmed edges. Without one, returns the
/// confirmed edges and a maximal parity forest of their high-high part.
/// Queries are charged to phase "high-degree-scan".
ScanResult scan_high_degree(PairOracle& oracle, const DegreePartition& part, double m, Rng& rng,
                            const HighDegreeScanParams& params = {});

}  // namespace bipartest
