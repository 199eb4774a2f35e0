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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bipartest/common.hpp"

namespace bipartest {

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with list access (sorted adjacency, parallel edges
/// repeated) and pair access (multiplicity lookup). Immutable once built.
///
/// A loop (v, v) appears once in the adjacency of v.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbors of v in ascending id order, each incident edge once.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  std::size_t multiplicity(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  bool has_loops() const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  /// Every edge replaced by two parallel copies.
  Graph doubled() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

enum class Label : std::uint8_t { Eq, Neq };

const char* to_string(Label label);

struct Constraint {
  Vertex u;
  Vertex v;
  Label label;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct XorNeighbor {
  Vertex vertex;
  Label label;

  friend bool operator==(const XorNeighbor&, const XorNeighbor&) = default;
};

/// Graph whose edges demand equal (Eq) or different (Neq) endpoint colors.
/// Loops are allowed; an Eq loop is always satisfied and a Neq loop never is.
class XorGame {
 public:
  XorGame() = default;
  explicit XorGame(Vertex n);
  XorGame(Vertex n, std::vector<Constraint> constraints);

  Vertex vertex_count() const { return n_; }
  std::size_t constraint_count() const { return constraints_.size(); }
  std::span<const Constraint> constraints() const { return constraints_; }

  /// Incident constraints of v sorted by (vertex, label); loops listed once.
  std::span<const XorNeighbor> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;

  /// Number of constraints violated by `side` (one color bit per vertex).
  Count violations(std::span<const std::uint8_t> side) const;

  /// The game with every edge labelled Neq.
  static XorGame from_graph(const Graph& g);

  friend bool operator==(const XorGame& a, const XorGame& b) {
    return a.n_ == b.n_ && a.constraints_ == b.constraints_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Constraint> constraints_;
  std::vector<std::size_t> offsets_{0};
  std::vector<XorNeighbor> adjacency_;
};

/// One color bit per vertex of the host graph or game.
struct Bipartition {
  std::vector<std::uint8_t> side;

  /// Monochromatic edges of g under this coloring (loops always count).
  Count monochromatic_edges(const Graph& g) const;
};

/// Closed walk v0, v1, ..., v_{k-1} (edge v_{k-1} -> v0 implied). A valid
/// witness is a simple cycle of odd length >= 3.
struct OddCycleWitness {
  std::vector<Vertex> vertices;

  friend bool operator==(const OddCycleWitness&, const OddCycleWitness&) = default;
};

/// Proper 2-coloring by BFS, or empty when g has an odd cycle.
std::vector<std::uint8_t> bfs_two_coloring(const Graph& g);

// Text formats. Graph: "n m" then m lines "u v". XorGame: "n m" then m
// lines "u v =" or "u v !=". Emission is byte-exact with the stored order.
Graph read_graph(std::istream& in);
XorGame read_xor_game(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
void write_xor_game(std::ostream& out, const XorGame& game);

Graph load_graph(const std::string& path);
XorGame load_xor_game(const std::string& path);
void save_graph(const std::string& path, const Graph& g);
void save_xor_game(const std::string& path, const XorGame& game);

/// True when the text's first edge line carries a label column.
bool looks_like_xor_game(const std::string& text);

}  // namespace bipartest
