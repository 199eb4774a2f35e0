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

#include "bipartest/graph.hpp"
#include "bipartest/oracle.hpp"

namespace bipartest {

/// Two-layer encoding of an XOR game as a bipartiteness instance.
///
/// Vertex x < n is v = x on the lower layer and x + n is its twin v' on the
/// upper layer. Indices 1..D return the twin (D parallel anchor edges).
/// Index D + j answers the source's j-th constraint of v: a Neq constraint
/// stays on x's layer, an Eq constraint crosses to the other layer. An Eq
/// loop therefore becomes one more anchor edge and a Neq loop a plain loop.
/// The lift makes no queries of its own; the ledger is the source's.
class LiftedOracle final : public ListOracle {
 public:
  LiftedOracle(XorListOracle& source, std::size_t anchors);

  Vertex vertex_count() const override { return 2 * n_; }
  std::size_t degree_bound() const override { return source_.degree_bound() + anchors_; }
  std::optional<Vertex> neighbor_query(Vertex x, std::size_t i) override;
  QueryLedger& ledger() override { return source_.ledger(); }

  std::size_t anchors() const { return anchors_; }
  Vertex source_vertex_count() const { return n_; }
  Vertex base(Vertex x) const { return x % n_; }
  bool upper(Vertex x) const { return x >= n_; }
  Vertex twin(Vertex x) const { return upper(x) ? x - n_ : x + n_; }
  XorListOracle& source() { return source_; }

 private:
  XorListOracle& source_;
  Vertex n_;
  std::size_t anchors_;
};

/// Queries every index of every lifted vertex and assembles the graph.
Graph materialize(ListOracle& oracle);

/// Direct lift of an in-memory game with `anchors` twin edges per vertex.
Graph lift_game(const XorGame& game, std::size_t anchors);

}  // namespace bipartest
