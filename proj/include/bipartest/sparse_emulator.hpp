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
#include <unordered_map>
#include <vector>

#include "bipartest/degree_split.hpp"
#include "bipartest/high_degree_scan.hpp"
#include "bipartest/oracle.hpp"

namespace bipartest {

/// Raised when rejection sampling for a fresh matching edge exceeds its
/// attempt cap. The pipeline turns this into a one-sided accept.
class EmulationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EmulatorParams {
  std::size_t delta = 1;  // random matchings per dense component
  double m = 1.0;         // target removal distance
  std::size_t d = 1;      // degree threshold used by the split
  // experiments = ceil(classify_factor * n |L| log2 n / m)
  double classify_factor = 100.0;
  // dense iff hits >= ceil(hit_factor * log2 n)
  double hit_factor = 100.0 / 4.0;
  // per-query cap = ceil(attempt_factor * n^2 log2 n / m)
  double attempt_factor = 64.0;
};

enum class ComponentState : std::uint8_t { Unset, Sparse, Dense };

enum class AnswerKind : std::uint8_t { LowEdge, SparseLoop, Matching };

/// How an emitted constraint arises in the host graph.
struct AnswerProvenance {
  AnswerKind kind;
  Vertex high = 0;          // the high-degree neighbor w behind the slot
  Vertex partner_high = 0;  // the matched cut edge's high endpoint u
};

/// Lazy list oracle for the XOR game over the low-degree vertices L.
///
/// Vertex ids are positions in the partition's (ascending) low list. Each
/// host edge is doubled. For v in L with k doubled high neighbors, indices
/// 1..k*delta address cut-edge slots (neighbor (i-1)/delta, matching
/// (i-1)%delta); the following indices list v's doubled low neighbors with
/// label Neq. A slot into a sparse component answers the Eq loop (v, =); a
/// slot into a dense component is paired, on first touch, with a uniformly
/// sampled unmatched slot (z, u, copy) of the same component and matching,
/// labelled by the forest parity of w and u.
///
/// Every answer is stable: rows are cached and matchings are recorded on
/// both sides. Queries on the host are charged to phase "emulate".
class SparseEmulator final : public XorListOracle {
 public:
  SparseEmulator(PairOracle& host, const DegreePartition& part, ParityForest forest,
                 EmulatorParams params, std::uint64_t seed);

  Vertex vertex_count() const override { return static_cast<Vertex>(low_.size()); }
  /// 4*delta*d + 4*d: doubled edges, at most 2d neighbors per low vertex.
  std::size_t degree_bound() const override;
  std::optional<XorNeighbor> neighbor_query(Vertex v, std::size_t i) override;
  QueryLedger& ledger() override { return host_.ledger(); }

  const EmulatorParams& params() const { return params_; }
  const ParityForest& forest() const { return forest_; }
  Vertex host_vertex(Vertex local) const { return low_.at(local); }

  std::size_t component_count() const { return members_.size(); }
  std::size_t component_of(Vertex high) const;
  std::span<const Vertex> component_members(std::size_t c) const { return members_.at(c); }
  ComponentState component_state(std::size_t c) const { return state_.at(c); }
  /// Samples (u in C, z in L) pairs and fixes C's state. Idempotent.
  ComponentState classify_component(std::size_t c);

  /// Provenance of an already answered (v, i). Throws InternalError if the
  /// answer has not been produced yet.
  AnswerProvenance provenance(Vertex v, std::size_t i) const;

  /// Host walk from host_vertex(v) to the answer's host vertex; its length is
  /// odd exactly when the answer is labelled Neq. No queries are made.
  std::vector<Vertex> expand_answer(Vertex v, std::size_t i) const;

  /// Queries every index of every vertex and returns the full game; its
  /// adjacency lists equal the oracle's answers as multisets.
  XorGame materialize();

  /// Every matching table is a symmetric partial involution whose pairs
  /// stay inside one component.
  bool matchings_well_formed() const;
  std::size_t matched_slot_count() const;

 private:
  struct Row {
    std::vector<Vertex> low;   // local ids, each neighbor twice
    std::vector<Vertex> high;  // host ids, each neighbor twice
  };
  struct SlotRef {
    Vertex high;
    std::uint64_t slot;
    std::size_t matching;
  };

  static std::uint64_t pack_slot(Vertex low, Vertex high, unsigned copy);
  static Vertex slot_low(std::uint64_t slot) { return static_cast<Vertex>(slot >> 32); }
  static Vertex slot_high(std::uint64_t slot) {
    return static_cast<Vertex>((slot >> 1) & 0x7FFFFFFFU);
  }

  const Row& row(Vertex v);
  const Row& cached_row(Vertex v) const;
  SlotRef slot_at(Vertex v, const Row& r, std::size_t i) const;
  Label parity_label(Vertex w, Vertex u) const;
  XorNeighbor match_slot(const SlotRef& ref);

  PairOracle& host_;
  ParityForest forest_;
  EmulatorParams params_;
  Rng rng_;
  std::vector<Vertex> low_;
  std::vector<Vertex> local_of_;  // host id -> local id, or kNotLow
  std::vector<std::uint8_t> is_high_;
  std::vector<std::size_t> component_;  // host id -> component index
  std::vector<std::vector<Vertex>> members_;
  std::vector<ComponentState> state_;
  std::unordered_map<Vertex, Row> rows_;
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> matchings_;
};

}  // namespace bipartest
