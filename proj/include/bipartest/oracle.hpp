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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "bipartest/graph.hpp"

namespace bipartest {

/// Thrown by a ledger whose operation budget has been exhausted.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PhaseCount {
  Count pair_queries = 0;
  Count list_queries = 0;

  Count total() const { return pair_queries + list_queries; }
};

/// Monotone per-oracle query counters with a breakdown by named phase.
/// Every charge lands in the current phase, so the phase totals always sum
/// to the grand total.
class QueryLedger {
 public:
  void charge_pair(Count k = 1);
  void charge_list(Count k = 1);

  Count pair_queries() const { return pair_; }
  Count list_queries() const { return list_; }
  Count total() const { return pair_ + list_; }

  const std::string& phase() const { return phase_; }
  void set_phase(std::string name) { phase_ = std::move(name); }
  const std::map<std::string, PhaseCount>& phases() const { return phases_; }

  /// Caps total() at `limit`; the charge that would exceed it throws
  /// BudgetExhausted. nullopt removes the cap.
  void set_budget(std::optional<Count> limit) { budget_ = limit; }
  std::optional<Count> budget() const { return budget_; }

 private:
  void check_budget();

  Count pair_ = 0;
  Count list_ = 0;
  std::string phase_ = "default";
  std::map<std::string, PhaseCount> phases_;
  std::optional<Count> budget_;
};

/// Restores the ledger's previous phase on scope exit.
class ScopedPhase {
 public:
  ScopedPhase(QueryLedger& ledger, std::string name);
  ~ScopedPhase();
  ScopedPhase(const ScopedPhase&) = delete;
  ScopedPhase& operator=(const ScopedPhase&) = delete;

 private:
  QueryLedger& ledger_;
  std::string previous_;
};

struct LedgerReport {
  Count pair_queries = 0;
  Count list_queries = 0;
  std::map<std::string, Count> phases;
};

LedgerReport ledger_report(const QueryLedger& ledger);
/// {pair_queries, list_queries, phases: {name: count}}
nlohmann::json to_json(const LedgerReport& report);

/// Dense-model access: pair queries only.
class PairOracle {
 public:
  virtual ~PairOracle() = default;
  virtual Vertex vertex_count() const = 0;
  /// True iff (u, v) is an edge. Charges one pair query. u == v is allowed
  /// and answers whether a loop exists.
  virtual bool pair_query(Vertex u, Vertex v) = 0;
  virtual QueryLedger& ledger() = 0;
};

/// Pair oracle over a hidden graph. The graph is never exposed.
class GraphPairOracle final : public PairOracle {
 public:
  explicit GraphPairOracle(std::shared_ptr<const Graph> graph,
                           std::shared_ptr<QueryLedger> ledger = nullptr);

  Vertex vertex_count() const override { return graph_->vertex_count(); }
  bool pair_query(Vertex u, Vertex v) override;
  QueryLedger& ledger() override { return *ledger_; }

 private:
  std::shared_ptr<const Graph> graph_;
  std::shared_ptr<QueryLedger> ledger_;
  std::vector<std::uint64_t> bits_;  // adjacency bit matrix for small n
};

/// The subgraph induced on a vertex subset of a host oracle. Queries are
/// forwarded to (and charged on) the host.
class InducedPairOracle final : public PairOracle {
 public:
  InducedPairOracle(PairOracle& host, std::vector<Vertex> vertices);

  Vertex vertex_count() const override { return static_cast<Vertex>(vertices_.size()); }
  bool pair_query(Vertex u, Vertex v) override;
  QueryLedger& ledger() override { return host_.ledger(); }

  const std::vector<Vertex>& host_vertices() const { return vertices_; }

 private:
  PairOracle& host_;
  std::vector<Vertex> vertices_;
};

/// Sparse-model access: the i-th neighbor (1-based) of v, or nullopt past v's
/// degree. Answers for a fixed (v, i) never change.
class ListOracle {
 public:
  virtual ~ListOracle() = default;
  virtual Vertex vertex_count() const = 0;
  virtual std::size_t degree_bound() const = 0;
  virtual std::optional<Vertex> neighbor_query(Vertex v, std::size_t i) = 0;
  virtual QueryLedger& ledger() = 0;
};

/// List oracle over a hidden graph; neighbors ascend by id with parallel
/// edges adjacent. The degree bound defaults to the maximum degree.
class GraphListOracle final : public ListOracle {
 public:
  explicit GraphListOracle(std::shared_ptr<const Graph> graph,
                           std::optional<std::size_t> degree_bound = std::nullopt,
                           std::shared_ptr<QueryLedger> ledger = nullptr);

  Vertex vertex_count() const override { return graph_->vertex_count(); }
  std::size_t degree_bound() const override { return bound_; }
  std::optional<Vertex> neighbor_query(Vertex v, std::size_t i) override;
  QueryLedger& ledger() override { return *ledger_; }

 private:
  std::shared_ptr<const Graph> graph_;
  std::size_t bound_;
  std::shared_ptr<QueryLedger> ledger_;
};

/// List oracle emulated over a pair oracle: the first query at v scans its
/// whole row (n pair queries, v itself included) and caches it.
class DenseToListOracle final : public ListOracle {
 public:
  DenseToListOracle(PairOracle& dense, std::size_t degree_bound);

  Vertex vertex_count() const override { return dense_.vertex_count(); }
  std::size_t degree_bound() const override { return bound_; }
  std::optional<Vertex> neighbor_query(Vertex v, std::size_t i) override;
  QueryLedger& ledger() override { return dense_.ledger(); }

 private:
  PairOracle& dense_;
  std::size_t bound_;
  std::unordered_map<Vertex, std::vector<Vertex>> rows_;
};

inline std::unique_ptr<DenseToListOracle> dense_to_list(PairOracle& dense,
                                                        std::size_t degree_bound) {
  return std::make_unique<DenseToListOracle>(dense, degree_bound);
}

/// Sparse-model access to an XOR game: the i-th incident constraint of v.
class XorListOracle {
 public:
  virtual ~XorListOracle() = default;
  virtual Vertex vertex_count() const = 0;
  virtual std::size_t degree_bound() const = 0;
  virtual std::optional<XorNeighbor> neighbor_query(Vertex v, std::size_t i) = 0;
  virtual QueryLedger& ledger() = 0;
};

class GameListOracle final : public XorListOracle {
 public:
  explicit GameListOracle(std::shared_ptr<const XorGame> game,
                          std::optional<std::size_t> degree_bound = std::nullopt,
                          std::shared_ptr<QueryLedger> ledger = nullptr);

  Vertex vertex_count() const override { return game_->vertex_count(); }
  std::size_t degree_bound() const override { return bound_; }
  std::optional<XorNeighbor> neighbor_query(Vertex v, std::size_t i) override;
  QueryLedger& ledger() override { return *ledger_; }

 private:
  std::shared_ptr<const XorGame> game_;
  std::size_t bound_;
  std::shared_ptr<QueryLedger> ledger_;
};

/// verify_odd_cycle with edge checks charged as pair queries on `oracle`.
bool verify_odd_cycle(PairOracle& oracle, const OddCycleWitness& w);

}  // namespace bipartest
