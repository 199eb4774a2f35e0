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

#include "bipartest/oracle.hpp"

#include "bipartest/witness.hpp"

namespace bipartest {
namespace {

constexpr Vertex kBitMatrixLimit = 8192;

void check_vertex(Vertex n, Vertex v, const char* what) {
  if (v >= n) {
    throw ParameterError(std::string(what) + ": vertex " + std::to_string(v) +
                         " out of range for " + std::to_string(n) + " vertices");
  }
}

void check_index(std::size_t i, const char* what) {
  if (i == 0) throw ParameterError(std::string(what) + ": neighbor indices start at 1");
}

}  // namespace

void QueryLedger::check_budget() {
  if (budget_ && total() > *budget_) {
    throw BudgetExhausted("query budget of " + std::to_string(*budget_) + " exhausted");
  }
}

void QueryLedger::charge_pair(Count k) {
  pair_ += k;
  phases_[phase_].pair_queries += k;
  check_budget();
}

void QueryLedger::charge_list(Count k) {
  list_ += k;
  phases_[phase_].list_queries += k;
  check_budget();
}

ScopedPhase::ScopedPhase(QueryLedger& ledger, std::string name)
    : ledger_(ledger), previous_(ledger.phase()) {
  ledger_.set_phase(std::move(name));
}

ScopedPhase::~ScopedPhase() { ledger_.set_phase(std::move(previous_)); }

LedgerReport ledger_report(const QueryLedger& ledger) {
  LedgerReport report{ledger.pair_queries(), ledger.list_queries(), {}};
  for (const auto& [name, count] : ledger.phases()) report.phases[name] = count.total();
  return report;
}

nlohmann::json to_json(const LedgerReport& report) {
  nlohmann::json phases = nlohmann::json::object();
  for (const auto& [name, count] : report.phases) phases[name] = count;
  return {{"pair_queries", report.pair_queries},
          {"list_queries", report.list_queries},
          {"phases", phases}};
}

GraphPairOracle::GraphPairOracle(std::shared_ptr<const Graph> graph,
                                 std::shared_ptr<QueryLedger> ledger)
    : graph_(std::move(graph)),
      ledger_(ledger ? std::move(ledger) : std::make_shared<QueryLedger>()) {
  const Vertex n = graph_->vertex_count();
  if (n <= kBitMatrixLimit) {
    const std::size_t words = (static_cast<std::size_t>(n) * n + 63) / 64;
    bits_.assign(words, 0);
    for (const auto& e : graph_->edges()) {
      const std::size_t a = static_cast<std::size_t>(e.u) * n + e.v;
      const std::size_t b = static_cast<std::size_t>(e.v) * n + e.u;
      bits_[a / 64] |= std::uint64_t{1} << (a % 64);
      bits_[b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }
}

bool GraphPairOracle::pair_query(Vertex u, Vertex v) {
  const Vertex n = graph_->vertex_count();
  check_vertex(n, u, "pair_query");
  check_vertex(n, v, "pair_query");
  ledger_->charge_pair();
  if (!bits_.empty()) {
    const std::size_t a = static_cast<std::size_t>(u) * n + v;
    return (bits_[a / 64] >> (a % 64)) & 1U;
  }
  return graph_->has_edge(u, v);
}

InducedPairOracle::InducedPairOracle(PairOracle& host, std::vector<Vertex> vertices)
    : host_(host), vertices_(std::move(vertices)) {
  for (Vertex v : vertices_) check_vertex(host_.vertex_count(), v, "InducedPairOracle");
}

bool InducedPairOracle::pair_query(Vertex u, Vertex v) {
  check_vertex(vertex_count(), u, "pair_query");
  check_vertex(vertex_count(), v, "pair_query");
  return host_.pair_query(vertices_[u], vertices_[v]);
}

GraphListOracle::GraphListOracle(std::shared_ptr<const Graph> graph,
                                 std::optional<std::size_t> degree_bound,
                                 std::shared_ptr<QueryLedger> ledger)
    : graph_(std::move(graph)),
      bound_(degree_bound.value_or(graph_->max_degree())),
      ledger_(ledger ? std::move(ledger) : std::make_shared<QueryLedger>()) {}

std::optional<Vertex> GraphListOracle::neighbor_query(Vertex v, std::size_t i) {
  check_vertex(vertex_count(), v, "neighbor_query");
  check_index(i, "neighbor_query");
  ledger_->charge_list();
  const auto nb = graph_->neighbors(v);
  if (i > bound_ || i > nb.size()) return std::nullopt;
  return nb[i - 1];
}

DenseToListOracle::DenseToListOracle(PairOracle& dense, std::size_t degree_bound)
    : dense_(dense), bound_(degree_bound) {}

std::optional<Vertex> DenseToListOracle::neighbor_query(Vertex v, std::size_t i) {
  check_vertex(vertex_count(), v, "neighbor_query");
  check_index(i, "neighbor_query");
  dense_.ledger().charge_list();
  auto it = rows_.find(v);
  if (it == rows_.end()) {
    std::vector<Vertex> row;
    for (Vertex w = 0; w < vertex_count(); ++w) {
      if (dense_.pair_query(v, w)) row.push_back(w);
    }
    it = rows_.emplace(v, std::move(row)).first;
  }
  if (i > bound_ || i > it->second.size()) return std::nullopt;
  return it->second[i - 1];
}

GameListOracle::GameListOracle(std::shared_ptr<const XorGame> game,
                               std::optional<std::size_t> degree_bound,
                               std::shared_ptr<QueryLedger> ledger)
    : game_(std::move(game)),
      bound_(degree_bound.value_or(game_->max_degree())),
      ledger_(ledger ? std::move(ledger) : std::make_shared<QueryLedger>()) {}

std::optional<XorNeighbor> GameListOracle::neighbor_query(Vertex v, std::size_t i) {
  check_vertex(vertex_count(), v, "neighbor_query");
  check_index(i, "neighbor_query");
  ledger_->charge_list();
  const auto nb = game_->neighbors(v);
  if (i > bound_ || i > nb.size()) return std::nullopt;
  return nb[i - 1];
}

bool verify_odd_cycle(PairOracle& oracle, const OddCycleWitness& w) {
  return verify_odd_cycle(oracle.vertex_count(), w,
                          [&oracle](Vertex a, Vertex b) { return oracle.pair_query(a, b); });
}

}  // namespace bipartest
