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

#include "bipartest/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bipartest/witness.hpp"

namespace bipartest {

PipelineConfig PipelineConfig::reference() { return PipelineConfig{}; }

PipelineConfig PipelineConfig::desk() {
  PipelineConfig c;
  c.c_m = 0.0;
  c.d_exponent = 0.5;
  c.budget_factor = 0.001;
  c.split = {0.25, 0.25};
  c.scan = {0.25, 0.01};
  c.classify_factor = 2.0;
  c.hit_factor = 0.5;
  c.attempt_factor = 1.0;
  c.walk.max_starts = 4;
  c.walk.max_walks = 64;
  c.walk.max_length = 24;
  return c;
}

void PipelineConfig::validate() const {
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("eps must lie in (0, 1]");
  if (!(sample_exponent > 0.0)) throw ParameterError("sample_exponent must be positive");
  if (!(d_exponent > 0.0 && d_exponent <= 1.0)) throw ParameterError("d_exponent must lie in (0, 1]");
  if (c_m < 0.0) throw ParameterError("c_m must be non-negative");
  if (!(delta_factor > 0.0) || !(budget_factor > 0.0))
    throw ParameterError("delta_factor and budget_factor must be positive");
  const double factors[] = {split.sample_factor, split.threshold_factor, scan.row_factor,
                            scan.pair_factor,    classify_factor,        hit_factor,
                            attempt_factor,      walk.c1,                walk.c2,
                            walk.c3};
  for (double f : factors)
    if (!(f >= 0.0)) throw ParameterError("pipeline factors must be non-negative");
}

const std::vector<std::string>& PipelineConfig::keys() {
  static const std::vector<std::string> k = {
      "profile",           "eps",          "sample_exponent",   "sample_floor",
      "c_m",               "d_exponent",   "delta_factor",      "budget_factor",
      "split_sample",      "split_threshold", "scan_rows",      "scan_pairs",
      "classify_factor",   "hit_factor",   "attempt_factor",    "walk_c1",
      "walk_c2",           "walk_c3",      "walk_max_starts",   "walk_max_walks",
      "walk_max_length",   "seed"};
  return k;
}

void PipelineConfig::apply(const KeyValues& kv) {
  if (auto p = kv.get_string("profile")) {
    // A profile resets the constants, not the run seed.
    const std::uint64_t keep = seed;
    if (*p == "reference") *this = reference();
    else if (*p == "desk") *this = desk();
    else throw ParameterError("profile must be 'reference' or 'desk'");
    seed = keep;
  }
  auto set = [&kv](const char* key, double& field) {
    if (auto v = kv.get_double(key)) field = *v;
  };
  auto set_count = [&kv](const char* key, auto& field) {
    if (auto v = kv.get_count(key)) field = *v;
  };
  set("eps", eps);
  set("sample_exponent", sample_exponent);
  set_count("sample_floor", sample_floor);
  set("c_m", c_m);
  set("d_exponent", d_exponent);
  set("delta_factor", delta_factor);
  set("budget_factor", budget_factor);
  set("split_sample", split.sample_factor);
  set("split_threshold", split.threshold_factor);
  set("scan_rows", scan.row_factor);
  set("scan_pairs", scan.pair_factor);
  set("classify_factor", classify_factor);
  set("hit_factor", hit_factor);
  set("attempt_factor", attempt_factor);
  set("walk_c1", walk.c1);
  set("walk_c2", walk.c2);
  set("walk_c3", walk.c3);
  set_count("walk_max_starts", walk.max_starts);
  set_count("walk_max_walks", walk.max_walks);
  set_count("walk_max_length", walk.max_length);
  set_count("seed", seed);
  validate();
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Accept:
      return "ACCEPT";
    case Outcome::Reject:
      return "REJECT";
    case Outcome::AcceptOnBudget:
      return "ACCEPT-ON-BUDGET";
    case Outcome::AcceptOnEmulationFailure:
      return "ACCEPT-ON-EMULATION-FAILURE";
  }
  return "?";
}

nlohmann::json to_json(const Verdict& verdict) {
  nlohmann::json j;
  j["outcome"] = to_string(verdict.outcome);
  if (verdict.witness) j["witness"] = verdict.witness->vertices;
  j["stage"] = verdict.stage;
  j["pair_queries"] = verdict.ledger.pair_queries;
  j["list_queries"] = verdict.ledger.list_queries;
  j["phases"] = verdict.ledger.phases;
  j["params"] = {{"N", verdict.params.N},     {"n", verdict.params.n},
                 {"m", verdict.params.m},     {"d", verdict.params.d},
                 {"Delta", verdict.params.delta}, {"budget", verdict.params.budget}};
  return j;
}

Count sample_size(Vertex N, double eps, const PipelineConfig& cfg) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("sample_size: eps must lie in (0, 1]");
  const double inv = 1.0 / eps;
  const double polylog = std::log2(inv) + 1.0;
  const Count raw = ceil_count(std::pow(inv, cfg.sample_exponent) * polylog * polylog);
  return std::min<Count>(N, std::max(cfg.sample_floor, raw));
}

std::unique_ptr<InducedPairOracle> sample_induced(PairOracle& host, double eps,
                                                  const PipelineConfig& cfg, Rng& rng) {
  const Vertex N = host.vertex_count();
  const auto n = static_cast<std::size_t>(sample_size(N, eps, cfg));
  std::vector<Vertex> all(N);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::vector<Vertex> chosen;
  chosen.reserve(n);
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), n, rng);
  std::sort(chosen.begin(), chosen.end());
  return std::make_unique<InducedPairOracle>(host, std::move(chosen));
}

PipelineParams derive_params(Vertex N, Vertex n, const PipelineConfig& cfg) {
  PipelineParams p;
  p.N = N;
  p.n = n;
  const double dn = std::max<double>(n, 1.0);
  const double lg = std::max(1.0, log2n(dn));
  p.m = std::max(1.0, dn / std::pow(lg, cfg.c_m));
  p.d = static_cast<std::size_t>(
      std::clamp<Count>(ceil_count(std::pow(dn, cfg.d_exponent)), 1, std::max<Count>(n, 1)));
  p.delta = static_cast<std::size_t>(
      std::max<Count>(1, ceil_count(cfg.delta_factor * std::max(1U, ceil_log2(n)))));
  p.budget = ceil_count(cfg.budget_factor * std::pow(dn, 2.0 - cfg.d_exponent) * std::pow(lg, 4));
  return p;
}

std::vector<Vertex> expand_lifted_walk(const SparseEmulator& emulator, const LiftedOracle& lift,
                                       Vertex start, const std::vector<WalkEdge>& closed_walk) {
  std::vector<Vertex> walk{emulator.host_vertex(lift.base(start))};
  for (const auto& e : closed_walk) {
    if (e.index <= lift.anchors()) continue;
    auto piece = emulator.expand_answer(lift.base(e.owner), e.index - lift.anchors());
    if (e.reversed) std::reverse(piece.begin(), piece.end());
    if (piece.front() != walk.back()) throw InternalError("expand_lifted_walk: pieces do not chain");
    walk.insert(walk.end(), piece.begin() + 1, piece.end());
  }
  if (walk.back() != walk.front()) throw InternalError("expand_lifted_walk: walk is not closed");
  return walk;
}

OddCycleWitness to_host_ids(const OddCycleWitness& w, const InducedPairOracle& sample) {
  OddCycleWitness out;
  out.vertices.reserve(w.vertices.size());
  for (Vertex v : w.vertices) out.vertices.push_back(sample.host_vertices().at(v));
  return out;
}

namespace {

class BudgetGuard {
 public:
  explicit BudgetGuard(QueryLedger& ledger) : ledger_(ledger), saved_(ledger.budget()) {}
  ~BudgetGuard() { ledger_.set_budget(saved_); }
  BudgetGuard(const BudgetGuard&) = delete;
  BudgetGuard& operator=(const BudgetGuard&) = delete;

 private:
  QueryLedger& ledger_;
  std::optional<Count> saved_;
};

void reject_with(Verdict& verdict, PairOracle& host, OddCycleWitness witness, std::string stage) {
  host.ledger().set_budget(std::nullopt);
  {
    ScopedPhase phase(host.ledger(), "verify");
    if (!verify_odd_cycle(host, witness))
      throw InternalError("pipeline: mapped witness does not verify on the host");
  }
  verdict.outcome = Outcome::Reject;
  verdict.witness = std::move(witness);
  verdict.stage = std::move(stage);
}

}  // namespace

Verdict test_bipartiteness(PairOracle& host, const PipelineConfig& cfg, Rng& rng) {
  cfg.validate();
  QueryLedger& ledger = host.ledger();
  BudgetGuard guard(ledger);
  Verdict verdict;

  auto sample = sample_induced(host, cfg.eps, cfg, rng);
  verdict.params = derive_params(host.vertex_count(), sample->vertex_count(), cfg);
  const PipelineParams& p = verdict.params;
  ledger.set_budget(ledger.total() + p.budget);

  try {
    verdict.stage = "degree-split";
    const DegreePartition part = split_by_degree(*sample, p.d, rng, cfg.split);

    verdict.stage = "high-degree-scan";
    ScanResult scan = scan_high_degree(*sample, part, p.m, rng, cfg.scan);
    if (auto* cycle = std::get_if<OddCycleWitness>(&scan.outcome)) {
      reject_with(verdict, host, to_host_ids(*cycle, *sample), "high-degree-scan");
      verdict.ledger = ledger_report(ledger);
      return verdict;
    }
    if (!part.low.empty()) {
      verdict.stage = "walk";
      EmulatorParams ep;
      ep.delta = p.delta;
      ep.m = p.m;
      ep.d = p.d;
      ep.classify_factor = cfg.classify_factor;
      ep.hit_factor = cfg.hit_factor;
      ep.attempt_factor = cfg.attempt_factor;
      SparseEmulator emulator(*sample, part, std::move(std::get<ScanForest>(scan.outcome).forest),
                              ep, rng());
      LiftedOracle lift(emulator, emulator.degree_bound());
      const double slots = static_cast<double>(emulator.degree_bound()) *
                           static_cast<double>(part.low.size()) / 2.0;
      const double delta = std::min(1.0, (p.m / 3.0) / slots);
      const WalkParams wp = walk_params(lift.vertex_count(), delta, cfg.walk);
      const GrResult gr = gr_test(lift, wp, rng);
      if (gr.detection) {
        auto closed = expand_lifted_walk(emulator, lift, gr.detection->start, gr.detection->closed_walk);
        closed.pop_back();
        if (closed.size() % 2 == 0) throw InternalError("pipeline: expanded walk has even length");
        OddCycleWitness local{simple_odd_cycle(closed)};
        reject_with(verdict, host, to_host_ids(local, *sample), "walk");
        verdict.ledger = ledger_report(ledger);
        return verdict;
      }
    }
    verdict.outcome = Outcome::Accept;
  } catch (const BudgetExhausted&) {
    verdict.outcome = Outcome::AcceptOnBudget;
  } catch (const EmulationFailure&) {
    verdict.outcome = Outcome::AcceptOnEmulationFailure;
  }
  verdict.ledger = ledger_report(ledger);
  return verdict;
}

}  // namespace bipartest
