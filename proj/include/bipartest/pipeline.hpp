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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipartest/config.hpp"
#include "bipartest/degree_split.hpp"
#include "bipartest/high_degree_scan.hpp"
#include "bipartest/oracle.hpp"
#include "bipartest/sparse_emulator.hpp"
#include "bipartest/walk_tester.hpp"
#include "bipartest/xor_lift.hpp"

namespace bipartest {

/// Every tunable of one tester run.
///
/// n = max(sample_floor, ceil((1/eps)^sample_exponent (log2(1/eps) + 1)^2))
/// capped at N; m = max(1, n / (log2 n)^c_m); d = min(n, ceil(n^d_exponent));
/// Delta = delta_factor * ceil(log2 n);
/// budget = budget_factor * n^(2 - d_exponent) * (log2 n)^4 oracle operations.
struct PipelineConfig {
  double eps = 0.1;
  double sample_exponent = 1.0;
  Count sample_floor = 16;
  double c_m = 3.0;
  double d_exponent = 0.3;
  double delta_factor = 3.0;
  double budget_factor = 8.0;
  DegreeSplitParams split;
  HighDegreeScanParams scan;
  double classify_factor = 100.0;
  double hit_factor = 25.0;
  double attempt_factor = 64.0;
  WalkCoefficients walk;
  std::uint64_t seed = 1;

  /// The constants as stated for the algorithm (the defaults above).
  static PipelineConfig reference();
  /// Constants scaled down so that instances with N in the hundreds to low
  /// thousands finish in seconds with sub-quadratic query totals.
  static PipelineConfig desk();

  void validate() const;
  /// Applies recognised keys; `profile = reference|desk` is applied first.
  void apply(const KeyValues& kv);
  static const std::vector<std::string>& keys();
};

struct PipelineParams {
  Vertex N = 0;
  Vertex n = 0;
  double m = 0.0;
  std::size_t d = 0;
  std::size_t delta = 0;
  Count budget = 0;
};

enum class Outcome : std::uint8_t { Accept, Reject, AcceptOnBudget, AcceptOnEmulationFailure };

const char* to_string(Outcome outcome);

struct Verdict {
  Outcome outcome = Outcome::Accept;
  std::optional<OddCycleWitness> witness;  // host vertex ids
  std::string stage;                       // phase that decided: "scan", "walk", ...
  LedgerReport ledger;
  PipelineParams params;

  bool rejected() const { return outcome == Outcome::Reject; }
};

/// {outcome, witness?, phases, params: {n, m, d, delta}} plus stage and totals.
nlohmann::json to_json(const Verdict& verdict);

Count sample_size(Vertex N, double eps, const PipelineConfig& cfg);

/// Uniform sample of distinct host vertices, ascending, wrapped as an oracle.
std::unique_ptr<InducedPairOracle> sample_induced(PairOracle& host, double eps,
                                                  const PipelineConfig& cfg, Rng& rng);

PipelineParams derive_params(Vertex N, Vertex n, const PipelineConfig& cfg);

/// Full adaptive tester. Never throws for instance-dependent reasons: budget
/// and emulation failures fold into accepting outcomes.
Verdict test_bipartiteness(PairOracle& host, const PipelineConfig& cfg, Rng& rng);

/// Closed host walk behind a closed odd walk of the lifted oracle, in the
/// emulator's host ids. Anchor edges vanish and every source constraint is
/// replaced by its recorded host path.
std::vector<Vertex> expand_lifted_walk(const SparseEmulator& emulator, const LiftedOracle& lift,
                                       Vertex start, const std::vector<WalkEdge>& closed_walk);

/// Renames witness vertices through a sample's host ids.
OddCycleWitness to_host_ids(const OddCycleWitness& w, const InducedPairOracle& sample);

}  // namespace bipartest
