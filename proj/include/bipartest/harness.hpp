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
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipartest/config.hpp"
#include "bipartest/pipeline.hpp"

namespace bipartest {

enum class Family : std::uint8_t { G1, G2, BipartiteRandom, File };

const char* to_string(Family f);
Family parse_family(const std::string& s);

struct ExperimentConfig {
  Family family = Family::G2;
  std::vector<Vertex> sizes{256};
  /// Empty: G2 uses its exact distance k^2 / (N choose 2), others use pipeline.eps.
  std::vector<double> eps;
  Count trials = 10;
  std::uint64_t seed = 1;
  std::string out;   // CSV path; the summary goes next to it with a .json suffix
  std::string file;  // instance for Family::File
  unsigned g1_degree = 3;
  double bipartite_density = 0.1;
  PipelineConfig pipeline = PipelineConfig::desk();

  void validate() const;
  /// Reads family, sizes, eps, trials, seed, out, file, g1_degree,
  /// bipartite_density, and every pipeline key.
  void apply(const KeyValues& kv);
  static std::vector<std::string> keys();
};

struct TrialReport {
  Count trial = 0;
  Vertex N = 0;
  Vertex n = 0;
  double eps = 0.0;
  Outcome outcome = Outcome::Accept;
  bool witness_verified = false;
  Count pair_queries = 0;
  Count list_queries = 0;
  std::size_t witness_len = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

struct SizeSummary {
  Vertex N = 0;
  Count trials = 0;
  Count rejections = 0;
  double median_pair_queries = 0.0;
  Count max_pair_queries = 0;
};

struct ExperimentSummary {
  Family family = Family::G2;
  std::vector<SizeSummary> sizes;
  /// Least-squares slope of log(median pair queries) against log N.
  std::optional<double> exponent;
};

struct ExperimentResult {
  std::vector<TrialReport> trials;
  ExperimentSummary summary;
};

/// Instance of `family` with N vertices; `seed` drives the random families.
Graph make_instance(const ExperimentConfig& cfg, Vertex N, std::uint64_t seed);

/// Default distance parameter for an instance (see ExperimentConfig::eps).
double family_eps(const ExperimentConfig& cfg, const Graph& g);

/// Runs every (size, eps, trial) combination; trial i uses
/// derive_seed(seed, i). Rejections are re-verified on the graph itself.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// trial,N,n,eps,outcome,pair_queries,list_queries,witness_len,seed
void write_csv(std::ostream& out, std::span<const TrialReport> trials);
nlohmann::json to_json(const ExperimentSummary& summary);
/// Writes cfg.out and its .json summary sibling; returns the summary path.
std::string write_outputs(const ExperimentConfig& cfg, const ExperimentResult& result);

std::optional<double> fit_loglog_exponent(std::span<const double> x, std::span<const double> y);

struct ConjectureParams {
  double eps = 0.1;
  Count trials = 100;
  std::uint64_t seed = 1;
  /// s = ceil(kappa * log2(1/eps)^2 / eps), capped at N.
  double kappa = 1.0;
  /// Far bar: distance >= tau * eps * (s choose 2) / (log2(1/eps) + 1)^2.
  double tau = 1.0;
  unsigned heuristic_effort = 32;
};

struct ConjectureReport {
  Count sample_size = 0;
  bool regular = false;  // max degree <= 2 * min degree, min degree >= 1
  bool exact = false;    // false: heuristic upper bounds were used
  double far_threshold = 0.0;
  std::vector<Count> distances;
  double positive_fraction = 0.0;
  double far_fraction = 0.0;
};

Count conjecture_sample_size(Vertex N, double eps, double kappa);

/// Distance to bipartiteness of induced subgraphs on random vertex samples.
ConjectureReport verify_conjecture(const Graph& g, const ConjectureParams& params);

nlohmann::json to_json(const ConjectureReport& report);

}  // namespace bipartest
