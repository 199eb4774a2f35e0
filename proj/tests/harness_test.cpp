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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bipartest/generators.hpp"
#include "bipartest/harness.hpp"

namespace bipartest {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Fit, RecoversKnownExponent) {
  const std::vector<double> x{256, 512, 1024, 2048};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 1.5));
  const auto e = fit_loglog_exponent(x, y);
  ASSERT_TRUE(e);
  EXPECT_NEAR(*e, 1.5, 1e-9);
  EXPECT_FALSE(fit_loglog_exponent(std::vector<double>{1}, std::vector<double>{1}));
}

TEST(Family, ParseAndPrint) {
  for (Family f : {Family::G1, Family::G2, Family::BipartiteRandom, Family::File})
    EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_THROW(parse_family("G3"), ParameterError);
}

TEST(Experiment, BipartiteSuiteNeverRejects) {
  ExperimentConfig cfg;
  cfg.family = Family::BipartiteRandom;
  cfg.sizes = {96};
  cfg.trials = 30;
  cfg.seed = 5;
  const auto r = run_experiment(cfg);
  ASSERT_EQ(r.trials.size(), 30U);
  for (const auto& t : r.trials) EXPECT_NE(t.outcome, Outcome::Reject);
  EXPECT_EQ(r.summary.sizes.at(0).rejections, 0U);
}

TEST(Experiment, CsvIsDeterministic) {
  ExperimentConfig cfg;
  cfg.family = Family::G2;
  cfg.sizes = {256};
  cfg.trials = 4;
  cfg.seed = 9;
  std::ostringstream a;
  std::ostringstream b;
  write_csv(a, run_experiment(cfg).trials);
  write_csv(b, run_experiment(cfg).trials);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')),
            "trial,N,n,eps,outcome,pair_queries,list_queries,witness_len,seed");
}

TEST(Experiment, RejectRowsCarryVerifiedWitnesses) {
  ExperimentConfig cfg;
  cfg.family = Family::G2;
  cfg.sizes = {256, 512};
  cfg.trials = 3;
  const auto r = run_experiment(cfg);
  for (const auto& t : r.trials) {
    if (t.outcome == Outcome::Reject) {
      EXPECT_TRUE(t.witness_verified);
      EXPECT_GE(t.witness_len, 3U);
    }
  }
  EXPECT_TRUE(r.summary.exponent.has_value());
}

TEST(Experiment, WritesCsvAndSummary) {
  const auto dir = std::filesystem::temp_directory_path() / "bipartest_harness_test";
  std::filesystem::create_directories(dir);
  ExperimentConfig cfg;
  cfg.family = Family::G1;
  cfg.sizes = {64};
  cfg.trials = 2;
  cfg.out = (dir / "run.csv").string();
  const auto summary = write_outputs(cfg, run_experiment(cfg));
  EXPECT_EQ(summary, (dir / "run.json").string());
  const auto j = nlohmann::json::parse(slurp(summary));
  EXPECT_EQ(j["family"], "G1");
  EXPECT_EQ(j["sizes"][0]["trials"], 2);
  EXPECT_NE(slurp(cfg.out).find("trial,N"), std::string::npos);
}

TEST(Experiment, ConfigKeys) {
  std::istringstream in("family = BIPARTITE-RANDOM\nsizes = 64, 128\ntrials = 3\neps_list = 0.1,0.2\n");
  ExperimentConfig cfg;
  cfg.apply(KeyValues::parse(in));
  EXPECT_EQ(cfg.family, Family::BipartiteRandom);
  EXPECT_EQ(cfg.sizes, (std::vector<Vertex>{64, 128}));
  EXPECT_EQ(cfg.trials, 3U);
  EXPECT_EQ(cfg.eps, (std::vector<double>{0.1, 0.2}));
}

TEST(Conjecture, BipartiteGivesZeroDistances) {
  ConjectureParams p;
  p.eps = 0.2;
  p.trials = 20;
  const auto r = verify_conjecture(random_bipartite(60, 0.2, 3), p);
  for (Count d : r.distances) EXPECT_EQ(d, 0U);
  EXPECT_DOUBLE_EQ(r.positive_fraction, 0.0);
}

TEST(Conjecture, BlowupFiveCycleSamplesArePositive) {
  const Graph g = generate_blowup(generate_odd_cycle(5), 20);
  ConjectureParams p;
  p.eps = 400.0 / 4950.0;
  p.kappa = 0.15;
  p.trials = 30;
  const auto r = verify_conjecture(g, p);
  EXPECT_LE(r.sample_size, 26U);
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.regular);
  EXPECT_GE(r.positive_fraction, 0.9);
}

TEST(Conjecture, ReproducibleUnderSeed) {
  const Graph g = generate_matchings_graph(100, 5, 1);
  ConjectureParams p;
  p.eps = 0.3;
  p.trials = 10;
  p.seed = 77;
  EXPECT_EQ(to_json(verify_conjecture(g, p)).dump(), to_json(verify_conjecture(g, p)).dump());
}

TEST(Conjecture, LargeSamplesFallBackToHeuristic) {
  ConjectureParams p;
  p.eps = 0.05;
  p.trials = 2;
  const auto r = verify_conjecture(generate_blowup(generate_odd_cycle(5), 40), p);
  EXPECT_FALSE(r.exact);
  EXPECT_GT(r.sample_size, 26U);
}

}  // namespace
}  // namespace bipartest
