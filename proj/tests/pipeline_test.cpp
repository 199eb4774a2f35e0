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

#include <sstream>

#include "bipartest/generators.hpp"
#include "bipartest/pipeline.hpp"
#include "bipartest/witness.hpp"

namespace bipartest {
namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

Verdict run(const Graph& g, const PipelineConfig& cfg, std::uint64_t seed) {
  GraphPairOracle o(share(g));
  Rng rng(seed);
  return test_bipartiteness(o, cfg, rng);
}

// Skips the scan so that every rejection has to come from the walk stage.
PipelineConfig walk_only() {
  PipelineConfig c = PipelineConfig::desk();
  c.scan = {0.0, 0.0};
  c.budget_factor = 1.0;
  c.walk.max_walks = 300;
  c.walk.max_length = 16;
  return c;
}

TEST(Sampling, SizeFormula) {
  PipelineConfig c;
  EXPECT_EQ(sample_size(1000, 1.0, c), 16U);
  EXPECT_EQ(sample_size(10, 1.0, c), 10U);
  // (1/0.25) * (2 + 1)^2 = 36
  EXPECT_EQ(sample_size(1000, 0.25, c), 36U);
  c.sample_exponent = 2.0;
  EXPECT_EQ(sample_size(1000, 0.25, c), 144U);
  EXPECT_THROW(sample_size(10, 0.0, c), ParameterError);
}

TEST(Sampling, InducedOnCompleteHost) {
  GraphPairOracle host(share(complete_graph(100)));
  Rng rng(1);
  PipelineConfig c;
  auto s = sample_induced(host, 0.25, c, rng);
  ASSERT_EQ(s->vertex_count(), 36U);
  const auto& hv = s->host_vertices();
  EXPECT_TRUE(std::is_sorted(hv.begin(), hv.end()));
  EXPECT_EQ(std::adjacent_find(hv.begin(), hv.end()), hv.end());
  for (Vertex u = 0; u < 36; ++u)
    for (Vertex v = u + 1; v < 36; ++v) ASSERT_TRUE(s->pair_query(u, v));
}

TEST(Params, Derivation) {
  PipelineConfig c = PipelineConfig::reference();
  const auto p = derive_params(1024, 256, c);
  EXPECT_EQ(p.n, 256U);
  EXPECT_DOUBLE_EQ(p.m, 1.0);  // 256 / 8^3 < 1, clamped
  EXPECT_EQ(p.d, 6U);          // ceil(256^0.3) = ceil(5.28)
  EXPECT_EQ(p.delta, 24U);
  const auto q = derive_params(399, 399, PipelineConfig::desk());
  EXPECT_DOUBLE_EQ(q.m, 399.0);
  EXPECT_EQ(q.d, 20U);
  EXPECT_EQ(q.delta, 27U);
}

TEST(Config, AppliesKeysAndProfiles) {
  std::istringstream in("# comment\nprofile = desk\neps=0.2\nwalk_max_walks = 9\nscan_rows = 3\n");
  const auto kv = KeyValues::parse(in);
  PipelineConfig c;
  c.apply(kv);
  EXPECT_DOUBLE_EQ(c.eps, 0.2);
  EXPECT_DOUBLE_EQ(c.d_exponent, 0.5);
  EXPECT_EQ(c.walk.max_walks, Count{9});
  EXPECT_DOUBLE_EQ(c.scan.row_factor, 3.0);
  std::istringstream bad("eps = 2\n");
  EXPECT_THROW(c.apply(KeyValues::parse(bad)), ParameterError);
  std::istringstream junk("not a pair\n");
  EXPECT_THROW(KeyValues::parse(junk), ParameterError);
  std::istringstream typo("epz = 1\n");
  EXPECT_EQ(KeyValues::parse(typo).unknown_keys(PipelineConfig::keys()),
            std::vector<std::string>{"epz"});
}

TEST(Pipeline, BipartiteHostsAreNeverRejected) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_bipartite(120, 0.02 + 0.01 * static_cast<double>(seed % 10), seed);
    for (const auto& cfg : {PipelineConfig::desk(), walk_only()}) {
      const auto v = run(g, cfg, seed);
      EXPECT_FALSE(v.rejected()) << seed;
      EXPECT_FALSE(v.witness.has_value());
    }
  }
}

TEST(Pipeline, BlowupCycleIsRejectedWithHostWitness) {
  const Graph g = generate_blowup_cycle_family(399);
  PipelineConfig cfg = PipelineConfig::desk();
  cfg.eps = 441.0 / (399.0 * 398.0 / 2.0);
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto v = run(g, cfg, seed);
    EXPECT_LT(v.ledger.pair_queries, 399U * 398U / 2U);
    if (v.rejected()) {
      ++rejected;
      ASSERT_TRUE(v.witness);
      EXPECT_TRUE(verify_odd_cycle(g, *v.witness));
    }
  }
  EXPECT_GE(rejected, 5);
}

TEST(Pipeline, WalkStageWitnessesVerifyOnHost) {
  int walk_rejections = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = seed % 2 ? generate_matchings_graph(64, 3, seed)
                             : disjoint_union(generate_blowup(generate_odd_cycle(5), 4),
                                              generate_matchings_graph(44, 3, seed));
    // Sampling the whole host keeps the odd cycles in view of the walks.
    PipelineConfig cfg = walk_only();
    cfg.sample_floor = 64;
    const auto v = run(g, cfg, seed);
    if (v.rejected()) {
      EXPECT_EQ(v.stage, "walk");
      ASSERT_TRUE(v.witness);
      EXPECT_TRUE(verify_odd_cycle(g, *v.witness));
      ++walk_rejections;
    }
  }
  EXPECT_GT(walk_rejections, 10);
}

TEST(Pipeline, PhasesSumToTotals) {
  const auto v = run(generate_matchings_graph(64, 3, 1), walk_only(), 3);
  Count sum = 0;
  for (const auto& [name, count] : v.ledger.phases) sum += count;
  EXPECT_EQ(sum, v.ledger.pair_queries + v.ledger.list_queries);
}

TEST(Pipeline, TinyBudgetAcceptsOnBudget) {
  PipelineConfig cfg = PipelineConfig::desk();
  cfg.budget_factor = 1e-9;
  const auto v = run(generate_blowup_cycle_family(256), cfg, 1);
  EXPECT_EQ(v.outcome, Outcome::AcceptOnBudget);
}

TEST(Pipeline, ReferenceConstantsStayOneSided) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto v = run(random_bipartite(64, 0.1, seed), PipelineConfig::reference(), seed);
    EXPECT_FALSE(v.rejected());
  }
}

TEST(Pipeline, VerdictJsonShape) {
  PipelineConfig cfg = PipelineConfig::desk();
  cfg.eps = 0.01;
  const auto v = run(generate_blowup_cycle_family(256), cfg, 2);
  const auto j = to_json(v);
  EXPECT_TRUE(j.contains("outcome"));
  EXPECT_TRUE(j.contains("phases"));
  for (const char* key : {"n", "m", "d", "Delta"}) EXPECT_TRUE(j["params"].contains(key)) << key;
  EXPECT_EQ(j.contains("witness"), v.witness.has_value());
  EXPECT_EQ(std::string(to_string(Outcome::AcceptOnEmulationFailure)), "ACCEPT-ON-EMULATION-FAILURE");
}

TEST(Pipeline, LedgerBudgetIsRestored) {
  GraphPairOracle o(share(cycle_graph(40)));
  o.ledger().set_budget(std::nullopt);
  Rng rng(1);
  test_bipartiteness(o, PipelineConfig::desk(), rng);
  EXPECT_FALSE(o.ledger().budget().has_value());
}

}  // namespace
}  // namespace bipartest
