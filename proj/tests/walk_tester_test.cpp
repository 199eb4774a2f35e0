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

#include <cmath>
#include <map>

#include "bipartest/generators.hpp"
#include "bipartest/walk_tester.hpp"
#include "bipartest/witness.hpp"

namespace bipartest {
namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

TEST(RandomWalk, ZeroLength) {
  GraphListOracle o(share(complete_graph(3)));
  Rng rng(1);
  const auto w = random_walk(o, 2, 0, rng);
  EXPECT_EQ(w.steps, std::vector<Vertex>{2});
  EXPECT_EQ(w.parity, 0U);
  EXPECT_EQ(o.ledger().list_queries(), 0U);
}

TEST(RandomWalk, SingleEdgeAlternates) {
  GraphListOracle o(share(path_graph(2)), 1);
  Rng rng(1);
  const auto w = random_walk(o, 0, 5, rng);
  EXPECT_EQ(w.steps, (std::vector<Vertex>{0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(w.parity, 1U);
}

TEST(RandomWalk, LazyStaysDoNotFlipParity) {
  GraphListOracle o(share(path_graph(2)), 4);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto w = random_walk(o, 0, 7, rng);
    unsigned moves = 0;
    for (std::size_t k = 0; k + 1 < w.steps.size(); ++k) moves += w.steps[k] != w.steps[k + 1];
    EXPECT_EQ(moves % 2, w.parity);
    EXPECT_EQ(w.end() == 1, w.parity == 1);
    for (auto i : w.indices) EXPECT_LE(i, 4U);
  }
}

TEST(RandomWalk, MixesOnSmallExpander) {
  // Circulant C8(1,4): 3-regular and not bipartite.
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v) edges.push_back({v, (v + 1) % 8});
  for (Vertex v = 0; v < 4; ++v) edges.push_back({v, v + 4});
  GraphListOracle o(share(Graph(8, edges)));
  Rng rng(5);
  std::vector<double> hits(8, 0.0);
  const int walks = 10000;
  const auto len = static_cast<Count>(std::ceil(4 * std::log2(8.0)));
  for (int t = 0; t < walks; ++t) hits[random_walk(o, 0, len, rng).end()] += 1.0;
  double tv = 0.0;
  for (double h : hits) tv += std::abs(h / walks - 1.0 / 8);
  EXPECT_LT(tv / 2, 0.1);
}

TEST(WalkParams, FormulaAndClamps) {
  const auto p = walk_params(1024, 0.5);
  EXPECT_EQ(p.starts, 20U);
  EXPECT_EQ(p.walk_length, 400U);
  EXPECT_EQ(p.walks_per_start, static_cast<Count>(std::ceil(32.0 * 8000.0)));
  WalkCoefficients c;
  c.max_starts = 2;
  c.max_walks = 3;
  c.max_length = 4;
  const auto q = walk_params(1024, 0.5, c);
  EXPECT_EQ(q.starts, 2U);
  EXPECT_EQ(q.walks_per_start, 3U);
  EXPECT_EQ(q.walk_length, 4U);
  EXPECT_THROW(walk_params(10, 0.0), ParameterError);
}

TEST(GrTest, TriangleIsRejected) {
  const Graph k3 = generate_odd_cycle(3);
  int found = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GraphListOracle o(share(k3), 2);
    Rng rng(seed);
    const auto r = gr_test(o, {3, 50, 9, 1.0}, rng);
    if (r.rejected()) {
      ++found;
      EXPECT_TRUE(verify_odd_cycle(k3, r.detection->cycle));
    }
  }
  EXPECT_GE(found, 95);
}

TEST(GrTest, ClosedWalkIsOddAndUsesOracleEdges) {
  const Graph g = generate_matchings_graph(64, 3, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GraphListOracle o(share(g));
    Rng rng(seed);
    const auto r = gr_test(o, {4, 200, 12, 1.0}, rng);
    if (!r.rejected()) continue;
    const auto& d = *r.detection;
    EXPECT_EQ(d.closed_walk.size() % 2, 1U);
    GraphListOracle check(share(g));
    for (const auto& e : d.closed_walk) EXPECT_EQ(check.neighbor_query(e.owner, e.index), e.other);
    const auto vs = walk_vertices(d.start, d.closed_walk);
    EXPECT_EQ(vs.front(), vs.back());
    EXPECT_TRUE(verify_odd_cycle(g, d.cycle));
  }
}

TEST(GrTest, BipartiteAlwaysAccepts) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GraphListOracle o(share(random_bipartite(30, 0.15, seed)));
    Rng rng(seed);
    EXPECT_FALSE(gr_test(o, {3, 40, 10, 1.0}, rng).rejected());
  }
}

TEST(GrTest, QueryCountWithinBudget) {
  GraphListOracle o(share(cycle_graph(10)));
  Rng rng(4);
  const auto r = gr_test(o, {3, 7, 11, 1.0}, rng);
  EXPECT_FALSE(r.rejected());
  EXPECT_EQ(o.ledger().list_queries(), 3U * 7U * 11U);
  EXPECT_EQ(o.ledger().phases().at("walk").list_queries, 3U * 7U * 11U);
}

}  // namespace
}  // namespace bipartest
