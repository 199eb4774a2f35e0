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

#include "bipartest/distance.hpp"
#include "bipartest/generators.hpp"
#include "bipartest/high_degree_scan.hpp"
#include "bipartest/witness.hpp"
#include "test_util.hpp"

namespace bipartest {
namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

DegreePartition all_high(Vertex n, std::size_t d) {
  DegreePartition p;
  p.d = d;
  p.is_high.assign(n, 1);
  for (Vertex v = 0; v < n; ++v) p.high.push_back(v);
  return p;
}

TEST(DetectOddCycle, Examples) {
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  const auto w = detect_odd_cycle(3, tri);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_odd_cycle(generate_odd_cycle(3), *w));
  const std::vector<Edge> square{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  EXPECT_FALSE(detect_odd_cycle(4, square));
}

TEST(DetectOddCycle, FuzzAgainstVerifier) {
  int non_bipartite = 0;
  for (std::uint64_t seed = 0; non_bipartite < 100; ++seed) {
    const Vertex n = 3 + static_cast<Vertex>(seed % 10);
    const Graph g = random_graph(n, 0.4, seed);
    const auto w = detect_odd_cycle(n, g.edges());
    const bool bipartite = !bfs_two_coloring(g).empty();
    ASSERT_EQ(w.has_value(), !bipartite) << seed;
    if (w) {
      ++non_bipartite;
      ASSERT_TRUE(testing::is_simple_odd_cycle(g, w->vertices)) << seed;
    }
  }
}

TEST(ParityForest, ParitiesMatchBfsDistances) {
  const Graph g = path_graph(3);
  const std::vector<std::uint8_t> members{1, 1, 1};
  const auto f = ParityForest::build(3, g.edges(), members);
  EXPECT_EQ(forest_parity(f, 0, 2), ForestParity::Even);
  EXPECT_EQ(forest_parity(f, 0, 1), ForestParity::Odd);
  const Graph two = disjoint_union(path_graph(2), path_graph(2));
  const auto f2 = ParityForest::build(4, two.edges(), std::vector<std::uint8_t>{1, 1, 1, 1});
  EXPECT_EQ(forest_parity(f2, 0, 3), ForestParity::Disconnected);
  EXPECT_TRUE(f2.path(0, 3).empty());
}

TEST(ParityForest, StructuralInvariants) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_bipartite(24, 0.15, seed);
    std::vector<std::uint8_t> members(24, 0);
    for (Vertex v = 0; v < 24; v += 1 + (seed % 2)) members[v] = 1;
    const auto f = ParityForest::build(24, g.edges(), members);
    for (const auto& e : f.forest_edges()) {
      EXPECT_TRUE(g.has_edge(e.u, e.v));
      EXPECT_TRUE(members[e.u] && members[e.v]);
    }
    for (Vertex v = 0; v < 24; ++v) {
      ASSERT_EQ(f.contains(v), members[v] == 1);
      if (!members[v]) continue;
      // Walking parents reaches the root within n steps, flipping parity.
      Vertex at = v;
      unsigned steps = 0;
      while (auto p = f.parent(at)) {
        at = *p;
        ASSERT_LE(++steps, 24U);
      }
      EXPECT_EQ(at, f.root(v));
      EXPECT_EQ(steps % 2, f.parity_to_root(v));
      for (Vertex w = 0; w < 24; ++w) {
        if (!members[w] || f.root(w) != f.root(v)) continue;
        const auto path = f.path(v, w);
        ASSERT_FALSE(path.empty());
        EXPECT_EQ(path.front(), v);
        EXPECT_EQ(path.back(), w);
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
          EXPECT_TRUE(g.has_edge(path[k], path[k + 1]));
        EXPECT_EQ((path.size() - 1) % 2 == 1, forest_parity(f, v, w) == ForestParity::Odd);
      }
    }
  }
}

TEST(Scan, TriangleWithForcedRows) {
  GraphPairOracle o(share(generate_odd_cycle(3)));
  Rng rng(1);
  const auto r = scan_high_degree(o, all_high(3, 1), 1.0, rng, {10.0, 0.0});
  ASSERT_TRUE(r.found_odd_cycle());
  EXPECT_TRUE(verify_odd_cycle(generate_odd_cycle(3), std::get<OddCycleWitness>(r.outcome)));
}

TEST(Scan, SquareGivesAlternatingForest) {
  const Graph c4 = cycle_graph(4);
  GraphPairOracle o(share(c4));
  Rng rng(3);
  const auto r = scan_high_degree(o, all_high(4, 1), 1.0, rng, {10.0, 1.0});
  ASSERT_FALSE(r.found_odd_cycle());
  const auto& f = std::get<ScanForest>(r.outcome).forest;
  const auto colors = bfs_two_coloring(c4);
  EXPECT_EQ(f.roots().size(), 1U);
  for (Vertex v = 0; v < 4; ++v)
    EXPECT_EQ(f.parity_to_root(v), colors[v] ^ colors[f.root(v)]);
}

TEST(Scan, BipartiteNeverYieldsWitness) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GraphPairOracle o(share(random_bipartite(30, 0.3, seed)));
    Rng rng(seed);
    const auto r = scan_high_degree(o, all_high(30, 3), 30.0, rng, {2.0, 2.0});
    EXPECT_FALSE(r.found_odd_cycle());
    const auto& q = std::get<ScanForest>(r.outcome).queried;
    for (const auto& e : std::get<ScanForest>(r.outcome).forest.forest_edges()) {
      bool listed = false;
      for (const auto& x : q.edges) listed = listed || (x.u == e.u && x.v == e.v);
      EXPECT_TRUE(listed);
    }
  }
}

TEST(Scan, ForestCoversOnlyHighVertices) {
  const Graph g = random_bipartite(20, 0.4, 9);
  GraphPairOracle o(share(g));
  DegreePartition part = all_high(20, 2);
  part.high.clear();
  for (Vertex v = 0; v < 20; ++v) {
    part.is_high[v] = v % 3 != 0;
    (part.is_high[v] ? part.high : part.low).push_back(v);
  }
  Rng rng(5);
  const auto r = scan_high_degree(o, part, 5.0, rng, {3.0, 1.0});
  const auto& f = std::get<ScanForest>(r.outcome).forest;
  for (Vertex v = 0; v < 20; ++v) EXPECT_EQ(f.contains(v), part.is_high[v] == 1);
  EXPECT_EQ(o.ledger().phases().at("high-degree-scan").pair_queries, o.ledger().pair_queries());
}

TEST(Scan, QueryAccountingIsExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GraphPairOracle o(share(random_bipartite(40, 0.2, seed)));
    Rng rng(seed);
    const auto r = scan_high_degree(o, all_high(40, 8), 40.0, rng, {1.0, 0.5});
    ASSERT_FALSE(r.found_odd_cycle());
    EXPECT_EQ(o.ledger().pair_queries(), r.rows * 39 + r.random_pairs);
  }
}

TEST(Scan, FarHighPartYieldsWitness) {
  // High part m/4-removed with the constants as stated.
  int found = 0;
  int runs = 0;
  for (std::uint64_t seed = 0; runs < 200; ++seed) {
    const Graph g = random_graph(20, 0.3, seed);
    const Count dist = exact_bipartite_distance(g);
    if (dist == 0) continue;
    ++runs;
    GraphPairOracle o(share(g));
    Rng rng(seed);
    const auto r = scan_high_degree(o, all_high(20, 6), 4.0 * static_cast<double>(dist), rng);
    if (r.found_odd_cycle()) {
      ++found;
      EXPECT_TRUE(verify_odd_cycle(g, std::get<OddCycleWitness>(r.outcome)));
    }
  }
  EXPECT_GE(found, 160);
}

}  // namespace
}  // namespace bipartest
