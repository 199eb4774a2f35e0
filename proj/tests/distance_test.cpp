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
#include "test_util.hpp"

namespace bipartest {
namespace {

using testing::brute_bipartite_distance;
using testing::brute_xor_distance;

TEST(ExactDistance, SmallExamples) {
  EXPECT_EQ(exact_bipartite_distance(generate_odd_cycle(3)), 1U);
  EXPECT_EQ(exact_bipartite_distance(cycle_graph(4)), 0U);
  EXPECT_EQ(exact_bipartite_distance(complete_graph(4)), 2U);
  EXPECT_EQ(exact_bipartite_distance(generate_odd_cycle(9)), 1U);
  EXPECT_EQ(exact_bipartite_distance(generate_blowup(generate_odd_cycle(5), 2)), 4U);
  EXPECT_EQ(exact_bipartite_distance(Graph(0)), 0U);
}

TEST(ExactDistance, ColoringAttainsValue) {
  const Graph g = complete_graph(7);
  const auto r = exact_bipartite_coloring(g);
  EXPECT_EQ(r.distance, 9U);  // best split 3+4: 3 + 6 internal edges
  EXPECT_EQ(Bipartition{r.side}.monochromatic_edges(g), r.distance);
}

TEST(ExactDistance, LoopsAlwaysCount) {
  const Graph g(2, {{0, 1}, {1, 1}, {1, 1}});
  EXPECT_EQ(exact_bipartite_distance(g), 2U);
}

TEST(ExactDistance, AgreesWithBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 9);
    const Graph g = random_graph(n, 0.45, seed);
    EXPECT_EQ(exact_bipartite_distance(g), brute_bipartite_distance(g)) << "seed " << seed;
  }
}

TEST(ExactDistance, MultigraphsAgreeWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate_matchings_graph(10, 4, seed);
    EXPECT_EQ(exact_bipartite_distance(g), brute_bipartite_distance(g));
  }
}

TEST(ExactDistance, RefusesLargeGraphs) {
  EXPECT_THROW(exact_bipartite_distance(Graph(kExactThreshold + 1)), SizeLimitError);
}

TEST(XorDistance, SmallExamples) {
  EXPECT_EQ(exact_xor_distance(XorGame(2, {{0, 1, Label::Neq}})), 0U);
  EXPECT_EQ(exact_xor_distance(XorGame(2, {{0, 1, Label::Neq}, {0, 1, Label::Eq}})), 1U);
  EXPECT_EQ(exact_xor_distance(
                XorGame(3, {{0, 1, Label::Neq}, {1, 2, Label::Neq}, {0, 2, Label::Neq}})),
            1U);
  EXPECT_EQ(exact_xor_distance(XorGame(1, {{0, 0, Label::Neq}, {0, 0, Label::Eq}})), 1U);
}

TEST(XorDistance, AgreesWithBruteForce) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<Vertex>(1 + uniform_below(rng, 7));
    std::vector<Constraint> cs;
    const auto m = uniform_below(rng, 12);
    for (std::uint64_t k = 0; k < m; ++k) {
      cs.push_back({static_cast<Vertex>(uniform_below(rng, n)),
                    static_cast<Vertex>(uniform_below(rng, n)),
                    uniform_below(rng, 2) ? Label::Eq : Label::Neq});
    }
    const XorGame game(n, cs);
    const auto r = exact_xor_assignment(game);
    EXPECT_EQ(r.distance, brute_xor_distance(game));
    EXPECT_EQ(game.violations(r.side), r.distance);
  }
}

TEST(XorDistance, GraphGameMatchesGraphDistance) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(9, 0.4, seed);
    EXPECT_EQ(exact_xor_distance(XorGame::from_graph(g)), exact_bipartite_distance(g));
  }
}

TEST(Heuristic, BipartiteTreeIsZero) {
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    EXPECT_EQ(heuristic_bipartite_distance(random_tree(40, seed), 1, seed), 0U);
}

TEST(Heuristic, MatchesExactOnSmallExamples) {
  EXPECT_EQ(heuristic_bipartite_distance(generate_odd_cycle(3), 1, 1), 1U);
  EXPECT_EQ(heuristic_bipartite_distance(generate_blowup(generate_odd_cycle(5), 3), 100, 1), 9U);
}

TEST(Heuristic, NeverBelowExact) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(10, 0.5, seed);
    const Count exact = exact_bipartite_distance(g);
    const Count h = heuristic_bipartite_distance(g, 8, seed);
    EXPECT_GE(h, exact);
    EXPECT_EQ(heuristic_bipartite_distance(g, 64, seed), exact) << seed;
  }
}

TEST(Evidence, ExactBelowThresholdHeuristicAbove) {
  const auto small = distance_evidence(generate_odd_cycle(7), 4, 1);
  EXPECT_TRUE(small.exact);
  EXPECT_EQ(small.value, 1U);
  const auto large = distance_evidence(generate_odd_cycle(41), 4, 1);
  EXPECT_FALSE(large.exact);
  EXPECT_GE(large.value, 1U);
}

TEST(Expander, Examples) {
  EXPECT_TRUE(expander_check(complete_graph(4), 0.5));
  EXPECT_FALSE(expander_check(disjoint_union(complete_graph(3), Graph(1)), 0.25));
  EXPECT_TRUE(expander_check(cycle_graph(4), 0.5));
}

TEST(Expander, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(9, 0.35, seed);
    for (double alpha : {0.25, 0.5, 1.0})
      EXPECT_EQ(expander_check(g, alpha), testing::brute_expander(g, alpha)) << seed;
  }
}

}  // namespace
}  // namespace bipartest
