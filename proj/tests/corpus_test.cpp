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
#include <map>
#include <set>

#include "bipartest/corpus.hpp"
#include "bipartest/distance.hpp"
#include "bipartest/generators.hpp"

namespace bipartest {
namespace {

namespace fs = std::filesystem;

TEST(Corpus, ShippedManifestVerifies) {
  const auto report = corpus_verify(BIPARTEST_CORPUS_DIR);
  for (const auto& f : report.failures) ADD_FAILURE() << f.name << ": " << f.reason;
  EXPECT_GE(report.checked, 99U);
}

TEST(Corpus, KnownEntries) {
  std::map<std::string, Count> expected{{"cycle3", 1}, {"cycle5_x2", 4}, {"complete4", 2},
                                        {"cycle4", 0}, {"neq_triangle", 1}};
  for (const auto& e : read_manifest(BIPARTEST_CORPUS_DIR)) {
    auto it = expected.find(e.name);
    if (it == expected.end()) continue;
    EXPECT_EQ(e.distance, it->second) << e.name;
    expected.erase(it);
  }
  EXPECT_TRUE(expected.empty());
}

TEST(Corpus, EveryBaseHasItsDoubleWhenSmall) {
  std::set<std::string> names;
  const auto entries = read_manifest(BIPARTEST_CORPUS_DIR);
  for (const auto& e : entries) names.insert(e.name);
  for (const auto& e : entries) {
    if (e.file.rfind("graphs/", 0) != 0 || e.name.find("_x") != std::string::npos) continue;
    const Graph g = load_graph((fs::path(BIPARTEST_CORPUS_DIR) / e.file).string());
    if (2 * g.vertex_count() <= kExactThreshold) {
      EXPECT_TRUE(names.count(e.name + "_x2")) << e.name;
    }
  }
}

TEST(Corpus, CorruptedEntryIsReported) {
  const auto dir = fs::temp_directory_path() / "bipartest_corpus_test";
  fs::remove_all(dir);
  fs::create_directories(dir / "graphs");
  save_graph((dir / "graphs/tri.txt").string(), generate_odd_cycle(3));
  save_graph((dir / "graphs/sq.txt").string(), cycle_graph(4));
  {
    std::ofstream m(dir / "manifest.csv");
    m << "name,file,distance\ntri,graphs/tri.txt,2\nsq,graphs/sq.txt,0\nghost,graphs/none.txt,0\n";
  }
  const auto report = corpus_verify(dir);
  EXPECT_EQ(report.checked, 3U);
  ASSERT_EQ(report.failures.size(), 2U);
  EXPECT_EQ(report.failures[0].name, "tri");
  EXPECT_EQ(report.failures[1].name, "ghost");
}

TEST(Corpus, ConnectedGraphCounts) {
  // Known counts of connected graphs up to isomorphism: 1, 1, 2, 6, 21.
  const auto all = connected_graphs_up_to(5);
  std::vector<int> per(6, 0);
  for (const auto& g : all) ++per[g.vertex_count()];
  EXPECT_EQ(per, (std::vector<int>{0, 1, 1, 2, 6, 21}));
}

}  // namespace
}  // namespace bipartest
