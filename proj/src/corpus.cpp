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

#include "bipartest/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "bipartest/distance.hpp"
#include "bipartest/generators.hpp"

namespace bipartest {

namespace fs = std::filesystem;

std::vector<CorpusEntry> read_manifest(const fs::path& dir) {
  std::ifstream in(dir / "manifest.csv");
  if (!in) throw std::runtime_error("cannot open " + (dir / "manifest.csv").string());
  std::vector<CorpusEntry> entries;
  std::string line;
  std::getline(in, line);
  if (line.rfind("name,file,distance", 0) != 0)
    throw ParameterError("manifest.csv: bad header '" + line + "'");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    CorpusEntry e;
    std::string distance;
    if (!std::getline(ss, e.name, ',') || !std::getline(ss, e.file, ',') ||
        !std::getline(ss, distance))
      throw ParameterError("manifest.csv: malformed line '" + line + "'");
    try {
      e.distance = std::stoull(distance);
    } catch (const std::exception&) {
      throw ParameterError("manifest.csv: bad distance in '" + line + "'");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

CorpusReport corpus_verify(const fs::path& dir) {
  CorpusReport report;
  for (const auto& e : read_manifest(dir)) {
    ++report.checked;
    try {
      const auto path = (dir / e.file).string();
      Count actual = 0;
      std::ifstream in(path);
      if (!in) throw std::runtime_error("missing file " + e.file);
      std::stringstream text;
      text << in.rdbuf();
      if (looks_like_xor_game(text.str())) {
        const XorGame game = load_xor_game(path);
        if (game.vertex_count() > kExactThreshold) throw SizeLimitError("too large for exact check");
        actual = exact_xor_distance(game);
      } else {
        const Graph g = load_graph(path);
        if (g.vertex_count() > kExactThreshold) throw SizeLimitError("too large for exact check");
        actual = exact_bipartite_distance(g);
      }
      if (actual != e.distance)
        report.failures.push_back({e.name, "expected " + std::to_string(e.distance) + ", exact " +
                                               std::to_string(actual)});
    } catch (const std::exception& ex) {
      report.failures.push_back({e.name, ex.what()});
    }
  }
  return report;
}

namespace {

// Lexicographically smallest sorted edge list over all relabelings.
std::vector<std::pair<Vertex, Vertex>> canonical_form(Vertex n, const std::vector<Edge>& edges) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::pair<Vertex, Vertex>> best;
  bool first = true;
  do {
    std::vector<std::pair<Vertex, Vertex>> mapped;
    for (const auto& e : edges) {
      const Vertex a = perm[e.u];
      const Vertex b = perm[e.v];
      mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected(Vertex n, const std::vector<Edge>& edges) {
  std::vector<Vertex> uf(n);
  std::iota(uf.begin(), uf.end(), Vertex{0});
  auto find = [&uf](Vertex x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  Vertex parts = n;
  for (const auto& e : edges) {
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) {
      uf[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

}  // namespace

std::vector<Graph> connected_graphs_up_to(Vertex max_n) {
  if (max_n > 6) throw SizeLimitError("connected_graphs_up_to: max_n <= 6");
  std::vector<Graph> out;
  for (Vertex n = 1; n <= max_n; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::set<std::vector<std::pair<Vertex, Vertex>>> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1U) edges.push_back(slots[b]);
      if (!connected(n, edges)) continue;
      if (seen.insert(canonical_form(n, edges)).second) out.emplace_back(n, std::move(edges));
    }
  }
  return out;
}

std::vector<CorpusEntry> write_standard_corpus(const fs::path& dir) {
  fs::create_directories(dir / "graphs");
  fs::create_directories(dir / "games");
  std::vector<CorpusEntry> entries;
  auto add_graph = [&](const std::string& name, const Graph& g) {
    const std::string file = "graphs/" + name + ".txt";
    save_graph((dir / file).string(), g);
    entries.push_back({name, file, exact_bipartite_distance(g)});
  };
  auto add_game = [&](const std::string& name, const XorGame& game) {
    const std::string file = "games/" + name + ".txt";
    save_xor_game((dir / file).string(), game);
    entries.push_back({name, file, exact_xor_distance(game)});
  };

  std::vector<std::pair<std::string, Graph>> bases;
  const auto small = connected_graphs_up_to(5);
  for (std::size_t i = 0; i < small.size(); ++i) {
    std::ostringstream name;
    name << "conn" << small[i].vertex_count() << "_" << std::setw(2) << std::setfill('0') << i;
    bases.emplace_back(name.str(), small[i]);
  }
  for (unsigned l = 3; l <= 9; ++l) bases.emplace_back("cycle" + std::to_string(l), cycle_graph(l));
  for (Vertex k = 4; k <= 6; ++k) bases.emplace_back("complete" + std::to_string(k), complete_graph(k));
  for (std::uint64_t s = 0; s < 10; ++s)
    bases.emplace_back("matchings16_d3_s" + std::to_string(s), generate_matchings_graph(16, 3, s));

  for (const auto& [name, g] : bases) {
    add_graph(name, g);
    if (g.vertex_count() * 2 <= kExactThreshold) add_graph(name + "_x2", generate_blowup(g, 2));
  }
  for (unsigned l : {3U, 5U}) add_graph("cycle" + std::to_string(l) + "_x3", generate_blowup(cycle_graph(l), 3));

  add_game("neq_triangle", XorGame(3, {{0, 1, Label::Neq}, {1, 2, Label::Neq}, {0, 2, Label::Neq}}));
  add_game("eq_triangle", XorGame(3, {{0, 1, Label::Eq}, {1, 2, Label::Eq}, {0, 2, Label::Eq}}));
  add_game("neq_loop", XorGame(2, {{0, 0, Label::Neq}, {0, 1, Label::Eq}}));
  add_game("eq_loop", XorGame(2, {{1, 1, Label::Eq}, {0, 1, Label::Neq}}));
  add_game("mixed_square", XorGame(4, {{0, 1, Label::Eq},
                                       {1, 2, Label::Neq},
                                       {2, 3, Label::Eq},
                                       {3, 0, Label::Eq},
                                       {0, 2, Label::Neq},
                                       {1, 3, Label::Eq}}));

  std::ofstream manifest(dir / "manifest.csv");
  if (!manifest) throw std::runtime_error("cannot write manifest.csv");
  manifest << "name,file,distance\n";
  for (const auto& e : entries) manifest << e.name << ',' << e.file << ',' << e.distance << '\n';
  return entries;
}

}  // namespace bipartest
