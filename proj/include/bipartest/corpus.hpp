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

#include <filesystem>
#include <string>
#include <vector>

#include "bipartest/graph.hpp"

namespace bipartest {

struct CorpusEntry {
  std::string name;
  std::string file;  // relative to the corpus directory
  Count distance = 0;
};

struct CorpusFailure {
  std::string name;
  std::string reason;
};

struct CorpusReport {
  std::size_t checked = 0;
  std::vector<CorpusFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Reads manifest.csv (header `name,file,distance`).
std::vector<CorpusEntry> read_manifest(const std::filesystem::path& dir);

/// Recomputes each entry's distance with the exact solver. Files holding a
/// XOR game are scored with the game solver.
CorpusReport corpus_verify(const std::filesystem::path& dir);

/// Every connected simple graph on 1..max_n vertices, one per isomorphism
/// class. Brute force over permutations; max_n <= 6.
std::vector<Graph> connected_graphs_up_to(Vertex max_n);

/// Writes the standard corpus and its manifest into `dir`; returns the entries.
std::vector<CorpusEntry> write_standard_corpus(const std::filesystem::path& dir);

}  // namespace bipartest
