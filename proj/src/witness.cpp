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

#include "bipartest/witness.hpp"

#include <unordered_map>
#include <unordered_set>

namespace bipartest {

bool verify_odd_cycle(Vertex n, const OddCycleWitness& w,
                      const std::function<bool(Vertex, Vertex)>& has_edge) {
  const auto& cyc = w.vertices;
  if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
  std::unordered_set<Vertex> seen;
  for (Vertex v : cyc) {
    if (v >= n || !seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (!has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  }
  return true;
}

bool verify_odd_cycle(const Graph& g, const OddCycleWitness& w) {
  return verify_odd_cycle(g.vertex_count(), w,
                          [&g](Vertex a, Vertex b) { return g.has_edge(a, b); });
}

std::vector<Vertex> simple_odd_cycle(std::span<const Vertex> closed_walk) {
  if (closed_walk.empty() || closed_walk.size() % 2 == 0) {
    throw ParameterError("simple_odd_cycle: closed walk must have odd length");
  }
  // Stack of distinct vertices forming a path from closed_walk[0]. When a
  // vertex repeats, the stretch since its last visit is a closed walk; odd
  // ones are returned, even ones are cut (the remainder keeps odd parity).
  std::vector<Vertex> stack;
  std::unordered_map<Vertex, std::size_t> position;
  for (Vertex x : closed_walk) {
    const auto it = position.find(x);
    if (it == position.end()) {
      position.emplace(x, stack.size());
      stack.push_back(x);
      continue;
    }
    const std::size_t start = it->second;
    const std::size_t length = stack.size() - start;
    if (length % 2 == 1) {
      return {stack.begin() + static_cast<std::ptrdiff_t>(start), stack.end()};
    }
    for (std::size_t i = start + 1; i < stack.size(); ++i) position.erase(stack[i]);
    stack.resize(start + 1);
  }
  return stack;
}

}  // namespace bipartest
