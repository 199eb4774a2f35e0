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

#include "bipartest/common.hpp"

#include <cmath>
#include <limits>

namespace bipartest {

double log2n(double n) { return n <= 1.0 ? 0.0 : std::log2(n); }

unsigned ceil_log2(std::uint64_t n) {
  unsigned bits = 0;
  std::uint64_t reach = 1;
  while (reach < n) {
    reach <<= 1;
    ++bits;
  }
  return bits;
}

Count ceil_count(double x) {
  if (!(x > 0.0)) return 0;
  const double c = std::ceil(x);
  if (c >= static_cast<double>(std::numeric_limits<Count>::max())) {
    return std::numeric_limits<Count>::max();
  }
  return static_cast<Count>(c);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw ParameterError("uniform_below: empty range");
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(rng);
}

Vertex uniform_other_vertex(Rng& rng, Vertex n, Vertex exclude) {
  if (n < 2) throw ParameterError("uniform_other_vertex: need at least two vertices");
  const auto x = static_cast<Vertex>(uniform_below(rng, n - 1));
  return x < exclude ? x : x + 1;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace bipartest
