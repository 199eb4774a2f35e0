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

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace bipartest {

using Vertex = std::uint32_t;
using Count = std::uint64_t;
using Rng = std::mt19937_64;

/// Raised when an operation is called with arguments outside its domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact (exponential-time) routine is asked to handle an
/// instance above its size threshold.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A broken internal invariant. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Base-2 logarithm; 0 for n <= 1.
double log2n(double n);

/// Smallest integer >= log2(n); 0 for n <= 1.
unsigned ceil_log2(std::uint64_t n);

/// Rounds a non-negative real up to a count, saturating at the Count range.
Count ceil_count(double x);

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform vertex in [0, n) other than `exclude`. Requires n >= 2.
Vertex uniform_other_vertex(Rng& rng, Vertex n, Vertex exclude);

/// Independent seed for stream `stream` of a master seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace bipartest
