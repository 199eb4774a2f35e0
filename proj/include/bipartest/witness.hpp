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

#include <functional>
#include <span>
#include <vector>

#include "bipartest/graph.hpp"

namespace bipartest {

/// True iff w is a simple cycle of odd length >= 3 in g. Malformed input
/// (out-of-range ids, repeats, missing edges) yields false.
bool verify_odd_cycle(const Graph& g, const OddCycleWitness& w);

/// Same check, with edge membership answered by `has_edge`.
bool verify_odd_cycle(Vertex n, const OddCycleWitness& w,
                      const std::function<bool(Vertex, Vertex)>& has_edge);

/// Shortens a closed walk of odd length (edge from the last vertex back to
/// the first implied) to a simple odd cycle using only its own edges.
/// Even-length excursions between repeated vertices are cut out, so the
/// result has odd length; it is a single vertex only if the walk used a loop.
/// Throws ParameterError on empty or even-length input.
std::vector<Vertex> simple_odd_cycle(std::span<const Vertex> closed_walk);

}  // namespace bipartest
