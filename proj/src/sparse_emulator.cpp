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

#include "bipartest/sparse_emulator.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace bipartest {

namespace {

constexpr Vertex kNotLow = static_cast<Vertex>(-1);
constexpr std::size_t kNoComponent = static_cast<std::size_t>(-1);

}  // namespace

SparseEmulator::SparseEmulator(PairOracle& host, const DegreePartition& part, ParityForest forest,
                               EmulatorParams params, std::uint64_t seed)
    : host_(host), forest_(std::move(forest)), params_(params), rng_(seed), low_(part.low) {
  const Vertex n = host_.vertex_count();
  if (part.is_high.size() != n) throw ParameterError("SparseEmulator: partition size mismatch");
  if (params_.delta == 0 || params_.d == 0) throw ParameterError("SparseEmulator: delta, d >= 1");
  if (!(params_.m > 0.0)) throw ParameterError("SparseEmulator: m must be positive");
  if (n >= (Vertex{1} << 31)) throw SizeLimitError("SparseEmulator: host too large for slot ids");
  is_high_ = part.is_high;
  local_of_.assign(n, kNotLow);
  for (std::size_t i = 0; i < low_.size(); ++i) local_of_[low_[i]] = static_cast<Vertex>(i);

  component_.assign(n, kNoComponent);
  const auto& roots = forest_.roots();
  members_.resize(roots.size());
  for (std::size_t c = 0; c < roots.size(); ++c) component_[roots[c]] = c;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_high_[v]) continue;
    if (!forest_.contains(v)) throw ParameterError("SparseEmulator: forest misses a high vertex");
    const std::size_t c = component_[forest_.root(v)];
    component_[v] = c;
    members_[c].push_back(v);
  }
  state_.assign(members_.size(), ComponentState::Unset);
  matchings_.resize(params_.delta);
}

std::size_t SparseEmulator::degree_bound() const {
  return 4 * params_.delta * params_.d + 4 * params_.d;
}

std::size_t SparseEmulator::component_of(Vertex high) const {
  if (high >= component_.size() || component_[high] == kNoComponent)
    throw ParameterError("SparseEmulator: not a high vertex");
  return component_[high];
}

std::uint64_t SparseEmulator::pack_slot(Vertex low, Vertex high, unsigned copy) {
  return (std::uint64_t{low} << 32) | (std::uint64_t{high} << 1) | (copy & 1U);
}

const SparseEmulator::Row& SparseEmulator::row(Vertex v) {
  auto it = rows_.find(v);
  if (it != rows_.end()) return it->second;
  Row r;
  const Vertex hv = low_[v];
  const Vertex n = host_.vertex_count();
  for (Vertex x = 0; x < n; ++x) {
    if (x == hv || !host_.pair_query(hv, x)) continue;
    auto& list = is_high_[x] ? r.high : r.low;
    const Vertex id = is_high_[x] ? x : local_of_[x];
    list.push_back(id);
    list.push_back(id);
  }
  return rows_.emplace(v, std::move(r)).first->second;
}

const SparseEmulator::Row& SparseEmulator::cached_row(Vertex v) const {
  auto it = rows_.find(v);
  if (it == rows_.end()) throw InternalError("SparseEmulator: row not yet queried");
  return it->second;
}

SparseEmulator::SlotRef SparseEmulator::slot_at(Vertex v, const Row& r, std::size_t i) const {
  const std::size_t pos = (i - 1) / params_.delta;
  const Vertex w = r.high[pos];
  const auto first = std::lower_bound(r.high.begin(), r.high.end(), w) - r.high.begin();
  const auto copy = static_cast<unsigned>(pos - static_cast<std::size_t>(first));
  return {w, pack_slot(v, w, copy), (i - 1) % params_.delta};
}

Label SparseEmulator::parity_label(Vertex w, Vertex u) const {
  switch (forest_parity(forest_, w, u)) {
    case ForestParity::Even:
      return Label::Eq;
    case ForestParity::Odd:
      return Label::Neq;
    case ForestParity::Disconnected:
      break;
  }
  throw InternalError("SparseEmulator: matched slots in different trees");
}

ComponentState SparseEmulator::classify_component(std::size_t c) {
  if (state_.at(c) != ComponentState::Unset) return state_[c];
  const double n = host_.vertex_count();
  const double lg = log2n(n);
  const Count experiments = ceil_count(params_.classify_factor * n *
                                       static_cast<double>(low_.size()) * lg / params_.m);
  const Count threshold = std::max<Count>(1, ceil_count(params_.hit_factor * lg));
  const auto& members = members_[c];
  Count hits = 0;
  // Stopping at the threshold leaves the decision unchanged.
  for (Count t = 0; t < experiments && hits < threshold && !low_.empty(); ++t) {
    const Vertex u = members[uniform_below(rng_, members.size())];
    const Vertex z = low_[uniform_below(rng_, low_.size())];
    if (host_.pair_query(u, z)) ++hits;
  }
  state_[c] = hits >= threshold ? ComponentState::Dense : ComponentState::Sparse;
  return state_[c];
}

XorNeighbor SparseEmulator::match_slot(const SlotRef& ref) {
  auto& table = matchings_[ref.matching];
  if (auto it = table.find(ref.slot); it != table.end()) {
    const std::uint64_t p = it->second;
    return {slot_low(p), parity_label(ref.high, slot_high(p))};
  }
  const double n = host_.vertex_count();
  const Count cap = ceil_count(params_.attempt_factor * n * n * log2n(n) / params_.m);
  const auto& members = members_[component_[ref.high]];
  for (Count attempt = 0; attempt < cap; ++attempt) {
    const Vertex u = members[uniform_below(rng_, members.size())];
    const auto z = static_cast<Vertex>(uniform_below(rng_, low_.size()));
    if (!host_.pair_query(u, low_[z])) continue;
    const auto first = static_cast<unsigned>(uniform_below(rng_, 2));
    for (unsigned t = 0; t < 2; ++t) {
      const std::uint64_t p = pack_slot(z, u, first ^ t);
      if (p == ref.slot || table.contains(p)) continue;
      table.emplace(ref.slot, p);
      table.emplace(p, ref.slot);
      return {z, parity_label(ref.high, u)};
    }
  }
  throw EmulationFailure("SparseEmulator: no free matching slot found within the attempt cap");
}

std::optional<XorNeighbor> SparseEmulator::neighbor_query(Vertex v, std::size_t i) {
  if (v >= low_.size()) throw ParameterError("SparseEmulator: vertex out of range");
  if (i == 0) throw ParameterError("SparseEmulator: indices start at 1");
  ledger().charge_list();  // in the caller's phase; host queries go to "emulate"
  ScopedPhase phase(ledger(), "emulate");
  if (i > degree_bound()) return std::nullopt;
  const Row& r = row(v);
  const std::size_t cut = r.high.size() * params_.delta;
  if (i > cut) {
    const std::size_t k = i - cut;
    if (k > r.low.size()) return std::nullopt;
    return XorNeighbor{r.low[k - 1], Label::Neq};
  }
  const SlotRef ref = slot_at(v, r, i);
  if (classify_component(component_[ref.high]) == ComponentState::Sparse)
    return XorNeighbor{v, Label::Eq};
  return match_slot(ref);
}

AnswerProvenance SparseEmulator::provenance(Vertex v, std::size_t i) const {
  const Row& r = cached_row(v);
  const std::size_t cut = r.high.size() * params_.delta;
  if (i == 0 || i > degree_bound() || i > cut + r.low.size())
    throw ParameterError("SparseEmulator: index has no answer");
  if (i > cut) return {AnswerKind::LowEdge, 0, 0};
  const SlotRef ref = slot_at(v, r, i);
  switch (state_[component_[ref.high]]) {
    case ComponentState::Sparse:
      return {AnswerKind::SparseLoop, ref.high, 0};
    case ComponentState::Dense: {
      const auto& table = matchings_[ref.matching];
      auto it = table.find(ref.slot);
      if (it == table.end()) break;
      return {AnswerKind::Matching, ref.high, slot_high(it->second)};
    }
    case ComponentState::Unset:
      break;
  }
  throw InternalError("SparseEmulator: answer not yet produced");
}

std::vector<Vertex> SparseEmulator::expand_answer(Vertex v, std::size_t i) const {
  const AnswerProvenance p = provenance(v, i);
  const Row& r = cached_row(v);
  const Vertex hv = low_[v];
  switch (p.kind) {
    case AnswerKind::LowEdge:
      return {hv, low_[r.low[i - r.high.size() * params_.delta - 1]]};
    case AnswerKind::SparseLoop:
      return {hv, p.high, hv};
    case AnswerKind::Matching: {
      const SlotRef ref = slot_at(v, r, i);
      const std::uint64_t partner = matchings_[ref.matching].at(ref.slot);
      std::vector<Vertex> walk{hv};
      const auto tree = forest_.path(p.high, p.partner_high);
      walk.insert(walk.end(), tree.begin(), tree.end());
      walk.push_back(low_[slot_low(partner)]);
      return walk;
    }
  }
  throw InternalError("SparseEmulator: unknown provenance");
}

XorGame SparseEmulator::materialize() {
  // A proper edge is seen from both ends; a loop is listed once per copy,
  // matching the XorGame adjacency convention.
  std::map<std::tuple<Vertex, Vertex, Label>, Count> halves;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (std::size_t i = 1;; ++i) {
      const auto ans = neighbor_query(v, i);
      if (!ans) break;
      const Vertex a = std::min(v, ans->vertex);
      const Vertex b = std::max(v, ans->vertex);
      ++halves[{a, b, ans->label}];
    }
  }
  std::vector<Constraint> constraints;
  for (const auto& [key, count] : halves) {
    const auto& [a, b, label] = key;
    const Count copies = a == b ? count : (count + 1) / 2;
    for (Count k = 0; k < copies; ++k) constraints.push_back({a, b, label});
  }
  return XorGame(vertex_count(), std::move(constraints));
}

bool SparseEmulator::matchings_well_formed() const {
  for (const auto& table : matchings_) {
    for (const auto& [s, p] : table) {
      if (s == p) return false;
      auto back = table.find(p);
      if (back == table.end() || back->second != s) return false;
      if (component_[slot_high(s)] != component_[slot_high(p)]) return false;
    }
  }
  return true;
}

std::size_t SparseEmulator::matched_slot_count() const {
  std::size_t total = 0;
  for (const auto& table : matchings_) total += table.size();
  return total;
}

}  // namespace bipartest
