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

#include "bipartest/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include "bipartest/distance.hpp"
#include "bipartest/generators.hpp"
#include "bipartest/witness.hpp"

namespace bipartest {

const char* to_string(Family f) {
  switch (f) {
    case Family::G1:
      return "G1";
    case Family::G2:
      return "G2";
    case Family::BipartiteRandom:
      return "BIPARTITE-RANDOM";
    case Family::File:
      return "FILE";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::G1, Family::G2, Family::BipartiteRandom, Family::File})
    if (s == to_string(f)) return f;
  throw ParameterError("unknown family '" + s + "' (G1, G2, BIPARTITE-RANDOM, FILE)");
}

void ExperimentConfig::validate() const {
  if (trials == 0) throw ParameterError("trials must be at least 1");
  if (family != Family::File && sizes.empty()) throw ParameterError("sizes must not be empty");
  if (family == Family::File && file.empty()) throw ParameterError("FILE family needs file");
  for (double e : eps)
    if (!(e > 0.0 && e <= 1.0)) throw ParameterError("eps values must lie in (0, 1]");
  if (!(bipartite_density >= 0.0 && bipartite_density <= 1.0))
    throw ParameterError("bipartite_density must lie in [0, 1]");
  pipeline.validate();
}

std::vector<std::string> ExperimentConfig::keys() {
  std::vector<std::string> k = {"family", "sizes", "eps_list", "trials", "out",
                                "file",   "g1_degree", "bipartite_density"};
  const auto& p = PipelineConfig::keys();
  k.insert(k.end(), p.begin(), p.end());
  return k;
}

void ExperimentConfig::apply(const KeyValues& kv) {
  pipeline.apply(kv);
  if (auto v = kv.get_string("family")) family = parse_family(*v);
  if (auto v = kv.get_counts("sizes")) {
    sizes.clear();
    for (auto s : *v) sizes.push_back(static_cast<Vertex>(s));
  }
  if (auto v = kv.get_doubles("eps_list")) eps = *v;
  if (auto v = kv.get_count("trials")) trials = *v;
  if (auto v = kv.get_count("seed")) seed = *v;
  if (auto v = kv.get_string("out")) out = *v;
  if (auto v = kv.get_string("file")) file = *v;
  if (auto v = kv.get_count("g1_degree")) g1_degree = static_cast<unsigned>(*v);
  if (auto v = kv.get_double("bipartite_density")) bipartite_density = *v;
  validate();
}

Graph make_instance(const ExperimentConfig& cfg, Vertex N, std::uint64_t seed) {
  switch (cfg.family) {
    case Family::G1:
      return generate_matchings_graph(N, cfg.g1_degree, seed);
    case Family::G2:
      return generate_blowup_cycle_family(N);
    case Family::BipartiteRandom:
      return random_bipartite(N, cfg.bipartite_density, seed);
    case Family::File:
      return load_graph(cfg.file);
  }
  throw InternalError("make_instance: unknown family");
}

double family_eps(const ExperimentConfig& cfg, const Graph& g) {
  if (cfg.family != Family::G2) return cfg.pipeline.eps;
  const auto shape = blowup_cycle_shape(g.vertex_count());
  const double pairs = 0.5 * g.vertex_count() * (g.vertex_count() - 1.0);
  const double k = shape.group_size;
  return std::clamp(k * k / pairs, 1e-9, 1.0);
}

std::optional<double> fit_loglog_exponent(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::nullopt;
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const double k = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / k;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / k;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

namespace {

double median(std::vector<Count> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t h = values.size() / 2;
  if (values.size() % 2 == 1) return static_cast<double>(values[h]);
  return 0.5 * (static_cast<double>(values[h - 1]) + static_cast<double>(values[h]));
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  std::vector<Vertex> sizes = cfg.sizes;
  std::optional<Graph> file_graph;
  if (cfg.family == Family::File) {
    file_graph = load_graph(cfg.file);
    sizes = {file_graph->vertex_count()};
  }
  Count index = 0;
  std::map<Vertex, std::vector<Count>> per_size;
  for (Vertex N : sizes) {
    for (Count t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = derive_seed(cfg.seed, index);
      auto graph = std::make_shared<const Graph>(file_graph ? *file_graph
                                                            : make_instance(cfg, N, seed));
      std::vector<double> eps_values = cfg.eps;
      if (eps_values.empty()) eps_values.push_back(family_eps(cfg, *graph));
      for (double eps : eps_values) {
        TrialReport r;
        r.trial = index;
        r.seed = derive_seed(cfg.seed, index);
        ++index;
        r.N = graph->vertex_count();
        r.eps = eps;
        GraphPairOracle oracle(graph);
        PipelineConfig pc = cfg.pipeline;
        pc.eps = eps;
        Rng rng(r.seed);
        const auto t0 = std::chrono::steady_clock::now();
        const Verdict v = test_bipartiteness(oracle, pc, rng);
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
        r.n = v.params.n;
        r.outcome = v.outcome;
        r.pair_queries = v.ledger.pair_queries;
        r.list_queries = v.ledger.list_queries;
        if (v.witness) {
          r.witness_len = v.witness->vertices.size();
          r.witness_verified = verify_odd_cycle(*graph, *v.witness);
          if (!r.witness_verified) throw InternalError("run_experiment: witness failed re-check");
        }
        per_size[r.N].push_back(r.pair_queries);
        result.trials.push_back(r);
      }
    }
  }
  result.summary.family = cfg.family;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [N, totals] : per_size) {
    SizeSummary s;
    s.N = N;
    s.trials = totals.size();
    s.median_pair_queries = median(totals);
    s.max_pair_queries = *std::max_element(totals.begin(), totals.end());
    for (const auto& r : result.trials)
      if (r.N == N && r.outcome == Outcome::Reject) ++s.rejections;
    result.summary.sizes.push_back(s);
    xs.push_back(N);
    ys.push_back(s.median_pair_queries);
  }
  result.summary.exponent = fit_loglog_exponent(xs, ys);
  return result;
}

void write_csv(std::ostream& out, std::span<const TrialReport> trials) {
  out << "trial,N,n,eps,outcome,pair_queries,list_queries,witness_len,seed\n";
  for (const auto& r : trials) {
    std::ostringstream eps;
    eps << std::setprecision(9) << r.eps;
    out << r.trial << ',' << r.N << ',' << r.n << ',' << eps.str() << ',' << to_string(r.outcome)
        << ',' << r.pair_queries << ',' << r.list_queries << ',' << r.witness_len << ','
        << r.seed << '\n';
  }
}

nlohmann::json to_json(const ExperimentSummary& summary) {
  nlohmann::json j;
  j["family"] = to_string(summary.family);
  j["sizes"] = nlohmann::json::array();
  for (const auto& s : summary.sizes) {
    j["sizes"].push_back({{"N", s.N},
                          {"trials", s.trials},
                          {"rejections", s.rejections},
                          {"median_pair_queries", s.median_pair_queries},
                          {"max_pair_queries", s.max_pair_queries}});
  }
  j["exponent"] = summary.exponent ? nlohmann::json(*summary.exponent) : nlohmann::json(nullptr);
  return j;
}

std::string write_outputs(const ExperimentConfig& cfg, const ExperimentResult& result) {
  if (cfg.out.empty()) throw ParameterError("write_outputs: no output path");
  std::ofstream csv(cfg.out);
  if (!csv) throw std::runtime_error("cannot write " + cfg.out);
  write_csv(csv, result.trials);
  std::string summary_path = cfg.out;
  const auto dot = summary_path.rfind('.');
  const auto slash = summary_path.rfind('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
    summary_path.resize(dot);
  summary_path += ".json";
  std::ofstream js(summary_path);
  if (!js) throw std::runtime_error("cannot write " + summary_path);
  js << to_json(result.summary).dump(2) << '\n';
  return summary_path;
}

Count conjecture_sample_size(Vertex N, double eps, double kappa) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("conjecture: eps must lie in (0, 1]");
  if (!(kappa > 0.0)) throw ParameterError("conjecture: kappa must be positive");
  const double lg = std::log2(1.0 / eps);
  return std::min<Count>(N, std::max<Count>(3, ceil_count(kappa * lg * lg / eps)));
}

ConjectureReport verify_conjecture(const Graph& g, const ConjectureParams& params) {
  if (params.trials == 0) throw ParameterError("conjecture: trials must be at least 1");
  ConjectureReport report;
  const Vertex N = g.vertex_count();
  report.sample_size = conjecture_sample_size(N, params.eps, params.kappa);
  const std::size_t min_deg = N ? g.min_degree() : 0;
  report.regular = min_deg >= 1 && g.max_degree() <= 2 * min_deg;
  report.exact = report.sample_size <= kExactThreshold;
  const double s = static_cast<double>(report.sample_size);
  const double polylog = std::log2(1.0 / params.eps) + 1.0;
  report.far_threshold = params.tau * params.eps * s * (s - 1.0) / 2.0 / (polylog * polylog);

  std::vector<Vertex> all(N);
  std::iota(all.begin(), all.end(), Vertex{0});
  Count positive = 0;
  Count far = 0;
  for (Count t = 0; t < params.trials; ++t) {
    Rng rng(derive_seed(params.seed, t));
    std::vector<Vertex> chosen;
    std::sample(all.begin(), all.end(), std::back_inserter(chosen),
                static_cast<std::size_t>(report.sample_size), rng);
    const Graph sub = g.induced(chosen);
    const Count dist = report.exact
                           ? exact_bipartite_distance(sub)
                           : heuristic_bipartite_distance(sub, params.heuristic_effort, rng());
    report.distances.push_back(dist);
    if (dist > 0) ++positive;
    if (static_cast<double>(dist) >= report.far_threshold) ++far;
  }
  report.positive_fraction = static_cast<double>(positive) / static_cast<double>(params.trials);
  report.far_fraction = static_cast<double>(far) / static_cast<double>(params.trials);
  return report;
}

nlohmann::json to_json(const ConjectureReport& r) {
  return {{"sample_size", r.sample_size},       {"regular", r.regular},
          {"exact", r.exact},                   {"far_threshold", r.far_threshold},
          {"distances", r.distances},           {"positive_fraction", r.positive_fraction},
          {"far_fraction", r.far_fraction}};
}

}  // namespace bipartest
