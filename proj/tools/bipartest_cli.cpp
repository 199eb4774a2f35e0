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

// Command-line front end: gen, dist, test, bench, conjecture, corpus.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "bipartest/corpus.hpp"
#include "bipartest/distance.hpp"
#include "bipartest/generators.hpp"
#include "bipartest/harness.hpp"
#include "bipartest/pipeline.hpp"
#include "bipartest/witness.hpp"

namespace bp = bipartest;

namespace {

struct Common {
  std::uint64_t seed = 1;
  std::optional<double> eps;
  std::optional<bp::Vertex> n;
  std::optional<bp::Count> trials;
  std::string config;
  std::string out;
  bool json = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Master RNG seed");
  app->add_option("--eps", c.eps, "Distance parameter in (0, 1]");
  app->add_option("--n", c.n, "Instance size");
  app->add_option("--trials", c.trials, "Number of trials");
  app->add_option("--config", c.config, "Flat key = value config file");
  app->add_option("--out", c.out, "Output path");
  app->add_flag("--json", c.json, "Emit JSON");
}

bp::KeyValues load_kv(const Common& c) {
  return c.config.empty() ? bp::KeyValues{} : bp::KeyValues::load(c.config);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bp::Graph generate(const std::string& kind, bp::Vertex n, unsigned degree, double density,
                   std::uint64_t seed) {
  if (kind == "G1" || kind == "matchings") return bp::generate_matchings_graph(n, degree, seed);
  if (kind == "G2" || kind == "blowup-cycle") return bp::generate_blowup_cycle_family(n);
  if (kind == "BIPARTITE-RANDOM" || kind == "bipartite") return bp::random_bipartite(n, density, seed);
  if (kind == "random") return bp::random_graph(n, density, seed);
  if (kind == "odd-cycle") return bp::generate_odd_cycle(n);
  if (kind == "complete") return bp::complete_graph(n);
  throw bp::ParameterError("unknown instance kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublinear bipartiteness testing toolkit"};
  app.require_subcommand(1);

  // gen
  Common gen_c;
  std::string gen_kind = "G2";
  unsigned gen_degree = 3;
  double gen_density = 0.1;
  unsigned gen_blowup = 1;
  auto* gen = app.add_subcommand("gen", "Emit an instance in the graph text format");
  add_common(gen, gen_c);
  gen->add_option("--kind", gen_kind,
                  "G1|matchings, G2|blowup-cycle, BIPARTITE-RANDOM|bipartite, random, odd-cycle, "
                  "complete, corpus (writes the standard corpus into --out)");
  gen->add_option("--degree", gen_degree, "Number of matchings for G1");
  gen->add_option("--density", gen_density, "Edge probability for random kinds");
  gen->add_option("--blowup", gen_blowup, "Blow every vertex up into a group of this size");

  // dist
  Common dist_c;
  std::string dist_file;
  unsigned dist_effort = 32;
  auto* dist = app.add_subcommand("dist", "Distance to bipartiteness (or XOR satisfiability)");
  add_common(dist, dist_c);
  dist->add_option("file", dist_file, "Graph or XOR game file")->required();
  dist->add_option("--effort", dist_effort, "Local-search restarts above the exact threshold");

  // test
  Common test_c;
  std::string test_file;
  std::string test_kind = "G2";
  std::string test_profile = "desk";
  auto* test = app.add_subcommand("test", "Run the tester once");
  add_common(test, test_c);
  test->add_option("file", test_file, "Graph file (otherwise --kind and --n)");
  test->add_option("--kind", test_kind, "Instance kind when no file is given");
  test->add_option("--profile", test_profile, "reference or desk constants")
      ->check(CLI::IsMember({"reference", "desk"}));

  // bench
  Common bench_c;
  std::string bench_family;
  std::vector<bp::Vertex> bench_sizes;
  auto* bench = app.add_subcommand("bench", "Run an experiment suite and write CSV + JSON");
  add_common(bench, bench_c);
  bench->add_option("--family", bench_family, "G1, G2, BIPARTITE-RANDOM or FILE");
  bench->add_option("--sizes", bench_sizes, "Instance sizes")->delimiter(',');

  // conjecture
  Common conj_c;
  std::string conj_file;
  std::string conj_kind = "G2";
  double conj_kappa = 1.0;
  double conj_tau = 1.0;
  unsigned conj_blowup = 1;
  auto* conj = app.add_subcommand("conjecture", "Distance of induced subgraphs on random samples");
  add_common(conj, conj_c);
  conj->add_option("file", conj_file, "Graph file (otherwise --kind and --n)");
  conj->add_option("--kind", conj_kind, "Instance kind when no file is given");
  conj->add_option("--blowup", conj_blowup, "Blow the generated instance up by this factor");
  conj->add_option("--kappa", conj_kappa, "Sample size constant");
  conj->add_option("--tau", conj_tau, "Farness bar constant");

  // corpus
  std::string corpus_dir = "corpus";
  auto* corpus = app.add_subcommand("corpus", "Re-check the corpus manifest with the exact solver");
  corpus->add_option("dir", corpus_dir, "Corpus directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (gen_kind == "corpus") {
        const auto entries = bp::write_standard_corpus(gen_c.out.empty() ? "corpus" : gen_c.out);
        std::cout << "wrote " << entries.size() << " corpus entries\n";
        return 0;
      }
      bp::Graph g = generate(gen_kind, gen_c.n.value_or(64), gen_degree, gen_density, gen_c.seed);
      if (gen_blowup > 1) g = bp::generate_blowup(g, gen_blowup);
      std::ostringstream ss;
      bp::write_graph(ss, g);
      emit(gen_c, ss.str());
      return 0;
    }

    if (*dist) {
      const std::string text = read_file(dist_file);
      std::istringstream in(text);
      nlohmann::json j;
      if (bp::looks_like_xor_game(text)) {
        const auto game = bp::read_xor_game(in);
        j = {{"kind", "xor-game"}, {"n", game.vertex_count()}, {"exact", true},
             {"distance", bp::exact_xor_distance(game)}};
      } else {
        const auto g = bp::read_graph(in);
        const auto ev = bp::distance_evidence(g, dist_effort, dist_c.seed);
        j = {{"kind", "graph"}, {"n", g.vertex_count()}, {"exact", ev.exact}, {"distance", ev.value}};
      }
      emit(dist_c, dist_c.json ? j.dump(2) + "\n"
                               : std::string(j["exact"].get<bool>() ? "exact " : "upper bound ") +
                                     std::to_string(j["distance"].get<bp::Count>()) + "\n");
      return 0;
    }

    if (*test) {
      bp::PipelineConfig cfg =
          test_profile == "reference" ? bp::PipelineConfig::reference() : bp::PipelineConfig::desk();
      cfg.seed = test_c.seed;
      cfg.apply(load_kv(test_c));
      if (test_c.eps) cfg.eps = *test_c.eps;
      auto graph = std::make_shared<const bp::Graph>(
          test_file.empty() ? generate(test_kind, test_c.n.value_or(399), 3, 0.1, cfg.seed)
                            : bp::load_graph(test_file));
      bp::GraphPairOracle oracle(graph);
      bp::Rng rng(cfg.seed);
      const auto verdict = bp::test_bipartiteness(oracle, cfg, rng);
      if (test_c.json) {
        emit(test_c, bp::to_json(verdict).dump(2) + "\n");
      } else {
        std::ostringstream ss;
        ss << bp::to_string(verdict.outcome) << " (stage " << verdict.stage << ", n "
           << verdict.params.n << ", pair queries " << verdict.ledger.pair_queries
           << ", list queries " << verdict.ledger.list_queries << ")\n";
        if (verdict.witness) {
          ss << "odd cycle:";
          for (auto v : verdict.witness->vertices) ss << ' ' << v;
          ss << '\n';
        }
        emit(test_c, ss.str());
      }
      return 0;
    }

    if (*bench) {
      bp::ExperimentConfig cfg;
      cfg.apply(load_kv(bench_c));
      if (!bench_family.empty()) cfg.family = bp::parse_family(bench_family);
      if (!bench_sizes.empty()) cfg.sizes = bench_sizes;
      if (bench_c.n) cfg.sizes = {*bench_c.n};
      if (bench_c.eps) cfg.eps = {*bench_c.eps};
      if (bench_c.trials) cfg.trials = *bench_c.trials;
      if (bench_c.config.empty() || !load_kv(bench_c).contains("seed")) cfg.seed = bench_c.seed;
      if (!bench_c.out.empty()) cfg.out = bench_c.out;
      if (cfg.out.empty()) cfg.out = "bench.csv";
      const auto result = bp::run_experiment(cfg);
      const auto summary_path = bp::write_outputs(cfg, result);
      const auto summary = bp::to_json(result.summary);
      if (bench_c.json) std::cout << summary.dump(2) << '\n';
      else std::cout << "wrote " << cfg.out << " and " << summary_path << '\n';
      return 0;
    }

    if (*conj) {
      bp::Graph g = conj_file.empty()
                        ? generate(conj_kind, conj_c.n.value_or(100), 3, 0.1, conj_c.seed)
                        : bp::load_graph(conj_file);
      if (conj_blowup > 1) g = bp::generate_blowup(g, conj_blowup);
      bp::ConjectureParams p;
      p.eps = conj_c.eps.value_or(0.1);
      p.trials = conj_c.trials.value_or(100);
      p.seed = conj_c.seed;
      p.kappa = conj_kappa;
      p.tau = conj_tau;
      const auto report = bp::verify_conjecture(g, p);
      if (conj_c.json) {
        emit(conj_c, bp::to_json(report).dump(2) + "\n");
      } else {
        std::ostringstream ss;
        ss << "sample size " << report.sample_size << (report.exact ? " (exact)" : " (heuristic)")
           << (report.regular ? "" : " [graph not almost-regular]") << "\npositive fraction "
           << report.positive_fraction << "\nfar fraction " << report.far_fraction
           << " (bar " << report.far_threshold << ")\n";
        emit(conj_c, ss.str());
      }
      return 0;
    }

    if (*corpus) {
      const auto report = bp::corpus_verify(corpus_dir);
      for (const auto& f : report.failures) std::cerr << "FAIL " << f.name << ": " << f.reason << '\n';
      std::cout << report.checked << " entries checked, " << report.failures.size() << " failed\n";
      return report.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
