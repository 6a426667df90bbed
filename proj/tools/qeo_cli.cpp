// Copyright 2026 The qeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qeo command line: formulate, solve, oracle, generate, bench, report.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qeo/bench/bench.hpp"
#include "qeo/bench/generate.hpp"
#include "qeo/core/serialize.hpp"
#include "qeo/formulations/instance_io.hpp"
#include "qeo/solvers/solve.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kInfeasible = 2;
constexpr int kInvariant = 3;

struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    qeo::write_text_file(path, text);
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void verify_samples(const qeo::Qubo& model, const qeo::SampleSet& samples) {
  for (const auto& r : samples.records()) {
    const double e = model.energy(r.bits);
    if (std::abs(e - r.energy) > 1e-9 * std::max(1.0, std::abs(e))) {
      throw InvariantFailure("reported energy " + std::to_string(r.energy) + " disagrees with recomputed " +
                             std::to_string(e));
    }
  }
}

nlohmann::json matrix_json(const qeo::Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QUBO reformulation and solving for energy-systems problems"};
  app.require_subcommand(1);

  std::string family, in_path, out_path;
  std::size_t grids = 4;
  double penalty_a = 0.0, penalty_b = 0.0;

  auto* formulate = app.add_subcommand("formulate", "Write the QUBO of an instance as JSON");
  formulate->add_option("--family", family, "qap, uc or hens")->required()->check(CLI::IsMember({"qap", "uc", "hens"}));
  formulate->add_option("--in", in_path, "Instance file")->required();
  formulate->add_option("--grids", grids, "Grid count N (uc, hens)")->check(CLI::PositiveNumber);
  auto* opt_a = formulate->add_option("--penalty-a", penalty_a, "Penalty weight A");
  auto* opt_b = formulate->add_option("--penalty-b", penalty_b, "Penalty weight B");
  formulate->add_option("--out", out_path, "Output file (stdout if omitted)");

  std::string qubo_path, solver;
  qeo::SolveSpec spec;
  std::size_t reads = 0, sweeps = 0, restarts = 0, threads = 0, sub_size = 0, layers = 0;
  bool timing = true;
  auto* solve = app.add_subcommand("solve", "Solve a QUBO JSON file");
  solve->add_option("--qubo", qubo_path, "QUBO JSON")->required();
  solve->add_option("--solver", spec.strategy, "brute, sa, tabu, decomp or vqe")
      ->required()
      ->check(CLI::IsMember(qeo::solver_names()));
  solve->add_option("--seed", spec.seed, "RNG seed");
  auto* o_reads = solve->add_option("--reads", reads, "SA reads or VQE shots");
  auto* o_sweeps = solve->add_option("--sweeps", sweeps, "SA sweeps per read");
  auto* o_restarts = solve->add_option("--restarts", restarts, "Tabu or VQE restarts");
  auto* o_threads = solve->add_option("--threads", threads, "SA worker threads");
  auto* o_sub = solve->add_option("--sub-size", sub_size, "Decomposition window");
  auto* o_layers = solve->add_option("--layers", layers, "VQE ansatz layers");
  solve->add_flag("!--no-timing", timing, "Leave elapsed time out of the output");
  solve->add_option("--out", out_path, "Output file (stdout if omitted)");

  auto* oracle = app.add_subcommand("oracle", "Exact domain optimum of an instance");
  oracle->add_option("--family", family, "qap, uc or hens")->required()->check(CLI::IsMember({"qap", "uc", "hens"}));
  oracle->add_option("--in", in_path, "Instance file")->required();
  auto* o_grids = oracle->add_option("--grids", grids, "Also report the grid optimum for this N (uc)");

  qeo::GenSpec gen;
  auto* generate = app.add_subcommand("generate", "Write a random instance as JSON");
  generate->add_option("--family", gen.family, "uc or hens")->required()->check(CLI::IsMember({"uc", "hens"}));
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--units", gen.units, "UC units");
  generate->add_option("--sources", gen.sources, "HENS sources m");
  generate->add_option("--sinks", gen.sinks, "HENS sinks n");
  generate->add_option("--grids", gen.grids, "Grid count N the instance is built for");
  generate->add_option("--out", out_path, "Output file (stdout if omitted)");

  std::string suite_path;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and write a CSV report");
  bench->add_option("--suite", suite_path, "Suite JSON")->required();
  bench->add_option("--out", out_path, "Report CSV (stdout if omitted)");

  bool stats = false;
  std::string hist_path;
  double bin_width = 1.0;
  auto* report = app.add_subcommand("report", "Summarize a benchmark report");
  report->add_option("--in", in_path, "Report CSV")->required();
  report->add_flag("--stats", stats, "Print per-family deviation summaries");
  report->add_option("--histogram-csv", hist_path, "Write binned deviations to this file");
  report->add_option("--bin-width", bin_width, "Histogram bin width in percent")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*formulate) {
      qeo::BenchInstance inst = qeo::load_instance(family, in_path);
      inst.grids = grids;
      if (*opt_a || *opt_b) {
        qeo::Pipeline defaults = qeo::make_pipeline(inst);
        inst.penalties = qeo::PenaltyWeights{*opt_a ? penalty_a : defaults.weights.a,
                                             *opt_b ? penalty_b : defaults.weights.b};
      }
      const qeo::Pipeline p = qeo::make_pipeline(inst);
      emit(out_path, qeo::qubo_to_json(p.formulation.qubo).dump(2) + "\n");
    } else if (*solve) {
      const qeo::Qubo model = qeo::qubo_from_json(qeo::read_json_file(qubo_path));
      if (*o_reads) spec.reads = reads;
      if (*o_sweeps) spec.sweeps = sweeps;
      if (*o_restarts) spec.restarts = restarts;
      if (*o_threads) spec.threads = threads;
      if (*o_sub) spec.sub_size = sub_size;
      if (*o_layers) spec.layers = layers;
      const qeo::SampleSet samples = qeo::solve(model, spec);
      verify_samples(model, samples);
      emit(out_path, samples.to_json(timing).dump(2) + "\n");
    } else if (*oracle) {
      const qeo::BenchInstance inst = qeo::load_instance(family, in_path);
      nlohmann::json out;
      if (const auto* qap = std::get_if<qeo::QapInstance>(&inst.data)) {
        if (qap->size() > qeo::kQapOracleMaxSize) throw qeo::OracleUnavailable("QAP oracle supports n <= 12");
        const auto sol = qeo::qap_oracle(*qap);
        out = {{"perm", sol.perm}, {"objective", sol.objective}};
      } else if (const auto* uc = std::get_if<qeo::UcInstance>(&inst.data)) {
        if (uc->units.size() > qeo::kUcOracleMaxUnits) throw qeo::OracleUnavailable("UC oracle supports at most 12 units");
        const auto sol = qeo::uc_oracle(*uc);
        out = {{"on", sol.on}, {"power", sol.power}, {"objective", sol.total}};
        if (*o_grids) {
          const auto g = qeo::uc_grid_oracle(qeo::uc_discretize(*uc, grids));
          if (!g) throw qeo::InfeasibleError("no grid combination meets the load");
          out["grid"] = {{"grids", grids}, {"on", g->on}, {"power", g->power}, {"objective", g->total}};
        }
      } else {
        const auto& hens = std::get<qeo::HensInstance>(inst.data);
        if (hens.sources() * hens.sinks() > qeo::kHensOracleMaxPairs) {
          throw qeo::OracleUnavailable("HENS oracle supports m*n <= 16");
        }
        const auto sol = qeo::hens_oracle(hens);
        out = {{"matches", sol.matches}, {"flows", matrix_json(sol.flows)}, {"objective", sol.total_cost}};
      }
      std::cout << out.dump(2) << "\n";
    } else if (*generate) {
      const nlohmann::json doc = gen.family == "uc" ? qeo::uc_to_json(qeo::gen_uc(gen)) : qeo::hens_to_json(qeo::gen_hens(gen));
      emit(out_path, doc.dump(2) + "\n");
    } else if (*bench) {
      const auto base = std::filesystem::path(suite_path).parent_path().string();
      const qeo::BenchSuite suite = qeo::parse_suite(qeo::read_json_file(suite_path), base);
      const qeo::BenchReport rep = qeo::run_bench(suite);
      for (const auto& row : rep.rows) {
        if (row.deviation_pct && !row.reference_external && *row.deviation_pct < -1e-9) {
          throw InvariantFailure("row " + row.instance + "/" + row.solver + " beats its exact reference");
        }
      }
      emit(out_path, qeo::report_to_csv(rep));
    } else if (*report) {
      const qeo::BenchReport rep = qeo::report_from_csv(read_text(in_path));
      if (stats || hist_path.empty()) std::cout << qeo::stats_to_text(qeo::deviation_stats(rep));
      if (!hist_path.empty()) qeo::write_text_file(hist_path, qeo::deviation_histogram_csv(rep, bin_width));
    }
  } catch (const qeo::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const qeo::OracleUnavailable& e) {
    std::cerr << "oracle unavailable: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InvariantFailure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return 0;
}
