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

#include "qeo/bench/bench.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <tuple>

#include "qeo/bench/generate.hpp"
#include "qeo/formulations/instance_io.hpp"

namespace qeo {

namespace fs = std::filesystem;

BenchInstance load_instance(const std::string& family, const std::string& path) {
  BenchInstance inst;
  inst.family = family;
  inst.id = fs::path(path).stem().string();
  if (family == "qap") {
    if (fs::path(path).extension() == ".json") {
      inst.data = qap_from_json(read_json_file(path));
    } else {
      inst.data = read_qaplib_file(path);
    }
  } else if (family == "uc") {
    inst.data = uc_from_json(read_json_file(path));
  } else if (family == "hens") {
    inst.data = hens_from_json(read_json_file(path));
  } else {
    throw std::invalid_argument("unknown family '" + family + "' (expected qap, uc or hens)");
  }
  return inst;
}

Pipeline make_pipeline(const BenchInstance& inst) {
  Pipeline p;
  if (const auto* qap = std::get_if<QapInstance>(&inst.data)) {
    p.weights = inst.penalties.value_or(PenaltyWeights{qap_default_penalty(*qap), 0.0});
    p.formulation = qap_to_qubo(*qap, p.weights);
    p.decode = [qap = *qap, vars = p.formulation.vars](const Assignment& x) {
      const QapDecoded d = qap_decode(x, vars, qap);
      Decoded out;
      out.feasible = d.feasible();
      // Placement cost read straight off x, so infeasible rows still carry a number.
      const std::size_t n = qap.size();
      out.objective = 0.0;
      for (std::size_t a = 0; a < n * n; ++a) {
        if (!x[a]) continue;
        for (std::size_t b = 0; b < n * n; ++b) {
          if (x[b]) out.objective += qap.flow(a / n, b / n) * qap.distance(a % n, b % n);
        }
      }
      for (auto p : d.bad_plants) out.violations.push_back("plant " + std::to_string(p) + " not placed once");
      for (auto l : d.bad_locations) out.violations.push_back("location " + std::to_string(l) + " not used once");
      return out;
    };
  } else if (const auto* uc = std::get_if<UcInstance>(&inst.data)) {
    DiscretizedUc d = uc_discretize(*uc, inst.grids);
    p.weights = inst.penalties.value_or(uc_default_penalties(d));
    p.formulation = uc_to_qubo(d, p.weights);
    p.decode = [d = std::move(d), vars = p.formulation.vars](const Assignment& x) {
      const UcSolution s = uc_decode(x, vars, d);
      return Decoded{s.total, s.feasible(), s.violations};
    };
  } else {
    const auto& hens = std::get<HensInstance>(inst.data);
    DiscretizedHens d = hens_discretize(hens, inst.grids);
    p.weights = inst.penalties.value_or(hens_default_penalties());
    p.formulation = hens_to_qubo(d, p.weights).formulation;
    p.decode = [d = std::move(d), vars = p.formulation.vars](const Assignment& x) {
      const HensSolution s = hens_decode(x, vars, d);
      return Decoded{s.total_cost, s.feasible(), s.violations};
    };
  }
  return p;
}

double oracle_value(const BenchInstance& inst) {
  if (const auto* qap = std::get_if<QapInstance>(&inst.data)) {
    if (qap->size() > kQapOracleMaxSize) {
      throw OracleUnavailable("QAP oracle supports n <= " + std::to_string(kQapOracleMaxSize) + ", instance has n = " +
                              std::to_string(qap->size()));
    }
    return qap_oracle(*qap).objective;
  }
  if (const auto* uc = std::get_if<UcInstance>(&inst.data)) {
    if (uc->units.size() > kUcOracleMaxUnits) throw OracleUnavailable("UC oracle supports at most 12 units");
    const auto best = uc_grid_oracle(uc_discretize(*uc, inst.grids));
    if (!best) throw InfeasibleError("no grid combination meets the load");
    return best->total;
  }
  const auto& hens = std::get<HensInstance>(inst.data);
  if (hens.sources() * hens.sinks() > kHensOracleMaxPairs) throw OracleUnavailable("HENS oracle supports m*n <= 16");
  return hens_oracle(hens).total_cost;
}

Reference reference_for(const BenchInstance& inst) {
  try {
    return {oracle_value(inst), false};
  } catch (const OracleUnavailable&) {
    if (!inst.reference) throw;
    return {*inst.reference, true};
  }
}

namespace {

std::optional<std::size_t> opt_size(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  return doc.at(key).get<std::size_t>();
}

BenchInstance parse_instance(const nlohmann::json& doc, const std::string& base_dir) {
  const std::string family = doc.at("family").get<std::string>();
  BenchInstance inst;
  if (doc.contains("path")) {
    fs::path path = doc.at("path").get<std::string>();
    if (path.is_relative()) path = fs::path(base_dir) / path;
    inst = load_instance(family, path.string());
  } else if (doc.contains("generate")) {
    nlohmann::json g = doc.at("generate");
    g["family"] = family;
    // Plant the instance on the grid it will be discretized with.
    if (!g.contains("grids") && doc.contains("grids")) g["grids"] = doc.at("grids");
    const GenSpec spec = genspec_from_json(g);
    inst.family = family;
    if (family == "uc") {
      inst.data = gen_uc(spec);
    } else if (family == "hens") {
      inst.data = gen_hens(spec);
    } else {
      throw std::invalid_argument("only uc and hens instances can be generated");
    }
    inst.grids = spec.grids;
    inst.id = family + "-seed" + std::to_string(spec.seed);
  } else {
    throw std::invalid_argument("suite instance needs \"path\" or \"generate\"");
  }
  inst.id = doc.value("id", inst.id);
  if (inst.id.find_first_of(",\n\"") != std::string::npos) {
    throw std::invalid_argument("instance id may not contain commas, quotes or newlines");
  }
  inst.grids = doc.value("grids", inst.grids);
  if (doc.contains("penalty_a") || doc.contains("penalty_b")) {
    inst.penalties = PenaltyWeights{doc.value("penalty_a", 0.0), doc.value("penalty_b", 0.0)};
  }
  if (doc.contains("reference")) inst.reference = doc.at("reference").get<double>();
  return inst;
}

}  // namespace

BenchSuite parse_suite(const nlohmann::json& doc, const std::string& base_dir) {
  BenchSuite suite;
  try {
    for (const auto& i : doc.value("instances", nlohmann::json::array())) {
      suite.instances.push_back(parse_instance(i, base_dir));
    }
    for (const auto& s : doc.value("solvers", nlohmann::json::array())) {
      SolveSpec spec;
      if (s.is_string()) {
        spec.strategy = s.get<std::string>();
        suite.solvers.push_back(spec);
        continue;
      }
      spec.strategy = s.at("name").get<std::string>();
      spec.reads = opt_size(s, "reads");
      spec.sweeps = opt_size(s, "sweeps");
      spec.restarts = opt_size(s, "restarts");
      spec.threads = opt_size(s, "threads");
      spec.sub_size = opt_size(s, "sub_size");
      spec.layers = opt_size(s, "layers");
      spec.max_iterations = opt_size(s, "max_iterations");
      std::vector<std::uint64_t> seeds = {s.value("seed", std::uint64_t{0})};
      if (s.contains("seeds")) seeds = s.at("seeds").get<std::vector<std::uint64_t>>();
      for (auto seed : seeds) {
        spec.seed = seed;
        suite.solvers.push_back(spec);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed suite: ") + e.what());
  }
  for (const auto& s : suite.solvers) {
    if (std::find(solver_names().begin(), solver_names().end(), s.strategy) == solver_names().end()) {
      throw std::invalid_argument("unknown solver '" + s.strategy + "' in suite");
    }
  }
  return suite;
}

BenchRow run_cell(const BenchInstance& inst, const Pipeline& pipeline, const SolveSpec& spec,
                  const std::optional<Reference>& ref) {
  const SampleSet samples = solve(pipeline.formulation.qubo, spec);
  const SampleRecord& best = samples.best();
  const Decoded d = pipeline.decode(best.bits);
  BenchRow row;
  row.instance = inst.id;
  row.family = inst.family;
  row.solver = spec.strategy;
  row.seed = spec.seed;
  row.qubo_energy = best.energy;
  row.objective = d.objective;
  row.feasible = d.feasible;
  if (ref) {
    row.reference = ref->value;
    row.reference_external = ref->external;
  }
  row.deviation_pct = deviation_pct(row.feasible, row.objective, row.reference);
  row.elapsed_s = samples.meta().elapsed_s;
  row.bits = best.bits;
  return row;
}

BenchReport run_bench(const BenchSuite& suite) {
  BenchReport report;
  for (const auto& inst : suite.instances) {
    const Pipeline pipeline = make_pipeline(inst);
    const Reference ref = reference_for(inst);
    for (const auto& spec : suite.solvers) report.rows.push_back(run_cell(inst, pipeline, spec, ref));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance, a.solver, a.seed) < std::tie(b.instance, b.solver, b.seed);
  });
  return report;
}

}  // namespace qeo
