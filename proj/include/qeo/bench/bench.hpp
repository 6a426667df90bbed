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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qeo/formulations/hens.hpp"
#include "qeo/formulations/qap.hpp"
#include "qeo/formulations/uc.hpp"
#include "qeo/solvers/solve.hpp"

namespace qeo {

/// No exact oracle fits the instance and no external reference was given.
class OracleUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchInstance {
  std::string id;
  std::string family;  // qap | uc | hens
  std::variant<QapInstance, UcInstance, HensInstance> data;
  std::size_t grids = 4;
  std::optional<PenaltyWeights> penalties;
  std::optional<double> reference;  // best-known value from outside
};

/// Loads an instance file: QAPLIB text (or JSON) for qap, JSON for uc/hens.
BenchInstance load_instance(const std::string& family, const std::string& path);

struct Decoded {
  double objective = 0.0;  // NaN when nothing sensible can be decoded
  bool feasible = false;
  std::vector<std::string> violations;
};

/// QUBO of an instance with its decoder back to the domain.
struct Pipeline {
  Formulation formulation;
  PenaltyWeights weights;
  std::function<Decoded(const Assignment&)> decode;
};

/// Discretizes (uc, hens) with the instance grid count and uses the default
/// penalties unless the instance overrides them.
Pipeline make_pipeline(const BenchInstance& inst);

struct Reference {
  double value = 0.0;
  bool external = false;
};

/// Exact domain optimum (grid optimum for uc). Throws OracleUnavailable when
/// the instance is too large and InfeasibleError when it has no solution.
double oracle_value(const BenchInstance& inst);
/// oracle_value when the instance is within oracle limits, otherwise the
/// external reference (flagged). Rethrows OracleUnavailable without one.
Reference reference_for(const BenchInstance& inst);

struct BenchSuite {
  std::vector<BenchInstance> instances;
  std::vector<SolveSpec> solvers;
};

/// {"instances": [{"id", "family", "path" | "generate": {..}, "grids",
///   "penalty_a", "penalty_b", "reference"}],
///  "solvers": [{"name", "seed" | "seeds": [..], "reads", "sweeps",
///   "restarts", "sub_size", "layers"}]}
/// Relative paths resolve against `base_dir`.
BenchSuite parse_suite(const nlohmann::json& doc, const std::string& base_dir);

struct BenchRow {
  std::string instance;
  std::string family;
  std::string solver;
  std::uint64_t seed = 0;
  double qubo_energy = 0.0;
  double objective = 0.0;
  bool feasible = false;
  std::optional<double> reference;
  std::optional<double> deviation_pct;
  double elapsed_s = 0.0;
  /// Not serialized.
  bool reference_external = false;
  Assignment bits;

  bool operator==(const BenchRow&) const = default;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

/// 100 * (objective - reference) / reference; empty unless the row is
/// feasible and the reference positive.
std::optional<double> deviation_pct(bool feasible, double objective, std::optional<double> reference);

/// One row per (instance, solver spec), best-of-reads, sorted by (instance,
/// solver, seed).
BenchReport run_bench(const BenchSuite& suite);
BenchRow run_cell(const BenchInstance& inst, const Pipeline& pipeline, const SolveSpec& spec,
                  const std::optional<Reference>& ref);

inline constexpr const char* kReportHeader =
    "instance,family,solver,seed,qubo_energy,objective,feasible,reference,deviation_pct,elapsed_s";

/// Shortest round-trip formatting; missing values are empty fields.
std::string report_to_csv(const BenchReport& report);
BenchReport report_from_csv(const std::string& text);

struct FamilyStats {
  std::string family;
  std::size_t rows = 0;
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  std::size_t with_deviation = 0;
  double min_pct = 0.0;
  double max_pct = 0.0;
  double mean_pct = 0.0;
  double feasibility_rate = 0.0;
};

/// Per-family summary over feasible rows with a deviation. Infeasible rows
/// are counted, never dropped.
std::vector<FamilyStats> deviation_stats(const BenchReport& report);
std::string stats_to_text(const std::vector<FamilyStats>& stats);

/// family,bin_lo,bin_hi,count over deviations in bins of `width` percent.
std::string deviation_histogram_csv(const BenchReport& report, double width = 1.0);

}  // namespace qeo
