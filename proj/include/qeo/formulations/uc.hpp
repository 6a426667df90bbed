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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qeo/formulations/common.hpp"

namespace qeo {

/// Generating unit with fuel cost a*y + b*p + c*p^2 while online.
struct UcUnit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double p_min = 0.0;
  double p_max = 0.0;
};

/// Single-period unit commitment.
struct UcInstance {
  std::vector<UcUnit> units;
  double load = 0.0;

  /// c >= 0, 0 <= p_min <= p_max, load >= 0 and sum(p_max) >= load.
  void validate() const;
};

/// Absolute tolerance used for the power balance sum(p) == load.
double uc_load_tolerance(const UcInstance& inst);

/// Per-unit power grids p_min + k*h, k = 0..N. A unit with p_min == p_max
/// gets a single point.
struct DiscretizedUc {
  UcInstance base;
  std::size_t grids = 0;
  std::vector<double> step;
  std::vector<std::vector<double>> points;
};

struct UcSolution {
  std::vector<std::uint8_t> on;
  std::vector<double> power;
  std::vector<double> unit_costs;
  double total = 0.0;
  double load_residual = 0.0;  // sum(p) - load
  std::vector<std::string> violations;

  bool feasible() const { return violations.empty(); }
};

/// Evaluates the commitment/dispatch pair and lists every breached constraint.
UcSolution uc_objective(const UcInstance& inst, std::span<const std::uint8_t> on,
                        std::span<const double> power);

DiscretizedUc uc_discretize(const UcInstance& inst, std::size_t grids);

/// Unit i occupies v(i) followed by z(i,0..G_i-1), G_i = number of grid
/// points; n(N+2) variables without degenerate units.
Formulation uc_to_qubo(const DiscretizedUc& d, const PenaltyWeights& weights);

/// Spacing of the lattice that every achievable grid sum lies on (the largest
/// h_min/k dividing every p_min and h), or h_min when no such lattice exists.
double uc_load_quantum(const DiscretizedUc& d);

/// A = max(10, n+1) * S and B = (n*S + 1) / q^2, where S is the largest unit
/// cost at p_max and q the load quantum. With these weights every one-hot
/// violation and every off-load grid sum costs more than any feasible point.
PenaltyWeights uc_default_penalties(const DiscretizedUc& d);

UcSolution uc_decode(std::span<const std::uint8_t> x, const VarMap& vars,
                     const DiscretizedUc& d);

struct Dispatch {
  std::vector<double> power;
  double cost = 0.0;
  double marginal_price = 0.0;
};

/// Exact economic dispatch of a fixed commitment by equal-marginal-cost
/// search. Throws InfeasibleError unless sum_on p_min <= load <= sum_on p_max.
Dispatch uc_dispatch_oracle(const UcInstance& inst, std::span<const std::uint8_t> on);

/// Largest unit count accepted by the commitment-enumerating oracles.
inline constexpr std::size_t kUcOracleMaxUnits = 12;

/// Continuous optimum over all 2^n commitments.
UcSolution uc_oracle(const UcInstance& inst);

/// Optimum of the discretized problem with the load met exactly (within
/// uc_load_tolerance). Enumerates commitments and all but the last committed
/// unit's grid choices. Empty when no grid combination meets the load.
std::optional<UcSolution> uc_grid_oracle(const DiscretizedUc& d);

/// QUBO assignment encoding a decoded grid solution.
Assignment uc_encode(const UcSolution& sol, const VarMap& vars, const DiscretizedUc& d);

struct GridChoice {
  std::size_t grids = 0;
  double gap = 0.0;  // relative gap of the grid optimum to the continuous one
  bool achieved = false;
  double continuous_optimum = 0.0;
  double grid_optimum = 0.0;
};

inline constexpr std::size_t kUcMaxGrids = 1024;

/// Smallest N in {1, 2, 4, ..., 1024} whose grid optimum is within `tol`
/// relative gap of the continuous optimum. Returns N = 1024 with
/// achieved = false when no grid qualifies.
GridChoice uc_choose_grids(const UcInstance& inst, double tol = 1e-4);

}  // namespace qeo
