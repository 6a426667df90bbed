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

#include <span>
#include <string>
#include <vector>

#include "qeo/formulations/common.hpp"

namespace qeo {

/// Minimum-cost matches for a single temperature interval: m sources with
/// supply S_i, n sinks with demand D_j, match cost c_ij.
struct HensInstance {
  std::vector<double> supply;
  std::vector<double> demand;
  Matrix cost;

  std::size_t sources() const { return supply.size(); }
  std::size_t sinks() const { return demand.size(); }
  /// Non-negative data, cost sized m x n, sum(S) == sum(D).
  void validate() const;
};

double hens_balance_tolerance(const HensInstance& inst);

/// Flow grids U_ij * k / N, k = 1..N, with U_ij = min(S_i, D_j). Pairs with
/// U_ij == 0 have an empty grid.
struct DiscretizedHens {
  HensInstance base;
  std::size_t grids = 0;
  Matrix capacity;
  std::vector<std::vector<double>> flows;  // row-major over (i, j)

  const std::vector<double>& grid(std::size_t i, std::size_t j) const {
    return flows[i * base.sinks() + j];
  }
};

struct HensSolution {
  std::vector<std::uint8_t> matches;  // row-major m x n
  Matrix flows;
  double total_cost = 0.0;
  std::vector<std::string> violations;

  bool feasible() const { return violations.empty(); }
};

HensSolution hens_objective(const HensInstance& inst, std::span<const std::uint8_t> matches,
                            const Matrix& flows);

DiscretizedHens hens_discretize(const HensInstance& inst, std::size_t grids);

struct HensFormulation {
  Formulation formulation;
  /// z variables omitted because their pair has zero capacity.
  std::size_t dropped = 0;
};

/// Variables w(i,j) followed by z(i,j,k), k = 1..N, for each pair in
/// row-major order; m*n*(N+1) minus the dropped zero-capacity z's.
HensFormulation hens_to_qubo(const DiscretizedHens& d, const PenaltyWeights& weights);

/// Weights A = 20, B = 5.
PenaltyWeights hens_default_penalties();

HensSolution hens_decode(std::span<const std::uint8_t> x, const VarMap& vars,
                         const DiscretizedHens& d);

inline constexpr std::size_t kHensOracleMaxPairs = 16;

/// Exact optimum: match subsets in ascending (cost, lexicographic w) order,
/// the first one that carries a feasible transportation flow wins.
HensSolution hens_oracle(const HensInstance& inst);

/// Max-flow test: can supplies reach demands over arcs (i,j) with
/// capacity U_ij * w_ij? Fills `flows` with a witness when feasible.
bool hens_transport_feasible(const HensInstance& inst, std::span<const std::uint8_t> matches,
                             Matrix* flows = nullptr);

}  // namespace qeo
