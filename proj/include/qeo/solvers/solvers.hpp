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
#include <optional>
#include <utility>
#include <vector>

#include "qeo/core/qubo.hpp"
#include "qeo/solvers/sample_set.hpp"

namespace qeo {

inline constexpr std::size_t kBruteForceMaxVars = 24;

/// Exact minimum by Gray-code enumeration; energy ties go to the
/// lexicographically smallest assignment.
SampleSet brute_force(const Qubo& model);

struct SaParams {
  std::size_t reads = 100;
  std::size_t sweeps = 1000;
  /// Geometric inverse-temperature ladder; 0 picks the model-derived default.
  double beta_hot = 0.0;
  double beta_cold = 0.0;
  std::uint64_t seed = 0;
  /// Worker threads for reads; results do not depend on this.
  std::size_t threads = 1;
};

/// beta_hot = ln 2 / max_i(|l_i| + sum_j |q_ij|),
/// beta_cold = ln 100 / (smallest non-zero coefficient magnitude).
std::pair<double, double> default_beta_range(const Qubo& model);

/// Single-flip Metropolis annealing; each read starts from a random point and
/// reports its final state.
SampleSet simulated_anneal(const Qubo& model, const SaParams& params);

struct TabuParams {
  /// Minimum tenure; each move stays tabu for a random 1x to 4x of it.
  /// 0 selects min(20, max(1, n/4)).
  std::size_t tenure = 0;
  /// 0 selects 10 * n.
  std::size_t max_stall = 0;
  std::size_t restarts = 4;
  std::uint64_t seed = 0;
};

/// Steepest single-flip descent with a recency tabu list and aspiration.
/// After the first run, each restart begins from a perturbed copy of the
/// incumbent. One record per run (its best assignment).
SampleSet tabu_search(const Qubo& model, const TabuParams& params);

/// Tabu search continued from a given assignment (one run, no restarts).
/// Each move stays tabu for tenure plus a uniform draw in
/// [0, tenure_spread * tenure]; spread 0 gives a fixed tenure.
Assignment tabu_from(const Qubo& model, const Adjacency& adj, Assignment start, std::size_t tenure,
                     std::size_t max_stall, std::mt19937_64& rng, std::size_t tenure_spread = 0);

enum class SubSolver { kAuto, kBruteForce, kTabu };

struct DecompParams {
  std::size_t sub_size = 40;
  std::size_t stall_passes = 2;
  /// kAuto uses brute force for sub-problems of at most 22 variables.
  SubSolver sub_solver = SubSolver::kAuto;
  std::uint64_t seed = 0;
  std::size_t max_passes = 10000;
};

struct DecompTrace {
  /// Incumbent energy after the greedy start and after every pass.
  std::vector<double> pass_energies;
  /// For every accepted sub-problem: (reduced-model energy of the sub
  /// solution, full-model energy of the stitched incumbent).
  std::vector<std::pair<double, double>> stitches;
};

/// Decompose-and-stitch: repeatedly clamps all but a window of variables,
/// solves the window exactly or by tabu, and keeps improvements.
SampleSet decompose_solve(const Qubo& model, const DecompParams& params, DecompTrace* trace = nullptr);

/// Repeated best-improvement single flips until no flip lowers the energy.
void greedy_descent(FlipState& state);

}  // namespace qeo
