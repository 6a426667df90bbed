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

#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qeo/solvers/solvers.hpp"

namespace qeo {

SampleSet brute_force(const Qubo& model) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = model.num_vars();
  if (n > kBruteForceMaxVars) {
    throw std::invalid_argument("brute force supports at most 24 variables");
  }
  const Adjacency adj = make_adjacency(model);
  FlipState state(adj, Assignment(n, 0));
  double energy = model.offset();
  double best_energy = energy;
  Assignment best = state.bits();
  const double tol = 1e-9 * std::max(1.0, model.max_abs_coeff());
  // Gray code: step k flips the bit at the position of k's lowest set bit.
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    energy += state.flip(static_cast<Index>(std::countr_zero(k)));
    if (energy < best_energy - tol) {
      best_energy = energy;
      best = state.bits();
    } else if (energy <= best_energy + tol && state.bits() < best) {
      best_energy = std::min(best_energy, energy);
      best = state.bits();
    }
  }
  SampleMeta meta{"brute", 0, 1, 0.0};
  SampleSet out = SampleSet::from_assignments(model, {best}, meta);
  out.meta().elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace qeo
