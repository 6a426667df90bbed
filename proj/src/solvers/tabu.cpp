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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qeo/solvers/solvers.hpp"

namespace qeo {
namespace {

std::size_t default_tenure(std::size_t n) { return std::min<std::size_t>(20, std::max<std::size_t>(1, n / 4)); }

}  // namespace

Assignment tabu_from(const Qubo& model, const Adjacency& adj, Assignment start, std::size_t tenure,
                     std::size_t max_stall, std::mt19937_64& rng, std::size_t tenure_spread) {
  const std::size_t n = model.num_vars();
  if (tenure < 1) throw std::invalid_argument("tabu tenure must be >= 1");
  FlipState state(adj, std::move(start));
  double energy = model.energy(state.bits());
  double best_energy = energy;
  Assignment best = state.bits();
  const double tol = 1e-12 * std::max(1.0, model.max_abs_coeff());

  std::vector<std::size_t> tabu_until(n, 0);
  std::size_t stall = 0;
  for (std::size_t iter = 1; stall < max_stall; ++iter) {
    Index move = n;
    double move_delta = std::numeric_limits<double>::infinity();
    std::size_t ties = 0;
    for (Index i = 0; i < n; ++i) {
      const double d = state.delta(i);
      const bool allowed = tabu_until[i] < iter || energy + d < best_energy - tol;
      if (!allowed) continue;
      if (d < move_delta) {
        move = i;
        move_delta = d;
        ties = 1;
      } else if (d == move_delta && (rng() % ++ties) == 0) {
        move = i;
      }
    }
    if (move == n) {
      // Everything is tabu: release the oldest entry.
      move = static_cast<Index>(std::min_element(tabu_until.begin(), tabu_until.end()) - tabu_until.begin());
    }
    energy += state.flip(move);
    // A random tenure in [tenure, tenure * (1 + spread)] keeps the walk from
    // cycling between a few states around penalty barriers.
    tabu_until[move] = iter + tenure + (tenure_spread ? rng() % (tenure_spread * tenure + 1) : 0);
    // The running sum drifts; re-evaluating before accepting a new best keeps
    // round-off from posing as progress and resetting the stall counter.
    if (energy < best_energy - tol) energy = model.energy(state.bits());
    if (energy < best_energy - tol) {
      best_energy = energy;
      best = state.bits();
      stall = 0;
    } else {
      ++stall;
    }
  }
  return best;
}

SampleSet tabu_search(const Qubo& model, const TabuParams& params) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = model.num_vars();
  if (n == 0) throw std::invalid_argument("tabu search needs at least one variable");
  const std::size_t tenure = params.tenure ? params.tenure : default_tenure(n);
  const std::size_t max_stall = params.max_stall ? params.max_stall : 10 * n;
  if (tenure < 1) throw std::invalid_argument("tabu tenure must be >= 1");

  const Adjacency adj = make_adjacency(model);
  auto rng = make_stream(params.seed, 0);
  std::vector<Assignment> runs;
  Assignment incumbent;
  double incumbent_energy = std::numeric_limits<double>::infinity();
  const std::size_t kick = std::max<std::size_t>(1, n / 4);
  for (std::size_t r = 0; r <= params.restarts; ++r) {
    Assignment from;
    if (r == 0) {
      from = random_assignment(n, rng);
    } else {
      from = incumbent;
      for (std::size_t k = 0; k < kick; ++k) from[rng() % n] ^= 1U;
    }
    Assignment found = tabu_from(model, adj, std::move(from), tenure, max_stall, rng, 3);
    const double e = model.energy(found);
    if (e < incumbent_energy) {
      incumbent_energy = e;
      incumbent = found;
    }
    runs.push_back(std::move(found));
  }
  SampleSet out = SampleSet::from_assignments(model, runs, {"tabu", params.seed, params.restarts + 1, 0.0});
  out.meta().elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace qeo
