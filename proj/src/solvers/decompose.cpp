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
#include <numeric>
#include <stdexcept>

#include "qeo/solvers/solvers.hpp"

namespace qeo {

void greedy_descent(FlipState& state) {
  const std::size_t n = state.bits().size();
  while (true) {
    Index move = n;
    double best = 0.0;
    for (Index i = 0; i < n; ++i) {
      const double d = state.delta(i);
      if (d < best) {
        best = d;
        move = i;
      }
    }
    if (move == n) return;
    state.flip(move);
  }
}

namespace {

constexpr std::size_t kBruteSubLimit = 22;

Assignment solve_window(const Qubo& reduced, const Assignment& current, SubSolver choice, std::mt19937_64& rng) {
  const std::size_t n = reduced.num_vars();
  const bool brute = choice == SubSolver::kBruteForce || (choice == SubSolver::kAuto && n <= kBruteSubLimit);
  if (brute) return brute_force(reduced).best().bits;
  const Adjacency adj = make_adjacency(reduced);
  const std::size_t tenure = std::min<std::size_t>(20, std::max<std::size_t>(1, n / 4));
  return tabu_from(reduced, adj, current, tenure, 100 * n, rng);
}

}  // namespace

SampleSet decompose_solve(const Qubo& model, const DecompParams& params, DecompTrace* trace) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = model.num_vars();
  if (n == 0) throw std::invalid_argument("decomposition needs at least one variable");
  if (params.sub_size < 2) throw std::invalid_argument("sub-problem size must be >= 2");
  if (params.sub_solver == SubSolver::kBruteForce && std::min(n, params.sub_size) > kBruteForceMaxVars) {
    throw std::invalid_argument("brute-force sub-solver needs sub-problems of at most 24 variables");
  }

  const Adjacency adj = make_adjacency(model);
  auto rng = make_stream(params.seed, 0);
  FlipState state(adj, random_assignment(n, rng));
  greedy_descent(state);
  Assignment incumbent = state.bits();
  double energy = model.energy(incumbent);
  if (trace) trace->pass_energies.push_back(energy);

  const std::size_t window = std::min(n, params.sub_size);
  const std::size_t ranked_share = n <= params.sub_size ? n : std::max<std::size_t>(1, params.sub_size / 2);
  const double tol = 1e-12 * std::max(1.0, model.max_abs_coeff());

  std::size_t stall = 0;
  for (std::size_t pass = 0; stall < params.stall_passes && pass < params.max_passes; ++pass) {
    state.reset(incumbent);
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    // Highest flip gain (most negative delta) first.
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return state.delta(a) < state.delta(b); });

    bool improved = false;
    for (std::size_t first = 0; first < n; first += ranked_share) {
      std::vector<std::uint8_t> in_window(n, 0);
      std::vector<Index> chosen;
      for (std::size_t k = first; k < std::min(n, first + ranked_share); ++k) {
        chosen.push_back(order[k]);
        in_window[order[k]] = 1;
      }
      std::vector<Index> rest;
      for (Index i = 0; i < n; ++i) {
        if (!in_window[i]) rest.push_back(i);
      }
      std::shuffle(rest.begin(), rest.end(), rng);
      for (std::size_t k = 0; chosen.size() < window && k < rest.size(); ++k) {
        chosen.push_back(rest[k]);
        in_window[rest[k]] = 1;
      }

      std::map<Index, std::uint8_t> fixed;
      for (Index i = 0; i < n; ++i) {
        if (!in_window[i]) fixed.emplace(i, incumbent[i]);
      }
      const ClampResult sub = clamp(model, fixed);
      Assignment current(sub.free_vars.size());
      for (std::size_t k = 0; k < current.size(); ++k) current[k] = incumbent[sub.free_vars[k]];
      const Assignment solved = solve_window(sub.reduced, current, params.sub_solver, rng);

      Assignment stitched = incumbent;
      for (std::size_t k = 0; k < solved.size(); ++k) stitched[sub.free_vars[k]] = solved[k];
      const double stitched_energy = model.energy(stitched);
      if (stitched_energy < energy - tol) {
        if (trace) trace->stitches.emplace_back(sub.reduced.energy(solved), stitched_energy);
        incumbent = std::move(stitched);
        energy = stitched_energy;
        improved = true;
      }
      if (n <= params.sub_size) break;
    }
    if (n > params.sub_size) {
      // Full-model tabu from the stitched incumbent, as qbsolv does between
      // sub-problem sweeps; it moves along directions no window covered.
      Assignment polished = tabu_from(model, adj, incumbent, std::min<std::size_t>(20, n / 4), 200 * n, rng);
      const double polished_energy = model.energy(polished);
      if (polished_energy < energy - tol) {
        incumbent = std::move(polished);
        energy = polished_energy;
        improved = true;
      }
    }
    stall = improved ? 0 : stall + 1;
    if (trace) trace->pass_energies.push_back(energy);
  }

  SampleSet out = SampleSet::from_assignments(model, {incumbent}, {"decomp", params.seed, 1, 0.0});
  out.meta().elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace qeo
