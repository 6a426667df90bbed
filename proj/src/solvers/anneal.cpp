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
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qeo/solvers/solvers.hpp"

namespace qeo {

std::pair<double, double> default_beta_range(const Qubo& model) {
  const Adjacency adj = make_adjacency(model);
  double max_delta = 0.0;
  double min_coeff = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < model.num_vars(); ++i) {
    double d = std::abs(adj.linear[i]);
    for (const auto& nb : adj.neighbours[i]) d += std::abs(nb.second);
    max_delta = std::max(max_delta, d);
  }
  for (const auto& kv : model.linear()) min_coeff = std::min(min_coeff, std::abs(kv.second));
  for (const auto& kv : model.quadratic()) min_coeff = std::min(min_coeff, std::abs(kv.second));
  if (max_delta == 0.0) return {1.0, 1.0};
  return {std::log(2.0) / max_delta, std::log(100.0) / min_coeff};
}

namespace {

Assignment anneal_read(const Adjacency& adj, const std::vector<double>& betas, std::uint64_t seed,
                       std::uint64_t read) {
  auto rng = make_stream(seed, read);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = adj.linear.size();
  FlipState state(adj, random_assignment(n, rng));
  for (double beta : betas) {
    for (Index i = 0; i < n; ++i) {
      const double d = state.delta(i);
      if (d <= 0.0 || unit(rng) < std::exp(-beta * d)) state.flip(i);
    }
  }
  return state.bits();
}

}  // namespace

SampleSet simulated_anneal(const Qubo& model, const SaParams& params) {
  const auto start = std::chrono::steady_clock::now();
  if (model.num_vars() == 0) throw std::invalid_argument("annealing needs at least one variable");
  if (params.reads < 1 || params.sweeps < 1) throw std::invalid_argument("reads and sweeps must be >= 1");
  auto [hot, cold] = default_beta_range(model);
  if (params.beta_hot > 0.0) hot = params.beta_hot;
  if (params.beta_cold > 0.0) cold = params.beta_cold;
  if (!(hot > 0.0) || !(hot <= cold) || !std::isfinite(cold)) {
    throw std::invalid_argument("beta schedule must satisfy 0 < beta_hot <= beta_cold");
  }
  std::vector<double> betas(params.sweeps);
  for (std::size_t s = 0; s < params.sweeps; ++s) {
    const double t = params.sweeps == 1 ? 1.0 : static_cast<double>(s) / static_cast<double>(params.sweeps - 1);
    betas[s] = hot * std::pow(cold / hot, t);
  }

  const Adjacency adj = make_adjacency(model);
  std::vector<Assignment> results(params.reads);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < params.reads; r = next++) {
      results[r] = anneal_read(adj, betas, params.seed, r);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(params.threads, 1, params.reads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SampleSet out = SampleSet::from_assignments(model, results, {"sa", params.seed, params.reads, 0.0});
  out.meta().elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace qeo
