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

#include "qeo/solvers/solve.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "qeo/core/ising.hpp"
#include "qeo/core/serialize.hpp"
#include "qeo/gate/vqe.hpp"
#include "qeo/solvers/solvers.hpp"

namespace qeo {

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = {"brute", "sa", "tabu", "decomp", "vqe"};
  return names;
}

namespace {

SampleSet solve_vqe(const Qubo& model, const SolveSpec& spec) {
  const DiagonalHamiltonian hml(qubo_to_ising(model));
  VqeConfig config;
  config.ansatz.num_qubits = model.num_vars();
  if (spec.layers) config.ansatz.layers = *spec.layers;
  if (spec.restarts) config.restarts = *spec.restarts;
  if (spec.max_iterations) config.max_iterations = *spec.max_iterations;
  config.seed = spec.seed;
  const VqeResult result = vqe_minimize(hml, config);

  // Read out the best state with shots, like repeated measurement on hardware.
  const std::size_t shots = spec.reads.value_or(100);
  const Statevector psi = ansatz_state(config.ansatz, result.params);
  const auto counts = sample_distribution(psi, model.num_vars(), shots, spec.seed);
  std::vector<SampleRecord> records;
  for (const auto& [bits, count] : counts) {
    Assignment x = bits_from_string(bits);
    const double e = model.energy(x);
    records.push_back({std::move(x), e, static_cast<std::size_t>(count)});
  }
  return SampleSet::from_records(std::move(records), {"vqe", spec.seed, shots, 0.0});
}

}  // namespace

SampleSet solve(const Qubo& model, const SolveSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  SampleSet out;
  if (spec.strategy == "brute") {
    out = brute_force(model);
  } else if (spec.strategy == "sa") {
    SaParams p;
    p.seed = spec.seed;
    if (spec.reads) p.reads = *spec.reads;
    if (spec.sweeps) p.sweeps = *spec.sweeps;
    if (spec.threads) p.threads = *spec.threads;
    out = simulated_anneal(model, p);
  } else if (spec.strategy == "tabu") {
    TabuParams p;
    p.seed = spec.seed;
    if (spec.restarts) p.restarts = *spec.restarts;
    out = tabu_search(model, p);
  } else if (spec.strategy == "decomp") {
    DecompParams p;
    p.seed = spec.seed;
    if (spec.sub_size) p.sub_size = *spec.sub_size;
    out = decompose_solve(model, p);
  } else if (spec.strategy == "vqe") {
    out = solve_vqe(model, spec);
  } else {
    throw std::invalid_argument("unknown solver '" + spec.strategy + "' (expected brute, sa, tabu, decomp or vqe)");
  }
  out.meta().solver = spec.strategy;
  out.meta().elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace qeo
