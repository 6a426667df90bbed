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
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qeo/gate/vqe.hpp"
#include "qeo/solvers/sample_set.hpp"

namespace qeo {

std::vector<double> parameter_shift_gradient(const AnsatzConfig& config, const std::vector<double>& params,
                                             const DiagonalHamiltonian& hml) {
  constexpr double kShift = std::numbers::pi / 2.0;
  std::vector<double> grad(params.size());
  std::vector<double> shifted = params;
  for (std::size_t k = 0; k < params.size(); ++k) {
    shifted[k] = params[k] + kShift;
    const double plus = expectation(ansatz_state(config, shifted), hml);
    shifted[k] = params[k] - kShift;
    const double minus = expectation(ansatz_state(config, shifted), hml);
    shifted[k] = params[k];
    grad[k] = (plus - minus) / 2.0;
  }
  return grad;
}

std::map<std::string, double> sample_distribution(const Statevector& state, std::size_t num_qubits,
                                                  std::optional<std::size_t> shots, std::uint64_t seed) {
  if (state.size() != (std::size_t{1} << num_qubits)) throw std::invalid_argument("state dimension mismatch");
  std::vector<double> probs(state.size());
  for (std::size_t b = 0; b < state.size(); ++b) probs[b] = std::norm(state[b]);
  std::map<std::string, double> hist;
  if (!shots) {
    for (std::size_t b = 0; b < probs.size(); ++b) {
      if (probs[b] >= 1e-12) hist[basis_string(b, num_qubits)] = probs[b];
    }
    return hist;
  }
  if (*shots < 1) throw std::invalid_argument("shots must be >= 1");
  auto rng = make_stream(seed, 0);
  std::discrete_distribution<std::size_t> draw(probs.begin(), probs.end());
  std::vector<std::size_t> counts(probs.size(), 0);
  for (std::size_t s = 0; s < *shots; ++s) ++counts[draw(rng)];
  for (std::size_t b = 0; b < counts.size(); ++b) {
    if (counts[b]) hist[basis_string(b, num_qubits)] = static_cast<double>(counts[b]);
  }
  return hist;
}

VqeResult vqe_minimize(const DiagonalHamiltonian& hml, const VqeConfig& config) {
  AnsatzConfig ansatz = config.ansatz;
  if (ansatz.num_qubits == 0) ansatz.num_qubits = hml.num_qubits();
  if (ansatz.num_qubits != hml.num_qubits()) throw std::invalid_argument("ansatz and Hamiltonian sizes differ");
  ansatz.validate();
  if (config.max_iterations < 1 || config.restarts < 1 || !(config.step > 0.0)) {
    throw std::invalid_argument("VQE budgets and step must be positive");
  }

  VqeResult result;
  result.energy = std::numeric_limits<double>::infinity();
  Statevector best_state;
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (std::size_t r = 0; r < config.restarts; ++r) {
    auto rng = make_stream(config.seed, r);
    std::vector<double> theta(ansatz.num_params());
    for (auto& t : theta) t = angle(rng);
    double energy = expectation(ansatz_state(ansatz, theta), hml);
    double step = config.step;
    for (std::size_t it = 0; it < config.max_iterations && step > 1e-10; ++it) {
      const auto grad = parameter_shift_gradient(ansatz, theta, hml);
      double norm = 0.0;
      for (double g : grad) norm += g * g;
      if (norm < 1e-24) break;
      std::vector<double> trial(theta.size());
      for (std::size_t k = 0; k < theta.size(); ++k) trial[k] = theta[k] - step * grad[k];
      const double e = expectation(ansatz_state(ansatz, trial), hml);
      if (e < energy) {
        theta = std::move(trial);
        energy = e;
      } else {
        step /= 2.0;
      }
    }
    result.restart_energies.push_back(energy);
    if (energy < result.energy) {
      result.energy = energy;
      result.params = theta;
      best_state = ansatz_state(ansatz, theta);
    }
  }

  result.histogram = sample_distribution(best_state, ansatz.num_qubits, std::nullopt);
  double top = -1.0;
  for (const auto& [bits, p] : result.histogram) {
    if (p > top) {
      top = p;
      result.bits = bits;
    }
  }
  std::uint64_t basis = 0;
  for (std::size_t q = 0; q < result.bits.size(); ++q) {
    if (result.bits[q] == '1') basis |= std::uint64_t{1} << q;
  }
  result.bits_energy = hml.energy(basis);
  return result;
}

nlohmann::json histogram_to_json(const std::map<std::string, double>& histogram, nlohmann::json meta) {
  nlohmann::json h = nlohmann::json::object();
  for (const auto& [bits, v] : histogram) h[bits] = v;
  return {{"histogram", std::move(h)}, {"meta", std::move(meta)}};
}

}  // namespace qeo
