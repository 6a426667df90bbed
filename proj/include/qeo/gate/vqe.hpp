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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qeo/core/ising.hpp"

namespace qeo {

inline constexpr std::size_t kMaxQubits = 20;

/// Ising Hamiltonian viewed as a diagonal operator on n qubits. Basis state
/// b (bit i of the integer is qubit i) has energy
/// offset + sum h_i s_i + sum J_ij s_i s_j with s_i = 1 - 2 b_i.
class DiagonalHamiltonian {
 public:
  explicit DiagonalHamiltonian(const IsingModel& model);

  std::size_t num_qubits() const { return source_.num_vars(); }
  const IsingModel& source() const { return source_; }
  const std::vector<double>& diagonal() const { return diagonal_; }
  double energy(std::uint64_t basis) const { return diagonal_[basis]; }

 private:
  IsingModel source_;
  std::vector<double> diagonal_;
};

DiagonalHamiltonian hamiltonian_from_ising(const IsingModel& model);

/// "0110" style string, qubit 0 first.
std::string basis_string(std::uint64_t basis, std::size_t num_qubits);

struct GroundState {
  std::uint64_t basis = 0;
  std::string bits;
  double energy = 0.0;
};

/// Exhaustive minimum; ties go to the lexicographically smallest bit string.
GroundState exact_ground(const DiagonalHamiltonian& hml);

using Statevector = std::vector<std::complex<double>>;

struct AnsatzConfig {
  std::size_t num_qubits = 0;
  std::size_t layers = 2;
  /// Empty means the linear chain (0,1), (1,2), ...
  std::vector<std::pair<std::size_t, std::size_t>> entangler;

  std::size_t num_params() const { return num_qubits * (layers + 1); }
  std::vector<std::pair<std::size_t, std::size_t>> entangler_pairs() const;
  void validate() const;
};

/// |0...0>, then an RY layer, then `layers` rounds of {CZ on every mapped
/// pair, RY layer}. Parameter k * n + q drives qubit q in rotation layer k.
Statevector ansatz_state(const AnsatzConfig& config, const std::vector<double>& params);

double expectation(const Statevector& state, const DiagonalHamiltonian& hml);

/// d<H>/d theta_k = (<H>(theta_k + pi/2) - <H>(theta_k - pi/2)) / 2.
std::vector<double> parameter_shift_gradient(const AnsatzConfig& config, const std::vector<double>& params,
                                             const DiagonalHamiltonian& hml);

struct VqeConfig {
  AnsatzConfig ansatz;
  std::size_t max_iterations = 200;
  std::size_t restarts = 8;
  double step = 0.1;
  std::uint64_t seed = 0;
};

struct VqeResult {
  std::vector<double> params;
  std::string bits;           // most probable outcome of the best run
  double bits_energy = 0.0;   // diagonal energy of that outcome
  double energy = 0.0;        // expectation of the best run
  std::map<std::string, double> histogram;  // exact outcome probabilities
  std::vector<double> restart_energies;
};

/// Gradient descent on the expectation from `restarts` seeded random starts.
/// The step halves whenever a move fails to lower the energy.
VqeResult vqe_minimize(const DiagonalHamiltonian& hml, const VqeConfig& config);

/// Exact probabilities when shots is empty, otherwise seeded multinomial
/// counts. Outcomes with probability below 1e-12 are omitted in exact mode.
std::map<std::string, double> sample_distribution(const Statevector& state, std::size_t num_qubits,
                                                  std::optional<std::size_t> shots, std::uint64_t seed = 0);

/// {"histogram": {"bits": value, ...}, "meta": {...}}
nlohmann::json histogram_to_json(const std::map<std::string, double>& histogram, nlohmann::json meta);

}  // namespace qeo
