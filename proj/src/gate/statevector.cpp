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

#include <cmath>
#include <set>
#include <stdexcept>

#include "qeo/gate/vqe.hpp"

namespace qeo {

DiagonalHamiltonian::DiagonalHamiltonian(const IsingModel& model) : source_(model) {
  const std::size_t n = model.num_vars();
  if (n > kMaxQubits) {
    throw std::invalid_argument("statevector simulation supports at most 20 qubits, got " + std::to_string(n));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  diagonal_.assign(dim, model.offset());
  for (std::uint64_t b = 0; b < dim; ++b) {
    double e = model.offset();
    for (const auto& [i, h] : model.h()) e += ((b >> i) & 1U) ? -h : h;
    for (const auto& [ij, j] : model.j()) {
      const bool same = ((b >> ij.first) & 1U) == ((b >> ij.second) & 1U);
      e += same ? j : -j;
    }
    diagonal_[b] = e;
  }
}

DiagonalHamiltonian hamiltonian_from_ising(const IsingModel& model) { return DiagonalHamiltonian(model); }

std::string basis_string(std::uint64_t basis, std::size_t num_qubits) {
  std::string s(num_qubits, '0');
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((basis >> q) & 1U) s[q] = '1';
  }
  return s;
}

GroundState exact_ground(const DiagonalHamiltonian& hml) {
  const auto& diag = hml.diagonal();
  const std::size_t n = hml.num_qubits();
  GroundState g{0, basis_string(0, n), diag[0]};
  for (std::uint64_t b = 1; b < diag.size(); ++b) {
    if (diag[b] > g.energy) continue;
    std::string s = basis_string(b, n);
    if (diag[b] < g.energy || s < g.bits) g = {b, std::move(s), diag[b]};
  }
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> AnsatzConfig::entangler_pairs() const {
  if (!entangler.empty()) return entangler;
  std::vector<std::pair<std::size_t, std::size_t>> chain;
  for (std::size_t q = 0; q + 1 < num_qubits; ++q) chain.emplace_back(q, q + 1);
  return chain;
}

void AnsatzConfig::validate() const {
  if (num_qubits == 0 || num_qubits > kMaxQubits) throw std::invalid_argument("ansatz needs 1..20 qubits");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : entangler) {
    if (a >= num_qubits || b >= num_qubits || a == b) throw std::invalid_argument("invalid entangler pair");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw std::invalid_argument("duplicate entangler pair");
  }
}

namespace {

void apply_ry(Statevector& psi, std::size_t qubit, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const std::uint64_t mask = std::uint64_t{1} << qubit;
  for (std::uint64_t b = 0; b < psi.size(); ++b) {
    if (b & mask) continue;
    const auto a0 = psi[b];
    const auto a1 = psi[b | mask];
    psi[b] = c * a0 - s * a1;
    psi[b | mask] = s * a0 + c * a1;
  }
}

void apply_cz(Statevector& psi, std::size_t a, std::size_t b) {
  const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  for (std::uint64_t i = 0; i < psi.size(); ++i) {
    if ((i & mask) == mask) psi[i] = -psi[i];
  }
}

}  // namespace

Statevector ansatz_state(const AnsatzConfig& config, const std::vector<double>& params) {
  config.validate();
  if (params.size() != config.num_params()) {
    throw std::invalid_argument("expected " + std::to_string(config.num_params()) + " parameters, got " +
                                std::to_string(params.size()));
  }
  const std::size_t n = config.num_qubits;
  Statevector psi(std::size_t{1} << n, 0.0);
  psi[0] = 1.0;
  const auto pairs = config.entangler_pairs();
  for (std::size_t layer = 0; layer <= config.layers; ++layer) {
    if (layer > 0) {
      for (auto [a, b] : pairs) apply_cz(psi, a, b);
    }
    for (std::size_t q = 0; q < n; ++q) apply_ry(psi, q, params[layer * n + q]);
  }
  return psi;
}

double expectation(const Statevector& state, const DiagonalHamiltonian& hml) {
  if (state.size() != hml.diagonal().size()) throw std::invalid_argument("state and Hamiltonian dimensions differ");
  double e = 0.0;
  for (std::size_t b = 0; b < state.size(); ++b) e += std::norm(state[b]) * hml.diagonal()[b];
  return e;
}

}  // namespace qeo
