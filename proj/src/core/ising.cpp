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

#include "qeo/core/ising.hpp"

#include <cmath>
#include <stdexcept>

namespace qeo {

IsingModel::IsingModel(std::size_t num_vars, std::map<Index, double> h,
                       std::map<IndexPair, double> j, double offset)
    : num_vars_(num_vars), offset_(offset) {
  if (!std::isfinite(offset)) throw std::invalid_argument("non-finite offset");
  for (const auto& [i, v] : h) {
    if (i >= num_vars) throw std::out_of_range("field index out of range");
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite field");
    if (v != 0.0) h_[i] += v;
  }
  for (auto [ij, v] : j) {
    auto [a, b] = ij;
    if (a >= num_vars || b >= num_vars) throw std::out_of_range("coupling index out of range");
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite coupling");
    if (a == b) {
      // s_i^2 == 1
      offset_ += v;
      continue;
    }
    if (a > b) std::swap(a, b);
    j_[{a, b}] += v;
  }
  std::erase_if(h_, [](const auto& kv) { return kv.second == 0.0; });
  std::erase_if(j_, [](const auto& kv) { return kv.second == 0.0; });
}

double IsingModel::energy(std::span<const std::int8_t> s) const {
  if (s.size() != num_vars_) throw std::invalid_argument("spin vector length mismatch");
  for (auto v : s) {
    if (v != 1 && v != -1) throw std::invalid_argument("spin values must be -1 or +1");
  }
  double e = offset_;
  for (const auto& [i, v] : h_) e += v * s[i];
  for (const auto& [ij, v] : j_) e += v * s[ij.first] * s[ij.second];
  return e;
}

// x = (1 - s) / 2:
//   l x_i        = l/2 - (l/2) s_i
//   q x_i x_j    = q/4 (1 - s_i - s_j + s_i s_j)
IsingModel qubo_to_ising(const Qubo& model) {
  std::map<Index, double> h;
  std::map<IndexPair, double> j;
  double offset = model.offset();
  for (const auto& [i, l] : model.linear()) {
    h[i] -= l / 2.0;
    offset += l / 2.0;
  }
  for (const auto& [ij, q] : model.quadratic()) {
    j[ij] += q / 4.0;
    h[ij.first] -= q / 4.0;
    h[ij.second] -= q / 4.0;
    offset += q / 4.0;
  }
  return IsingModel(model.num_vars(), std::move(h), std::move(j), offset);
}

// s = 1 - 2x:
//   h s_i        = h - 2h x_i
//   J s_i s_j    = J (1 - 2x_i - 2x_j + 4 x_i x_j)
Qubo ising_to_qubo(const IsingModel& model) {
  QuboBuilder b(model.num_vars());
  b.add_offset(model.offset());
  for (const auto& [i, v] : model.h()) {
    b.add_offset(v);
    b.add_linear(i, -2.0 * v);
  }
  for (const auto& [ij, v] : model.j()) {
    b.add_offset(v);
    b.add_linear(ij.first, -2.0 * v);
    b.add_linear(ij.second, -2.0 * v);
    b.add_quadratic(ij.first, ij.second, 4.0 * v);
  }
  return b.build();
}

Spins to_spins(std::span<const std::uint8_t> x) {
  Spins s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? -1 : 1;
  return s;
}

Assignment to_bits(std::span<const std::int8_t> s) {
  Assignment x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 1 && s[i] != -1) throw std::invalid_argument("spin values must be -1 or +1");
    x[i] = s[i] == -1 ? 1 : 0;
  }
  return x;
}

}  // namespace qeo
