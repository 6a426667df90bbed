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

#include <map>
#include <span>

#include "qeo/core/qubo.hpp"

namespace qeo {

/// Ising model H(s) = offset + sum_i h_i s_i + sum_{i<j} J_ij s_i s_j over
/// spins s_i in {-1, +1}. Same canonical form as Qubo (i < j, no zeros).
///
/// Spin convention used everywhere in this library: s = 1 - 2x, so bit 0 is
/// spin +1 and bit 1 is spin -1.
class IsingModel {
 public:
  IsingModel() = default;
  explicit IsingModel(std::size_t num_vars) : num_vars_(num_vars) {}
  IsingModel(std::size_t num_vars, std::map<Index, double> h,
             std::map<IndexPair, double> j, double offset = 0.0);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Index, double>& h() const { return h_; }
  const std::map<IndexPair, double>& j() const { return j_; }
  double offset() const { return offset_; }

  /// Throws std::invalid_argument for spins outside {-1, +1}.
  double energy(std::span<const std::int8_t> s) const;

  bool operator==(const IsingModel&) const = default;

 private:
  std::size_t num_vars_ = 0;
  std::map<Index, double> h_;
  std::map<IndexPair, double> j_;
  double offset_ = 0.0;
};

IsingModel qubo_to_ising(const Qubo& model);
Qubo ising_to_qubo(const IsingModel& model);

Spins to_spins(std::span<const std::uint8_t> x);
Assignment to_bits(std::span<const std::int8_t> s);

}  // namespace qeo
