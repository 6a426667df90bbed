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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qeo/formulations/common.hpp"

namespace qeo {

/// Koopmans-Beckmann quadratic assignment: plants p, q are placed at
/// locations perm[p], perm[q] and pay flow(p, q) * distance(perm[p], perm[q]).
struct QapInstance {
  Matrix distance;  // C: unit transport cost between locations
  Matrix flow;      // T: energy units exchanged between plants

  std::size_t size() const { return distance.rows(); }
  /// Square, same size, finite and non-negative entries.
  void validate() const;
};

struct QapSolution {
  std::vector<std::size_t> perm;  // plant -> location
  double objective = 0.0;
};

struct QapDecoded {
  std::optional<QapSolution> solution;
  /// Plants whose row of x does not sum to one.
  std::vector<std::size_t> bad_plants;
  /// Locations whose column of x does not sum to one.
  std::vector<std::size_t> bad_locations;

  bool feasible() const { return solution.has_value(); }
};

/// Throws std::invalid_argument unless perm is a permutation of 0..n-1.
double qap_objective(const QapInstance& inst, std::span<const std::size_t> perm);

/// Penalty weight 1 + n * max(C_ij * T_pq).
double qap_default_penalty(const QapInstance& inst);

/// Variable x(p,i) sits at index p * n + i.
Formulation qap_to_qubo(const QapInstance& inst, const PenaltyWeights& weights);

QapDecoded qap_decode(std::span<const std::uint8_t> x, const VarMap& vars,
                      const QapInstance& inst);

/// Largest size accepted by qap_oracle.
inline constexpr std::size_t kQapOracleMaxSize = 12;

/// Exact optimum by depth-first enumeration in lexicographic order with a
/// partial-cost bound; ties go to the lexicographically smallest permutation.
QapSolution qap_oracle(const QapInstance& inst);

/// QAPLIB text: n, then the first n x n matrix (flows), then the second
/// (distances).
QapInstance parse_qaplib(const std::string& text);
QapInstance read_qaplib_file(const std::string& path);

}  // namespace qeo
