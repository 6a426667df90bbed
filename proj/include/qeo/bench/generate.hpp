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

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qeo/formulations/hens.hpp"
#include "qeo/formulations/uc.hpp"

namespace qeo {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Random instance recipe. Fields of the other family are ignored.
struct GenSpec {
  std::string family;  // uc | hens
  std::uint64_t seed = 0;
  std::size_t grids = 4;

  std::size_t units = 3;
  Range a{0.0, 10.0};
  Range b{0.5, 3.0};
  Range c{0.05, 1.0};
  Range p_min{0.5, 2.0};
  Range span{1.0, 8.0};  // p_max - p_min
  /// Lattice for p_min and grid steps so the planted load is reachable.
  double quantum = 1.0;

  std::size_t sources = 2;
  std::size_t sinks = 2;
  Range cost{0.1, 1.0};
  double heat_unit = 1.0;

  void validate() const;
};

nlohmann::json genspec_to_json(const GenSpec& spec);
/// Missing keys keep their defaults.
GenSpec genspec_from_json(const nlohmann::json& doc);

/// Units drawn from the spec ranges with p_min and the grid step h = span/N
/// on the `quantum` lattice. The load is the output of a hidden random
/// commitment at random grid points, redrawn until it falls inside
/// [max p_min, 0.8 sum p_max], so the N-point discretization always has a
/// feasible point.
UcInstance gen_uc(const GenSpec& spec);

/// Hidden integer flow (in heat units, at most N per pair) over a random
/// match pattern; supplies and demands are its row and column sums. Draws are
/// kept only when every min(S_i, D_j) divides N, which puts every integer
/// flow on every pair's grid, so the discretized problem keeps the
/// continuous optimum.
HensInstance gen_hens(const GenSpec& spec);

}  // namespace qeo
