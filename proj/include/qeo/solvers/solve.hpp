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
#include <optional>
#include <string>
#include <vector>

#include "qeo/core/qubo.hpp"
#include "qeo/solvers/sample_set.hpp"

namespace qeo {

/// Solver name plus optional overrides of its defaults. Fields that do not
/// apply to the chosen solver are ignored.
struct SolveSpec {
  std::string strategy;  // brute | sa | tabu | decomp | vqe
  std::uint64_t seed = 0;
  std::optional<std::size_t> reads;     // sa reads, vqe shots
  std::optional<std::size_t> sweeps;    // sa
  std::optional<std::size_t> restarts;  // tabu, vqe
  std::optional<std::size_t> threads;   // sa
  std::optional<std::size_t> sub_size;  // decomp
  std::optional<std::size_t> layers;    // vqe
  std::optional<std::size_t> max_iterations;  // vqe
};

const std::vector<std::string>& solver_names();

/// Routes to the named solver. Throws std::invalid_argument for unknown
/// strategies. Elapsed time is recorded in the returned meta.
SampleSet solve(const Qubo& model, const SolveSpec& spec);

}  // namespace qeo
