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

#include <cstddef>
#include <vector>

namespace qeo::detail {

/// Dinic max flow over real capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), cursor_(nodes) {}

  /// Returns the arc id, usable with flow().
  std::size_t add_arc(std::size_t from, std::size_t to, double capacity);
  double run(std::size_t source, std::size_t sink, double eps);
  double flow(std::size_t arc) const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    double cap;
    double initial;
  };

  bool build_levels(std::size_t source, std::size_t sink, double eps);
  double push(std::size_t node, std::size_t sink, double limit, double eps);

  std::vector<std::vector<Arc>> graph_;
  std::vector<std::pair<std::size_t, std::size_t>> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace qeo::detail
