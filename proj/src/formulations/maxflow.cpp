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

#include "maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace qeo::detail {

std::size_t MaxFlow::add_arc(std::size_t from, std::size_t to, double capacity) {
  graph_[from].push_back({to, graph_[to].size(), capacity, capacity});
  graph_[to].push_back({from, graph_[from].size() - 1, 0.0, 0.0});
  arcs_.emplace_back(from, graph_[from].size() - 1);
  return arcs_.size() - 1;
}

double MaxFlow::flow(std::size_t arc) const {
  const auto [node, slot] = arcs_[arc];
  const Arc& a = graph_[node][slot];
  return a.initial - a.cap;
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink, double eps) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (const auto& a : graph_[v]) {
      if (a.cap > eps && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        frontier.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

double MaxFlow::push(std::size_t node, std::size_t sink, double limit, double eps) {
  if (node == sink) return limit;
  for (auto& i = cursor_[node]; i < graph_[node].size(); ++i) {
    Arc& a = graph_[node][i];
    if (a.cap <= eps || level_[a.to] != level_[node] + 1) continue;
    const double pushed = push(a.to, sink, std::min(limit, a.cap), eps);
    if (pushed > eps) {
      a.cap -= pushed;
      graph_[a.to][a.rev].cap += pushed;
      return pushed;
    }
  }
  return 0.0;
}

double MaxFlow::run(std::size_t source, std::size_t sink, double eps) {
  double total = 0.0;
  while (build_levels(source, sink, eps)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (true) {
      const double pushed = push(source, sink, std::numeric_limits<double>::infinity(), eps);
      if (pushed <= eps) break;
      total += pushed;
    }
  }
  return total;
}

}  // namespace qeo::detail
