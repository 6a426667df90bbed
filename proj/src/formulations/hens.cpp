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

#include "qeo/formulations/hens.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "maxflow.hpp"

namespace qeo {

void HensInstance::validate() const {
  if (cost.rows() != supply.size() || cost.cols() != demand.size()) {
    throw std::invalid_argument("cost matrix must be m x n");
  }
  for (const auto* v : {&supply, &demand, &cost.data()}) {
    for (double x : *v) {
      if (!std::isfinite(x) || x < 0.0) throw std::invalid_argument("HENS data must be finite and >= 0");
    }
  }
  const double s = std::accumulate(supply.begin(), supply.end(), 0.0);
  const double d = std::accumulate(demand.begin(), demand.end(), 0.0);
  if (std::abs(s - d) > hens_balance_tolerance(*this)) {
    throw std::invalid_argument("total supply must equal total demand");
  }
}

double hens_balance_tolerance(const HensInstance& inst) {
  const double s = std::accumulate(inst.supply.begin(), inst.supply.end(), 0.0);
  return 1e-9 * std::max(1.0, s);
}

HensSolution hens_objective(const HensInstance& inst, std::span<const std::uint8_t> matches,
                            const Matrix& flows) {
  const std::size_t m = inst.sources(), n = inst.sinks();
  if (matches.size() != m * n || flows.rows() != m || flows.cols() != n) {
    throw std::invalid_argument("match/flow matrices must be m x n");
  }
  const double tol = hens_balance_tolerance(inst);
  HensSolution s;
  s.matches.assign(matches.begin(), matches.end());
  s.flows = flows;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (matches[i * n + j]) s.total_cost += inst.cost(i, j);
      const double q = flows(i, j);
      const double cap = std::min(inst.supply[i], inst.demand[j]) * (matches[i * n + j] ? 1.0 : 0.0);
      if (q < -tol) {
        s.violations.push_back("negative flow at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (q > cap + tol) {
        s.violations.push_back("flow " + std::to_string(q) + " exceeds U*w at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += flows(i, j);
    if (std::abs(row - inst.supply[i]) > tol) {
      s.violations.push_back("source " + std::to_string(i) + " balance residual " +
                             std::to_string(row - inst.supply[i]));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < m; ++i) col += flows(i, j);
    if (std::abs(col - inst.demand[j]) > tol) {
      s.violations.push_back("sink " + std::to_string(j) + " balance residual " +
                             std::to_string(col - inst.demand[j]));
    }
  }
  return s;
}

DiscretizedHens hens_discretize(const HensInstance& inst, std::size_t grids) {
  if (grids < 1) throw std::invalid_argument("grid count N must be >= 1");
  inst.validate();
  DiscretizedHens d;
  d.base = inst;
  d.grids = grids;
  const std::size_t m = inst.sources(), n = inst.sinks();
  d.capacity = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double u = std::min(inst.supply[i], inst.demand[j]);
      d.capacity(i, j) = u;
      std::vector<double> pts;
      if (u > 0.0) {
        for (std::size_t k = 1; k < grids; ++k) pts.push_back(u * static_cast<double>(k) / static_cast<double>(grids));
        pts.push_back(u);
      }
      d.flows.push_back(std::move(pts));
    }
  }
  return d;
}

HensFormulation hens_to_qubo(const DiscretizedHens& d, const PenaltyWeights& weights) {
  if (!(weights.a > 0.0) || !(weights.b > 0.0)) throw std::invalid_argument("HENS penalties A and B must be positive");
  const auto& inst = d.base;
  const std::size_t m = inst.sources(), n = inst.sinks();
  HensFormulation out;
  auto& f = out.formulation;
  std::vector<Index> w_index;
  std::vector<std::vector<Index>> z_index;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      w_index.push_back(f.vars.add(label_w(i, j)));
      std::vector<Index> zs;
      for (std::size_t k = 1; k <= d.grid(i, j).size(); ++k) zs.push_back(f.vars.add(label_z(i, j, k)));
      if (zs.empty()) out.dropped += d.grids;
      z_index.push_back(std::move(zs));
    }
  }

  QuboBuilder b(f.vars.size());
  std::vector<LinearExpr> rows(m), cols(n);
  for (std::size_t i = 0; i < m; ++i) rows[i].constant = -inst.supply[i];
  for (std::size_t j = 0; j < n; ++j) cols[j].constant = -inst.demand[j];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t pair = i * n + j;
      b.add_linear(w_index[pair], inst.cost(i, j));
      LinearExpr logic;
      logic.add(w_index[pair], 1.0);
      const auto& grid = d.grid(i, j);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        logic.add(z_index[pair][k], -1.0);
        rows[i].add(z_index[pair][k], grid[k]);
        cols[j].add(z_index[pair][k], grid[k]);
      }
      b.add_squared_penalty(logic, weights.a);
    }
  }
  for (const auto& e : rows) b.add_squared_penalty(e, weights.b);
  for (const auto& e : cols) b.add_squared_penalty(e, weights.b);
  f.qubo = b.build();
  f.qubo.set_var_names(f.vars.names());
  return out;
}

PenaltyWeights hens_default_penalties() { return {20.0, 5.0}; }

HensSolution hens_decode(std::span<const std::uint8_t> x, const VarMap& vars, const DiscretizedHens& d) {
  if (x.size() != vars.size()) throw std::invalid_argument("assignment size does not match variable map");
  const auto& inst = d.base;
  const std::size_t m = inst.sources(), n = inst.sinks();
  std::vector<std::uint8_t> w(m * n, 0);
  Matrix q(m, n);
  std::vector<std::string> logic;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      w[i * n + j] = x[vars.index(label_w(i, j))] ? 1 : 0;
      const auto& grid = d.grid(i, j);
      std::size_t selected = 0;
      for (std::size_t k = 1; k <= grid.size(); ++k) {
        if (x[vars.index(label_z(i, j, k))]) {
          ++selected;
          q(i, j) += grid[k - 1];
        }
      }
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (selected > 1) logic.push_back("multiple grid points selected at " + at);
      if (selected != w[i * n + j]) logic.push_back("grid selection does not match w at " + at);
    }
  }
  HensSolution s = hens_objective(inst, w, q);
  s.violations.insert(s.violations.begin(), logic.begin(), logic.end());
  return s;
}

bool hens_transport_feasible(const HensInstance& inst, std::span<const std::uint8_t> matches, Matrix* flows) {
  const std::size_t m = inst.sources(), n = inst.sinks();
  if (matches.size() != m * n) throw std::invalid_argument("match vector must have m*n entries");
  const std::size_t source = 0, sink = m + n + 1;
  detail::MaxFlow net(m + n + 2);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    net.add_arc(source, 1 + i, inst.supply[i]);
    total += inst.supply[i];
  }
  for (std::size_t j = 0; j < n; ++j) net.add_arc(1 + m + j, sink, inst.demand[j]);
  std::vector<std::pair<std::size_t, std::size_t>> pair_arcs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!matches[i * n + j]) continue;
      const double u = std::min(inst.supply[i], inst.demand[j]);
      pair_arcs.emplace_back(i * n + j, net.add_arc(1 + i, 1 + m + j, u));
    }
  }
  const double tol = hens_balance_tolerance(inst);
  const double sent = net.run(source, sink, tol * 1e-3);
  const bool ok = sent >= total - tol;
  if (ok && flows) {
    *flows = Matrix(m, n);
    for (const auto& [pair, arc] : pair_arcs) (*flows)(pair / n, pair % n) = net.flow(arc);
  }
  return ok;
}

HensSolution hens_oracle(const HensInstance& inst) {
  inst.validate();
  const std::size_t m = inst.sources(), n = inst.sinks();
  const std::size_t pairs = m * n;
  if (pairs > kHensOracleMaxPairs) throw std::invalid_argument("HENS oracle supports m*n <= 16");
  const std::uint32_t count = std::uint32_t{1} << pairs;
  std::vector<double> cost(count, 0.0);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (std::size_t p = 0; p < pairs; ++p) {
      if ((mask >> p) & 1U) cost[mask] += inst.cost(p / n, p % n);
    }
  }
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0U);
  // Bit p of a mask is w at row-major position p, so the lexicographically
  // smaller vector has a 0 at the first position where the masks differ.
  auto lex_less = [](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    return ((a >> std::countr_zero(diff)) & 1U) == 0;
  };
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (cost[a] != cost[b]) return cost[a] < cost[b];
    return lex_less(a, b);
  });
  std::vector<std::uint8_t> w(pairs);
  for (auto mask : order) {
    for (std::size_t p = 0; p < pairs; ++p) w[p] = (mask >> p) & 1U;
    Matrix flows;
    if (hens_transport_feasible(inst, w, &flows)) return hens_objective(inst, w, flows);
  }
  throw InfeasibleError("no match set carries the required heat");
}

}  // namespace qeo
