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

#include "qeo/formulations/uc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qeo {
namespace {

double unit_cost(const UcUnit& u, bool on, double p) {
  return (on ? u.a : 0.0) + u.b * p + u.c * p * p;
}

double power_tolerance(const UcUnit& u) { return 1e-9 * std::max(1.0, u.p_max); }

bool near_integer(double v) { return std::abs(v - std::round(v)) <= 1e-9 * std::max(1.0, std::abs(v)); }

// Selected grid index per unit, -1 when the unit is off.
using Selection = std::vector<long>;

Assignment selection_bits(const DiscretizedUc& d, const Selection& sel) {
  Assignment bits;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    bits.push_back(sel[i] < 0 ? 1 : 0);
    for (std::size_t k = 0; k < d.points[i].size(); ++k) {
      bits.push_back(sel[i] == static_cast<long>(k) ? 1 : 0);
    }
  }
  return bits;
}

}  // namespace

void UcInstance::validate() const {
  if (!std::isfinite(load) || load < 0.0) throw std::invalid_argument("load must be finite and >= 0");
  double capacity = 0.0;
  for (const auto& u : units) {
    for (double v : {u.a, u.b, u.c, u.p_min, u.p_max}) {
      if (!std::isfinite(v)) throw std::invalid_argument("unit data must be finite");
    }
    if (u.c < 0.0) throw std::invalid_argument("unit quadratic cost c must be >= 0");
    if (u.p_min < 0.0 || u.p_max < u.p_min) {
      throw std::invalid_argument("unit bounds must satisfy 0 <= p_min <= p_max");
    }
    capacity += u.p_max;
  }
  if (capacity + uc_load_tolerance(*this) < load) {
    throw std::invalid_argument("total capacity is below the load");
  }
}

double uc_load_tolerance(const UcInstance& inst) { return 1e-9 * std::max(1.0, inst.load); }

UcSolution uc_objective(const UcInstance& inst, std::span<const std::uint8_t> on,
                        std::span<const double> power) {
  const std::size_t n = inst.units.size();
  if (on.size() != n || power.size() != n) throw std::invalid_argument("vector sizes do not match unit count");
  UcSolution s;
  s.on.assign(on.begin(), on.end());
  s.power.assign(power.begin(), power.end());
  s.unit_costs.resize(n);
  double produced = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = inst.units[i];
    const bool y = on[i] != 0;
    const double p = power[i];
    s.unit_costs[i] = unit_cost(u, y, p);
    s.total += s.unit_costs[i];
    produced += p;
    const double tol = power_tolerance(u);
    const double lo = y ? u.p_min : 0.0;
    const double hi = y ? u.p_max : 0.0;
    if (p < lo - tol || p > hi + tol) {
      s.violations.push_back("unit " + std::to_string(i) + " power " + std::to_string(p) +
                             " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
  s.load_residual = produced - inst.load;
  if (std::abs(s.load_residual) > uc_load_tolerance(inst)) {
    s.violations.push_back("load residual " + std::to_string(s.load_residual));
  }
  return s;
}

DiscretizedUc uc_discretize(const UcInstance& inst, std::size_t grids) {
  if (grids < 1) throw std::invalid_argument("grid count N must be >= 1");
  inst.validate();
  DiscretizedUc d;
  d.base = inst;
  d.grids = grids;
  for (const auto& u : inst.units) {
    std::vector<double> pts;
    if (u.p_min == u.p_max) {
      d.step.push_back(0.0);
      pts.push_back(u.p_min);
    } else {
      const double h = (u.p_max - u.p_min) / static_cast<double>(grids);
      d.step.push_back(h);
      for (std::size_t k = 0; k < grids; ++k) pts.push_back(u.p_min + static_cast<double>(k) * h);
      pts.push_back(u.p_max);
    }
    d.points.push_back(std::move(pts));
  }
  return d;
}

Formulation uc_to_qubo(const DiscretizedUc& d, const PenaltyWeights& weights) {
  if (!(weights.a > 0.0) || !(weights.b > 0.0)) throw std::invalid_argument("UC penalties A and B must be positive");
  Formulation f;
  std::vector<Index> v_index;
  std::vector<std::vector<Index>> z_index(d.points.size());
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    v_index.push_back(f.vars.add(label_v(i)));
    for (std::size_t k = 0; k < d.points[i].size(); ++k) z_index[i].push_back(f.vars.add(label_z(i, k)));
  }

  QuboBuilder b(f.vars.size());
  LinearExpr load;
  load.constant = -d.base.load;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    const auto& u = d.base.units[i];
    const auto& pts = d.points[i];
    for (std::size_t k = 0; k < pts.size(); ++k) {
      b.add_linear(z_index[i][k], u.a + u.b * pts[k] + u.c * pts[k] * pts[k]);
      for (std::size_t m = k + 1; m < pts.size(); ++m) {
        b.add_quadratic(z_index[i][k], z_index[i][m], 2.0 * u.c * pts[k] * pts[m]);
      }
      load.add(z_index[i][k], pts[k]);
    }
    LinearExpr one_hot;
    one_hot.add(v_index[i], 1.0);
    for (auto z : z_index[i]) one_hot.add(z, 1.0);
    one_hot.constant = -1.0;
    b.add_squared_penalty(one_hot, weights.a);
  }
  b.add_squared_penalty(load, weights.b);
  f.qubo = b.build();
  f.qubo.set_var_names(f.vars.names());
  return f;
}

double uc_load_quantum(const DiscretizedUc& d) {
  double h_min = std::numeric_limits<double>::infinity();
  for (double h : d.step) {
    if (h > 0.0) h_min = std::min(h_min, h);
  }
  if (!std::isfinite(h_min)) {
    for (const auto& u : d.base.units) {
      if (u.p_min > 0.0) h_min = std::min(h_min, u.p_min);
    }
    return std::isfinite(h_min) ? h_min : 1.0;
  }
  for (int k = 1; k <= 64; ++k) {
    const double q = h_min / k;
    bool ok = true;
    for (std::size_t i = 0; i < d.step.size() && ok; ++i) {
      ok = near_integer(d.step[i] / q) && near_integer(d.base.units[i].p_min / q);
    }
    if (ok) return q;
  }
  return h_min;
}

PenaltyWeights uc_default_penalties(const DiscretizedUc& d) {
  double scale = 0.0;
  for (const auto& u : d.base.units) scale = std::max(scale, unit_cost(u, true, u.p_max));
  scale = std::max(scale, 1.0);
  const double n = static_cast<double>(d.base.units.size());
  const double q = uc_load_quantum(d);
  return {std::max(10.0, n + 1.0) * scale, (n * scale + 1.0) / (q * q)};
}

UcSolution uc_decode(std::span<const std::uint8_t> x, const VarMap& vars, const DiscretizedUc& d) {
  if (x.size() != vars.size()) throw std::invalid_argument("assignment size does not match variable map");
  const std::size_t n = d.points.size();
  std::vector<std::uint8_t> on(n, 0);
  std::vector<double> power(n, 0.0);
  std::vector<std::string> one_hot;
  for (std::size_t i = 0; i < n; ++i) {
    const bool off = x[vars.index(label_v(i))] != 0;
    std::size_t selected = off ? 1 : 0;
    for (std::size_t k = 0; k < d.points[i].size(); ++k) {
      if (x[vars.index(label_z(i, k))]) {
        ++selected;
        power[i] += d.points[i][k];
      }
    }
    on[i] = off ? 0 : 1;
    if (selected != 1) {
      one_hot.push_back("unit " + std::to_string(i) + " one-hot breach: " + std::to_string(selected) +
                        " of v/z selected");
    }
  }
  UcSolution s = uc_objective(d.base, on, power);
  s.violations.insert(s.violations.begin(), one_hot.begin(), one_hot.end());
  return s;
}

Dispatch uc_dispatch_oracle(const UcInstance& inst, std::span<const std::uint8_t> on) {
  inst.validate();
  const std::size_t n = inst.units.size();
  if (on.size() != n) throw std::invalid_argument("commitment size does not match unit count");
  const double tol = uc_load_tolerance(inst);
  std::vector<std::size_t> committed;
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!on[i]) continue;
    committed.push_back(i);
    lo += inst.units[i].p_min;
    hi += inst.units[i].p_max;
  }
  if (inst.load < lo - tol || inst.load > hi + tol) {
    throw InfeasibleError("commitment cannot meet the load");
  }
  Dispatch out;
  out.power.assign(n, 0.0);
  if (committed.empty()) return out;
  const double load = std::clamp(inst.load, lo, hi);

  // Marginal cost b + 2cp; units with c == 0 jump from p_min to p_max at b.
  auto smooth = [&](const UcUnit& u, double lambda) {
    return std::clamp((lambda - u.b) / (2.0 * u.c), u.p_min, u.p_max);
  };
  auto produced = [&](double lambda, bool right) {
    double total = 0.0;
    for (auto i : committed) {
      const auto& u = inst.units[i];
      if (u.c > 0.0) {
        total += smooth(u, lambda);
      } else {
        const bool high = right ? u.b <= lambda : u.b < lambda;
        total += high ? u.p_max : u.p_min;
      }
    }
    return total;
  };

  std::vector<double> breaks;
  for (auto i : committed) {
    const auto& u = inst.units[i];
    if (u.c > 0.0) {
      breaks.push_back(u.b + 2.0 * u.c * u.p_min);
      breaks.push_back(u.b + 2.0 * u.c * u.p_max);
    } else {
      breaks.push_back(u.b);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::size_t t = 0;
  while (t + 1 < breaks.size() && produced(breaks[t], true) < load) ++t;
  const double at = breaks[t];
  const double left = produced(at, false);
  double lambda = at;
  bool interior = false;
  if (left > load && t > 0) {
    // Continuous piece between breaks[t-1] and breaks[t]: solve linearly.
    double slope = 0.0;
    for (auto i : committed) {
      const auto& u = inst.units[i];
      if (u.c > 0.0 && u.b + 2.0 * u.c * u.p_min <= breaks[t - 1] && u.b + 2.0 * u.c * u.p_max >= at) {
        slope += 1.0 / (2.0 * u.c);
      }
    }
    if (slope > 0.0) lambda = at - (left - load) / slope;
    interior = true;
  }
  double remaining = load;
  std::vector<std::size_t> marginal;
  for (auto i : committed) {
    const auto& u = inst.units[i];
    double p = 0.0;
    if (u.c > 0.0) {
      p = smooth(u, lambda);
    } else if (u.b < lambda) {
      p = u.p_max;
    } else if (u.b > lambda || interior) {
      p = u.p_min;
    } else {
      p = u.p_min;
      marginal.push_back(i);
    }
    out.power[i] = p;
    remaining -= p;
  }
  // Linear-cost units priced exactly at lambda absorb the rest in index order.
  for (auto i : marginal) {
    if (remaining <= 0.0) break;
    const double extra = std::min(remaining, inst.units[i].p_max - inst.units[i].p_min);
    out.power[i] += extra;
    remaining -= extra;
  }
  out.marginal_price = lambda;
  for (auto i : committed) out.cost += unit_cost(inst.units[i], true, out.power[i]);
  return out;
}

UcSolution uc_oracle(const UcInstance& inst) {
  inst.validate();
  const std::size_t n = inst.units.size();
  if (n > kUcOracleMaxUnits) throw std::invalid_argument("UC oracle supports at most 12 units");
  std::optional<UcSolution> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::uint8_t> on(n);
    for (std::size_t i = 0; i < n; ++i) on[i] = (mask >> i) & 1U;
    Dispatch dispatch;
    try {
      dispatch = uc_dispatch_oracle(inst, on);
    } catch (const InfeasibleError&) {
      continue;
    }
    if (!best || dispatch.cost < best->total ||
        (dispatch.cost == best->total && on < best->on)) {
      best = uc_objective(inst, on, dispatch.power);
    }
  }
  if (!best) throw InfeasibleError("no commitment meets the load");
  return *best;
}

std::optional<UcSolution> uc_grid_oracle(const DiscretizedUc& d) {
  const auto& inst = d.base;
  const std::size_t n = inst.units.size();
  if (n > kUcOracleMaxUnits) throw std::invalid_argument("UC grid oracle supports at most 12 units");
  const double tol = uc_load_tolerance(inst);
  bool monotone = true;
  for (const auto& u : inst.units) monotone = monotone && u.a >= 0.0 && u.b >= 0.0;

  double best_cost = std::numeric_limits<double>::infinity();
  Selection best_sel;
  Assignment best_bits;
  Selection sel(n, -1);

  auto consider = [&](double cost) {
    if (cost > best_cost) return;
    Assignment bits = selection_bits(d, sel);
    if (cost < best_cost || bits < best_bits) {
      best_cost = cost;
      best_sel = sel;
      best_bits = std::move(bits);
    }
  };

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> committed;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) committed.push_back(i);
    }
    std::fill(sel.begin(), sel.end(), -1);
    if (committed.empty()) {
      if (inst.load <= tol) consider(0.0);
      continue;
    }
    // suffix_lo/hi[r]: power range of committed[r..].
    const std::size_t m = committed.size();
    std::vector<double> suffix_lo(m + 1, 0.0), suffix_hi(m + 1, 0.0);
    for (std::size_t r = m; r-- > 0;) {
      suffix_lo[r] = suffix_lo[r + 1] + inst.units[committed[r]].p_min;
      suffix_hi[r] = suffix_hi[r + 1] + inst.units[committed[r]].p_max;
    }
    if (inst.load < suffix_lo[0] - tol || inst.load > suffix_hi[0] + tol) continue;

    auto recurse = [&](auto&& self, std::size_t r, double produced, double cost) -> void {
      if (monotone && cost > best_cost) return;
      const std::size_t i = committed[r];
      const auto& u = inst.units[i];
      const auto& pts = d.points[i];
      if (r + 1 == m) {
        const double need = inst.load - produced;
        long k = 0;
        if (d.step[i] > 0.0) k = std::lround((need - u.p_min) / d.step[i]);
        if (k < 0 || k >= static_cast<long>(pts.size())) return;
        if (std::abs(pts[static_cast<std::size_t>(k)] - need) > tol) return;
        sel[i] = k;
        consider(cost + unit_cost(u, true, pts[static_cast<std::size_t>(k)]));
        sel[i] = -1;
        return;
      }
      for (std::size_t k = 0; k < pts.size(); ++k) {
        const double p = produced + pts[k];
        if (p + suffix_lo[r + 1] > inst.load + tol) break;
        if (p + suffix_hi[r + 1] < inst.load - tol) continue;
        sel[i] = static_cast<long>(k);
        self(self, r + 1, p, cost + unit_cost(u, true, pts[k]));
      }
      sel[i] = -1;
    };
    recurse(recurse, 0, 0.0, 0.0);
  }
  if (best_sel.empty()) return std::nullopt;
  std::vector<std::uint8_t> on(n, 0);
  std::vector<double> power(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (best_sel[i] >= 0) {
      on[i] = 1;
      power[i] = d.points[i][static_cast<std::size_t>(best_sel[i])];
    }
  }
  return uc_objective(inst, on, power);
}

Assignment uc_encode(const UcSolution& sol, const VarMap& vars, const DiscretizedUc& d) {
  Assignment x(vars.size(), 0);
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    if (!sol.on[i]) {
      x[vars.index(label_v(i))] = 1;
      continue;
    }
    const auto& pts = d.points[i];
    std::size_t best = 0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (std::abs(pts[k] - sol.power[i]) < std::abs(pts[best] - sol.power[i])) best = k;
    }
    if (std::abs(pts[best] - sol.power[i]) > power_tolerance(d.base.units[i])) {
      throw std::invalid_argument("unit " + std::to_string(i) + " power is not a grid point");
    }
    x[vars.index(label_z(i, best))] = 1;
  }
  return x;
}

GridChoice uc_choose_grids(const UcInstance& inst, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  GridChoice choice;
  choice.continuous_optimum = uc_oracle(inst).total;
  const double scale = std::abs(choice.continuous_optimum);
  for (std::size_t grids = 1; grids <= kUcMaxGrids; grids *= 2) {
    auto grid = uc_grid_oracle(uc_discretize(inst, grids));
    choice.grids = grids;
    if (!grid) {
      choice.gap = std::numeric_limits<double>::infinity();
      choice.grid_optimum = std::numeric_limits<double>::infinity();
      continue;
    }
    choice.grid_optimum = grid->total;
    const double diff = grid->total - choice.continuous_optimum;
    choice.gap = scale > 0.0 ? diff / scale : diff;
    if (choice.gap <= tol) {
      choice.achieved = true;
      return choice;
    }
  }
  return choice;
}

}  // namespace qeo
