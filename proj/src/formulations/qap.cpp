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

#include "qeo/formulations/qap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qeo {

void QapInstance::validate() const {
  const std::size_t n = distance.rows();
  if (distance.cols() != n || flow.rows() != n || flow.cols() != n) {
    throw std::invalid_argument("QAP matrices must be square and of equal size");
  }
  for (const Matrix* m : {&distance, &flow}) {
    for (double v : m->data()) {
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("QAP matrix entries must be finite and non-negative");
      }
    }
  }
}

double qap_objective(const QapInstance& inst, std::span<const std::size_t> perm) {
  const std::size_t n = inst.size();
  if (perm.size() != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto loc : perm) {
    if (loc >= n || seen[loc]) throw std::invalid_argument("not a permutation");
    seen[loc] = true;
  }
  double total = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      total += inst.flow(p, q) * inst.distance(perm[p], perm[q]);
    }
  }
  return total;
}

double qap_default_penalty(const QapInstance& inst) {
  inst.validate();
  const double n = static_cast<double>(inst.size());
  return 1.0 + n * inst.distance.max() * inst.flow.max();
}

Formulation qap_to_qubo(const QapInstance& inst, const PenaltyWeights& weights) {
  inst.validate();
  if (!(weights.a > 0.0)) throw std::invalid_argument("QAP penalty A must be positive");
  const std::size_t n = inst.size();
  const double a = weights.a;
  Formulation f;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < n; ++i) f.vars.add(label_x(p, i));
  }
  auto var = [n](std::size_t p, std::size_t i) { return p * n + i; };

  QuboBuilder b(n * n);
  b.add_offset(2.0 * static_cast<double>(n) * a);
  // Objective over ordered pairs; (p,i) == (q,j) folds onto the linear term.
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const double t = inst.flow(p, q);
      if (t == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const double c = inst.distance(i, j);
          if (c != 0.0) b.add_quadratic(var(p, i), var(q, j), c * t);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      b.add_linear(var(p, i), -2.0 * a);
      for (std::size_t q = p + 1; q < n; ++q) b.add_quadratic(var(p, i), var(q, i), 2.0 * a);
      for (std::size_t j = i + 1; j < n; ++j) b.add_quadratic(var(p, i), var(p, j), 2.0 * a);
    }
  }
  f.qubo = b.build();
  f.qubo.set_var_names(f.vars.names());
  return f;
}

QapDecoded qap_decode(std::span<const std::uint8_t> x, const VarMap& vars,
                      const QapInstance& inst) {
  const std::size_t n = inst.size();
  if (x.size() != n * n || vars.size() != n * n) {
    throw std::invalid_argument("assignment size does not match QAP instance");
  }
  std::vector<std::size_t> row_count(n, 0), col_count(n, 0);
  std::vector<std::size_t> perm(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[vars.index(label_x(p, i))]) {
        ++row_count[p];
        ++col_count[i];
        perm[p] = i;
      }
    }
  }
  QapDecoded out;
  for (std::size_t k = 0; k < n; ++k) {
    if (row_count[k] != 1) out.bad_plants.push_back(k);
    if (col_count[k] != 1) out.bad_locations.push_back(k);
  }
  if (out.bad_plants.empty() && out.bad_locations.empty()) {
    out.solution = QapSolution{perm, qap_objective(inst, perm)};
  }
  return out;
}

namespace {

class QapSearch {
 public:
  explicit QapSearch(const QapInstance& inst)
      : inst_(inst),
        n_(inst.size()),
        partial_(n_ * n_, 0.0),
        perm_(n_, 0),
        used_(n_, false) {
    for (std::size_t p = 0; p < n_; ++p) {
      for (std::size_t l = 0; l < n_; ++l) partial_[p * n_ + l] = inst.flow(p, p) * inst.distance(l, l);
    }
  }

  QapSolution run() {
    descend(0, 0.0);
    return {best_perm_, best_};
  }

 private:
  // partial_[p*n + l]: cost added by placing plant p at location l given the
  // plants already placed. Entries are non-negative, so summing the row
  // minima of the unplaced plants bounds the completion from below.
  double bound(std::size_t depth) const {
    double lb = 0.0;
    for (std::size_t p = depth; p < n_; ++p) {
      double m = std::numeric_limits<double>::infinity();
      for (std::size_t l = 0; l < n_; ++l) {
        if (!used_[l]) m = std::min(m, partial_[p * n_ + l]);
      }
      lb += m;
    }
    return lb;
  }

  void shift(std::size_t q, std::size_t m, std::size_t depth, double sign) {
    for (std::size_t p = depth; p < n_; ++p) {
      const double tpq = inst_.flow(p, q);
      const double tqp = inst_.flow(q, p);
      if (tpq == 0.0 && tqp == 0.0) continue;
      for (std::size_t l = 0; l < n_; ++l) {
        partial_[p * n_ + l] += sign * (tpq * inst_.distance(l, m) + tqp * inst_.distance(m, l));
      }
    }
  }

  void descend(std::size_t depth, double cost) {
    if (depth == n_) {
      if (cost < best_) {
        best_ = cost;
        best_perm_ = perm_;
      }
      return;
    }
    if (cost + bound(depth) >= best_) return;
    for (std::size_t l = 0; l < n_; ++l) {
      if (used_[l]) continue;
      const double step = partial_[depth * n_ + l];
      if (cost + step >= best_) continue;
      used_[l] = true;
      perm_[depth] = l;
      shift(depth, l, depth + 1, 1.0);
      descend(depth + 1, cost + step);
      shift(depth, l, depth + 1, -1.0);
      used_[l] = false;
    }
  }

  const QapInstance& inst_;
  std::size_t n_;
  std::vector<double> partial_;
  std::vector<std::size_t> perm_;
  std::vector<bool> used_;
  double best_ = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_perm_;
};

}  // namespace

QapSolution qap_oracle(const QapInstance& inst) {
  inst.validate();
  if (inst.size() > kQapOracleMaxSize) {
    throw std::invalid_argument("QAP oracle supports n <= " + std::to_string(kQapOracleMaxSize));
  }
  if (inst.size() == 0) return {};
  QapSolution sol = QapSearch(inst).run();
  // The incremental bookkeeping accumulates round-off; report the exact sum.
  sol.objective = qap_objective(inst, sol.perm);
  return sol;
}

}  // namespace qeo
