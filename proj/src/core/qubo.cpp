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

#include "qeo/core/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qeo {
namespace {

void check_finite(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("non-finite coefficient");
  }
}

template <typename Map>
void drop_zeros(Map& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0.0; });
}

}  // namespace

double LinearExpr::evaluate(std::span<const std::uint8_t> x) const {
  double v = constant;
  for (const auto& [i, c] : terms) {
    if (i >= x.size()) throw std::out_of_range("expression index out of range");
    if (x[i]) v += c;
  }
  return v;
}

Qubo::Qubo(std::size_t num_vars, std::span<const LinearTerm> linear,
           std::span<const QuadraticTerm> quadratic, double offset) {
  QuboBuilder b(num_vars);
  for (const auto& t : linear) b.add_linear(t.var, t.coeff);
  for (const auto& t : quadratic) b.add_quadratic(t.i, t.j, t.coeff);
  b.add_offset(offset);
  *this = b.build();
}

double Qubo::linear_at(Index i) const {
  auto it = linear_.find(i);
  return it == linear_.end() ? 0.0 : it->second;
}

double Qubo::quadratic_at(Index i, Index j) const {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  auto it = quadratic_.find({i, j});
  return it == quadratic_.end() ? 0.0 : it->second;
}

void Qubo::set_var_names(std::map<Index, std::string> names) {
  for (const auto& kv : names) {
    if (kv.first >= num_vars_) throw std::out_of_range("var name index out of range");
  }
  var_names_ = std::move(names);
}

double Qubo::energy(std::span<const std::uint8_t> x) const {
  check_assignment(*this, x);
  double e = offset_;
  for (const auto& [i, c] : linear_) {
    if (x[i]) e += c;
  }
  for (const auto& [ij, c] : quadratic_) {
    if (x[ij.first] && x[ij.second]) e += c;
  }
  return e;
}

double Qubo::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& kv : linear_) m = std::max(m, std::abs(kv.second));
  for (const auto& kv : quadratic_) m = std::max(m, std::abs(kv.second));
  return m;
}

void check_assignment(const Qubo& model, std::span<const std::uint8_t> x) {
  if (x.size() != model.num_vars()) {
    throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                " does not match model size " +
                                std::to_string(model.num_vars()));
  }
}

QuboBuilder::QuboBuilder(const Qubo& base)
    : num_vars_(base.num_vars_),
      linear_(base.linear_),
      quadratic_(base.quadratic_),
      offset_(base.offset_),
      var_names_(base.var_names_) {}

void QuboBuilder::check_index(Index i) const {
  if (i >= num_vars_) {
    throw std::out_of_range("variable index " + std::to_string(i) +
                            " out of range for " + std::to_string(num_vars_) +
                            " variables");
  }
}

QuboBuilder& QuboBuilder::add_linear(Index i, double coeff) {
  check_index(i);
  check_finite(coeff);
  linear_[i] += coeff;
  return *this;
}

QuboBuilder& QuboBuilder::add_quadratic(Index i, Index j, double coeff) {
  check_index(i);
  check_index(j);
  check_finite(coeff);
  if (i == j) {
    linear_[i] += coeff;
  } else {
    if (i > j) std::swap(i, j);
    quadratic_[{i, j}] += coeff;
  }
  return *this;
}

QuboBuilder& QuboBuilder::add_offset(double value) {
  check_finite(value);
  offset_ += value;
  return *this;
}

QuboBuilder& QuboBuilder::add_squared_penalty(const LinearExpr& expr,
                                              double weight) {
  if (!(weight >= 0.0)) throw std::invalid_argument("penalty weight must be >= 0");
  check_finite(weight);
  check_finite(expr.constant);
  for (const auto& [i, c] : expr.terms) {
    check_index(i);
    check_finite(c);
  }
  const double k = expr.constant;
  // (sum c_i x_i + k)^2 = sum c_i^2 x_i + 2k sum c_i x_i
  //                       + 2 sum_{i<j} c_i c_j x_i x_j + k^2
  for (auto it = expr.terms.begin(); it != expr.terms.end(); ++it) {
    const auto [i, ci] = *it;
    if (ci == 0.0) continue;
    linear_[i] += weight * (ci * ci + 2.0 * ci * k);
    for (auto jt = std::next(it); jt != expr.terms.end(); ++jt) {
      if (jt->second == 0.0) continue;
      quadratic_[{i, jt->first}] += 2.0 * weight * ci * jt->second;
    }
  }
  offset_ += weight * k * k;
  return *this;
}

QuboBuilder& QuboBuilder::add_model(const Qubo& other) {
  if (other.num_vars() > num_vars_) num_vars_ = other.num_vars();
  for (const auto& [i, c] : other.linear()) linear_[i] += c;
  for (const auto& [ij, c] : other.quadratic()) quadratic_[ij] += c;
  offset_ += other.offset();
  return *this;
}

Qubo QuboBuilder::build() const {
  Qubo q(num_vars_);
  q.linear_ = linear_;
  q.quadratic_ = quadratic_;
  q.offset_ = offset_;
  drop_zeros(q.linear_);
  drop_zeros(q.quadratic_);
  q.var_names_ = var_names_;
  return q;
}

Qubo add_squared_penalty(const Qubo& model, const LinearExpr& expr,
                         double weight) {
  return QuboBuilder(model).add_squared_penalty(expr, weight).build();
}

Qubo operator+(const Qubo& a, const Qubo& b) {
  QuboBuilder sum(a);
  sum.add_model(b);
  return sum.build();
}

ClampResult clamp(const Qubo& model, const std::map<Index, std::uint8_t>& fixed) {
  const std::size_t n = model.num_vars();
  std::vector<std::int64_t> slot(n, -1);
  std::vector<std::uint8_t> value(n, 0);
  for (const auto& [i, v] : fixed) {
    if (i >= n) throw std::out_of_range("clamped index out of range");
    if (v > 1) throw std::invalid_argument("clamped value must be 0 or 1");
    value[i] = v;
  }
  ClampResult out;
  for (Index i = 0; i < n; ++i) {
    if (!fixed.contains(i)) {
      slot[i] = static_cast<std::int64_t>(out.free_vars.size());
      out.free_vars.push_back(i);
    }
  }

  QuboBuilder b(out.free_vars.size());
  b.add_offset(model.offset());
  for (const auto& [i, c] : model.linear()) {
    if (slot[i] >= 0) {
      b.add_linear(static_cast<Index>(slot[i]), c);
    } else if (value[i]) {
      b.add_offset(c);
    }
  }
  for (const auto& [ij, c] : model.quadratic()) {
    const auto [i, j] = ij;
    const bool fi = slot[i] < 0;
    const bool fj = slot[j] < 0;
    if (!fi && !fj) {
      b.add_quadratic(static_cast<Index>(slot[i]), static_cast<Index>(slot[j]), c);
    } else if (fi && fj) {
      if (value[i] && value[j]) b.add_offset(c);
    } else if (fi) {
      if (value[i]) b.add_linear(static_cast<Index>(slot[j]), c);
    } else if (value[j]) {
      b.add_linear(static_cast<Index>(slot[i]), c);
    }
  }
  out.reduced = b.build();
  return out;
}

Qubo quantize(const Qubo& model, int bits) {
  if (bits < 1 || bits > 52) throw std::invalid_argument("quantize bits must be in [1, 52]");
  auto round_sig = [bits](double v) {
    if (v == 0.0) return 0.0;
    int exp = 0;
    const double mant = std::frexp(v, &exp);  // |mant| in [0.5, 1)
    const double scale = std::ldexp(1.0, bits);
    return std::ldexp(std::round(mant * scale) / scale, exp);
  };
  QuboBuilder b(model.num_vars());
  for (const auto& [i, c] : model.linear()) b.add_linear(i, round_sig(c));
  for (const auto& [ij, c] : model.quadratic()) b.add_quadratic(ij.first, ij.second, round_sig(c));
  b.add_offset(model.offset());
  Qubo q = b.build();
  if (model.var_names()) q.set_var_names(*model.var_names());
  return q;
}

Adjacency make_adjacency(const Qubo& model) {
  Adjacency adj;
  adj.linear.assign(model.num_vars(), 0.0);
  adj.neighbours.resize(model.num_vars());
  for (const auto& [i, c] : model.linear()) adj.linear[i] = c;
  for (const auto& [ij, c] : model.quadratic()) {
    adj.neighbours[ij.first].emplace_back(ij.second, c);
    adj.neighbours[ij.second].emplace_back(ij.first, c);
  }
  return adj;
}

}  // namespace qeo
