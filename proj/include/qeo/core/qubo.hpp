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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qeo {

using Index = std::size_t;
using IndexPair = std::pair<Index, Index>;

/// Binary assignment, one byte per variable holding 0 or 1.
using Assignment = std::vector<std::uint8_t>;
/// Spin configuration, entries in {-1, +1}.
using Spins = std::vector<std::int8_t>;

struct LinearTerm {
  Index var;
  double coeff;
};

struct QuadraticTerm {
  Index i;
  Index j;
  double coeff;
};

/// Affine expression sum_i c_i x_i + k over binary variables; the argument of
/// a squared penalty.
struct LinearExpr {
  std::map<Index, double> terms;
  double constant = 0.0;

  LinearExpr& add(Index var, double coeff) {
    terms[var] += coeff;
    return *this;
  }
  double evaluate(std::span<const std::uint8_t> x) const;
};

/// Quadratic unconstrained binary model
///
///   E(x) = offset + sum_i linear_i x_i + sum_{i<j} quadratic_ij x_i x_j
///
/// held in canonical form: quadratic keys satisfy i < j, diagonal entries are
/// folded into the linear part (x*x == x), duplicates are summed and exact
/// zeros are dropped. Two models with equal energy functions and equal
/// construction inputs compare structurally equal.
class Qubo {
 public:
  Qubo() = default;
  explicit Qubo(std::size_t num_vars) : num_vars_(num_vars) {}

  /// Builds a canonical model. Throws std::out_of_range on bad indices and
  /// std::invalid_argument on non-finite coefficients.
  Qubo(std::size_t num_vars, std::span<const LinearTerm> linear,
       std::span<const QuadraticTerm> quadratic, double offset = 0.0);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Index, double>& linear() const { return linear_; }
  const std::map<IndexPair, double>& quadratic() const { return quadratic_; }
  double offset() const { return offset_; }

  double linear_at(Index i) const;
  /// Order of i and j does not matter; i == j returns 0.
  double quadratic_at(Index i, Index j) const;

  const std::optional<std::map<Index, std::string>>& var_names() const {
    return var_names_;
  }
  void set_var_names(std::map<Index, std::string> names);

  double energy(std::span<const std::uint8_t> x) const;

  /// Largest absolute coefficient (linear or quadratic), 0 for empty models.
  double max_abs_coeff() const;

  bool operator==(const Qubo&) const = default;

 private:
  friend class QuboBuilder;

  std::size_t num_vars_ = 0;
  std::map<Index, double> linear_;
  std::map<IndexPair, double> quadratic_;
  double offset_ = 0.0;
  std::optional<std::map<Index, std::string>> var_names_;
};

/// Accumulates terms and emits a canonical Qubo. Use this for large
/// formulations instead of materializing term vectors.
class QuboBuilder {
 public:
  explicit QuboBuilder(std::size_t num_vars) : num_vars_(num_vars) {}
  explicit QuboBuilder(const Qubo& base);

  QuboBuilder& add_linear(Index i, double coeff);
  /// i == j is folded into the linear part.
  QuboBuilder& add_quadratic(Index i, Index j, double coeff);
  QuboBuilder& add_offset(double value);
  /// Adds weight * expr^2 expanded with x^2 = x.
  QuboBuilder& add_squared_penalty(const LinearExpr& expr, double weight);
  QuboBuilder& add_model(const Qubo& other);

  std::size_t num_vars() const { return num_vars_; }
  Qubo build() const;

 private:
  void check_index(Index i) const;

  std::size_t num_vars_;
  std::map<Index, double> linear_;
  std::map<IndexPair, double> quadratic_;
  double offset_ = 0.0;
  std::optional<std::map<Index, std::string>> var_names_;
};

Qubo add_squared_penalty(const Qubo& model, const LinearExpr& expr,
                         double weight);

/// Coefficient-wise sum; the result has max(num_vars) variables.
Qubo operator+(const Qubo& a, const Qubo& b);

struct ClampResult {
  Qubo reduced;
  /// free_vars[k] is the full-model index of reduced variable k.
  std::vector<Index> free_vars;
};

/// Fixes the given variables and folds their contributions into the linear
/// terms and offset of a model over the remaining variables.
ClampResult clamp(const Qubo& model, const std::map<Index, std::uint8_t>& fixed);

/// Rounds every coefficient to `bits` significant mantissa bits. Emulates the
/// limited bias/coupling precision of annealing hardware; off unless called.
Qubo quantize(const Qubo& model, int bits);

/// Dense neighbour lists for incremental energy updates.
struct Adjacency {
  std::vector<double> linear;
  std::vector<std::vector<std::pair<Index, double>>> neighbours;
};

Adjacency make_adjacency(const Qubo& model);

void check_assignment(const Qubo& model, std::span<const std::uint8_t> x);

}  // namespace qeo
