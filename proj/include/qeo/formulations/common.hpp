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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeo/core/qubo.hpp"

namespace qeo {

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<double>& data() const { return data_; }
  double max() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Weights of the squared constraint penalties. `b` is unused by QAP.
struct PenaltyWeights {
  double a = 0.0;
  double b = 0.0;
};

/// Bijection between domain variable labels and QUBO indices. Labels use
/// 0-based domain indices: x(p,i), v(i), z(i,k), w(i,j), z(i,j,k).
class VarMap {
 public:
  Index add(std::string label);
  Index index(const std::string& label) const;
  bool contains(const std::string& label) const { return forward_.contains(label); }
  const std::string& label(Index i) const { return backward_.at(i); }
  std::size_t size() const { return backward_.size(); }
  std::map<Index, std::string> names() const;

 private:
  std::map<std::string, Index> forward_;
  std::vector<std::string> backward_;
};

std::string label_x(std::size_t p, std::size_t i);
std::string label_v(std::size_t i);
std::string label_z(std::size_t i, std::size_t k);
std::string label_w(std::size_t i, std::size_t j);
std::string label_z(std::size_t i, std::size_t j, std::size_t k);

/// A QUBO together with the labels of its variables.
struct Formulation {
  Qubo qubo;
  VarMap vars;
};

/// Raised by oracles when the instance or commitment admits no feasible point.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qeo
