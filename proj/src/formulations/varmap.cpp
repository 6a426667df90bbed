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

#include <algorithm>
#include <stdexcept>

#include "qeo/formulations/common.hpp"

namespace qeo {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

double Matrix::max() const {
  if (data_.empty()) return 0.0;
  return *std::max_element(data_.begin(), data_.end());
}

Index VarMap::add(std::string label) {
  const Index idx = backward_.size();
  auto [it, inserted] = forward_.emplace(label, idx);
  if (!inserted) throw std::invalid_argument("duplicate variable label " + label);
  backward_.push_back(std::move(label));
  return idx;
}

Index VarMap::index(const std::string& label) const {
  auto it = forward_.find(label);
  if (it == forward_.end()) throw std::out_of_range("unknown variable label " + label);
  return it->second;
}

std::map<Index, std::string> VarMap::names() const {
  std::map<Index, std::string> out;
  for (Index i = 0; i < backward_.size(); ++i) out.emplace(i, backward_[i]);
  return out;
}

std::string label_x(std::size_t p, std::size_t i) {
  return "x(" + std::to_string(p) + "," + std::to_string(i) + ")";
}
std::string label_v(std::size_t i) { return "v(" + std::to_string(i) + ")"; }
std::string label_z(std::size_t i, std::size_t k) {
  return "z(" + std::to_string(i) + "," + std::to_string(k) + ")";
}
std::string label_w(std::size_t i, std::size_t j) {
  return "w(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string label_z(std::size_t i, std::size_t j, std::size_t k) {
  return "z(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace qeo
