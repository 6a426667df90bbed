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

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qeo/formulations/qap.hpp"

namespace qeo {
namespace {

class Tokens {
 public:
  explicit Tokens(const std::string& text) : in_(text) {}

  double next_number(const char* what) {
    std::string tok;
    if (!(in_ >> tok)) throw std::invalid_argument(std::string("truncated QAPLIB input: missing ") + what);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(v)) {
      throw std::invalid_argument("non-numeric QAPLIB token '" + tok + "'");
    }
    return v;
  }

  bool exhausted() {
    std::string tok;
    return !(in_ >> tok);
  }

 private:
  std::istringstream in_;
};

Matrix read_matrix(Tokens& tokens, std::size_t n, const char* what) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = tokens.next_number(what);
  }
  return m;
}

}  // namespace

QapInstance parse_qaplib(const std::string& text) {
  Tokens tokens(text);
  const double size = tokens.next_number("size");
  if (size < 1 || size != std::floor(size)) throw std::invalid_argument("QAPLIB size must be a positive integer");
  const auto n = static_cast<std::size_t>(size);
  QapInstance inst;
  inst.flow = read_matrix(tokens, n, "flow matrix entries");
  inst.distance = read_matrix(tokens, n, "distance matrix entries");
  if (!tokens.exhausted()) throw std::invalid_argument("QAPLIB size mismatch: trailing data after two matrices");
  inst.validate();
  return inst;
}

QapInstance read_qaplib_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_qaplib(buf.str());
}

}  // namespace qeo
