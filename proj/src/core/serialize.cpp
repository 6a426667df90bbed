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

#include "qeo/core/serialize.hpp"

#include <stdexcept>

namespace qeo {

using nlohmann::json;

json qubo_to_json(const Qubo& model) {
  json doc;
  doc["num_vars"] = model.num_vars();
  json lin = json::array();
  for (const auto& [i, c] : model.linear()) lin.push_back(json::array({i, c}));
  json quad = json::array();
  for (const auto& [ij, c] : model.quadratic()) {
    quad.push_back(json::array({ij.first, ij.second, c}));
  }
  doc["linear"] = std::move(lin);
  doc["quadratic"] = std::move(quad);
  doc["offset"] = model.offset();
  if (model.var_names()) {
    json names = json::array();
    for (const auto& [i, s] : *model.var_names()) names.push_back(json::array({json(i), json(s)}));
    doc["var_names"] = std::move(names);
  }
  return doc;
}

Qubo qubo_from_json(const json& doc) {
  try {
    const auto n = doc.at("num_vars").get<std::size_t>();
    QuboBuilder b(n);
    for (const auto& t : doc.at("linear")) {
      if (t.size() != 2) throw std::invalid_argument("linear entries must be [index, value]");
      b.add_linear(t[0].get<Index>(), t[1].get<double>());
    }
    for (const auto& t : doc.at("quadratic")) {
      if (t.size() != 3) throw std::invalid_argument("quadratic entries must be [i, j, value]");
      b.add_quadratic(t[0].get<Index>(), t[1].get<Index>(), t[2].get<double>());
    }
    b.add_offset(doc.value("offset", 0.0));
    Qubo q = b.build();
    if (doc.contains("var_names")) {
      std::map<Index, std::string> names;
      for (const auto& t : doc.at("var_names")) names[t.at(0).get<Index>()] = t.at(1).get<std::string>();
      q.set_var_names(std::move(names));
    }
    return q;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed QUBO document: ") + e.what());
  }
}

std::string bits_to_string(std::span<const std::uint8_t> x) {
  std::string s(x.size(), '0');
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? '1' : '0';
  return s;
}

Assignment bits_from_string(const std::string& text) {
  Assignment x(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw std::invalid_argument("bit strings may only contain 0 and 1");
    x[i] = text[i] == '1';
  }
  return x;
}

}  // namespace qeo
