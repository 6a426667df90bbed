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

#include "qeo/formulations/instance_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qeo {

using nlohmann::json;

json uc_to_json(const UcInstance& inst) {
  json units = json::array();
  for (const auto& u : inst.units) {
    units.push_back({{"a", u.a}, {"b", u.b}, {"c", u.c}, {"p_min", u.p_min}, {"p_max", u.p_max}});
  }
  return {{"units", units}, {"load", inst.load}};
}

UcInstance uc_from_json(const json& doc) {
  try {
    UcInstance inst;
    for (const auto& u : doc.at("units")) {
      inst.units.push_back({u.at("a").get<double>(), u.at("b").get<double>(), u.at("c").get<double>(),
                            u.at("p_min").get<double>(), u.at("p_max").get<double>()});
    }
    inst.load = doc.at("load").get<double>();
    inst.validate();
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed UC instance: ") + e.what());
  }
}

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json qap_to_json(const QapInstance& inst) {
  return {{"distance", matrix_to_json(inst.distance)}, {"flow", matrix_to_json(inst.flow)}};
}

QapInstance qap_from_json(const json& doc) {
  try {
    QapInstance inst{Matrix::from_rows(doc.at("distance").get<std::vector<std::vector<double>>>()),
                     Matrix::from_rows(doc.at("flow").get<std::vector<std::vector<double>>>())};
    inst.validate();
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed QAP instance: ") + e.what());
  }
}

json hens_to_json(const HensInstance& inst) {
  return {{"supply", inst.supply}, {"demand", inst.demand}, {"cost", matrix_to_json(inst.cost)}};
}

HensInstance hens_from_json(const json& doc) {
  try {
    HensInstance inst;
    inst.supply = doc.at("supply").get<std::vector<double>>();
    inst.demand = doc.at("demand").get<std::vector<double>>();
    inst.cost = Matrix::from_rows(doc.at("cost").get<std::vector<std::vector<double>>>());
    inst.validate();
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed HENS instance: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace qeo
