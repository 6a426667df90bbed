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

#include <string>

#include <json.hpp>

#include "qeo/formulations/hens.hpp"
#include "qeo/formulations/qap.hpp"
#include "qeo/formulations/uc.hpp"

namespace qeo {

// {"units": [{"a": .., "b": .., "c": .., "p_min": .., "p_max": ..}], "load": ..}
nlohmann::json uc_to_json(const UcInstance& inst);
UcInstance uc_from_json(const nlohmann::json& doc);

// {"supply": [..], "demand": [..], "cost": [[..], ..]}
nlohmann::json hens_to_json(const HensInstance& inst);
HensInstance hens_from_json(const nlohmann::json& doc);

// {"distance": [[..], ..], "flow": [[..], ..]}
nlohmann::json qap_to_json(const QapInstance& inst);
QapInstance qap_from_json(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qeo
