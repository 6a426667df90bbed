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

#include "qeo/core/qubo.hpp"

namespace qeo {

// {"num_vars": n, "linear": [[i, v], ...], "quadratic": [[i, j, v], ...],
//  "offset": c, "var_names": [[i, "label"], ...]}
// Doubles are written with round-trip precision, so a parse of the output
// reproduces every coefficient bit for bit.
nlohmann::json qubo_to_json(const Qubo& model);
Qubo qubo_from_json(const nlohmann::json& doc);

std::string bits_to_string(std::span<const std::uint8_t> x);
Assignment bits_from_string(const std::string& text);

}  // namespace qeo
