// Copyright 2026 The qec513 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>

#include <json.hpp>

#include "qec513/core/circuit.hpp"

namespace qec513 {

/// Circuit file layout:
///
///   {"format": "qec513-circuit", "version": 1, "num_qubits": 5,
///    "layers": [{"duration_s": 3e-08,
///                "gates": [{"kind": "RZ", "targets": [0], "angle": 0.25}]}]}
///
/// Angles are in units of pi and only written for rotations. Doubles are
/// printed with round-trip precision, so reading a written circuit gives an
/// identical one.
nlohmann::json circuit_to_json(const Circuit& circuit);

/// Throws std::invalid_argument on a malformed document or invalid layer.
Circuit circuit_from_json(const nlohmann::json& j);

void write_circuit(const Circuit& circuit, const std::filesystem::path& path);
Circuit read_circuit(const std::filesystem::path& path);

}  // namespace qec513
