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

#include "qec513/experiments/circuit_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qec513 {

using nlohmann::json;

namespace {
constexpr const char* kFormat = "qec513-circuit";
}

json circuit_to_json(const Circuit& circuit) {
  json layers = json::array();
  for (const Layer& layer : circuit.layers()) {
    json gates = json::array();
    for (const Gate& g : layer.gates) {
      json jg{{"kind", std::string(gate_name(g.kind))}, {"targets", g.targets}};
      if (is_rotation(g.kind)) jg["angle"] = g.angle;
      gates.push_back(std::move(jg));
    }
    layers.push_back({{"duration_s", layer.duration}, {"gates", std::move(gates)}});
  }
  return {{"format", kFormat}, {"version", 1}, {"num_qubits", circuit.num_qubits()}, {"layers", std::move(layers)}};
}

Circuit circuit_from_json(const json& j) {
  try {
    if (j.at("format").get<std::string>() != kFormat) throw std::invalid_argument("not a circuit document");
    if (j.at("version").get<int>() != 1) throw std::invalid_argument("unsupported circuit version");
    Circuit c(j.at("num_qubits").get<int>());
    for (const json& jl : j.at("layers")) {
      Layer layer;
      layer.duration = jl.at("duration_s").get<double>();
      for (const json& jg : jl.at("gates")) {
        const auto kind = parse_gate_kind(jg.at("kind").get<std::string>());
        if (!kind) throw std::invalid_argument("unknown gate kind " + jg.at("kind").get<std::string>());
        Gate g{*kind, jg.at("targets").get<std::vector<int>>(), 0.0};
        if (is_rotation(*kind)) {
          g.angle = jg.at("angle").get<double>();
        } else if (jg.contains("angle")) {
          throw std::invalid_argument("angle given for non-rotation gate");
        }
        layer.gates.push_back(std::move(g));
      }
      c.add_layer(std::move(layer));
    }
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed circuit: ") + e.what());
  }
}

void write_circuit(const Circuit& circuit, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << circuit_to_json(circuit).dump(2) << '\n';
}

Circuit read_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return circuit_from_json(j);
}

}  // namespace qec513
