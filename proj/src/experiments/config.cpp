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

#include "qec513/experiments/config.hpp"

#include <fstream>
#include <set>

namespace qec513 {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get_as(const json& j, const std::string& key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

json device_to_json(const DeviceParams& d) {
  json qubits = json::array();
  for (const QubitParams& q : d.qubits) {
    qubits.push_back({{"name", q.name}, {"t1_s", q.t1}, {"t2star_s", q.t2star}, {"f00", q.f00}, {"f11", q.f11}});
  }
  return {{"qubits", qubits}};
}

DeviceParams device_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "paper") return DeviceParams::reference_profile();
    throw ConfigError("unknown device profile '" + j.get<std::string>() + "'");
  }
  if (!j.is_object()) throw ConfigError("device must be a profile name or an object");
  reject_unknown(j, {"qubits"}, "device");
  if (!j.contains("qubits") || !j.at("qubits").is_array()) throw ConfigError("device.qubits must be an array");
  DeviceParams d;
  for (const json& q : j.at("qubits")) {
    if (!q.is_object()) throw ConfigError("device.qubits entries must be objects");
    reject_unknown(q, {"name", "t1_s", "t2star_s", "f00", "f11"}, "device.qubits[]");
    QubitParams p;
    if (q.contains("name")) p.name = get_as<std::string>(q, "name", "qubit");
    p.t1 = get_as<double>(q, "t1_s", "qubit");
    p.t2star = get_as<double>(q, "t2star_s", "qubit");
    p.f00 = get_as<double>(q, "f00", "qubit");
    p.f11 = get_as<double>(q, "f11", "qubit");
    d.qubits.push_back(p);
  }
  return d;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace

std::string_view noise_mode_name(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::kOff: return "off";
    case NoiseMode::kPaper: return "paper";
    case NoiseMode::kLongT2: return "long-t2";
  }
  return "?";
}

NoiseMode parse_noise_mode(std::string_view name) {
  for (NoiseMode m : {NoiseMode::kOff, NoiseMode::kPaper, NoiseMode::kLongT2}) {
    if (noise_mode_name(m) == name) return m;
  }
  throw ConfigError("unknown noise mode '" + std::string(name) + "' (expected off, paper or long-t2)");
}

void ExperimentConfig::validate() const {
  try {
    device.validate();
    optimizer.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (device.num_qubits() != 5) throw ConfigError("device must describe exactly 5 qubits");
  if (!(timing.single_qubit > 0.0) || !(timing.two_qubit > 0.0)) throw ConfigError("gate timings must be positive");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
  if (noise != NoiseMode::kOff && tphi_mode == TphiMode::kPureDephasing) {
    const DeviceParams d = noise == NoiseMode::kLongT2 ? device.with_t2_equal_t1() : device;
    for (const QubitParams& q : d.qubits) {
      if (q.t2star >= 2.0 * q.t1) throw ConfigError(q.name + ": pure-dephasing mode needs T2* < 2 T1");
    }
  }
}

std::optional<NoiseParams> ExperimentConfig::noise_params() const {
  if (noise == NoiseMode::kOff) return std::nullopt;
  NoiseParams p;
  p.device = noise == NoiseMode::kLongT2 ? device.with_t2_equal_t1() : device;
  p.timing = timing;
  p.tphi_mode = tphi_mode;
  return p;
}

std::optional<ReadoutModel> ExperimentConfig::readout() const {
  if (noise == NoiseMode::kOff) return std::nullopt;
  return ReadoutModel::from_device(device);
}

json config_to_json(const ExperimentConfig& c) {
  return {
      {"device", device_to_json(c.device)},
      {"noise", std::string(noise_mode_name(c.noise))},
      {"tphi_mode", std::string(tphi_mode_name(c.tphi_mode))},
      {"shots", c.shots},
      {"seed", c.seed},
      {"timing", {{"single_qubit_s", c.timing.single_qubit}, {"two_qubit_s", c.timing.two_qubit}}},
      {"output_dir", c.output_dir},
      {"optimizer",
       {{"max_restarts", c.optimizer.max_restarts},
        {"iterations_per_restart", c.optimizer.iterations_per_restart},
        {"threshold", c.optimizer.threshold},
        {"snap_tolerance", c.optimizer.snap_tolerance},
        {"denominators", c.optimizer.denominators}}},
  };
}

ExperimentConfig config_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j, {"device", "device_file", "noise", "tphi_mode", "shots", "seed", "timing", "output_dir", "optimizer"},
                 "config");
  ExperimentConfig c;
  if (j.contains("device") && j.contains("device_file")) throw ConfigError("give either device or device_file, not both");
  if (j.contains("device")) c.device = device_from_json(j.at("device"));
  if (j.contains("device_file")) {
    const std::filesystem::path p = base_dir / get_as<std::string>(j, "device_file", "config");
    if (!std::filesystem::exists(p)) throw ConfigError("device_file not found: " + p.string());
    c.device = device_from_json(read_json_file(p));
  }
  if (j.contains("noise")) c.noise = parse_noise_mode(get_as<std::string>(j, "noise", "config"));
  if (j.contains("tphi_mode")) {
    try {
      c.tphi_mode = parse_tphi_mode(get_as<std::string>(j, "tphi_mode", "config"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (j.contains("shots")) c.shots = get_as<std::uint64_t>(j, "shots", "config");
  if (j.contains("seed")) c.seed = get_as<std::uint64_t>(j, "seed", "config");
  if (j.contains("timing")) {
    const json& t = j.at("timing");
    reject_unknown(t, {"single_qubit_s", "two_qubit_s"}, "timing");
    if (t.contains("single_qubit_s")) c.timing.single_qubit = get_as<double>(t, "single_qubit_s", "timing");
    if (t.contains("two_qubit_s")) c.timing.two_qubit = get_as<double>(t, "two_qubit_s", "timing");
  }
  if (j.contains("output_dir")) c.output_dir = get_as<std::string>(j, "output_dir", "config");
  if (j.contains("optimizer")) {
    const json& o = j.at("optimizer");
    reject_unknown(o, {"max_restarts", "iterations_per_restart", "threshold", "snap_tolerance", "denominators"},
                   "optimizer");
    OptimizerConfig& oc = c.optimizer;
    if (o.contains("max_restarts")) oc.max_restarts = get_as<int>(o, "max_restarts", "optimizer");
    if (o.contains("iterations_per_restart")) {
      oc.iterations_per_restart = get_as<int>(o, "iterations_per_restart", "optimizer");
    }
    if (o.contains("threshold")) oc.threshold = get_as<double>(o, "threshold", "optimizer");
    if (o.contains("snap_tolerance")) oc.snap_tolerance = get_as<double>(o, "snap_tolerance", "optimizer");
    if (o.contains("denominators")) oc.denominators = get_as<std::vector<int>>(o, "denominators", "optimizer");
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("config file not found: " + path.string());
  return config_from_json(read_json_file(path), path.parent_path());
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return config_to_json(a) == config_to_json(b);
}

}  // namespace qec513
