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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qec513/compile/template.hpp"
#include "qec513/noise/device.hpp"
#include "qec513/noise/readout.hpp"

namespace qec513 {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NoiseMode {
  kOff,
  kPaper,   // device values as measured
  kLongT2,  // T2* raised to T1
};

std::string_view noise_mode_name(NoiseMode mode);
/// Accepts "off", "paper", "long-t2"; throws ConfigError otherwise.
NoiseMode parse_noise_mode(std::string_view name);

struct ExperimentConfig {
  DeviceParams device = DeviceParams::reference_profile();
  NoiseMode noise = NoiseMode::kPaper;
  TphiMode tphi_mode = TphiMode::kPureDephasing;
  /// 0 selects exact expectations only.
  std::uint64_t shots = 10000;
  std::uint64_t seed = 1;
  GateTiming timing;
  std::string output_dir = "results";
  OptimizerConfig optimizer;

  /// Throws ConfigError on any inconsistent field.
  void validate() const;
  /// Empty when noise is off.
  std::optional<NoiseParams> noise_params() const;
  /// Device readout model when noise is on, empty otherwise.
  std::optional<ReadoutModel> readout() const;
};

/// Fully expanded form (device values inline); parses back to an equal
/// config.
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Missing keys keep their defaults; unknown keys are errors. A
/// "device_file" entry is resolved against `base_dir`.
ExperimentConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

/// Throws ConfigError if the file is missing or malformed.
ExperimentConfig load_config(const std::filesystem::path& path);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

}  // namespace qec513
