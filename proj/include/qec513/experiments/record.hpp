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
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qec513 {

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Metric {
  std::string name;
  double value = 0.0;
  double uncertainty = 0.0;
  friend bool operator==(const Metric&, const Metric&) = default;
};

/// Output of one experiment run. `config` is the full config snapshot,
/// seed included; `arrays` holds raw data keyed by name.
struct ResultRecord {
  std::string experiment;
  std::string label;
  nlohmann::json config;
  std::vector<Metric> metrics;
  nlohmann::json arrays = nlohmann::json::object();

  void add(std::string name, double value, double uncertainty = 0.0);
  /// Throws RecordError if absent.
  const Metric& metric(const std::string& name) const;
  bool has_metric(const std::string& name) const;

  /// File name without directory, e.g. "prepare-T-paper.record.json".
  std::string file_name() const;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

nlohmann::json record_to_json(const ResultRecord& r);
/// Throws RecordError on a missing field.
ResultRecord record_from_json(const nlohmann::json& j);

/// Writes into `dir` (created if needed) and returns the path.
std::filesystem::path write_record(const ResultRecord& r, const std::filesystem::path& dir);
ResultRecord read_record(const std::filesystem::path& path);

/// Records in `dir` (files ending in ".record.json"), sorted by file name.
std::vector<std::filesystem::path> list_records(const std::filesystem::path& dir);

}  // namespace qec513
