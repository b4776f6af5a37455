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
#include <string>
#include <vector>

#include <json.hpp>

namespace qec513 {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 style; fields containing commas or quotes are quoted.
std::string to_csv(const Table& table);

struct ReportSummary {
  /// "ok", or "no records" for an empty directory.
  std::string status;
  std::size_t record_count = 0;
  /// One row per prepare record.
  Table prepared;
  /// Encoded-state fidelities per noise mode, decode fidelities and the
  /// decode process fidelity.
  Table numerical;
  /// Mean prepare fidelity per noise mode.
  nlohmann::json averages = nlohmann::json::object();
  /// Stabilizer bar data per prepared state and syndrome grids.
  nlohmann::json plot_data = nlohmann::json::object();
};

/// Reads every record in `dir`. Throws RecordError on a corrupt record or a
/// missing directory.
ReportSummary build_report(const std::filesystem::path& dir);

/// Writes summary.json, prepared_states.csv, numerical_simulation.csv and
/// plot_data.json into `out_dir`.
void write_report(const ReportSummary& summary, const std::filesystem::path& out_dir);

}  // namespace qec513
