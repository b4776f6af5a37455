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

#include "qec513/experiments/record.hpp"

#include <algorithm>
#include <fstream>

namespace qec513 {

using nlohmann::json;

namespace {
constexpr std::string_view kSuffix = ".record.json";
}

void ResultRecord::add(std::string name, double value, double uncertainty) {
  metrics.push_back({std::move(name), value, uncertainty});
}

const Metric& ResultRecord::metric(const std::string& name) const {
  for (const Metric& m : metrics) {
    if (m.name == name) return m;
  }
  throw RecordError("record " + experiment + " has no metric '" + name + "'");
}

bool ResultRecord::has_metric(const std::string& name) const {
  return std::any_of(metrics.begin(), metrics.end(), [&](const Metric& m) { return m.name == name; });
}

std::string ResultRecord::file_name() const {
  std::string stem = experiment;
  if (!label.empty()) stem += "-" + label;
  if (config.contains("noise")) stem += "-" + config.at("noise").get<std::string>();
  for (char& ch : stem) {
    if (ch == '/' || ch == ' ') ch = '_';
  }
  return stem + std::string(kSuffix);
}

json record_to_json(const ResultRecord& r) {
  json metrics = json::array();
  for (const Metric& m : r.metrics) {
    metrics.push_back({{"name", m.name}, {"value", m.value}, {"uncertainty", m.uncertainty}});
  }
  return {{"experiment", r.experiment}, {"label", r.label}, {"config", r.config},
          {"metrics", metrics},         {"arrays", r.arrays}};
}

ResultRecord record_from_json(const json& j) {
  try {
    ResultRecord r;
    r.experiment = j.at("experiment").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.config = j.at("config");
    if (!r.config.contains("seed")) throw RecordError("record config has no seed");
    for (const json& m : j.at("metrics")) {
      r.metrics.push_back(
          {m.at("name").get<std::string>(), m.at("value").get<double>(), m.at("uncertainty").get<double>()});
    }
    r.arrays = j.at("arrays");
    return r;
  } catch (const json::exception& e) {
    throw RecordError(std::string("corrupt record: ") + e.what());
  }
}

std::filesystem::path write_record(const ResultRecord& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / r.file_name();
  std::ofstream out(path);
  if (!out) throw RecordError("cannot write " + path.string());
  out << record_to_json(r).dump(2) << '\n';
  return path;
}

ResultRecord read_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RecordError("cannot open " + path.string());
  try {
    return record_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw RecordError(path.string() + ": " + e.what());
  } catch (const RecordError& e) {
    throw RecordError(path.string() + ": " + e.what());
  }
}

std::vector<std::filesystem::path> list_records(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw RecordError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.size() > kSuffix.size() &&
        name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qec513
