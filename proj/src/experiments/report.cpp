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

#include "qec513/experiments/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "qec513/experiments/record.hpp"

namespace qec513 {

using nlohmann::json;

namespace {

std::string number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string noise_of(const ResultRecord& r) {
  return r.config.contains("noise") ? r.config.at("noise").get<std::string>() : "";
}

json table_json(const Table& t) { return {{"columns", t.columns}, {"rows", t.rows}}; }

int state_rank(const std::string& s) {
  static const std::vector<std::string> order{"0", "1", "+", "-", "+i", "-i", "T", "process"};
  const auto it = std::find(order.begin(), order.end(), s);
  return static_cast<int>(it - order.begin());
}

int noise_rank(const std::string& s) {
  static const std::vector<std::string> order{"paper", "long-t2", "off"};
  const auto it = std::find(order.begin(), order.end(), s);
  return static_cast<int>(it - order.begin());
}

// Rows ordered by noise mode, then state, given their column positions.
void sort_rows(std::vector<std::vector<std::string>>& rows, std::size_t state_col, std::size_t noise_col) {
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    return std::pair(noise_rank(a[noise_col]), state_rank(a[state_col])) <
           std::pair(noise_rank(b[noise_col]), state_rank(b[state_col]));
  });
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw RecordError("cannot write " + path.string());
  out << text;
}

}  // namespace

std::string to_csv(const Table& table) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + field(cells[i]);
    out += '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return out;
}

ReportSummary build_report(const std::filesystem::path& dir) {
  ReportSummary s;
  s.prepared.columns = {"state", "noise", "fidelity", "fidelity_logical", "p_code", "syndrome_success"};
  s.numerical.columns = {"section", "label", "noise", "value"};
  const auto paths = list_records(dir);
  s.record_count = paths.size();
  s.status = paths.empty() ? "no records" : "ok";

  std::map<std::string, std::pair<double, int>> sums;
  json bars = json::array(), grids = json::array();
  std::vector<std::vector<std::string>> decode_rows;
  for (const auto& path : paths) {
    const ResultRecord r = read_record(path);
    const std::string noise = noise_of(r);
    if (r.experiment == "prepare") {
      const double f = r.metric("fidelity").value;
      s.prepared.rows.push_back({r.label, noise, number(f), number(r.metric("fidelity_logical").value),
                                 number(r.metric("p_code").value), number(r.metric("syndrome_success").value)});
      s.numerical.rows.push_back({"encoding", r.label, noise, number(f)});
      auto& [sum, n] = sums[noise];
      sum += f;
      ++n;
      bars.push_back({{"state", r.label},
                      {"noise", noise},
                      {"labels", r.arrays.at("term_labels")},
                      {"values", r.arrays.at("terms")}});
    } else if (r.experiment == "decode") {
      for (const char* name : {"0", "1", "+", "+i"}) {
        decode_rows.push_back({"decoding", name, noise, number(r.metric(std::string("fidelity_") + name).value)});
      }
      decode_rows.push_back({"decoding", "process", noise, number(r.metric("process_fidelity").value)});
    } else if (r.experiment == "syndrome-grid") {
      grids.push_back({{"weight", r.label}, {"labels", r.arrays.at("labels")}, {"grid", r.arrays.at("grid")}});
    }
  }
  sort_rows(s.prepared.rows, 0, 1);
  sort_rows(s.numerical.rows, 1, 2);
  sort_rows(decode_rows, 1, 2);
  for (auto& row : decode_rows) s.numerical.rows.push_back(std::move(row));
  for (const auto& [noise, acc] : sums) s.averages[noise] = acc.first / acc.second;
  s.plot_data = {{"stabilizer_bars", bars}, {"syndrome_grids", grids}};
  return s;
}

void write_report(const ReportSummary& summary, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const json j{{"status", summary.status},
               {"record_count", summary.record_count},
               {"prepared_states", table_json(summary.prepared)},
               {"numerical_simulation", table_json(summary.numerical)},
               {"averages", summary.averages}};
  write_text(out_dir / "summary.json", j.dump(2) + "\n");
  write_text(out_dir / "prepared_states.csv", to_csv(summary.prepared));
  write_text(out_dir / "numerical_simulation.csv", to_csv(summary.numerical));
  write_text(out_dir / "plot_data.json", summary.plot_data.dump(2) + "\n");
}

}  // namespace qec513
