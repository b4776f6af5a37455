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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qec513/code/encoder.hpp"
#include "qec513/experiments/circuit_io.hpp"
#include "qec513/experiments/commands.hpp"
#include "qec513/experiments/config.hpp"
#include "qec513/experiments/record.hpp"
#include "qec513/experiments/report.hpp"

namespace qec513 {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Fresh directory per test, removed afterwards.
class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() / ("qec513-" + std::string(info->test_suite_name()) + "-" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig ideal_config() {
  ExperimentConfig c;
  c.noise = NoiseMode::kOff;
  c.shots = 0;
  return c;
}

TEST(Config, DefaultsAndJsonRoundTrip) {
  ExperimentConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_TRUE(c.noise_params().has_value());
  EXPECT_TRUE(c.readout().has_value());
  c.noise = NoiseMode::kLongT2;
  c.seed = 42;
  c.timing.two_qubit = 60e-9;
  c.optimizer.denominators = {1, 2, 4};
  const ExperimentConfig back = config_from_json(config_to_json(c));
  EXPECT_TRUE(back == c);
  EXPECT_DOUBLE_EQ(back.noise_params()->device.qubits[0].t2star, back.device.qubits[0].t1);
  EXPECT_FALSE(ideal_config().noise_params().has_value());
  EXPECT_FALSE(ideal_config().readout().has_value());
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(config_from_json(json{{"shot", 5}}), ConfigError);
  EXPECT_THROW(config_from_json(json{{"noise", "loud"}}), ConfigError);
  EXPECT_THROW(config_from_json(json{{"timing", {{"single_qubit_s", -1.0}}}}), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
  EXPECT_THROW(parse_noise_mode("paper "), ConfigError);
  EXPECT_EQ(noise_mode_name(NoiseMode::kLongT2), "long-t2");
  ExperimentConfig c;
  c.device.qubits[2].t2star = 3 * c.device.qubits[2].t1;
  EXPECT_THROW(c.validate(), ConfigError);
  c.tphi_mode = TphiMode::kT2Star;
  c.device = DeviceParams::reference_profile();
  c.device.qubits.pop_back();
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Config, DeviceFileResolvedRelativeToConfig) {
  TempDir dir;
  json device = config_to_json(ExperimentConfig{}).at("device");
  device["qubits"][0]["t1_s"] = 40e-6;
  std::ofstream(dir.path() / "device.json") << device.dump();
  std::ofstream(dir.path() / "run.json") << json{{"device_file", "device.json"}, {"seed", 9}}.dump();
  const ExperimentConfig c = load_config(dir.path() / "run.json");
  EXPECT_DOUBLE_EQ(c.device.qubits[0].t1, 40e-6);
  EXPECT_EQ(c.seed, 9u);
  std::ofstream(dir.path() / "bad.json") << json{{"device_file", "missing.json"}}.dump();
  EXPECT_THROW(load_config(dir.path() / "bad.json"), ConfigError);
  std::ofstream(dir.path() / "broken.json") << "{ not json";
  EXPECT_THROW(load_config(dir.path() / "broken.json"), ConfigError);
}

TEST(Config, ShippedConfigMatchesDefaults) {
  const ExperimentConfig c = load_config(fs::path(QEC513_SOURCE_DIR) / "configs" / "default.json");
  EXPECT_TRUE(c == ExperimentConfig{});
}

TEST(CircuitIo, RoundTripIsExact) {
  TempDir dir;
  const Circuit c = build_encoding_circuit(amplitudes_of(NamedState::kT));
  EXPECT_EQ(circuit_from_json(circuit_to_json(c)), c);
  write_circuit(c, dir.path() / "enc.circuit.json");
  EXPECT_EQ(read_circuit(dir.path() / "enc.circuit.json"), c);
  const json j = circuit_to_json(c);
  EXPECT_EQ(j.at("format"), "qec513-circuit");
  EXPECT_EQ(j.at("layers").size(), 27u);
}

TEST(CircuitIo, RejectsMalformedDocuments) {
  json j = circuit_to_json(build_decoder());
  json wrong_format = j;
  wrong_format["format"] = "other";
  EXPECT_THROW(circuit_from_json(wrong_format), std::invalid_argument);
  json bad_gate = j;
  bad_gate["layers"][0]["gates"][0]["kind"] = "FOO";
  EXPECT_THROW(circuit_from_json(bad_gate), std::invalid_argument);
  json clash = j;
  clash["layers"][0]["gates"].push_back(clash["layers"][0]["gates"][0]);
  EXPECT_THROW(circuit_from_json(clash), std::invalid_argument);
  EXPECT_THROW(read_circuit("/nonexistent.circuit.json"), std::exception);
}

TEST(Records, RoundTripAndLookup) {
  TempDir dir;
  ResultRecord r;
  r.experiment = "prepare";
  r.label = "+i";
  r.config = config_to_json(ExperimentConfig{});
  r.add("fidelity", 0.1 + 0.2, 1e-3);
  r.arrays["terms"] = {0.5, -0.25};
  EXPECT_EQ(record_from_json(record_to_json(r)), r);
  EXPECT_EQ(r.file_name(), "prepare-+i-paper.record.json");
  EXPECT_THROW(r.metric("missing"), RecordError);
  EXPECT_TRUE(r.has_metric("fidelity"));
  const fs::path p = write_record(r, dir.path() / "nested");
  EXPECT_EQ(read_record(p), r);
  EXPECT_EQ(list_records(dir.path() / "nested").size(), 1u);
  EXPECT_THROW(list_records(dir.path() / "absent"), RecordError);
  json no_seed = record_to_json(r);
  no_seed["config"].erase("seed");
  EXPECT_THROW(record_from_json(no_seed), RecordError);
}

TEST(Commands, IdealPrepare) {
  for (NamedState n : all_named_states()) {
    const ResultRecord r = cmd_prepare(n, ideal_config());
    EXPECT_NEAR(r.metric("fidelity").value, 1.0, 1e-9) << state_name(n);
    EXPECT_NEAR(r.metric("p_code").value, 1.0, 1e-9);
    EXPECT_NEAR(r.metric("syndrome_success").value, 1.0, 1e-9);
    EXPECT_EQ(r.arrays.at("terms").size(), 31u);
    EXPECT_FALSE(r.has_metric("fidelity_sampled"));
  }
}

TEST(Commands, SampledPrepareTracksExact) {
  ExperimentConfig c;
  const ResultRecord r = cmd_prepare(NamedState::kT, c);
  EXPECT_NEAR(r.metric("fidelity").value, 0.589, 0.03);
  EXPECT_GE(r.metric("fidelity_logical").value, 0.97);
  EXPECT_NEAR(r.metric("fidelity_sampled").value, r.metric("fidelity").value, 0.02);
  EXPECT_GT(r.metric("fidelity_sampled").uncertainty, 0.0);
  EXPECT_NEAR(r.metric("p_code_sampled").value, r.metric("p_code").value, 0.02);
}

TEST(Commands, SyndromeGrids) {
  const ResultRecord w1 = cmd_syndrome_grid(1, ideal_config());
  EXPECT_EQ(w1.metric("rows").value, 15);
  EXPECT_EQ(w1.metric("distinct_syndromes").value, 15);
  EXPECT_EQ(w1.metric("undetected_rows").value, 0);
  EXPECT_EQ(w1.metric("table_mismatches").value, 0);
  EXPECT_EQ(w1.arrays.at("labels")[0], "X1");
  const ResultRecord w2 = cmd_syndrome_grid(2, ideal_config());
  EXPECT_EQ(w2.metric("rows").value, 90);
  EXPECT_EQ(w2.metric("undetected_rows").value, 0);
  EXPECT_GT(w2.metric("collisions").value, 0);
  EXPECT_THROW(cmd_syndrome_grid(3, ideal_config()), std::invalid_argument);
}

TEST(Commands, IdealLogicalQptAndDecode) {
  for (PauliLetter g : {PauliLetter::kX, PauliLetter::kY, PauliLetter::kZ}) {
    EXPECT_NEAR(cmd_logical_qpt(g, ideal_config()).metric("process_fidelity").value, 1.0, 1e-9);
  }
  const ResultRecord d = cmd_decode(ideal_config());
  for (const char* k : {"fidelity_0", "fidelity_1", "fidelity_+", "fidelity_+i", "process_fidelity"}) {
    EXPECT_NEAR(d.metric(k).value, 1.0, 1e-9) << k;
  }
}

TEST(Commands, SeededRunsAreBitIdentical) {
  TempDir dir;
  ExperimentConfig c;
  c.shots = 2000;
  c.seed = 77;
  const fs::path a = write_record(cmd_prepare(NamedState::kMinusI, c), dir.path() / "a");
  const fs::path b = write_record(cmd_prepare(NamedState::kMinusI, c), dir.path() / "b");
  EXPECT_EQ(slurp(a), slurp(b));
  c.seed = 78;
  EXPECT_NE(record_to_json(cmd_prepare(NamedState::kMinusI, c)).dump(), slurp(a));
}

TEST(Report, EmptyAndMissingDirectories) {
  TempDir dir;
  const ReportSummary s = build_report(dir.path());
  EXPECT_EQ(s.status, "no records");
  EXPECT_TRUE(s.prepared.rows.empty());
  EXPECT_THROW(build_report(dir.path() / "absent"), RecordError);
}

TEST(Report, FullSweepShape) {
  TempDir dir;
  for (NoiseMode mode : {NoiseMode::kPaper, NoiseMode::kLongT2}) {
    ExperimentConfig c;
    c.noise = mode;
    c.shots = 0;
    for (NamedState n : all_named_states()) write_record(cmd_prepare(n, c), dir.path());
    if (mode == NoiseMode::kPaper) write_record(cmd_decode(c), dir.path());
  }
  write_record(cmd_syndrome_grid(1, ideal_config()), dir.path());
  const ReportSummary s = build_report(dir.path());
  EXPECT_EQ(s.status, "ok");
  EXPECT_EQ(s.record_count, 16u);
  EXPECT_EQ(s.prepared.rows.size(), 14u);
  ASSERT_EQ(s.numerical.rows.size(), 19u);
  EXPECT_EQ(s.numerical.rows.front(), (std::vector<std::string>{"encoding", "0", "paper", s.prepared.rows[0][2]}));
  EXPECT_EQ(s.numerical.rows.back()[1], "process");
  EXPECT_NEAR(s.averages.at("paper").get<double>(), 0.594, 0.03);
  EXPECT_NEAR(s.averages.at("long-t2").get<double>(), 0.922, 0.02);
  EXPECT_EQ(s.plot_data.at("stabilizer_bars").size(), 14u);
  EXPECT_EQ(s.plot_data.at("syndrome_grids").size(), 1u);

  write_report(s, dir.path() / "report");
  const std::string csv = slurp(dir.path() / "report" / "prepared_states.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "state,noise,fidelity,fidelity_logical,p_code,syndrome_success");
  EXPECT_EQ(json::parse(slurp(dir.path() / "report" / "summary.json")).at("record_count"), 16);
}

TEST(Report, CsvQuoting) {
  const Table t{{"a", "b"}, {{"x,y", "say \"hi\""}}};
  EXPECT_EQ(to_csv(t), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}

}  // namespace
}  // namespace qec513
