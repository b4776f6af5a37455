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

// Command-line driver for the five-qubit code experiments.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qec513/experiments/circuit_io.hpp"
#include "qec513/experiments/commands.hpp"
#include "qec513/experiments/report.hpp"

namespace {

using namespace qec513;

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;
  std::optional<std::string> noise;
  std::optional<std::string> tphi_mode;
  std::optional<std::string> out;
};

ExperimentConfig resolve_config(const GlobalOptions& g) {
  ExperimentConfig c = g.config_path.empty() ? ExperimentConfig{} : load_config(g.config_path);
  if (g.seed) c.seed = *g.seed;
  if (g.shots) c.shots = *g.shots;
  if (g.noise) c.noise = parse_noise_mode(*g.noise);
  if (g.tphi_mode) c.tphi_mode = parse_tphi_mode(*g.tphi_mode);
  if (g.out) c.output_dir = *g.out;
  c.validate();
  return c;
}

void emit(const ResultRecord& r, const ExperimentConfig& c) {
  const auto path = write_record(r, c.output_dir);
  std::cout << path.string();
  for (const Metric& m : r.metrics) {
    std::cout << ' ' << m.name << '=' << m.value;
    if (m.uncertainty > 0.0) std::cout << "+-" << m.uncertainty;
  }
  std::cout << '\n';
}

PauliLetter parse_gate(const std::string& s) {
  if (s == "X_L" || s == "X") return PauliLetter::kX;
  if (s == "Y_L" || s == "Y") return PauliLetter::kY;
  if (s == "Z_L" || s == "Z") return PauliLetter::kZ;
  throw std::invalid_argument("unknown logical gate '" + s + "' (expected X_L, Y_L or Z_L)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and compilation toolkit for the [[5,1,3]] code"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config_path, "JSON experiment config")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--shots", g.shots, "Shots per measurement setting (0: exact only)");
  app.add_option("--noise", g.noise, "Noise model")->check(CLI::IsMember({"off", "paper", "long-t2"}));
  app.add_option("--tphi-mode", g.tphi_mode, "Pure-dephasing time convention")
      ->check(CLI::IsMember({"pure-dephasing", "t2star"}));
  app.add_option("--out", g.out, "Output directory");

  std::string state = "all";
  auto* prepare = app.add_subcommand("prepare", "Encode a logical state and characterize it");
  prepare->add_option("--state", state, "0, 1, +, -, +i, -i, T or all");

  int weight = 1;
  auto* grid = app.add_subcommand("syndrome-grid", "Generator expectations under injected Pauli errors");
  grid->add_option("--weight", weight, "Error weight")->check(CLI::IsMember({1, 2}));

  std::string gate = "all";
  auto* qpt = app.add_subcommand("logical-qpt", "Code-space process tomography of a logical Pauli");
  qpt->add_option("--gate", gate, "X_L, Y_L, Z_L or all");

  auto* decode_cmd = app.add_subcommand("decode", "Encode-decode round trip");
  auto* compile_cmd = app.add_subcommand("compile", "Recompile the nearest-neighbour encoder to CZ gates");

  std::string report_dir;
  auto* report = app.add_subcommand("report", "Summarize a directory of records");
  report->add_option("--dir", report_dir, "Record directory (default: the output directory)");

  CLI11_PARSE(app, argc, argv);

  try {
    const ExperimentConfig config = resolve_config(g);
    if (*prepare) {
      if (state == "all") {
        for (NamedState s : all_named_states()) emit(cmd_prepare(s, config), config);
      } else {
        emit(cmd_prepare(parse_state(state), config), config);
      }
    } else if (*grid) {
      emit(cmd_syndrome_grid(weight, config), config);
    } else if (*qpt) {
      if (gate == "all") {
        for (const char* name : {"X_L", "Y_L", "Z_L"}) emit(cmd_logical_qpt(parse_gate(name), config), config);
      } else {
        emit(cmd_logical_qpt(parse_gate(gate), config), config);
      }
    } else if (*decode_cmd) {
      emit(cmd_decode(config), config);
    } else if (*compile_cmd) {
      Circuit compiled(5);
      const ResultRecord r = cmd_compile(config, &compiled);
      emit(r, config);
      const std::filesystem::path path = std::filesystem::path(config.output_dir) / "compiled_encoder.circuit.json";
      write_circuit(compiled, path);
      std::cout << path.string() << '\n';
    } else if (*report) {
      const std::filesystem::path dir = report_dir.empty() ? config.output_dir : report_dir;
      const ReportSummary s = build_report(dir);
      write_report(s, config.output_dir);
      std::cout << "status=" << s.status << " records=" << s.record_count << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
