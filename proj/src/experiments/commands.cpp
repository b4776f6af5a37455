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

#include "qec513/experiments/commands.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "qec513/code/encoder.hpp"
#include "qec513/code/operations.hpp"
#include "qec513/compile/pipeline.hpp"
#include "qec513/core/ops.hpp"
#include "qec513/experiments/circuit_io.hpp"
#include "qec513/pauli/stabilizer.hpp"
#include "qec513/tomography/code_space.hpp"
#include "qec513/tomography/fidelity.hpp"
#include "qec513/tomography/process_tomography.hpp"
#include "qec513/tomography/state_tomography.hpp"

namespace qec513 {

using nlohmann::json;

namespace {

constexpr std::array<NamedState, 4> kTomographyInputs{NamedState::kZero, NamedState::kOne, NamedState::kPlus,
                                                      NamedState::kPlusI};

ResultRecord start(std::string experiment, std::string label, const ExperimentConfig& config) {
  config.validate();
  ResultRecord r;
  r.experiment = std::move(experiment);
  r.label = std::move(label);
  r.config = config_to_json(config);
  return r;
}

json matrix_json(const Eigen::MatrixXcd& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> rr, ii;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ii.push_back(m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  return {{"re", re}, {"im", im}};
}

std::vector<double> term_values(const std::vector<StabilizerTerm>& terms) {
  std::vector<double> v;
  for (const StabilizerTerm& t : terms) v.push_back(t.value);
  return v;
}

// Shot-noise standard error of (1 + sum of terms) / 32 from per-term
// binomial variances.
double fidelity_std_error(const std::vector<StabilizerTerm>& terms, std::uint64_t shots) {
  double var = 0.0;
  for (const StabilizerTerm& t : terms) var += std::max(0.0, 1.0 - t.value * t.value);
  return std::sqrt(var / static_cast<double>(shots)) / static_cast<double>(terms.size() + 1);
}

std::string error_label(const PauliString& e) {
  std::string out;
  for (int q = 0; q < e.num_qubits(); ++q) {
    if (e.letter(q) != PauliLetter::kI) out += letter_char(e.letter(q)) + std::to_string(q + 1);
  }
  return out;
}

Eigen::Matrix2cd to_2x2(const ComplexMatrix& m) { return m; }

}  // namespace

ResultRecord cmd_prepare(NamedState state, const ExperimentConfig& config) {
  ResultRecord r = start("prepare", std::string(state_name(state)), config);
  const LogicalAmplitudes amps = amplitudes_of(state);
  const auto noise = config.noise_params();
  const DensityMatrix rho = encode(amps, noise ? &*noise : nullptr);

  const auto terms = stabilizer_expectations(rho, amps);
  const auto gens = generator_expectations(rho);
  const CodeSpaceProjection proj = project_code_space(rho);
  r.add("fidelity", fidelity_from_terms(terms));
  r.add("fidelity_logical", proj.fidelity(amps));
  r.add("p_code", proj.p_i);
  r.add("syndrome_success", syndrome_success_probability(gens));

  std::vector<std::string> labels;
  for (const StabilizerTerm& t : terms) labels.push_back(t.label);
  r.arrays["term_labels"] = labels;
  r.arrays["terms"] = term_values(terms);
  r.arrays["generators"] = gens;
  r.arrays["logical_bloch"] = {proj.n_x, proj.n_y, proj.n_z};

  if (config.shots > 0) {
    std::mt19937_64 rng(config.seed);
    const auto readout = config.readout();
    const ReadoutModel* ro = readout ? &*readout : nullptr;
    const auto sampled = sample_stabilizer_expectations(rho, amps, config.shots, ro, rng);
    r.add("fidelity_sampled", fidelity_from_terms(sampled), fidelity_std_error(sampled, config.shots));
    const CodeSpaceProjection sp = sample_code_space(rho, config.shots, ro, rng);
    r.add("fidelity_logical_sampled", sp.fidelity(amps));
    r.add("p_code_sampled", sp.p_i);
    r.arrays["terms_sampled"] = term_values(sampled);
  }
  return r;
}

ResultRecord cmd_syndrome_grid(int weight, const ExperimentConfig& config) {
  if (weight != 1 && weight != 2) throw std::invalid_argument("syndrome grid weight must be 1 or 2");
  ResultRecord r = start("syndrome-grid", "w" + std::to_string(weight), config);
  const StabilizerSet set = StabilizerSet::five_qubit();
  const DensityMatrix rho = encode(amplitudes_of(NamedState::kT));

  std::mt19937_64 rng(config.seed);
  const auto readout = config.readout();
  const ReadoutModel* ro = readout ? &*readout : nullptr;

  json labels = json::array(), rows = json::array(), sampled_rows = json::array();
  std::map<Syndrome, int> seen;
  int undetected = 0, mismatches = 0;
  for (const PauliString& e : enumerate_errors(kCodeQubits, weight)) {
    std::vector<InjectedError> errs;
    for (int q = 0; q < kCodeQubits; ++q) {
      if (e.letter(q) != PauliLetter::kI) errs.push_back({q, e.letter(q)});
    }
    const DensityMatrix out = inject_error(rho, errs);
    const auto gens = generator_expectations(out, set);
    Syndrome s;
    for (std::size_t i = 0; i < 4; ++i) s.signs[i] = gens[i] < 0.0 ? -1 : 1;
    if (s.trivial()) ++undetected;
    if (weight == 1 && s != syndrome_of_error(e, set)) ++mismatches;
    ++seen[s];
    labels.push_back(error_label(e));
    rows.push_back(gens);
    if (config.shots > 0) {
      std::vector<double> est;
      for (const PauliString& g : set.generators()) est.push_back(estimate_expectation(out, g, config.shots, ro, rng));
      sampled_rows.push_back(est);
    }
  }
  int collisions = 0;
  for (const auto& [s, n] : seen) collisions += n - 1;

  r.add("rows", static_cast<double>(rows.size()));
  r.add("distinct_syndromes", static_cast<double>(seen.size()));
  r.add("undetected_rows", undetected);
  r.add("collisions", collisions);
  if (weight == 1) r.add("table_mismatches", mismatches);
  r.arrays["no_error"] = generator_expectations(rho, set);
  r.arrays["labels"] = labels;
  r.arrays["grid"] = rows;
  if (config.shots > 0) r.arrays["grid_sampled"] = sampled_rows;
  return r;
}

ResultRecord cmd_logical_qpt(PauliLetter gate, const ExperimentConfig& config) {
  if (gate == PauliLetter::kI) throw std::invalid_argument("logical QPT gate must be X, Y or Z");
  ResultRecord r = start("logical-qpt", std::string(1, letter_char(gate)) + "_L", config);
  const auto noise = config.noise_params();
  const NoiseParams* np = noise ? &*noise : nullptr;
  std::mt19937_64 rng(config.seed);
  const auto readout = config.readout();
  const ReadoutModel* ro = readout ? &*readout : nullptr;

  std::vector<Eigen::Matrix2cd> outputs, sampled;
  json bloch = json::array();
  double p_code = 0.0;
  for (NamedState s : kTomographyInputs) {
    const DensityMatrix rho = apply_logical(encode(amplitudes_of(s), np), gate, np);
    const CodeSpaceProjection proj = project_code_space(rho);
    outputs.push_back(to_2x2(proj.rho_l));
    p_code += proj.p_i / 4.0;
    bloch.push_back({proj.n_x, proj.n_y, proj.n_z});
    if (config.shots > 0) sampled.push_back(to_2x2(sample_code_space(rho, config.shots, ro, rng).rho_l));
  }
  const ChiMatrix ideal = chi_of_unitary(to_2x2(PauliString::single(1, 0, gate).matrix()));
  const ChiMatrix chi = qpt_standard(outputs);
  r.add("process_fidelity", process_fidelity(chi, ideal));
  r.add("p_code_mean", p_code);
  r.arrays["chi"] = matrix_json(chi);
  r.arrays["output_bloch"] = bloch;
  if (config.shots > 0) {
    const ChiMatrix chi_s = qpt_standard(sampled);
    r.add("process_fidelity_sampled", process_fidelity(chi_s, ideal));
    r.arrays["chi_sampled"] = matrix_json(chi_s);
  }
  return r;
}

ResultRecord cmd_decode(const ExperimentConfig& config) {
  ResultRecord r = start("decode", "", config);
  const auto noise = config.noise_params();
  const NoiseParams* np = noise ? &*noise : nullptr;
  std::mt19937_64 rng(config.seed);
  std::optional<ReadoutModel> readout;
  if (config.noise != NoiseMode::kOff) readout = ReadoutModel({ReadoutModel::from_device(config.device).confusion(0)});
  const ReadoutModel* ro = readout ? &*readout : nullptr;

  std::vector<Eigen::Matrix2cd> outputs, sampled;
  json bloch = json::array();
  for (NamedState s : kTomographyInputs) {
    const LogicalAmplitudes amps = amplitudes_of(s);
    const DensityMatrix out = decode(encode(amps, np), np);
    const std::string name(state_name(s));
    r.add("fidelity_" + name, state_fidelity(out, qubit_state(amps)));
    outputs.push_back(to_2x2(out.matrix()));
    const Eigen::Vector3d b = bloch_vector(out.matrix());
    bloch.push_back({b(0), b(1), b(2)});
    if (config.shots > 0) {
      const DensityMatrix est = qst_single_qubit(sample_single_qubit(out, config.shots, ro, rng), ro);
      const Eigen::Vector3d rb = bloch_vector(est.matrix());
      const Eigen::Vector3d n = bloch_vector(DensityMatrix::from_state(qubit_state(amps)).matrix());
      double var = 0.0;
      for (int i = 0; i < 3; ++i) var += n(i) * n(i) * std::max(0.0, 1.0 - rb(i) * rb(i));
      r.add("fidelity_" + name + "_sampled", state_fidelity(est, qubit_state(amps)),
            std::sqrt(var / static_cast<double>(config.shots)) / 2.0);
      sampled.push_back(to_2x2(est.matrix()));
    }
  }
  const ChiMatrix ideal = chi_of_unitary(Eigen::Matrix2cd::Identity());
  const ChiMatrix chi = qpt_standard(outputs);
  r.add("process_fidelity", process_fidelity(chi, ideal));
  r.arrays["chi"] = matrix_json(chi);
  r.arrays["output_bloch"] = bloch;
  r.arrays["decoder_qubits"] = build_decoder(config.timing).touched_qubits();
  if (config.shots > 0) {
    const ChiMatrix chi_s = qpt_standard(sampled);
    r.add("process_fidelity_sampled", process_fidelity(chi_s, ideal));
    r.arrays["chi_sampled"] = matrix_json(chi_s);
  }
  return r;
}

ResultRecord cmd_compile(const ExperimentConfig& config, Circuit* compiled) {
  ResultRecord r = start("compile", "", config);
  const CompileReport rep = compile_encoder(config.optimizer, config.seed, config.timing);
  for (const CompiledBlock* b : {&rep.block_b, &rep.block_a}) {
    const std::string p = "block_" + b->tmpl.name + "_";
    r.add(p + "search_distance", b->search.distance);
    r.add(p + "restarts", b->search.restarts);
    r.add(p + "snapped_distance", b->snap.distance);
    r.add(p + "unsnapped_parameters", static_cast<double>(b->snap.failed.size()));
    r.arrays[p + "theta"] = b->snap.theta;
  }
  r.add("verification_distance", rep.verification_distance);
  r.add("cz_count", static_cast<double>(rep.cz_count));
  r.add("single_qubit_count", static_cast<double>(rep.single_qubit_count));
  r.add("depth", static_cast<double>(rep.encoder.depth()));
  r.add("nn_two_qubit_gates", rep.nn_two_qubit_gates);
  r.add("nn_swaps", rep.nn_swaps);
  r.add("nn_cnot_equivalents", rep.nn_cnot_equivalents);
  r.add("angles_on_grid", rep.angles_on_grid ? 1.0 : 0.0);
  r.add("verified", rep.verified ? 1.0 : 0.0);
  r.arrays["circuit"] = circuit_to_json(rep.encoder);
  if (compiled) *compiled = rep.encoder;
  if (!rep.verified) {
    throw std::runtime_error("compiled encoder failed verification (distance " +
                             std::to_string(rep.verification_distance) + ")");
  }
  return r;
}

}  // namespace qec513
