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

#include "qec513/compile/pipeline.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "qec513/code/encoder.hpp"
#include "qec513/code/logical.hpp"
#include "qec513/core/ops.hpp"

namespace qec513 {

namespace {

constexpr double kNegligible = 1e-12;

// Angle in units of pi, reduced to [0, 2) and pulled onto the grid when
// within 1e-9 of it.
double clean_angle(double radians, std::span<const int> denominators) {
  const double snapped = snap_angle(radians, denominators);
  if (std::abs(snapped - radians) < 1e-9) radians = snapped;
  double x = std::fmod(radians / kPi, 2.0);
  if (x < 0.0) x += 2.0;
  if (x < kNegligible || 2.0 - x < kNegligible) return 0.0;
  return x;
}

void emit_run(int q, const ComplexMatrix& u, std::span<const int> denominators, std::vector<Gate>& out) {
  const ZyzAngles z = zyz_decompose(u);
  const double beta = clean_angle(z.beta, denominators);
  if (beta == 0.0) {
    const double a = clean_angle(z.alpha + z.gamma, denominators);
    if (a != 0.0) out.push_back(Gate::rz(q, a));
    return;
  }
  const double gamma = clean_angle(z.gamma, denominators);
  const double alpha = clean_angle(z.alpha, denominators);
  if (gamma != 0.0) out.push_back(Gate::rz(q, gamma));
  out.push_back(Gate::ry(q, beta));
  if (alpha != 0.0) out.push_back(Gate::rz(q, alpha));
}

std::vector<Gate> cnot_as_cz(int control, int target) {
  return {Gate::h(target), Gate::cz(control, target), Gate::h(target)};
}

bool on_grid(const Circuit& c, std::span<const int> denominators) {
  for (const Gate& g : c.gates()) {
    if (!is_rotation(g.kind)) continue;
    const double r = g.angle * kPi;
    if (std::abs(snap_angle(r, denominators) - r) > 1e-9) return false;
  }
  return true;
}

CompiledBlock compile_block(const GateTemplate& t, const ComplexMatrix& target, const OptimizerConfig& config,
                            std::uint64_t seed) {
  CompiledBlock b{t, optimize(target, t, config, seed), {}};
  if (!b.search.converged) {
    throw std::runtime_error("template " + t.name + " did not reach the distance threshold (best " +
                             std::to_string(b.search.distance) + ")");
  }
  b.snap = snap_and_refine(target, t, b.search.theta, config);
  return b;
}

}  // namespace

ZyzAngles zyz_decompose(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("zyz_decompose expects a 2x2 matrix");
  if ((u.adjoint() * u - ComplexMatrix::Identity(2, 2)).norm() > 1e-9) {
    throw std::invalid_argument("zyz_decompose expects a unitary");
  }
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  ZyzAngles z;
  z.phase = std::arg(det) / 2.0;
  const ComplexMatrix v = u * std::exp(Complex{0.0, -z.phase});
  const double c = std::abs(v(0, 0));
  const double s = std::abs(v(1, 0));
  z.beta = 2.0 * std::atan2(s, c);
  const double sum = c > kNegligible ? 2.0 * std::arg(v(1, 1)) : 0.0;
  const double diff = s > kNegligible ? 2.0 * std::arg(v(1, 0)) : 0.0;
  z.alpha = (sum + diff) / 2.0;
  z.gamma = (sum - diff) / 2.0;
  return z;
}

std::vector<Gate> merge_single_qubit_runs(int num_qubits, const std::vector<Gate>& gates,
                                          std::span<const int> denominators) {
  std::map<int, ComplexMatrix> pending;
  std::vector<Gate> out;
  auto flush = [&](int q) {
    const auto it = pending.find(q);
    if (it == pending.end()) return;
    emit_run(q, it->second, denominators, out);
    pending.erase(it);
  };
  for (const Gate& g : gates) {
    validate_gate(g, num_qubits);
    if (g.is_two_qubit()) {
      for (int q : g.targets) flush(q);
      out.push_back(g);
      continue;
    }
    const int q = g.targets[0];
    auto [it, inserted] = pending.try_emplace(q, ComplexMatrix::Identity(2, 2));
    it->second = g.matrix() * it->second;
  }
  for (int q = 0; q < num_qubits; ++q) flush(q);
  return out;
}

CompileReport compile_encoder(const OptimizerConfig& config, std::uint64_t seed, const GateTiming& timing) {
  config.validate();
  CompileReport report;

  for (const Gate& g : encoder_gates(EncoderVariant::kNearestNeighbour)) {
    if (g.kind == GateKind::kSwap) {
      ++report.nn_swaps;
    } else if (g.is_two_qubit()) {
      ++report.nn_two_qubit_gates;
    }
  }
  report.nn_cnot_equivalents = report.nn_two_qubit_gates + 3 * report.nn_swaps;

  report.block_b = compile_block(GateTemplate::block_b(), block_b_target(), config, seed);
  report.block_a = compile_block(GateTemplate::block_a(), block_a_target(), config, seed + 1);

  const RelabelingMap map;
  auto w = [&](int chain_1based) { return map.original(chain_1based - 1); };

  // Chain prefix ahead of the two blocks.
  std::vector<Gate> gates{Gate::s(w(1)), Gate::h(w(3)), Gate::h(w(5)), Gate::s(w(5))};
  for (const Gate& g : cnot_as_cz(w(3), w(2))) gates.push_back(g);
  for (const Gate& g : cnot_as_cz(w(5), w(4))) gates.push_back(g);
  gates.push_back(Gate::h(w(2)));

  const std::array<int, 2> wires_b{w(3), w(4)};
  for (const Gate& g : template_gates(report.block_b.tmpl, report.block_b.snap.theta, wires_b)) gates.push_back(g);
  const std::array<int, 3> wires_a{w(1), w(2), w(3)};
  for (const Gate& g : template_gates(report.block_a.tmpl, report.block_a.snap.theta, wires_a)) gates.push_back(g);

  const std::vector<Gate> merged = merge_single_qubit_runs(kCodeQubits, gates, config.denominators);
  report.encoder = Circuit::schedule(kCodeQubits, merged, timing);
  report.cz_count = report.encoder.two_qubit_gate_count();
  report.single_qubit_count = report.encoder.single_qubit_gate_count();

  const ComplexMatrix reference = circuit_unitary(build_encoder(EncoderVariant::kNearestNeighbour, timing));
  const double norm = phase_aligned_norm(circuit_unitary(report.encoder), reference);
  report.verification_distance = norm * norm;
  report.angles_on_grid = on_grid(report.encoder, config.denominators);
  report.verified = report.verification_distance <= config.snap_tolerance && report.block_a.snap.verified &&
                    report.block_b.snap.verified;
  return report;
}

}  // namespace qec513
