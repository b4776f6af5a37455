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

#include "qec513/noise/decoherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qec513/core/ops.hpp"

namespace qec513 {

std::array<ComplexMatrix, 4> decoherence_kraus(double t1, double tphi, double t,
                                               double k_relax, double k_dephase) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("duration must be non-negative");
  if (!(t1 > 0.0)) throw std::invalid_argument("T1 must be positive");
  if (!(tphi > 0.0)) throw std::invalid_argument("T_phi must be positive");
  const double gamma = k_relax * t / t1;
  const double gamma_phi = std::isinf(tphi) ? 0.0 : k_dephase * t / tphi;
  if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("relaxation rate outside [0, 1]");
  if (gamma_phi < 0.0 || gamma_phi > 1.0) throw std::invalid_argument("dephasing rate outside [0, 1]");

  ComplexMatrix e1 = ComplexMatrix::Zero(2, 2);
  e1(0, 0) = 1.0;
  e1(1, 1) = std::sqrt(1.0 - gamma);
  ComplexMatrix e2 = ComplexMatrix::Zero(2, 2);
  e2(0, 1) = std::sqrt(gamma);
  ComplexMatrix e3 = ComplexMatrix::Zero(2, 2);
  e3(0, 0) = 1.0;
  e3(1, 1) = std::sqrt(1.0 - gamma_phi);
  ComplexMatrix e4 = ComplexMatrix::Zero(2, 2);
  e4(1, 1) = std::sqrt(gamma_phi);
  return {e1 * e3, e1 * e4, e2 * e3, e2 * e4};
}

double pure_dephasing_time(double t1, double t2star) {
  if (!(t1 > 0.0) || !(t2star > 0.0)) throw std::invalid_argument("T1 and T2* must be positive");
  if (t2star >= 2.0 * t1) throw std::invalid_argument("T2* >= 2 T1 leaves no pure dephasing");
  return 1.0 / (1.0 / t2star - 1.0 / (2.0 * t1));
}

DensityMatrix apply_layer_noise(const DensityMatrix& rho, double duration, const NoiseParams& params) {
  if (params.device.num_qubits() != rho.num_qubits()) {
    throw std::invalid_argument("device size does not match state");
  }
  if (duration == 0.0) return rho;
  DensityMatrix out = rho;
  for (int q = 0; q < rho.num_qubits(); ++q) {
    const auto kraus = decoherence_kraus(params.device.qubits[static_cast<std::size_t>(q)].t1,
                                         params.tphi(q), duration, params.k_relax, params.k_dephase);
    out = apply_channel(out, kraus, q);
  }
  return out;
}

DensityMatrix run_noisy(const DensityMatrix& rho, const Circuit& circuit, const NoiseParams& params) {
  if (rho.num_qubits() != circuit.num_qubits()) throw std::invalid_argument("circuit width mismatch");
  DensityMatrix out = rho;
  for (const Layer& layer : circuit.layers()) {
    for (const Gate& g : layer.gates) out = conjugate(out, g.matrix(), g.targets);
    out = apply_layer_noise(out, layer.duration, params);
  }
  return out;
}

}  // namespace qec513
