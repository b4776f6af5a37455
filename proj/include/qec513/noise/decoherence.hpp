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

#include <array>

#include "qec513/core/circuit.hpp"
#include "qec513/core/state.hpp"
#include "qec513/noise/device.hpp"

namespace qec513 {

/// Combined relaxation and dephasing Kraus set {E1 E3, E1 E4, E2 E3, E2 E4}
/// with gamma = k t / T1 and gamma_phi = k' t / T_phi. T_phi may be +inf.
/// Throws if either rate leaves [0, 1] or t, T1, T_phi are not positive.
std::array<ComplexMatrix, 4> decoherence_kraus(double t1, double tphi, double t,
                                               double k_relax = 1.0, double k_dephase = 2.0);

/// 1 / (1/T2* - 1/(2 T1)). Throws std::invalid_argument if T2* >= 2 T1.
double pure_dephasing_time(double t1, double t2star);

/// Applies the decoherence channel of `duration` to every qubit.
DensityMatrix apply_layer_noise(const DensityMatrix& rho, double duration, const NoiseParams& params);

/// Layer by layer: ideal gates, then apply_layer_noise for the layer's
/// duration.
DensityMatrix run_noisy(const DensityMatrix& rho, const Circuit& circuit, const NoiseParams& params);

}  // namespace qec513
