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

#include <string>
#include <vector>

#include "qec513/core/circuit.hpp"

namespace qec513 {

struct QubitParams {
  std::string name;
  double t1 = 0.0;      // seconds
  double t2star = 0.0;  // seconds
  double f00 = 1.0;
  double f11 = 1.0;
};

/// Per-qubit coherence and readout figures, indexed by qubit (0-based,
/// original labels Q1..Q5).
struct DeviceParams {
  std::vector<QubitParams> qubits;

  /// Measured values of the five-transmon device.
  static DeviceParams reference_profile();

  /// Copy with T2* raised to T1 on every qubit.
  DeviceParams with_t2_equal_t1() const;

  int num_qubits() const { return static_cast<int>(qubits.size()); }

  /// Throws std::invalid_argument unless T1 > 0, 0 < T2* <= 2 T1, and
  /// 0.5 < f00, f11 <= 1 on every qubit.
  void validate() const;
};

enum class TphiMode {
  kPureDephasing,  // 1/T_phi = 1/T2* - 1/(2 T1)
  kT2Star,         // T_phi = T2*
};

std::string_view tphi_mode_name(TphiMode mode);
TphiMode parse_tphi_mode(std::string_view name);

struct NoiseParams {
  DeviceParams device;
  GateTiming timing;
  double k_relax = 1.0;
  double k_dephase = 2.0;
  TphiMode tphi_mode = TphiMode::kPureDephasing;

  double tphi(int qubit) const;
};

}  // namespace qec513
