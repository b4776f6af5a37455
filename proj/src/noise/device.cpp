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

#include "qec513/noise/device.hpp"

#include <cmath>
#include <stdexcept>

#include "qec513/noise/decoherence.hpp"

namespace qec513 {

DeviceParams DeviceParams::reference_profile() {
  return DeviceParams{{
      {"Q1", 27.5e-6, 5.5e-6, 0.982, 0.831},
      {"Q2", 33.0e-6, 5.6e-6, 0.931, 0.885},
      {"Q3", 48.6e-6, 3.3e-6, 0.963, 0.916},
      {"Q4", 36.8e-6, 2.7e-6, 0.934, 0.899},
      {"Q5", 34.0e-6, 4.1e-6, 0.932, 0.874},
  }};
}

DeviceParams DeviceParams::with_t2_equal_t1() const {
  DeviceParams out = *this;
  for (QubitParams& q : out.qubits) q.t2star = q.t1;
  return out;
}

void DeviceParams::validate() const {
  if (qubits.empty()) throw std::invalid_argument("device has no qubits");
  for (const QubitParams& q : qubits) {
    const std::string who = q.name.empty() ? std::string("qubit") : q.name;
    if (!(q.t1 > 0.0) || !std::isfinite(q.t1)) throw std::invalid_argument(who + ": T1 must be positive");
    if (!(q.t2star > 0.0)) throw std::invalid_argument(who + ": T2* must be positive");
    if (q.t2star > 2.0 * q.t1 * (1.0 + 1e-12)) {
      throw std::invalid_argument(who + ": T2* exceeds 2 T1");
    }
    for (double f : {q.f00, q.f11}) {
      if (!(f > 0.5 && f <= 1.0)) {
        throw std::invalid_argument(who + ": readout fidelity must lie in (0.5, 1]");
      }
    }
  }
}

std::string_view tphi_mode_name(TphiMode mode) {
  return mode == TphiMode::kPureDephasing ? "pure-dephasing" : "t2star";
}

TphiMode parse_tphi_mode(std::string_view name) {
  if (name == "pure-dephasing") return TphiMode::kPureDephasing;
  if (name == "t2star") return TphiMode::kT2Star;
  throw std::invalid_argument("unknown T_phi mode '" + std::string(name) + "'");
}

double NoiseParams::tphi(int qubit) const {
  const QubitParams& q = device.qubits.at(static_cast<std::size_t>(qubit));
  return tphi_mode == TphiMode::kPureDephasing ? pure_dephasing_time(q.t1, q.t2star) : q.t2star;
}

}  // namespace qec513
