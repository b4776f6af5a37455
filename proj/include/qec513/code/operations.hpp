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

#include <span>

#include "qec513/core/circuit.hpp"
#include "qec513/noise/device.hpp"
#include "qec513/pauli/pauli_string.hpp"

namespace qec513 {

/// sigma on all five qubits.
PauliString logical_pauli(PauliLetter sigma);

/// One layer of five simultaneous sigma gates lasting one single-qubit gate.
Circuit logical_layer(PauliLetter sigma, const GateTiming& timing = {});

DensityMatrix apply_logical(const DensityMatrix& rho, PauliLetter sigma, const NoiseParams* noise = nullptr);

struct InjectedError {
  int qubit = 0;
  PauliLetter letter = PauliLetter::kX;
};

/// Applies ideal Pauli gates. Accepts at most two errors, on distinct qubits.
DensityMatrix inject_error(const DensityMatrix& rho, std::span<const InjectedError> errors);

}  // namespace qec513
