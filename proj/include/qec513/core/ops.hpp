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
#include <vector>

#include "qec513/core/circuit.hpp"
#include "qec513/core/state.hpp"

namespace qec513 {

// Low-level kernel: multiply every column of `columns` (a 2^n x m block) by
// `op` acting on `targets`. targets[0] indexes the most significant bit of
// op's row index.
void apply_to_columns(ComplexMatrix& columns, const ComplexMatrix& op,
                      std::span<const int> targets, int num_qubits);

StateVector apply_gate(const StateVector& psi, const Gate& gate);
DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate);

/// rho -> op rho op^dagger with no unitarity requirement.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& op,
                        std::span<const int> targets);

/// Single-qubit channel sum_k E_k rho E_k^dagger. Throws if the Kraus set is
/// not trace preserving within the evolution tolerance.
DensityMatrix apply_channel(const DensityMatrix& rho,
                            std::span<const ComplexMatrix> kraus, int target);

/// Reduced state on `keep`; the output orders kept qubits by ascending index.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// <psi|rho|psi>.
double state_fidelity(const DensityMatrix& rho, const StateVector& psi);

ComplexMatrix circuit_unitary(const Circuit& circuit);

StateVector run(const StateVector& psi, const Circuit& circuit);
DensityMatrix run(const DensityMatrix& rho, const Circuit& circuit);

/// min over phi of the Frobenius norm of (a - e^{i phi} b).
double phase_aligned_norm(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qec513
