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

#include <cstdint>
#include <vector>

#include "qec513/compile/snapping.hpp"
#include "qec513/core/circuit.hpp"

namespace qec513 {

/// U = e^{i phase} Rz(alpha) Ry(beta) Rz(gamma), angles in radians.
struct ZyzAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double phase = 0.0;
};

/// Throws std::invalid_argument unless `u` is a 2x2 unitary.
ZyzAngles zyz_decompose(const ComplexMatrix& u);

/// Fuses every maximal run of single-qubit gates on a wire into at most
/// Rz Ry Rz, dropping rotations that are the identity up to phase. Angles
/// within 1e-9 of a grid point on `denominators` are set to that point.
std::vector<Gate> merge_single_qubit_runs(int num_qubits, const std::vector<Gate>& gates,
                                          std::span<const int> denominators);

struct CompiledBlock {
  GateTemplate tmpl;
  OptimizeResult search;
  SnapResult snap;
};

struct CompileReport {
  CompiledBlock block_a;
  CompiledBlock block_b;
  // Nearest-neighbour stage of the input encoder.
  int nn_two_qubit_gates = 0;
  int nn_swaps = 0;
  int nn_cnot_equivalents = 0;
  Circuit encoder{5};
  std::size_t cz_count = 0;
  std::size_t single_qubit_count = 0;
  /// Phase-aligned squared Frobenius distance to the nearest-neighbour
  /// encoder.
  double verification_distance = 0.0;
  bool angles_on_grid = false;
  bool verified = false;
};

/// Recompiles the nearest-neighbour encoder: fits both CZ templates, snaps
/// their angles, splices them into the chain and fuses single-qubit runs.
CompileReport compile_encoder(const OptimizerConfig& config, std::uint64_t seed, const GateTiming& timing = {});

}  // namespace qec513
