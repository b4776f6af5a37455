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
#include <span>
#include <string>
#include <vector>

#include "qec513/core/circuit.hpp"

namespace qec513 {

/// Sum_ij |U_ij - V_ij|^2. Throws on a shape mismatch.
double distance(const ComplexMatrix& u, const ComplexMatrix& v);

/// Fixed CZ skeleton with parameterized single-qubit slots. A slot on wire
/// q with angles (alpha, beta, gamma) in radians is Rz(alpha) Ry(beta)
/// Rz(gamma) as a matrix, so Rz(gamma) acts first. The last parameter is a
/// global phase.
struct GateTemplate {
  struct Op {
    bool is_cz = false;
    int a = 0;
    int b = 0;
  };

  std::string name;
  int num_qubits = 1;
  std::vector<Op> ops;

  /// Two wires, slot pairs around two CZs: 19 parameters.
  static GateTemplate block_b();
  /// Three wires, four alternating CZs with one leading and two trailing
  /// slots: 28 parameters.
  static GateTemplate block_a();

  int num_slots() const;
  int num_parameters() const { return 3 * num_slots() + 1; }
};

/// e^{i phi} times the product of skeleton and slot unitaries in circuit
/// order. Throws on a parameter-count mismatch.
ComplexMatrix template_unitary(const GateTemplate& t, std::span<const double> theta);

/// Gates realizing the template (global phase dropped), wires mapped
/// through `wires`; angles converted to units of pi.
std::vector<Gate> template_gates(const GateTemplate& t, std::span<const double> theta, std::span<const int> wires);

/// SWAP (S (x) S-dagger) CNOT(0 -> 1) on two qubits.
ComplexMatrix block_b_target();
/// CNOT(1->0), S0, S1, SWAP(1,2), CNOT(1->0), H1, CNOT(1->2) in time order.
ComplexMatrix block_a_target();

struct OptimizerConfig {
  int max_restarts = 50;
  int iterations_per_restart = 5000;
  double threshold = 1e-3;
  double snap_tolerance = 1e-10;
  std::vector<int> denominators{1, 2, 3, 4, 6, 12};

  /// Throws std::invalid_argument on non-positive budgets or thresholds or
  /// an empty denominator set.
  void validate() const;
};

struct OptimizeResult {
  std::vector<double> theta;
  double distance = 0.0;
  int restarts = 0;
  int best_restart = 0;
  bool converged = false;
};

/// Nelder-Mead from uniform random starts in [0, 2 pi)^d until the distance
/// drops below the threshold or the restart budget runs out. Deterministic
/// in `seed`; ties go to the lowest restart index.
OptimizeResult optimize(const ComplexMatrix& target, const GateTemplate& t, const OptimizerConfig& config,
                        std::uint64_t seed);

/// Levenberg-Marquardt polish of the free parameters (fixed[i] == false)
/// on the entrywise residual. Returns the refined distance.
double refine(const ComplexMatrix& target, const GateTemplate& t, std::vector<double>& theta,
              const std::vector<bool>& fixed);

}  // namespace qec513
