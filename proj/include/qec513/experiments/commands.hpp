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

#include "qec513/code/logical.hpp"
#include "qec513/core/circuit.hpp"
#include "qec513/experiments/config.hpp"
#include "qec513/experiments/record.hpp"
#include "qec513/pauli/pauli_string.hpp"

namespace qec513 {

// Every command returns exact metrics (uncertainty 0). With shots > 0 the
// same quantities are also estimated from seeded samples and stored under a
// "_sampled" suffix with their standard errors.

/// Encodes a named state; 31 stabilizer terms, raw fidelity, code-space
/// fidelity and post-selection probability.
ResultRecord cmd_prepare(NamedState state, const ExperimentConfig& config);

/// Stabilizer generator expectations after injecting every Pauli error of
/// the given weight (1 or 2) into the noiselessly encoded |T>_L.
ResultRecord cmd_syndrome_grid(int weight, const ExperimentConfig& config);

/// Code-space process tomography of a transversal logical Pauli.
ResultRecord cmd_logical_qpt(PauliLetter gate, const ExperimentConfig& config);

/// Encode then decode the inputs 0, 1, +, +i; per-state fidelities and the
/// process fidelity of the round trip.
ResultRecord cmd_decode(const ExperimentConfig& config);

/// Runs the recompiler. The compiled circuit is stored in the record and,
/// when `compiled` is given, returned there. Throws std::runtime_error with
/// diagnostics if a block fails to converge.
ResultRecord cmd_compile(const ExperimentConfig& config, Circuit* compiled = nullptr);

}  // namespace qec513
