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

#include "qec513/code/operations.hpp"

#include <stdexcept>

#include "qec513/code/logical.hpp"
#include "qec513/core/ops.hpp"
#include "qec513/noise/decoherence.hpp"

namespace qec513 {

namespace {

Gate pauli_gate(PauliLetter letter, int qubit) {
  switch (letter) {
    case PauliLetter::kX: return Gate::x(qubit);
    case PauliLetter::kY: return Gate::y(qubit);
    case PauliLetter::kZ: return Gate::z(qubit);
    default: throw std::invalid_argument("expected X, Y or Z");
  }
}

}  // namespace

PauliString logical_pauli(PauliLetter sigma) {
  if (sigma == PauliLetter::kI) throw std::invalid_argument("expected X, Y or Z");
  return PauliString(std::vector<PauliLetter>(kCodeQubits, sigma), 0);
}

Circuit logical_layer(PauliLetter sigma, const GateTiming& timing) {
  Layer layer;
  for (int q = 0; q < kCodeQubits; ++q) layer.gates.push_back(pauli_gate(sigma, q));
  layer.duration = timing.layer_duration(layer.gates);
  Circuit c(kCodeQubits);
  c.add_layer(std::move(layer));
  return c;
}

DensityMatrix apply_logical(const DensityMatrix& rho, PauliLetter sigma, const NoiseParams* noise) {
  if (rho.num_qubits() != kCodeQubits) throw std::invalid_argument("logical operations act on five qubits");
  const Circuit c = logical_layer(sigma, noise ? noise->timing : GateTiming{});
  return noise ? run_noisy(rho, c, *noise) : run(rho, c);
}

DensityMatrix inject_error(const DensityMatrix& rho, std::span<const InjectedError> errors) {
  if (errors.size() > 2) throw std::invalid_argument("at most two errors may be injected");
  if (errors.size() == 2 && errors[0].qubit == errors[1].qubit) {
    throw std::invalid_argument("injected errors must act on distinct qubits");
  }
  DensityMatrix out = rho;
  for (const InjectedError& e : errors) out = apply_gate(out, pauli_gate(e.letter, e.qubit));
  return out;
}

}  // namespace qec513
