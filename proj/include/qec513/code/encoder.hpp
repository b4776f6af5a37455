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
#include <set>
#include <string_view>
#include <vector>

#include "qec513/code/logical.hpp"
#include "qec513/core/circuit.hpp"
#include "qec513/noise/device.hpp"

namespace qec513 {

enum class EncoderVariant {
  kReference,         // all-to-all CNOT encoder
  kNearestNeighbour,  // chain-connected CNOTs plus two SWAPs
  kOptimized,         // 8 CZ with rotations at rational multiples of pi
};

std::string_view variant_name(EncoderVariant v);

/// Encoder gates in temporal order on original qubit labels. The input
/// qubit is qubit 0; qubits 1..4 start in |0>.
std::vector<Gate> encoder_gates(EncoderVariant variant);

/// ASAP-layered encoder body.
Circuit build_encoder(EncoderVariant variant, const GateTiming& timing = {});

/// Ry(theta) then Rz(phi) on qubit 0 taking |0> to a|0> + b|1> up to a
/// global phase.
std::array<Gate, 2> preparation_gates(const LogicalAmplitudes& amps);

/// G1 and G2 as two leading layers, then the 25-layer optimized body.
Circuit build_encoding_circuit(const LogicalAmplitudes& amps, const GateTiming& timing = {});

/// Runs build_encoding_circuit on |00000>, with decoherence after every
/// layer when `noise` is given.
DensityMatrix encode(const LogicalAmplitudes& amps, const NoiseParams* noise = nullptr);

/// Encoder reference = nearest-neighbour * P where P moves input wire k to
/// position p[k].
std::array<int, kCodeQubits> reference_input_permutation();

/// Drops every gate outside the backward light cone of `outputs`.
std::vector<Gate> prune_to_cone(const std::vector<Gate>& gates, const std::set<int>& outputs);

/// Inverse of the optimized encoder restricted to the light cone of qubit 0,
/// re-layered ASAP.
Circuit build_decoder(const GateTiming& timing = {});

/// Runs the decoder (noisy if `noise` is given) and returns the reduced
/// state of qubit 0.
DensityMatrix decode(const DensityMatrix& rho, const NoiseParams* noise = nullptr);

}  // namespace qec513
