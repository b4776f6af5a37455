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

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "qec513/core/gate.hpp"

namespace qec513 {

/// Durations (seconds) used to derive a layer's length from its gates.
struct GateTiming {
  double single_qubit = 30e-9;
  double two_qubit = 30e-9;

  double layer_duration(std::span<const Gate> gates) const;
};

struct Layer {
  std::vector<Gate> gates;
  double duration = 0.0;  // seconds

  bool has_two_qubit_gate() const;
  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Layered circuit. Within a layer no qubit is targeted twice and at most one
/// two-qubit gate appears. Layers are applied in order; the unitary of
/// A.then(B) is U_B * U_A.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  /// Greedy as-soon-as-possible layering that keeps the relative order of
  /// gates sharing a qubit and of all two-qubit gates.
  static Circuit schedule(int num_qubits, std::span<const Gate> gates,
                          const GateTiming& timing);

  void add_layer(Layer layer);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t depth() const { return layers_.size(); }
  bool empty() const { return layers_.empty(); }

  std::size_t gate_count() const;
  std::size_t two_qubit_gate_count() const;
  std::size_t single_qubit_gate_count() const;
  double total_duration() const;

  /// Gates in temporal order (layer by layer).
  std::vector<Gate> gates() const;
  std::set<int> touched_qubits() const;

  /// Reversed layers with each gate inverted; durations are kept.
  Circuit inverse() const;
  Circuit then(const Circuit& next) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_;
  std::vector<Layer> layers_;
};

void validate_layer(const Layer& layer, int num_qubits);

}  // namespace qec513
