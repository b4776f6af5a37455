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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qec513/core/types.hpp"

namespace qec513 {

enum class GateKind {
  kRz,
  kRy,
  kRx,
  kH,
  kS,
  kSdg,
  kX,
  kY,
  kZ,
  kCz,
  kCnot,
  kSwap,
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);
bool is_rotation(GateKind kind);
int arity_of(GateKind kind);

/// A gate on explicit qubit indices. Rotation angles are stored in units of
/// pi: rz(q, a) is exp(-i a pi Z / 2). For CNOT the first target is the
/// control.
struct Gate {
  GateKind kind = GateKind::kH;
  std::vector<int> targets;
  double angle = 0.0;

  static Gate rz(int q, double alpha) { return {GateKind::kRz, {q}, alpha}; }
  static Gate ry(int q, double alpha) { return {GateKind::kRy, {q}, alpha}; }
  static Gate rx(int q, double alpha) { return {GateKind::kRx, {q}, alpha}; }
  static Gate h(int q) { return {GateKind::kH, {q}, 0.0}; }
  static Gate s(int q) { return {GateKind::kS, {q}, 0.0}; }
  static Gate sdg(int q) { return {GateKind::kSdg, {q}, 0.0}; }
  static Gate x(int q) { return {GateKind::kX, {q}, 0.0}; }
  static Gate y(int q) { return {GateKind::kY, {q}, 0.0}; }
  static Gate z(int q) { return {GateKind::kZ, {q}, 0.0}; }
  static Gate cz(int a, int b) { return {GateKind::kCz, {a, b}, 0.0}; }
  static Gate cnot(int control, int target) {
    return {GateKind::kCnot, {control, target}, 0.0};
  }
  static Gate swap(int a, int b) { return {GateKind::kSwap, {a, b}, 0.0}; }

  int arity() const { return arity_of(kind); }
  bool is_two_qubit() const { return arity() == 2; }

  /// 2x2 or 4x4 unitary; for two-qubit gates targets[0] is the more
  /// significant index.
  ComplexMatrix matrix() const;

  /// Exact inverse (S <-> S-dagger, rotations negate their angle).
  Gate inverse() const;

  std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws std::invalid_argument on wrong target count, duplicate or
/// out-of-range targets, or a non-finite angle.
void validate_gate(const Gate& gate, int num_qubits);

}  // namespace qec513
