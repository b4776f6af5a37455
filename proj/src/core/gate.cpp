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

#include "qec513/core/gate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qec513 {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 12> kNames{{
    {GateKind::kRz, "RZ"},
    {GateKind::kRy, "RY"},
    {GateKind::kRx, "RX"},
    {GateKind::kH, "H"},
    {GateKind::kS, "S"},
    {GateKind::kSdg, "SDG"},
    {GateKind::kX, "X"},
    {GateKind::kY, "Y"},
    {GateKind::kZ, "Z"},
    {GateKind::kCz, "CZ"},
    {GateKind::kCnot, "CNOT"},
    {GateKind::kSwap, "SWAP"},
}};

const Complex kI{0.0, 1.0};

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::kRz || kind == GateKind::kRy || kind == GateKind::kRx;
}

int arity_of(GateKind kind) {
  switch (kind) {
    case GateKind::kCz:
    case GateKind::kCnot:
    case GateKind::kSwap:
      return 2;
    default:
      return 1;
  }
}

ComplexMatrix Gate::matrix() const {
  const double half = angle * kPi / 2.0;
  ComplexMatrix m;
  switch (kind) {
    case GateKind::kRz:
      m = ComplexMatrix::Zero(2, 2);
      m(0, 0) = std::exp(-kI * half);
      m(1, 1) = std::exp(kI * half);
      return m;
    case GateKind::kRy:
      m.resize(2, 2);
      m << std::cos(half), -std::sin(half), std::sin(half), std::cos(half);
      return m;
    case GateKind::kRx:
      m.resize(2, 2);
      m << std::cos(half), -kI * std::sin(half), -kI * std::sin(half), std::cos(half);
      return m;
    case GateKind::kH:
      m.resize(2, 2);
      m << 1.0, 1.0, 1.0, -1.0;
      return m / std::sqrt(2.0);
    case GateKind::kS:
      m = ComplexMatrix::Identity(2, 2);
      m(1, 1) = kI;
      return m;
    case GateKind::kSdg:
      m = ComplexMatrix::Identity(2, 2);
      m(1, 1) = -kI;
      return m;
    case GateKind::kX:
      m.resize(2, 2);
      m << 0.0, 1.0, 1.0, 0.0;
      return m;
    case GateKind::kY:
      m.resize(2, 2);
      m << 0.0, -kI, kI, 0.0;
      return m;
    case GateKind::kZ:
      m = ComplexMatrix::Identity(2, 2);
      m(1, 1) = -1.0;
      return m;
    case GateKind::kCz:
      m = ComplexMatrix::Identity(4, 4);
      m(3, 3) = -1.0;
      return m;
    case GateKind::kCnot:
      m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      return m;
    case GateKind::kSwap:
      m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      return m;
  }
  throw std::logic_error("unknown gate kind");
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (is_rotation(kind)) {
    g.angle = -angle;
  } else if (kind == GateKind::kS) {
    g.kind = GateKind::kSdg;
  } else if (kind == GateKind::kSdg) {
    g.kind = GateKind::kS;
  }
  return g;
}

std::string Gate::to_string() const {
  std::ostringstream out;
  out << gate_name(kind);
  if (is_rotation(kind)) out << "(" << angle << "pi)";
  for (int t : targets) out << " q" << t;
  return out.str();
}

void validate_gate(const Gate& gate, int num_qubits) {
  if (static_cast<int>(gate.targets.size()) != gate.arity()) {
    throw std::invalid_argument("gate " + std::string(gate_name(gate.kind)) +
                                " expects " + std::to_string(gate.arity()) +
                                " targets");
  }
  for (int t : gate.targets) {
    if (t < 0 || t >= num_qubits) {
      throw std::invalid_argument("gate target " + std::to_string(t) +
                                  " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
    }
  }
  if (gate.arity() == 2 && gate.targets[0] == gate.targets[1]) {
    throw std::invalid_argument("two-qubit gate with repeated target");
  }
  if (!std::isfinite(gate.angle)) {
    throw std::invalid_argument("non-finite rotation angle");
  }
}

}  // namespace qec513
