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
#include <span>
#include <string_view>

#include "qec513/core/state.hpp"

namespace qec513 {

inline constexpr int kCodeQubits = 5;

/// a|0> + b|1>, normalized within the construction tolerance.
struct LogicalAmplitudes {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};

  /// Throws unless |a|^2 + |b|^2 = 1 within 1e-12.
  static LogicalAmplitudes make(Complex a, Complex b);
  /// Rescales (a, b) to unit norm; throws on the zero vector.
  static LogicalAmplitudes normalized(Complex a, Complex b);
};

enum class NamedState { kZero, kOne, kPlus, kMinus, kPlusI, kMinusI, kT };

/// The seven states in the order 0, 1, +, -, +i, -i, T.
std::span<const NamedState> all_named_states();
std::string_view state_name(NamedState s);
NamedState parse_state(std::string_view name);
LogicalAmplitudes amplitudes_of(NamedState s);

/// Single-qubit a|0> + b|1>.
StateVector qubit_state(const LogicalAmplitudes& amps);

const StateVector& logical_zero();
const StateVector& logical_one();

/// a|0_L> + b|1_L> on five qubits.
StateVector logical_state(const LogicalAmplitudes& amps);

/// Chain position k' (0-based) of the nearest-neighbour layout holds original
/// qubit chain_to_original[k']: 1'=Q1, 2'=Q5, 3'=Q2, 4'=Q4, 5'=Q3.
struct RelabelingMap {
  std::array<int, kCodeQubits> chain_to_original{0, 4, 1, 3, 2};

  /// Throws unless the map is a bijection of {0..4}.
  void validate() const;
  int original(int chain) const { return chain_to_original.at(static_cast<std::size_t>(chain)); }
  int chain(int original) const;
};

}  // namespace qec513
