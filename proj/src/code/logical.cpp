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

#include "qec513/code/logical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qec513 {

namespace {

constexpr std::array<NamedState, 7> kStates{NamedState::kZero,  NamedState::kOne,    NamedState::kPlus,
                                            NamedState::kMinus, NamedState::kPlusI, NamedState::kMinusI,
                                            NamedState::kT};
constexpr std::array<std::string_view, 7> kStateNames{"0", "1", "+", "-", "+i", "-i", "T"};

// Signed computational basis kets, amplitude +-1/4 each.
constexpr std::array<std::string_view, 16> kZeroKets{
    "+00000", "+10010", "+01001", "+10100", "+01010", "-11011", "-00110", "-11000",
    "-11101", "-00011", "-11110", "-01111", "-10001", "-01100", "-10111", "+00101"};
constexpr std::array<std::string_view, 16> kOneKets{
    "+11111", "+01101", "+10110", "+01011", "+10101", "-00100", "-11001", "-00111",
    "-00010", "-11100", "-00001", "-10000", "-01110", "-10011", "-01000", "+11010"};

StateVector from_kets(const std::array<std::string_view, 16>& kets) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dimension_of(kCodeQubits)));
  for (std::string_view k : kets) {
    const double sign = k[0] == '-' ? -1.0 : 1.0;
    const auto index = std::stoul(std::string(k.substr(1)), nullptr, 2);
    v[static_cast<Eigen::Index>(index)] = sign / 4.0;
  }
  return StateVector::from_amplitudes(std::move(v));
}

}  // namespace

LogicalAmplitudes LogicalAmplitudes::make(Complex a, Complex b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > tol::kConstruction) {
    throw std::invalid_argument("logical amplitudes are not normalized");
  }
  return {a, b};
}

LogicalAmplitudes LogicalAmplitudes::normalized(Complex a, Complex b) {
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  if (n == 0.0) throw std::invalid_argument("zero logical amplitude vector");
  return {a / n, b / n};
}

std::span<const NamedState> all_named_states() { return kStates; }

std::string_view state_name(NamedState s) { return kStateNames[static_cast<std::size_t>(s)]; }

NamedState parse_state(std::string_view name) {
  for (std::size_t i = 0; i < kStates.size(); ++i) {
    if (kStateNames[i] == name) return kStates[i];
  }
  throw std::invalid_argument("unknown logical state '" + std::string(name) + "'");
}

LogicalAmplitudes amplitudes_of(NamedState s) {
  const Complex i{0.0, 1.0};
  switch (s) {
    case NamedState::kZero: return {1.0, 0.0};
    case NamedState::kOne: return {0.0, 1.0};
    case NamedState::kPlus: return LogicalAmplitudes::normalized(1.0, 1.0);
    case NamedState::kMinus: return LogicalAmplitudes::normalized(1.0, -1.0);
    case NamedState::kPlusI: return LogicalAmplitudes::normalized(1.0, i);
    case NamedState::kMinusI: return LogicalAmplitudes::normalized(1.0, -i);
    case NamedState::kT: return LogicalAmplitudes::normalized(1.0, std::exp(i * (kPi / 4.0)));
  }
  throw std::logic_error("unknown named state");
}

StateVector qubit_state(const LogicalAmplitudes& amps) {
  ComplexVector v(2);
  v << amps.a, amps.b;
  return StateVector::from_amplitudes(std::move(v));
}

const StateVector& logical_zero() {
  static const StateVector s = from_kets(kZeroKets);
  return s;
}

const StateVector& logical_one() {
  static const StateVector s = from_kets(kOneKets);
  return s;
}

StateVector logical_state(const LogicalAmplitudes& amps) {
  LogicalAmplitudes::make(amps.a, amps.b);
  return StateVector::from_amplitudes(amps.a * logical_zero().amplitudes() +
                                      amps.b * logical_one().amplitudes());
}

void RelabelingMap::validate() const {
  std::array<bool, kCodeQubits> seen{};
  for (int q : chain_to_original) {
    if (q < 0 || q >= kCodeQubits || seen[static_cast<std::size_t>(q)]) {
      throw std::invalid_argument("relabeling is not a permutation of five qubits");
    }
    seen[static_cast<std::size_t>(q)] = true;
  }
}

int RelabelingMap::chain(int original) const {
  for (int k = 0; k < kCodeQubits; ++k) {
    if (chain_to_original[static_cast<std::size_t>(k)] == original) return k;
  }
  throw std::invalid_argument("qubit not in relabeling map");
}

}  // namespace qec513
