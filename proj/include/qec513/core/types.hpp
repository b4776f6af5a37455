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

#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace qec513 {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;

// Tolerance hierarchy shared by every module.
namespace tol {
inline constexpr double kConstruction = 1e-12;
inline constexpr double kEvolution = 1e-10;
inline constexpr double kAcceptance = 1e-9;
}  // namespace tol

// Qubit q (0-based) is bit (n - 1 - q) of a computational basis index, so
// qubit 0 is the leftmost character of a ket string such as |10010>.
constexpr std::uint64_t qubit_mask(int num_qubits, int qubit) {
  return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

constexpr std::uint64_t dimension_of(int num_qubits) {
  return std::uint64_t{1} << num_qubits;
}

}  // namespace qec513
