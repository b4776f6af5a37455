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

#include "qec513/core/types.hpp"

namespace qec513 {

class StateVector {
 public:
  static StateVector zero(int num_qubits);
  static StateVector basis(int num_qubits, std::uint64_t index);
  /// Throws if the length is not a power of two or the norm is off by more
  /// than the construction tolerance.
  static StateVector from_amplitudes(ComplexVector amplitudes);
  static StateVector adopt_unchecked(int num_qubits, ComplexVector amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return dimension_of(num_qubits_); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::uint64_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }
  double norm() const { return amplitudes_.norm(); }

 private:
  StateVector(int num_qubits, ComplexVector amplitudes);

  int num_qubits_;
  ComplexVector amplitudes_;
};

class DensityMatrix {
 public:
  static DensityMatrix zero(int num_qubits);
  static DensityMatrix from_state(const StateVector& psi);
  static DensityMatrix maximally_mixed(int num_qubits);
  /// Throws unless Hermitian and unit trace within the evolution tolerance.
  static DensityMatrix from_matrix(ComplexMatrix matrix);
  /// Only checks the shape. Used by kernels whose output is physical by
  /// construction.
  static DensityMatrix adopt_unchecked(ComplexMatrix matrix);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return dimension_of(num_qubits_); }
  const ComplexMatrix& matrix() const { return matrix_; }

  double trace() const;
  double purity() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;

 private:
  DensityMatrix(int num_qubits, ComplexMatrix matrix);

  int num_qubits_;
  ComplexMatrix matrix_;
};

/// Number of qubits for a power-of-two dimension; throws otherwise.
int qubits_for_dimension(Eigen::Index dim);

}  // namespace qec513
