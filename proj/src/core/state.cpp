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

#include "qec513/core/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qec513 {

int qubits_for_dimension(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || n == 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a power of two >= 2");
  }
  return n;
}

StateVector::StateVector(int num_qubits, ComplexVector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::zero(int num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 1 || num_qubits > 16) {
    throw std::invalid_argument("state size must be 1..16 qubits");
  }
  if (index >= dimension_of(num_qubits)) {
    throw std::invalid_argument("basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dimension_of(num_qubits)));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(num_qubits, std::move(v));
}

StateVector StateVector::from_amplitudes(ComplexVector amplitudes) {
  const int n = qubits_for_dimension(amplitudes.size());
  if (!amplitudes.allFinite()) throw std::invalid_argument("non-finite amplitude");
  if (std::abs(amplitudes.squaredNorm() - 1.0) > tol::kConstruction) {
    throw std::invalid_argument("state vector is not normalized");
  }
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::adopt_unchecked(int num_qubits, ComplexVector amplitudes) {
  if (amplitudes.size() != static_cast<Eigen::Index>(dimension_of(num_qubits))) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
  return StateVector(num_qubits, std::move(amplitudes));
}

DensityMatrix::DensityMatrix(int num_qubits, ComplexMatrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {}

DensityMatrix DensityMatrix::zero(int num_qubits) {
  return from_state(StateVector::zero(num_qubits));
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  return DensityMatrix(psi.num_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  const auto d = static_cast<Eigen::Index>(dimension_of(num_qubits));
  return DensityMatrix(num_qubits, ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix matrix) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("density matrix must be square");
  const int n = qubits_for_dimension(matrix.rows());
  if (!matrix.allFinite()) throw std::invalid_argument("non-finite density matrix entry");
  DensityMatrix rho(n, std::move(matrix));
  if (rho.hermiticity_error() > tol::kEvolution) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > tol::kEvolution) {
    throw std::invalid_argument("density matrix does not have unit trace");
  }
  return rho;
}

DensityMatrix DensityMatrix::adopt_unchecked(ComplexMatrix matrix) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("density matrix must be square");
  const int n = qubits_for_dimension(matrix.rows());
  return DensityMatrix(n, std::move(matrix));
}

double DensityMatrix::trace() const { return matrix_.trace().real(); }

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return matrix_.squaredNorm();
}

double DensityMatrix::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace qec513
