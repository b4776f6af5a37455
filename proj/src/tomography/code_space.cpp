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

#include "qec513/tomography/code_space.hpp"

#include <stdexcept>

#include "qec513/code/operations.hpp"
#include "qec513/tomography/mle.hpp"
#include "qec513/tomography/state_tomography.hpp"

namespace qec513 {

namespace {

constexpr double kMinCodeProbability = 1e-9;

// Tr(rho sigma_L Pi) = sum_a <a_L| rho sigma_L |a_L>.
double restricted_expectation(const DensityMatrix& rho, const PauliString* sigma) {
  Complex acc{0.0, 0.0};
  for (const StateVector* basis : {&logical_zero(), &logical_one()}) {
    const ComplexVector image = sigma ? apply_pauli(*basis, *sigma).amplitudes() : basis->amplitudes();
    acc += basis->amplitudes().dot(rho.matrix() * image);
  }
  return acc.real();
}

ComplexMatrix code_projector() {
  const ComplexVector& z = logical_zero().amplitudes();
  const ComplexVector& o = logical_one().amplitudes();
  return z * z.adjoint() + o * o.adjoint();
}

ComplexMatrix bloch_matrix(double nx, double ny, double nz) {
  const Complex i{0.0, 1.0};
  ComplexMatrix m(2, 2);
  m << (1.0 + nz) / 2.0, (nx - i * ny) / 2.0, (nx + i * ny) / 2.0, (1.0 - nz) / 2.0;
  return m;
}

std::vector<PauliString> stabilizer_group() {
  const StabilizerSet set = StabilizerSet::five_qubit();
  const auto& gens = set.generators();
  std::vector<PauliString> group;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    PauliString p(kCodeQubits);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (mask & (std::size_t{1} << i)) p = p * gens[i];
    }
    group.push_back(p);
  }
  return group;
}

}  // namespace

double CodeSpaceProjection::fidelity(const LogicalAmplitudes& amps) const {
  Eigen::Vector2cd psi(amps.a, amps.b);
  return psi.dot(rho_l * psi).real();
}

CodeSpaceProjection project_code_space(const DensityMatrix& rho) {
  if (rho.num_qubits() != kCodeQubits) throw std::invalid_argument("code-space projection needs five qubits");
  CodeSpaceProjection out;
  out.p_i = restricted_expectation(rho, nullptr);
  if (out.p_i <= kMinCodeProbability) {
    throw std::domain_error("state is orthogonal to the code space");
  }
  const PauliString x = logical_pauli(PauliLetter::kX);
  const PauliString y = logical_pauli(PauliLetter::kY);
  const PauliString z = logical_pauli(PauliLetter::kZ);
  out.p_x = restricted_expectation(rho, &x);
  out.p_y = restricted_expectation(rho, &y);
  out.p_z = restricted_expectation(rho, &z);
  out.n_x = out.p_x / out.p_i;
  out.n_y = out.p_y / out.p_i;
  out.n_z = out.p_z / out.p_i;
  out.rho_l = bloch_matrix(out.n_x, out.n_y, out.n_z);
  return out;
}

CodeSpaceProjection sample_code_space(const DensityMatrix& rho, std::uint64_t shots, const ReadoutModel* readout,
                                      std::mt19937_64& rng) {
  if (rho.num_qubits() != kCodeQubits) throw std::invalid_argument("code-space projection needs five qubits");
  static const std::vector<PauliString> group = stabilizer_group();
  const double scale = 1.0 / static_cast<double>(group.size());
  auto estimate = [&](const PauliString* sigma) {
    double acc = 0.0;
    for (const PauliString& s : group) {
      const PauliString op = sigma ? *sigma * s : s;
      acc += estimate_expectation(rho, op, shots, readout, rng);
    }
    return scale * acc;
  };
  CodeSpaceProjection out;
  out.p_i = estimate(nullptr);
  if (out.p_i <= kMinCodeProbability) throw std::domain_error("state is orthogonal to the code space");
  const PauliString x = logical_pauli(PauliLetter::kX);
  const PauliString y = logical_pauli(PauliLetter::kY);
  const PauliString z = logical_pauli(PauliLetter::kZ);
  out.p_x = estimate(&x);
  out.p_y = estimate(&y);
  out.p_z = estimate(&z);
  out.n_x = out.p_x / out.p_i;
  out.n_y = out.p_y / out.p_i;
  out.n_z = out.p_z / out.p_i;
  out.rho_l = mle_physical(bloch_matrix(out.n_x, out.n_y, out.n_z));
  return out;
}

DensityMatrix lift_logical(const ComplexMatrix& rho_l) {
  if (rho_l.rows() != 2 || rho_l.cols() != 2) throw std::invalid_argument("logical density matrix must be 2x2");
  ComplexMatrix basis(static_cast<Eigen::Index>(dimension_of(kCodeQubits)), 2);
  basis.col(0) = logical_zero().amplitudes();
  basis.col(1) = logical_one().amplitudes();
  return DensityMatrix::from_matrix(basis * rho_l * basis.adjoint());
}

DensityMatrix post_select_code_space(const DensityMatrix& rho) {
  if (rho.num_qubits() != kCodeQubits) throw std::invalid_argument("post-selection needs five qubits");
  const ComplexMatrix pi = code_projector();
  const ComplexMatrix m = pi * rho.matrix() * pi;
  const double p = m.trace().real();
  if (p <= kMinCodeProbability) throw std::domain_error("state is orthogonal to the code space");
  return DensityMatrix::from_matrix(m / p);
}

}  // namespace qec513
