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

#include "qec513/tomography/state_tomography.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "qec513/tomography/mle.hpp"

namespace qec513 {

namespace {

double p0_of(const Counts& counts, const ReadoutModel* readout) {
  if (counts.size() != 2) throw std::invalid_argument("single-qubit counts need two outcomes");
  const std::vector<double> f = readout ? confusion_correct(counts, *readout) : frequencies(counts);
  return f[0];
}

}  // namespace

Eigen::Vector3d bloch_vector(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw std::invalid_argument("Bloch vector needs a 2x2 matrix");
  return {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

ComplexMatrix from_bloch(const Eigen::Vector3d& r) {
  const Complex i{0.0, 1.0};
  ComplexMatrix m(2, 2);
  m << (1.0 + r.z()) / 2.0, (r.x() - i * r.y()) / 2.0, (r.x() + i * r.y()) / 2.0, (1.0 - r.z()) / 2.0;
  return m;
}

DensityMatrix qst_from_probabilities(const std::array<double, 3>& p0) {
  const Eigen::Vector3d r(2.0 * p0[0] - 1.0, 2.0 * p0[1] - 1.0, 2.0 * p0[2] - 1.0);
  return DensityMatrix::from_matrix(mle_physical(from_bloch(r)));
}

DensityMatrix qst_single_qubit(const SingleQubitCounts& counts, const ReadoutModel* readout) {
  if (counts.x.empty() || counts.y.empty() || counts.z.empty()) {
    throw std::invalid_argument("tomography needs counts in all three bases");
  }
  if (readout && readout->num_qubits() != 1) throw std::invalid_argument("single-qubit readout model expected");
  return qst_from_probabilities({p0_of(counts.x, readout), p0_of(counts.y, readout), p0_of(counts.z, readout)});
}

SingleQubitCounts sample_single_qubit(const DensityMatrix& rho, std::uint64_t shots, const ReadoutModel* readout,
                                      std::mt19937_64& rng) {
  if (rho.num_qubits() != 1) throw std::invalid_argument("single-qubit state expected");
  SingleQubitCounts c;
  const std::array<MeasurementBasis, 1> bx{MeasurementBasis::kX};
  const std::array<MeasurementBasis, 1> by{MeasurementBasis::kY};
  const std::array<MeasurementBasis, 1> bz{MeasurementBasis::kZ};
  c.x = sample_measurement(rho, bx, shots, readout, rng);
  c.y = sample_measurement(rho, by, shots, readout, rng);
  c.z = sample_measurement(rho, bz, shots, readout, rng);
  return c;
}

double estimate_expectation(const DensityMatrix& rho, const PauliString& p, std::uint64_t shots,
                            const ReadoutModel* readout, std::mt19937_64& rng) {
  if (!p.is_hermitian()) throw std::invalid_argument("observable must be Hermitian");
  const int n = rho.num_qubits();
  if (p.num_qubits() != n) throw std::invalid_argument("Pauli/state size mismatch");
  std::vector<MeasurementBasis> basis(static_cast<std::size_t>(n), MeasurementBasis::kZ);
  std::uint64_t support = 0;
  for (int q = 0; q < n; ++q) {
    const PauliLetter l = p.letter(q);
    if (l == PauliLetter::kI) continue;
    support |= qubit_mask(n, q);
    basis[static_cast<std::size_t>(q)] = l == PauliLetter::kX   ? MeasurementBasis::kX
                                         : l == PauliLetter::kY ? MeasurementBasis::kY
                                                                : MeasurementBasis::kZ;
  }
  const Counts counts = sample_measurement(rho, basis, shots, readout, rng);
  const std::vector<double> f = readout ? confusion_correct(counts, *readout) : frequencies(counts);
  double acc = 0.0;
  for (std::uint64_t k = 0; k < f.size(); ++k) acc += (std::popcount(k & support) & 1 ? -1.0 : 1.0) * f[k];
  return p.phase_power() == 2 ? -acc : acc;
}

}  // namespace qec513
