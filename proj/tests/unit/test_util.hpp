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

#include <random>

#include "qec513/core/state.hpp"

namespace qec513::testing {

/// Haar-random unitary of size d (QR of a complex Gaussian matrix with the
/// diagonal phases of R fixed).
inline ComplexMatrix random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix z(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) z(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(static_cast<Eigen::Index>(dimension_of(n)));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(g(rng), g(rng));
  return StateVector::from_amplitudes(v / v.norm());
}

/// Random mixed state of rank up to `rank` (Ginibre construction).
inline DensityMatrix random_density(int n, int rank, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const auto d = static_cast<Eigen::Index>(dimension_of(n));
  ComplexMatrix a(d, rank);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < rank; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  ComplexMatrix m = a * a.adjoint();
  m /= m.trace().real();
  return DensityMatrix::from_matrix(0.5 * (m + m.adjoint()));
}

/// Full 2^n matrix of `op` on `targets`, built entry by entry: the entry is
/// op(row bits on targets, column bits on targets) when all other bits
/// agree, else zero.
inline ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& targets, int n) {
  const auto d = static_cast<Eigen::Index>(dimension_of(n));
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  std::uint64_t target_bits = 0;
  for (int t : targets) target_bits |= qubit_mask(n, t);
  auto local = [&](std::uint64_t x) {
    Eigen::Index idx = 0;
    for (int t : targets) idx = 2 * idx + ((x & qubit_mask(n, t)) ? 1 : 0);
    return idx;
  };
  for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(d); ++r) {
    for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(d); ++c) {
      if ((r & ~target_bits) != (c & ~target_bits)) continue;
      u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = op(local(r), local(c));
    }
  }
  return u;
}

}  // namespace qec513::testing
