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

#include "qec513/tomography/mle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qec513 {

namespace {

Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  return (v.array() - theta).max(0.0);
}

}  // namespace

ComplexMatrix mle_physical(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("MLE input must be square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol::kEvolution) {
    throw std::invalid_argument("MLE input must be Hermitian");
  }
  const ComplexMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXd lambda = project_to_simplex(es.eigenvalues());
  return es.eigenvectors() * lambda.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qec513
