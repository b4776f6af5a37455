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

#include "qec513/tomography/process_tomography.hpp"

#include <stdexcept>

#include "qec513/core/ops.hpp"
#include "qec513/tomography/mle.hpp"

namespace qec513 {

namespace {

using Matrix16cd = Eigen::Matrix<Complex, 16, 16>;
using Vector16cd = Eigen::Matrix<Complex, 16, 1>;

Eigen::Vector4cd vec(const Eigen::Matrix2cd& m) { return Eigen::Map<const Eigen::Vector4cd>(m.data()); }

// vec(E_m rho E_n^dagger) = (conj(E_n) (x) E_m) vec(rho), column-major vec.
const Matrix16cd& basis_superops() {
  static const Matrix16cd b = [] {
    Matrix16cd out;
    const auto& e = chi_basis();
    for (int m = 0; m < 4; ++m) {
      for (int n = 0; n < 4; ++n) {
        const ComplexMatrix s = kron(e[static_cast<std::size_t>(n)].conjugate(), e[static_cast<std::size_t>(m)]);
        out.col(m * 4 + n) = Eigen::Map<const Vector16cd>(s.data());
      }
    }
    return out;
  }();
  return b;
}

}  // namespace

const std::array<Eigen::Matrix2cd, 4>& chi_basis() {
  static const std::array<Eigen::Matrix2cd, 4> basis = [] {
    const Complex i{0.0, 1.0};
    Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd x;
    x << 0.0, 1.0, 1.0, 0.0;
    Eigen::Matrix2cd y;
    y << 0.0, -i, i, 0.0;
    Eigen::Matrix2cd z;
    z << 1.0, 0.0, 0.0, -1.0;
    return std::array<Eigen::Matrix2cd, 4>{id, x, Eigen::Matrix2cd(-i * y), z};
  }();
  return basis;
}

std::array<Eigen::Matrix2cd, 4> standard_qpt_inputs() {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd zero, one, plus, plus_i;
  zero << 1.0, 0.0, 0.0, 0.0;
  one << 0.0, 0.0, 0.0, 1.0;
  plus << 0.5, 0.5, 0.5, 0.5;
  plus_i << 0.5, -0.5 * i, 0.5 * i, 0.5;
  return {zero, one, plus, plus_i};
}

ChiMatrix qpt(std::span<const Eigen::Matrix2cd> inputs, std::span<const Eigen::Matrix2cd> outputs, bool physical) {
  if (inputs.size() != 4 || outputs.size() != 4) throw std::invalid_argument("QPT needs four input/output pairs");
  Eigen::Matrix4cd in, out;
  for (int k = 0; k < 4; ++k) {
    in.col(k) = vec(inputs[static_cast<std::size_t>(k)]);
    out.col(k) = vec(outputs[static_cast<std::size_t>(k)]);
  }
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(in);
  const auto& sv = svd.singularValues();
  if (sv(3) < 1e-9 * sv(0)) throw std::invalid_argument("QPT inputs are linearly dependent");
  const Eigen::Matrix4cd superop = out * in.inverse();
  const Vector16cd s = Eigen::Map<const Vector16cd>(superop.data());
  const Vector16cd x = basis_superops().fullPivLu().solve(s);
  ChiMatrix chi;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) chi(m, n) = x(m * 4 + n);
  }
  if (physical) {
    const ComplexMatrix h = (chi + chi.adjoint()) / 2.0;
    chi = mle_physical(h);
  }
  return chi;
}

ChiMatrix qpt_standard(std::span<const Eigen::Matrix2cd> outputs, bool physical) {
  const auto inputs = standard_qpt_inputs();
  return qpt(inputs, outputs, physical);
}

ChiMatrix chi_of_unitary(const Eigen::Matrix2cd& u) {
  const Eigen::Matrix2cd arr[1] = {u};
  return chi_of_kraus(arr);
}

ChiMatrix chi_of_kraus(std::span<const Eigen::Matrix2cd> kraus) {
  ChiMatrix chi = ChiMatrix::Zero();
  const auto& e = chi_basis();
  for (const Eigen::Matrix2cd& k : kraus) {
    Eigen::Vector4cd c;
    for (int m = 0; m < 4; ++m) c(m) = (e[static_cast<std::size_t>(m)].adjoint() * k).trace() / 2.0;
    chi += c * c.adjoint();
  }
  return chi;
}

Eigen::Matrix2cd apply_chi(const ChiMatrix& chi, const Eigen::Matrix2cd& rho) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  const auto& e = chi_basis();
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      out += chi(m, n) * e[static_cast<std::size_t>(m)] * rho * e[static_cast<std::size_t>(n)].adjoint();
    }
  }
  return out;
}

double process_fidelity(const ChiMatrix& chi_exp, const ChiMatrix& chi_ideal) {
  return (chi_ideal * chi_exp).trace().real();
}

}  // namespace qec513
