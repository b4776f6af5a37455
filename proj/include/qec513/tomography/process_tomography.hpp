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

#include "qec513/core/types.hpp"

namespace qec513 {

/// chi in the operator basis {I, X, -iY, Z}: eps(rho) = sum chi_mn E_m rho E_n^dagger.
using ChiMatrix = Eigen::Matrix4cd;

const std::array<Eigen::Matrix2cd, 4>& chi_basis();

/// |0><0|, |1><1|, |+><+|, |+i><+i|.
std::array<Eigen::Matrix2cd, 4> standard_qpt_inputs();

/// Linear-inversion chi from four input/output pairs. Throws
/// std::invalid_argument if the inputs do not span the operator space.
/// With `physical` the result is passed through MLE.
ChiMatrix qpt(std::span<const Eigen::Matrix2cd> inputs, std::span<const Eigen::Matrix2cd> outputs,
              bool physical = true);

/// qpt over standard_qpt_inputs().
ChiMatrix qpt_standard(std::span<const Eigen::Matrix2cd> outputs, bool physical = true);

ChiMatrix chi_of_unitary(const Eigen::Matrix2cd& u);
ChiMatrix chi_of_kraus(std::span<const Eigen::Matrix2cd> kraus);

Eigen::Matrix2cd apply_chi(const ChiMatrix& chi, const Eigen::Matrix2cd& rho);

/// Re Tr(chi_ideal chi_exp).
double process_fidelity(const ChiMatrix& chi_exp, const ChiMatrix& chi_ideal);

}  // namespace qec513
