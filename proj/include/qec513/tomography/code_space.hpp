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
#include <random>

#include "qec513/code/logical.hpp"
#include "qec513/noise/readout.hpp"
#include "qec513/pauli/stabilizer.hpp"

namespace qec513 {

/// Logical content of a five-qubit state. p_sigma = Tr(rho sigma_L Pi) with
/// Pi the code-space projector (p_i = Tr(rho Pi)); n_sigma = p_sigma / p_i;
/// rho_l = (I + n_x X + n_y Y + n_z Z) / 2.
struct CodeSpaceProjection {
  double p_i = 0.0;
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;
  double n_x = 0.0;
  double n_y = 0.0;
  double n_z = 0.0;
  ComplexMatrix rho_l;

  /// <psi|rho_l|psi> for psi = a|0> + b|1>.
  double fidelity(const LogicalAmplitudes& amps) const;
};

/// Throws std::domain_error if p_i <= 1e-9.
CodeSpaceProjection project_code_space(const DensityMatrix& rho);

/// Shot estimate of project_code_space from the 64 Pauli products
/// sigma_L s (s in the 16-element stabilizer group), each measured `shots`
/// times. rho_l is made physical by MLE. Throws std::domain_error if the
/// estimated p_i <= 1e-9.
CodeSpaceProjection sample_code_space(const DensityMatrix& rho, std::uint64_t shots, const ReadoutModel* readout,
                                      std::mt19937_64& rng);

/// Sum_ab rho_l(a, b) |a_L><b_L|.
DensityMatrix lift_logical(const ComplexMatrix& rho_l);

/// Pi rho Pi / Tr(Pi rho); throws std::domain_error if Tr(Pi rho) <= 1e-9.
DensityMatrix post_select_code_space(const DensityMatrix& rho);

}  // namespace qec513
