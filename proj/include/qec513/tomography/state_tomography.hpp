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
#include <cstdint>
#include <random>

#include "qec513/noise/readout.hpp"
#include "qec513/pauli/pauli_string.hpp"

namespace qec513 {

/// Single-qubit outcome counts in the X, Y and Z bases; each holds counts
/// for outcomes 0 and 1.
struct SingleQubitCounts {
  Counts x;
  Counts y;
  Counts z;
};

/// (<X>, <Y>, <Z>) of a single-qubit state.
Eigen::Vector3d bloch_vector(const ComplexMatrix& rho);
ComplexMatrix from_bloch(const Eigen::Vector3d& r);

/// Bloch reconstruction from P(0) in the X, Y, Z bases, made physical by
/// MLE.
DensityMatrix qst_from_probabilities(const std::array<double, 3>& p0);

/// Frequencies (optionally readout-corrected) fed to qst_from_probabilities.
/// Throws if any basis has no counts.
DensityMatrix qst_single_qubit(const SingleQubitCounts& counts, const ReadoutModel* readout = nullptr);

/// Samples all three bases of a single-qubit state.
SingleQubitCounts sample_single_qubit(const DensityMatrix& rho, std::uint64_t shots,
                                      const ReadoutModel* readout, std::mt19937_64& rng);

/// Shot estimate of Tr(rho P): each qubit is measured in its letter's basis
/// (Z for identity letters), frequencies are readout-corrected when a model
/// is given, and the parity over the support is averaged.
double estimate_expectation(const DensityMatrix& rho, const PauliString& p, std::uint64_t shots,
                            const ReadoutModel* readout, std::mt19937_64& rng);

}  // namespace qec513
