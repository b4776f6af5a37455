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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qec513/core/state.hpp"
#include "qec513/noise/device.hpp"

namespace qec513 {

enum class MeasurementBasis { kX, kY, kZ };

using Counts = std::vector<std::uint64_t>;

/// Per-qubit confusion matrices C = [[f00, 1 - f11], [1 - f00, f11]] mapping
/// true outcome probabilities (columns) to reported ones (rows).
class ReadoutModel {
 public:
  explicit ReadoutModel(std::vector<Eigen::Matrix2d> confusion);

  static ReadoutModel perfect(int num_qubits);
  static ReadoutModel from_device(const DeviceParams& device);

  int num_qubits() const { return static_cast<int>(confusion_.size()); }
  const Eigen::Matrix2d& confusion(int qubit) const { return confusion_.at(static_cast<std::size_t>(qubit)); }

  /// (C_0 (x) ... (x) C_{n-1}) p.
  std::vector<double> apply(std::span<const double> probabilities) const;
  /// Inverse of apply; throws if any confusion matrix is singular.
  std::vector<double> invert(std::span<const double> probabilities) const;

 private:
  std::vector<Eigen::Matrix2d> confusion_;
};

/// Outcome probabilities after rotating each qubit into its basis
/// (X: H, Y: S-dagger then H). Outcome index uses qubit 0 as the most
/// significant bit.
std::vector<double> born_probabilities(const DensityMatrix& rho, std::span<const MeasurementBasis> basis);

/// Draws `shots` outcomes and passes each through the readout model if
/// given.
Counts sample_measurement(const DensityMatrix& rho, std::span<const MeasurementBasis> basis,
                          std::uint64_t shots, const ReadoutModel* readout, std::mt19937_64& rng);
Counts sample_measurement(const DensityMatrix& rho, std::span<const MeasurementBasis> basis,
                          std::uint64_t shots, const ReadoutModel* readout, std::uint64_t seed);

std::vector<double> frequencies(const Counts& counts);

/// Linear inversion of the readout map applied to empirical frequencies.
/// Entries may be slightly negative.
std::vector<double> confusion_correct(const Counts& counts, const ReadoutModel& readout);

}  // namespace qec513
