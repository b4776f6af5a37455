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

#include <span>
#include <vector>

#include "qec513/compile/template.hpp"

namespace qec513 {

/// Nearest value k pi / d over the denominators. No periodic reduction is
/// applied, since slot angles are only 4 pi periodic.
double snap_angle(double x, std::span<const int> denominators);
std::vector<double> snap_angles(std::span<const double> theta, std::span<const int> denominators);

struct SnapResult {
  std::vector<double> theta;
  std::vector<bool> snapped;
  /// Parameters that could not be moved onto the grid.
  std::vector<int> failed;
  double distance = 0.0;
  bool verified = false;  // distance <= snap tolerance
};

/// Moves parameters onto the grid one at a time, closest first, re-fitting
/// the remaining free parameters after each move and undoing moves that the
/// re-fit cannot absorb.
SnapResult snap_and_refine(const ComplexMatrix& target, const GateTemplate& t, std::vector<double> theta,
                           const OptimizerConfig& config);

}  // namespace qec513
