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

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace qec513 {

struct NelderMeadOptions {
  int max_iterations = 5000;
  double initial_step = 0.5;
  /// Stop once the best value drops below this.
  double target_value = 0.0;
  /// A simplex whose value spread and diameter both fall below these is
  /// re-expanded around its best vertex.
  double value_spread = 1e-15;
  double diameter = 1e-10;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  /// Best value after each iteration; non-increasing.
  std::vector<double> best_history;
};

/// Downhill simplex minimization with standard coefficients (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& options = {});

}  // namespace qec513
