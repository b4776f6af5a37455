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

#include "qec513/compile/snapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qec513 {

namespace {

double circular_gap(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

}  // namespace

double snap_angle(double x, std::span<const int> denominators) {
  if (denominators.empty()) throw std::invalid_argument("angle grid needs at least one denominator");
  if (!std::isfinite(x)) throw std::invalid_argument("cannot snap a non-finite angle");
  double best = 0.0;
  double gap = std::numeric_limits<double>::infinity();
  for (int d : denominators) {
    if (d < 1) throw std::invalid_argument("angle grid denominators must be positive");
    const double step = kPi / d;
    const double candidate = std::round(x / step) * step;
    const double g = std::abs(candidate - x);
    if (g < gap) {
      gap = g;
      best = candidate;
    }
  }
  return best;
}

std::vector<double> snap_angles(std::span<const double> theta, std::span<const int> denominators) {
  std::vector<double> out;
  out.reserve(theta.size());
  for (double x : theta) out.push_back(snap_angle(x, denominators));
  return out;
}

SnapResult snap_and_refine(const ComplexMatrix& target, const GateTemplate& t, std::vector<double> theta,
                           const OptimizerConfig& config) {
  config.validate();
  const std::size_t n = theta.size();
  if (static_cast<int>(n) != t.num_parameters()) throw std::invalid_argument("parameter count mismatch");
  const double accept = config.snap_tolerance * 1e-2;

  std::vector<bool> fixed(n, false);
  refine(target, t, theta, fixed);

  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
      if (!fixed[i]) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return circular_gap(theta[a], snap_angle(theta[a], config.denominators)) <
             circular_gap(theta[b], snap_angle(theta[b], config.denominators));
    });
    for (std::size_t i : order) {
      std::vector<double> trial = theta;
      trial[i] = snap_angle(trial[i], config.denominators);
      std::vector<bool> trial_fixed = fixed;
      trial_fixed[i] = true;
      const double d = refine(target, t, trial, trial_fixed);
      if (d < accept) {
        theta = std::move(trial);
        fixed = std::move(trial_fixed);
        progress = true;
        break;
      }
    }
  }

  SnapResult out;
  out.snapped = fixed;
  for (std::size_t i = 0; i < n; ++i) {
    if (!fixed[i]) out.failed.push_back(static_cast<int>(i));
  }
  out.theta = std::move(theta);
  out.distance = distance(template_unitary(t, out.theta), target);
  out.verified = out.distance <= config.snap_tolerance;
  return out;
}

}  // namespace qec513
