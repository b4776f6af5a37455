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

#include "qec513/compile/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qec513 {

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& options) {
  const Eigen::Index n = x0.size();
  if (n == 0) throw std::invalid_argument("Nelder-Mead needs at least one parameter");
  NelderMeadResult result;

  auto eval = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    return f(x);
  };

  std::vector<Eigen::VectorXd> simplex(static_cast<std::size_t>(n + 1), x0);
  std::vector<double> values(simplex.size());
  auto build = [&](const Eigen::VectorXd& base, double base_value) {
    simplex[0] = base;
    values[0] = base_value;
    for (Eigen::Index i = 0; i < n; ++i) {
      simplex[static_cast<std::size_t>(i + 1)] = base;
      simplex[static_cast<std::size_t>(i + 1)](i) += options.initial_step;
      values[static_cast<std::size_t>(i + 1)] = eval(simplex[static_cast<std::size_t>(i + 1)]);
    }
  };
  build(x0, eval(x0));

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Eigen::VectorXd> s2;
    std::vector<double> v2;
    for (std::size_t i : order) {
      s2.push_back(simplex[i]);
      v2.push_back(values[i]);
    }
    simplex = std::move(s2);
    values = std::move(v2);
  };

  const std::size_t worst = static_cast<std::size_t>(n);
  for (int it = 0; it < options.max_iterations; ++it) {
    sort_simplex();
    result.iterations = it + 1;
    if (values[0] <= options.target_value) {
      result.best_history.push_back(values[0]);
      break;
    }

    double diameter = 0.0;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      diameter = std::max(diameter, (simplex[i] - simplex[0]).cwiseAbs().maxCoeff());
    }
    if (values[worst] - values[0] < options.value_spread && diameter < options.diameter) {
      build(simplex[0], values[0]);
      result.best_history.push_back(values[0]);
      continue;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < worst; ++i) centroid += simplex[i];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
    const double fr = eval(reflected);
    if (fr < values[0]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
    } else if (fr < values[worst - 1]) {
      simplex[worst] = reflected;
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      const Eigen::VectorXd contracted =
          outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                  : Eigen::VectorXd(centroid + 0.5 * (simplex[worst] - centroid));
      const double fc = eval(contracted);
      if (fc < (outside ? fr : values[worst])) {
        simplex[worst] = contracted;
        values[worst] = fc;
      } else {
        for (std::size_t i = 1; i < simplex.size(); ++i) {
          simplex[i] = simplex[0] + 0.5 * (simplex[i] - simplex[0]);
          values[i] = eval(simplex[i]);
        }
      }
    }
    result.best_history.push_back(*std::min_element(values.begin(), values.end()));
  }
  sort_simplex();
  result.x = simplex[0];
  result.value = values[0];
  return result;
}

}  // namespace qec513
