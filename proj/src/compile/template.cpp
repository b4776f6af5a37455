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

#include "qec513/compile/template.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

#include "qec513/compile/nelder_mead.hpp"
#include "qec513/core/ops.hpp"

namespace qec513 {

namespace {

ComplexMatrix slot_matrix(double alpha, double beta, double gamma) {
  const Complex i{0.0, 1.0};
  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);
  ComplexMatrix m(2, 2);
  m << std::exp(-i * (alpha + gamma) / 2.0) * c, -std::exp(-i * (alpha - gamma) / 2.0) * s,
      std::exp(i * (alpha - gamma) / 2.0) * s, std::exp(i * (alpha + gamma) / 2.0) * c;
  return m;
}

ComplexMatrix sequence_unitary(int n, const std::vector<Gate>& gates) {
  const auto d = static_cast<Eigen::Index>(dimension_of(n));
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  for (const Gate& g : gates) apply_to_columns(u, g.matrix(), g.targets, n);
  return u;
}

// Residual functor over the free parameters for Eigen's Levenberg-Marquardt.
struct Residual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const ComplexMatrix* target;
  const GateTemplate* tmpl;
  std::vector<double> base;
  std::vector<int> free;

  int inputs() const { return static_cast<int>(free.size()); }
  int values() const { return static_cast<int>(2 * target->size()); }

  std::vector<double> expand(const Eigen::VectorXd& x) const {
    std::vector<double> theta = base;
    for (std::size_t k = 0; k < free.size(); ++k) theta[static_cast<std::size_t>(free[k])] = x(static_cast<Eigen::Index>(k));
    return theta;
  }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& fvec) const {
    const ComplexMatrix diff = template_unitary(*tmpl, expand(x)) - *target;
    const Eigen::Index m = diff.size();
    fvec.resize(2 * m);
    for (Eigen::Index k = 0; k < m; ++k) {
      fvec(2 * k) = diff.data()[k].real();
      fvec(2 * k + 1) = diff.data()[k].imag();
    }
    return 0;
  }
};

// LevenbergMarquardt expects the functor to name its QR solver.
struct DiffResidual : Eigen::NumericalDiff<Residual, Eigen::Central> {
  using QRSolver = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>;
  explicit DiffResidual(const Residual& r) : Eigen::NumericalDiff<Residual, Eigen::Central>(r) {}
};

}  // namespace

double distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw std::invalid_argument("distance: shape mismatch");
  return (u - v).squaredNorm();
}

GateTemplate GateTemplate::block_b() {
  GateTemplate t{"b", 2, {}};
  const Op s0{false, 0, 0}, s1{false, 1, 1}, cz{true, 0, 1};
  t.ops = {s0, s1, cz, s0, s1, cz, s0, s1};
  return t;
}

GateTemplate GateTemplate::block_a() {
  GateTemplate t{"a", 3, {}};
  const Op s0{false, 0, 0}, s1{false, 1, 1}, s2{false, 2, 2};
  const Op cz01{true, 0, 1}, cz12{true, 1, 2};
  t.ops = {s0, cz01, s0, s1, cz12, s1, s2, cz01, s0, s1, cz12, s1, s2};
  return t;
}

int GateTemplate::num_slots() const {
  int n = 0;
  for (const Op& op : ops) n += !op.is_cz;
  return n;
}

ComplexMatrix template_unitary(const GateTemplate& t, std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != t.num_parameters()) {
    throw std::invalid_argument("template expects " + std::to_string(t.num_parameters()) + " parameters");
  }
  const auto d = static_cast<Eigen::Index>(dimension_of(t.num_qubits));
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  static const ComplexMatrix cz = Gate::cz(0, 1).matrix();
  std::size_t k = 0;
  for (const GateTemplate::Op& op : t.ops) {
    if (op.is_cz) {
      const std::array<int, 2> targets{op.a, op.b};
      apply_to_columns(u, cz, targets, t.num_qubits);
    } else {
      const std::array<int, 1> targets{op.a};
      apply_to_columns(u, slot_matrix(theta[k], theta[k + 1], theta[k + 2]), targets, t.num_qubits);
      k += 3;
    }
  }
  return std::exp(Complex{0.0, theta[k]}) * u;
}

std::vector<Gate> template_gates(const GateTemplate& t, std::span<const double> theta, std::span<const int> wires) {
  if (static_cast<int>(theta.size()) != t.num_parameters()) throw std::invalid_argument("parameter count mismatch");
  if (static_cast<int>(wires.size()) != t.num_qubits) throw std::invalid_argument("wire count mismatch");
  std::vector<Gate> gates;
  std::size_t k = 0;
  for (const GateTemplate::Op& op : t.ops) {
    if (op.is_cz) {
      gates.push_back(Gate::cz(wires[static_cast<std::size_t>(op.a)], wires[static_cast<std::size_t>(op.b)]));
      continue;
    }
    const int q = wires[static_cast<std::size_t>(op.a)];
    gates.push_back(Gate::rz(q, theta[k + 2] / kPi));
    gates.push_back(Gate::ry(q, theta[k + 1] / kPi));
    gates.push_back(Gate::rz(q, theta[k] / kPi));
    k += 3;
  }
  return gates;
}

ComplexMatrix block_b_target() {
  return sequence_unitary(2, {Gate::cnot(0, 1), Gate::s(0), Gate::sdg(1), Gate::swap(0, 1)});
}

ComplexMatrix block_a_target() {
  return sequence_unitary(3, {Gate::cnot(1, 0), Gate::s(0), Gate::s(1), Gate::swap(1, 2), Gate::cnot(1, 0),
                              Gate::h(1), Gate::cnot(1, 2)});
}

void OptimizerConfig::validate() const {
  if (max_restarts < 1 || iterations_per_restart < 1) throw std::invalid_argument("optimizer budgets must be positive");
  if (!(threshold > 0.0) || !(snap_tolerance > 0.0)) throw std::invalid_argument("optimizer thresholds must be positive");
  if (denominators.empty()) throw std::invalid_argument("angle grid needs at least one denominator");
  for (int d : denominators) {
    if (d < 1) throw std::invalid_argument("angle grid denominators must be positive");
  }
}

OptimizeResult optimize(const ComplexMatrix& target, const GateTemplate& t, const OptimizerConfig& config,
                        std::uint64_t seed) {
  config.validate();
  const auto d = static_cast<Eigen::Index>(dimension_of(t.num_qubits));
  if (target.rows() != d || target.cols() != d) throw std::invalid_argument("target size does not match template");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * kPi);
  const int np = t.num_parameters();

  auto cost = [&](const Eigen::VectorXd& x) {
    return distance(template_unitary(t, std::span<const double>(x.data(), static_cast<std::size_t>(x.size()))), target);
  };
  NelderMeadOptions nm;
  nm.max_iterations = config.iterations_per_restart;
  nm.target_value = config.threshold;

  OptimizeResult best;
  best.distance = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.max_restarts; ++r) {
    Eigen::VectorXd x0(np);
    for (int i = 0; i < np; ++i) x0(i) = uniform(rng);
    const NelderMeadResult res = nelder_mead(cost, x0, nm);
    best.restarts = r + 1;
    if (res.value < best.distance) {
      best.distance = res.value;
      best.theta.assign(res.x.data(), res.x.data() + res.x.size());
      best.best_restart = r;
    }
    if (best.distance < config.threshold) break;
  }
  best.converged = best.distance < config.threshold;
  return best;
}

double refine(const ComplexMatrix& target, const GateTemplate& t, std::vector<double>& theta,
              const std::vector<bool>& fixed) {
  if (static_cast<int>(theta.size()) != t.num_parameters() || fixed.size() != theta.size()) {
    throw std::invalid_argument("parameter count mismatch");
  }
  Residual f{&target, &t, theta, {}};
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!fixed[i]) f.free.push_back(static_cast<int>(i));
  }
  if (f.free.empty()) return distance(template_unitary(t, theta), target);
  Eigen::VectorXd x(static_cast<Eigen::Index>(f.free.size()));
  for (std::size_t k = 0; k < f.free.size(); ++k) x(static_cast<Eigen::Index>(k)) = theta[static_cast<std::size_t>(f.free[k])];

  DiffResidual numdiff(f);
  Eigen::LevenbergMarquardt<DiffResidual> lm(numdiff);
  lm.setMaxfev(2000);
  lm.setFtol(1e-30);
  lm.setXtol(1e-30);
  lm.setFactor(0.1);
  lm.minimize(x);

  // Slot angles have period 4 pi and the phase 2 pi; folding keeps later
  // grid snapping exact.
  std::vector<double> candidate = f.expand(x);
  for (std::size_t i = 0; i + 1 < candidate.size(); ++i) candidate[i] = std::remainder(candidate[i], 4.0 * kPi);
  candidate.back() = std::remainder(candidate.back(), 2.0 * kPi);
  const double before = distance(template_unitary(t, theta), target);
  const double after = distance(template_unitary(t, candidate), target);
  if (after < before) {
    theta = candidate;
    return after;
  }
  return before;
}

}  // namespace qec513
