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

#include <gtest/gtest.h>

#include <array>

#include "qec513/code/encoder.hpp"
#include "qec513/compile/nelder_mead.hpp"
#include "qec513/compile/pipeline.hpp"
#include "qec513/compile/snapping.hpp"
#include "qec513/compile/template.hpp"
#include "qec513/core/ops.hpp"
#include "test_util.hpp"

namespace qec513 {
namespace {

const Complex kI{0.0, 1.0};
const std::array<int, 6> kGrid{1, 2, 3, 4, 6, 12};

ComplexMatrix rz_rad(double a) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = std::exp(-kI * a / 2.0);
  m(1, 1) = std::exp(kI * a / 2.0);
  return m;
}

ComplexMatrix ry_rad(double b) {
  ComplexMatrix m(2, 2);
  m << std::cos(b / 2), -std::sin(b / 2), std::sin(b / 2), std::cos(b / 2);
  return m;
}

std::vector<double> random_theta(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  std::vector<double> t(static_cast<std::size_t>(n));
  for (double& x : t) x = u(rng);
  return t;
}

TEST(Snapping, NearestGridPoint) {
  EXPECT_DOUBLE_EQ(snap_angle(0.26 * kPi, kGrid), kPi / 4);
  EXPECT_DOUBLE_EQ(snap_angle(7.0 * kPi / 6 + 1e-3, kGrid), 7.0 * kPi / 6);
  EXPECT_DOUBLE_EQ(snap_angle(-0.01, kGrid), 0.0);
  EXPECT_DOUBLE_EQ(snap_angle(-kPi / 3 - 1e-4, kGrid), -kPi / 3);
  // No reduction: 3.5 pi stays near 3.5 pi.
  EXPECT_DOUBLE_EQ(snap_angle(3.49 * kPi, kGrid), 3.5 * kPi);
  const std::array<int, 1> halves{2};
  EXPECT_DOUBLE_EQ(snap_angle(0.3 * kPi, halves), 0.5 * kPi);
  const std::array<int, 0> none{};
  EXPECT_THROW(snap_angle(1.0, none), std::invalid_argument);
  const std::array<int, 1> zero{0};
  EXPECT_THROW(snap_angle(1.0, zero), std::invalid_argument);
  EXPECT_THROW(snap_angle(std::nan(""), kGrid), std::invalid_argument);
}

TEST(Snapping, IdempotentAndNearest) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4 * kPi, 4 * kPi);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = u(rng);
    const double s = snap_angle(x, kGrid);
    EXPECT_DOUBLE_EQ(snap_angle(s, kGrid), s);
    // Brute-force oracle over the grid on 1/12 steps.
    const double best = std::round(x / (kPi / 12)) * (kPi / 12);
    EXPECT_NEAR(s, best, 1e-12);
  }
}

TEST(NelderMead, MinimizesRosenbrock) {
  auto f = [](const Eigen::VectorXd& x) {
    return 100 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1 - x(0), 2);
  };
  const NelderMeadResult r = nelder_mead(f, Eigen::Vector2d(-1.2, 1.0));
  EXPECT_NEAR(r.x(0), 1.0, 1e-5);
  EXPECT_NEAR(r.x(1), 1.0, 1e-5);
  EXPECT_LT(r.value, 1e-10);
  for (std::size_t i = 1; i < r.best_history.size(); ++i) EXPECT_LE(r.best_history[i], r.best_history[i - 1]);
}

TEST(NelderMead, StopsAtTarget) {
  auto f = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
  NelderMeadOptions o;
  o.target_value = 1e-2;
  const NelderMeadResult r = nelder_mead(f, Eigen::Vector3d(1, 2, 3), o);
  EXPECT_LT(r.value, 1e-2);
  EXPECT_GT(r.value, 1e-6);
}

TEST(Zyz, RoundTripOnRandomUnitaries) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix u = testing::random_unitary(2, rng);
    const ZyzAngles z = zyz_decompose(u);
    const ComplexMatrix back = std::exp(kI * z.phase) * rz_rad(z.alpha) * ry_rad(z.beta) * rz_rad(z.gamma);
    EXPECT_LT((back - u).norm(), 1e-12);
  }
  EXPECT_THROW(zyz_decompose(ComplexMatrix::Identity(4, 4)), std::invalid_argument);
  EXPECT_THROW(zyz_decompose(2.0 * ComplexMatrix::Identity(2, 2)), std::invalid_argument);
}

TEST(Merge, PreservesUnitaryAndFusesRuns) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> kind(0, 5), wire(0, 2);
  std::uniform_real_distribution<double> angle(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Gate> gates;
    for (int k = 0; k < 30; ++k) {
      const int q = wire(rng);
      switch (kind(rng)) {
        case 0: gates.push_back(Gate::h(q)); break;
        case 1: gates.push_back(Gate::s(q)); break;
        case 2: gates.push_back(Gate::rz(q, angle(rng))); break;
        case 3: gates.push_back(Gate::ry(q, angle(rng))); break;
        case 4: gates.push_back(Gate::x(q)); break;
        default: gates.push_back(Gate::cz(q, (q + 1) % 3)); break;
      }
    }
    const std::vector<Gate> merged = merge_single_qubit_runs(3, gates, kGrid);
    const ComplexMatrix a = circuit_unitary(Circuit::schedule(3, gates, {}));
    const ComplexMatrix b = circuit_unitary(Circuit::schedule(3, merged, {}));
    EXPECT_LT(phase_aligned_norm(a, b), 1e-9);
    std::array<int, 3> per_wire{};
    for (const Gate& g : merged) {
      if (g.is_two_qubit()) {
        for (int t : g.targets) per_wire[static_cast<std::size_t>(t)] = 0;
        continue;
      }
      EXPECT_LE(++per_wire[static_cast<std::size_t>(g.targets[0])], 3);
    }
  }
  // Identity runs vanish, grid angles are exact.
  const std::vector<Gate> trivial{Gate::h(0), Gate::h(0), Gate::s(1), Gate::s(1)};
  const std::vector<Gate> m = merge_single_qubit_runs(2, trivial, kGrid);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], Gate::rz(1, 1.0));
}

TEST(Templates, ShapesAndUnitarity) {
  const GateTemplate b = GateTemplate::block_b(), a = GateTemplate::block_a();
  EXPECT_EQ(b.num_parameters(), 19);
  EXPECT_EQ(a.num_parameters(), 28);
  std::mt19937_64 rng(1);
  for (const GateTemplate* t : {&b, &a}) {
    const std::vector<double> theta = random_theta(t->num_parameters(), rng);
    const ComplexMatrix u = template_unitary(*t, theta);
    EXPECT_LT((u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm(), 1e-12);
    std::vector<int> wires(static_cast<std::size_t>(t->num_qubits));
    for (int q = 0; q < t->num_qubits; ++q) wires[static_cast<std::size_t>(q)] = q;
    const ComplexMatrix g = circuit_unitary(Circuit::schedule(t->num_qubits, template_gates(*t, theta, wires), {}));
    EXPECT_LT(phase_aligned_norm(u, g), 1e-12);
    std::size_t cz = 0;
    for (const auto& op : t->ops) cz += op.is_cz ? 1 : 0;
    EXPECT_EQ(cz, t == &b ? 2u : 4u);
  }
  EXPECT_THROW(template_unitary(b, std::vector<double>(3, 0.0)), std::invalid_argument);
  EXPECT_NEAR(distance(ComplexMatrix::Identity(2, 2), -ComplexMatrix::Identity(2, 2)), 8.0, 1e-15);
}

TEST(Templates, BlockBTargetMatchesHandBuiltMatrix) {
  ComplexMatrix cnot = ComplexMatrix::Zero(4, 4), swap = ComplexMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  ComplexMatrix ssdg = ComplexMatrix::Zero(4, 4);
  ssdg.diagonal() << 1.0, -kI, kI, 1.0;
  EXPECT_LT((block_b_target() - swap * ssdg * cnot).norm(), 1e-12);
}

TEST(Optimizer, ConfigValidation) {
  OptimizerConfig c;
  EXPECT_NO_THROW(c.validate());
  c.denominators.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.threshold = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.max_restarts = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Optimizer, BlockBConvergesAndSnaps) {
  const OptimizerConfig config;
  const GateTemplate t = GateTemplate::block_b();
  const OptimizeResult r = optimize(block_b_target(), t, config, 1);
  ASSERT_TRUE(r.converged);
  EXPECT_LT(r.distance, config.threshold);
  EXPECT_NEAR(distance(template_unitary(t, r.theta), block_b_target()), r.distance, 1e-12);
  const OptimizeResult again = optimize(block_b_target(), t, config, 1);
  EXPECT_EQ(again.theta, r.theta);

  const SnapResult s = snap_and_refine(block_b_target(), t, r.theta, config);
  EXPECT_TRUE(s.verified);
  EXPECT_LE(s.distance, config.snap_tolerance);
  for (std::size_t i = 0; i + 1 < s.theta.size(); ++i) {
    if (s.snapped[i]) {
      EXPECT_DOUBLE_EQ(snap_angle(s.theta[i], config.denominators), s.theta[i]);
    }
  }
}

TEST(Pipeline, RecompiledEncoderMatchesNearestNeighbour) {
  const CompileReport r = compile_encoder(OptimizerConfig{}, 1);
  EXPECT_LT(r.block_b.search.distance, 1e-3);
  EXPECT_LT(r.block_a.search.distance, 1e-3);
  EXPECT_TRUE(r.verified);
  EXPECT_LE(r.verification_distance, 1e-10);
  EXPECT_EQ(r.cz_count, 8u);
  EXPECT_EQ(r.encoder.two_qubit_gate_count(), 8u);
  EXPECT_EQ(r.single_qubit_count, r.encoder.single_qubit_gate_count());
  EXPECT_EQ(r.nn_two_qubit_gates, 6);
  EXPECT_EQ(r.nn_swaps, 2);
  EXPECT_EQ(r.nn_cnot_equivalents, 12);

  // Independent check against the reference encoder and the logical states.
  const ComplexMatrix ref = circuit_unitary(build_encoder(EncoderVariant::kNearestNeighbour));
  EXPECT_LT(phase_aligned_norm(circuit_unitary(r.encoder), ref), 1e-9);
  for (NamedState n : all_named_states()) {
    const LogicalAmplitudes a = amplitudes_of(n);
    ComplexVector in = ComplexVector::Zero(32);
    in(0) = a.a;
    in(16) = a.b;
    const StateVector out = run(StateVector::from_amplitudes(in), r.encoder);
    EXPECT_NEAR(std::abs(logical_state(a).amplitudes().dot(out.amplitudes())), 1.0, 1e-9);
  }
  for (const Gate& g : r.encoder.gates()) {
    if (g.is_two_qubit()) {
      EXPECT_EQ(g.kind, GateKind::kCz);
    }
  }
}

}  // namespace
}  // namespace qec513
