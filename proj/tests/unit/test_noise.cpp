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

#include <cmath>
#include <limits>

#include "qec513/core/ops.hpp"
#include "qec513/noise/decoherence.hpp"
#include "qec513/noise/readout.hpp"
#include "test_util.hpp"

namespace qec513 {
namespace {

constexpr double kUs = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

DensityMatrix single(Complex a, Complex b) {
  ComplexVector v(2);
  v << a, b;
  return DensityMatrix::from_state(StateVector::from_amplitudes(v));
}

TEST(Device, PaperProfileValues) {
  const DeviceParams d = DeviceParams::reference_profile();
  ASSERT_EQ(d.num_qubits(), 5);
  EXPECT_DOUBLE_EQ(d.qubits[0].t1, 27.5 * kUs);
  EXPECT_DOUBLE_EQ(d.qubits[2].t2star, 3.3 * kUs);
  EXPECT_DOUBLE_EQ(d.qubits[3].f00, 0.934);
  EXPECT_DOUBLE_EQ(d.qubits[4].f11, 0.874);
  EXPECT_NO_THROW(d.validate());
}

TEST(Device, ValidationRejectsUnphysicalValues) {
  DeviceParams d = DeviceParams::reference_profile();
  d.qubits[1].t2star = 2.5 * d.qubits[1].t1;
  EXPECT_THROW(d.validate(), std::invalid_argument);
  d = DeviceParams::reference_profile();
  d.qubits[0].f00 = 0.4;
  EXPECT_THROW(d.validate(), std::invalid_argument);
  d = DeviceParams::reference_profile();
  d.qubits[0].t1 = 0.0;
  EXPECT_THROW(d.validate(), std::invalid_argument);
}

TEST(Dephasing, PureDephasingTime) {
  // 1 / (1/5.5 - 1/55) = 55/9 us.
  EXPECT_NEAR(pure_dephasing_time(27.5 * kUs, 5.5 * kUs) / kUs, 6.111111111, 1e-8);
  EXPECT_THROW(pure_dephasing_time(10 * kUs, 20 * kUs), std::invalid_argument);

  NoiseParams p;
  p.device = DeviceParams::reference_profile();
  EXPECT_NEAR(p.tphi(0) / kUs, 55.0 / 9.0, 1e-9);
  p.tphi_mode = TphiMode::kT2Star;
  EXPECT_DOUBLE_EQ(p.tphi(0), 5.5 * kUs);
  p.tphi_mode = TphiMode::kPureDephasing;
  p.device = p.device.with_t2_equal_t1();
  EXPECT_NEAR(p.tphi(2), 2.0 * 48.6 * kUs, 1e-15);
}

TEST(Dephasing, ModeNames) {
  EXPECT_EQ(parse_tphi_mode("pure-dephasing"), TphiMode::kPureDephasing);
  EXPECT_EQ(parse_tphi_mode("t2star"), TphiMode::kT2Star);
  EXPECT_EQ(tphi_mode_name(TphiMode::kT2Star), "t2star");
  EXPECT_THROW(parse_tphi_mode("t2"), std::invalid_argument);
}

TEST(Kraus, HalfRelaxationOfExcitedState) {
  const auto k = decoherence_kraus(10 * kUs, kInf, 5 * kUs);
  const DensityMatrix out = apply_channel(single(0, 1), k, 0);
  EXPECT_NEAR(out.matrix()(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(out.matrix()(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(out.matrix()(0, 1)), 0.0, 1e-15);
}

TEST(Kraus, TracePreservingAndClosedForm) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double t1 = (10 + 40 * u(rng)) * kUs;
    const double tphi = (3 + 20 * u(rng)) * kUs;
    const double t = 1e-6 * u(rng);
    const auto k = decoherence_kraus(t1, tphi, t);
    ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
    for (const ComplexMatrix& e : k) sum += e.adjoint() * e;
    EXPECT_LT((sum - ComplexMatrix::Identity(2, 2)).norm(), 1e-14);

    // gamma = t/T1 and gamma_phi = 2 t/T_phi: populations relax by
    // (1 - gamma), coherences shrink by sqrt((1 - gamma)(1 - gamma_phi)).
    const double g = t / t1, gp = 2.0 * t / tphi;
    const DensityMatrix rho = testing::random_density(1, 2, rng);
    const ComplexMatrix out = apply_channel(rho, k, 0).matrix();
    EXPECT_NEAR(out(1, 1).real(), (1 - g) * rho.matrix()(1, 1).real(), 1e-14);
    EXPECT_LT(std::abs(out(0, 1) - std::sqrt((1 - g) * (1 - gp)) * rho.matrix()(0, 1)), 1e-14);
  }
  EXPECT_THROW(decoherence_kraus(1 * kUs, 1 * kUs, 2 * kUs), std::invalid_argument);
  EXPECT_THROW(decoherence_kraus(1 * kUs, 1 * kUs, -1.0), std::invalid_argument);
}

TEST(LayerNoise, ActsOnEveryQubit) {
  NoiseParams p;
  p.device = DeviceParams::reference_profile();
  const Circuit flip = Circuit::schedule(5, std::vector<Gate>{Gate::x(1), Gate::x(3)}, {});
  const DensityMatrix excited = run(DensityMatrix::zero(5), flip);
  const double t = 100e-9;
  const DensityMatrix out = apply_layer_noise(excited, t, p);
  const std::vector<int> q1{1}, q3{3};
  EXPECT_NEAR(partial_trace(out, q1).matrix()(1, 1).real(), 1.0 - t / p.device.qubits[1].t1, 1e-14);
  EXPECT_NEAR(partial_trace(out, q3).matrix()(1, 1).real(), 1.0 - t / p.device.qubits[3].t1, 1e-14);
  EXPECT_NEAR(out.trace(), 1.0, 1e-14);
}

TEST(LayerNoise, RunNoisyUsesLayerDurations) {
  NoiseParams p;
  p.device = DeviceParams::reference_profile();
  p.timing = {40e-9, 80e-9};
  const Circuit c =
      Circuit::schedule(5, std::vector<Gate>{Gate::x(0), Gate::cz(0, 1)}, p.timing);
  const DensityMatrix out = run_noisy(DensityMatrix::zero(5), c, p);
  // X0 then 40 ns and 80 ns of relaxation: (1 - 40/T1)(1 - 80/T1).
  const double t1 = p.device.qubits[0].t1;
  const std::vector<int> q0{0};
  EXPECT_NEAR(partial_trace(out, q0).matrix()(1, 1).real(), (1 - 40e-9 / t1) * (1 - 80e-9 / t1), 1e-14);
}

TEST(Readout, ConfusionFromDevice) {
  const ReadoutModel m = ReadoutModel::from_device(DeviceParams::reference_profile());
  ASSERT_EQ(m.num_qubits(), 5);
  const Eigen::Matrix2d& c = m.confusion(0);
  EXPECT_DOUBLE_EQ(c(0, 0), 0.982);
  EXPECT_DOUBLE_EQ(c(1, 0), 1.0 - 0.982);
  EXPECT_DOUBLE_EQ(c(1, 1), 0.831);
  EXPECT_DOUBLE_EQ(c(0, 1), 1.0 - 0.831);
}

TEST(Readout, InvertUndoesApplyExactly) {
  const ReadoutModel m = ReadoutModel::from_device(DeviceParams::reference_profile());
  std::mt19937_64 rng(3);
  const DensityMatrix rho = testing::random_density(5, 3, rng);
  const std::vector<MeasurementBasis> z(5, MeasurementBasis::kZ);
  const std::vector<double> p = born_probabilities(rho, z);
  const std::vector<double> back = m.invert(m.apply(p));
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(back[i], p[i], 1e-13);
  std::vector<Eigen::Matrix2d> singular{Eigen::Matrix2d::Constant(0.5)};
  EXPECT_THROW(ReadoutModel{singular}.invert(std::vector<double>{0.5, 0.5}), std::invalid_argument);
}

TEST(Readout, BasisRotations) {
  const double r = std::sqrt(0.5);
  const std::vector<MeasurementBasis> x{MeasurementBasis::kX}, y{MeasurementBasis::kY};
  EXPECT_NEAR(born_probabilities(single(r, r), x)[0], 1.0, 1e-15);
  EXPECT_NEAR(born_probabilities(single(r, Complex(0, r)), y)[0], 1.0, 1e-15);
  EXPECT_NEAR(born_probabilities(single(r, Complex(0, -r)), y)[1], 1.0, 1e-15);
}

TEST(Readout, SampledCorrectionWithinTolerance) {
  const ReadoutModel m = ReadoutModel::from_device(DeviceParams::reference_profile());
  std::mt19937_64 rng(17);
  const DensityMatrix rho = testing::random_density(5, 2, rng);
  const std::vector<MeasurementBasis> z(5, MeasurementBasis::kZ);
  const std::vector<double> truth = born_probabilities(rho, z);
  const Counts counts = sample_measurement(rho, z, 10000, &m, rng);
  const std::vector<double> corrected = confusion_correct(counts, m);
  // Single-qubit marginals: the quantity a parity estimate consumes.
  for (int q = 0; q < 5; ++q) {
    double pt = 0.0, pc = 0.0;
    for (std::size_t k = 0; k < truth.size(); ++k) {
      if (k & qubit_mask(5, q)) {
        pt += truth[k];
        pc += corrected[k];
      }
    }
    EXPECT_NEAR(pc, pt, 0.02) << "qubit " << q;
  }
}

TEST(Readout, SamplingIsSeeded) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(3);
  const std::vector<MeasurementBasis> z(3, MeasurementBasis::kZ);
  EXPECT_EQ(sample_measurement(rho, z, 500, nullptr, std::uint64_t{5}),
            sample_measurement(rho, z, 500, nullptr, std::uint64_t{5}));
  EXPECT_NE(sample_measurement(rho, z, 500, nullptr, std::uint64_t{5}),
            sample_measurement(rho, z, 500, nullptr, std::uint64_t{6}));
  const Counts c = sample_measurement(rho, z, 500, nullptr, std::uint64_t{5});
  std::uint64_t total = 0;
  for (auto n : c) total += n;
  EXPECT_EQ(total, 500u);
}

}  // namespace
}  // namespace qec513
