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

#include "qec513/noise/readout.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qec513/core/ops.hpp"

namespace qec513 {

namespace {

// Applies a 2x2 matrix along the axis of `qubit` of a probability vector.
void apply_axis(std::vector<double>& p, const Eigen::Matrix2d& m, int qubit, int n) {
  const std::uint64_t bit = qubit_mask(n, qubit);
  for (std::uint64_t i = 0; i < p.size(); ++i) {
    if (i & bit) continue;
    const double a = p[i];
    const double b = p[i | bit];
    p[i] = m(0, 0) * a + m(0, 1) * b;
    p[i | bit] = m(1, 0) * a + m(1, 1) * b;
  }
}

void check_length(std::size_t len, int n) {
  if (len != dimension_of(n)) throw std::invalid_argument("probability vector length mismatch");
}

}  // namespace

ReadoutModel::ReadoutModel(std::vector<Eigen::Matrix2d> confusion) : confusion_(std::move(confusion)) {
  if (confusion_.empty() || confusion_.size() > 16) throw std::invalid_argument("readout model size must be 1..16");
  for (const Eigen::Matrix2d& c : confusion_) {
    if ((c.array() < 0.0).any() || std::abs(c.col(0).sum() - 1.0) > tol::kConstruction ||
        std::abs(c.col(1).sum() - 1.0) > tol::kConstruction) {
      throw std::invalid_argument("confusion matrix columns must be probability vectors");
    }
  }
}

ReadoutModel ReadoutModel::perfect(int num_qubits) {
  return ReadoutModel(std::vector<Eigen::Matrix2d>(static_cast<std::size_t>(num_qubits),
                                                   Eigen::Matrix2d::Identity()));
}

ReadoutModel ReadoutModel::from_device(const DeviceParams& device) {
  std::vector<Eigen::Matrix2d> c;
  for (const QubitParams& q : device.qubits) {
    Eigen::Matrix2d m;
    m << q.f00, 1.0 - q.f11, 1.0 - q.f00, q.f11;
    c.push_back(m);
  }
  return ReadoutModel(std::move(c));
}

std::vector<double> ReadoutModel::apply(std::span<const double> probabilities) const {
  check_length(probabilities.size(), num_qubits());
  std::vector<double> p(probabilities.begin(), probabilities.end());
  for (int q = 0; q < num_qubits(); ++q) apply_axis(p, confusion_[static_cast<std::size_t>(q)], q, num_qubits());
  return p;
}

std::vector<double> ReadoutModel::invert(std::span<const double> probabilities) const {
  check_length(probabilities.size(), num_qubits());
  std::vector<double> p(probabilities.begin(), probabilities.end());
  for (int q = 0; q < num_qubits(); ++q) {
    const Eigen::Matrix2d& c = confusion_[static_cast<std::size_t>(q)];
    if (std::abs(c.determinant()) < 1e-12) throw std::invalid_argument("singular confusion matrix");
    apply_axis(p, c.inverse(), q, num_qubits());
  }
  return p;
}

std::vector<double> born_probabilities(const DensityMatrix& rho, std::span<const MeasurementBasis> basis) {
  if (static_cast<int>(basis.size()) != rho.num_qubits()) {
    throw std::invalid_argument("one measurement basis per qubit is required");
  }
  DensityMatrix r = rho;
  for (int q = 0; q < rho.num_qubits(); ++q) {
    switch (basis[static_cast<std::size_t>(q)]) {
      case MeasurementBasis::kZ:
        break;
      case MeasurementBasis::kY:
        r = apply_gate(r, Gate::sdg(q));
        [[fallthrough]];
      case MeasurementBasis::kX:
        r = apply_gate(r, Gate::h(q));
        break;
    }
  }
  std::vector<double> p(rho.dimension());
  for (std::uint64_t i = 0; i < p.size(); ++i) {
    p[i] = std::max(0.0, r.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real());
  }
  return p;
}

Counts sample_measurement(const DensityMatrix& rho, std::span<const MeasurementBasis> basis,
                          std::uint64_t shots, const ReadoutModel* readout, std::mt19937_64& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  std::vector<double> p = born_probabilities(rho, basis);
  if (readout != nullptr) {
    if (readout->num_qubits() != rho.num_qubits()) throw std::invalid_argument("readout model size mismatch");
    p = readout->apply(p);
  }
  std::discrete_distribution<std::uint64_t> dist(p.begin(), p.end());
  Counts counts(p.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) ++counts[dist(rng)];
  return counts;
}

Counts sample_measurement(const DensityMatrix& rho, std::span<const MeasurementBasis> basis,
                          std::uint64_t shots, const ReadoutModel* readout, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_measurement(rho, basis, shots, readout, rng);
}

std::vector<double> frequencies(const Counts& counts) {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("no shots recorded");
  std::vector<double> f(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) f[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return f;
}

std::vector<double> confusion_correct(const Counts& counts, const ReadoutModel& readout) {
  return readout.invert(frequencies(counts));
}

}  // namespace qec513
