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

#include "qec513/core/ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qec513 {

void apply_to_columns(ComplexMatrix& columns, const ComplexMatrix& op,
                      std::span<const int> targets, int num_qubits) {
  const int k = static_cast<int>(targets.size());
  const std::uint64_t sub = dimension_of(k);
  if (op.rows() != static_cast<Eigen::Index>(sub) || op.cols() != op.rows()) {
    throw std::invalid_argument("operator size does not match target count");
  }
  // offsets[j] = basis index contribution of local index j
  std::vector<std::uint64_t> offsets(sub, 0);
  std::uint64_t target_bits = 0;
  for (std::uint64_t j = 0; j < sub; ++j) {
    for (int b = 0; b < k; ++b) {
      if ((j >> (k - 1 - b)) & 1U) offsets[j] |= qubit_mask(num_qubits, targets[b]);
    }
  }
  for (int t : targets) target_bits |= qubit_mask(num_qubits, t);

  const std::uint64_t dim = dimension_of(num_qubits);
  std::vector<Complex> in(sub), out(sub);
  for (Eigen::Index col = 0; col < columns.cols(); ++col) {
    for (std::uint64_t base = 0; base < dim; ++base) {
      if (base & target_bits) continue;
      for (std::uint64_t j = 0; j < sub; ++j) {
        in[j] = columns(static_cast<Eigen::Index>(base | offsets[j]), col);
      }
      for (std::uint64_t r = 0; r < sub; ++r) {
        Complex acc{0.0, 0.0};
        for (std::uint64_t c = 0; c < sub; ++c) {
          acc += op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
        }
        out[r] = acc;
      }
      for (std::uint64_t j = 0; j < sub; ++j) {
        columns(static_cast<Eigen::Index>(base | offsets[j]), col) = out[j];
      }
    }
  }
}

StateVector apply_gate(const StateVector& psi, const Gate& gate) {
  validate_gate(gate, psi.num_qubits());
  ComplexMatrix col = psi.amplitudes();
  apply_to_columns(col, gate.matrix(), gate.targets, psi.num_qubits());
  return StateVector::adopt_unchecked(psi.num_qubits(), col.col(0));
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& op,
                        std::span<const int> targets) {
  const int n = rho.num_qubits();
  ComplexMatrix m = rho.matrix();
  apply_to_columns(m, op, targets, n);  // op rho
  ComplexMatrix t = m.adjoint();        // rho^dag op^dag
  apply_to_columns(t, op, targets, n);  // op rho^dag op^dag = (op rho op^dag)^dag
  return DensityMatrix::adopt_unchecked(t.adjoint());
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate) {
  validate_gate(gate, rho.num_qubits());
  return conjugate(rho, gate.matrix(), gate.targets);
}

DensityMatrix apply_channel(const DensityMatrix& rho,
                            std::span<const ComplexMatrix> kraus, int target) {
  if (target < 0 || target >= rho.num_qubits()) {
    throw std::invalid_argument("channel target out of range");
  }
  if (kraus.empty()) throw std::invalid_argument("empty Kraus set");
  ComplexMatrix completeness = ComplexMatrix::Zero(2, 2);
  for (const ComplexMatrix& e : kraus) {
    if (e.rows() != 2 || e.cols() != 2) throw std::invalid_argument("Kraus operators must be 2x2");
    completeness += e.adjoint() * e;
  }
  if ((completeness - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() > tol::kEvolution) {
    throw std::invalid_argument("Kraus set is not trace preserving");
  }
  const std::array<int, 1> t{target};
  ComplexMatrix acc = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const ComplexMatrix& e : kraus) {
    if (e.cwiseAbs().maxCoeff() == 0.0) continue;
    acc += conjugate(rho, e, t).matrix();
  }
  return DensityMatrix::adopt_unchecked(std::move(acc));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  if (keep.empty()) throw std::invalid_argument("partial trace needs at least one kept qubit");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("duplicate qubit in keep set");
  }
  for (int q : kept) {
    if (q < 0 || q >= n) throw std::invalid_argument("keep index out of range");
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  const int k = static_cast<int>(kept.size());
  const int m = static_cast<int>(traced.size());

  auto spread = [n](std::uint64_t local, const std::vector<int>& qubits) {
    const int w = static_cast<int>(qubits.size());
    std::uint64_t idx = 0;
    for (int b = 0; b < w; ++b) {
      if ((local >> (w - 1 - b)) & 1U) idx |= qubit_mask(n, qubits[static_cast<std::size_t>(b)]);
    }
    return idx;
  };

  const std::uint64_t dk = dimension_of(k);
  const std::uint64_t dm = dimension_of(m);
  std::vector<std::uint64_t> kept_idx(dk), traced_idx(dm);
  for (std::uint64_t i = 0; i < dk; ++i) kept_idx[i] = spread(i, kept);
  for (std::uint64_t i = 0; i < dm; ++i) traced_idx[i] = spread(i, traced);

  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  const ComplexMatrix& r = rho.matrix();
  for (std::uint64_t a = 0; a < dk; ++a) {
    for (std::uint64_t b = 0; b < dk; ++b) {
      Complex acc{0.0, 0.0};
      for (std::uint64_t e = 0; e < dm; ++e) {
        acc += r(static_cast<Eigen::Index>(kept_idx[a] | traced_idx[e]),
                 static_cast<Eigen::Index>(kept_idx[b] | traced_idx[e]));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
    }
  }
  return DensityMatrix::adopt_unchecked(std::move(out));
}

double state_fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dimension() != psi.dimension()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const Complex f = psi.amplitudes().dot(rho.matrix() * psi.amplitudes());
  return f.real();
}

ComplexMatrix circuit_unitary(const Circuit& circuit) {
  const auto d = static_cast<Eigen::Index>(dimension_of(circuit.num_qubits()));
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  for (const Layer& layer : circuit.layers()) {
    for (const Gate& g : layer.gates) apply_to_columns(u, g.matrix(), g.targets, circuit.num_qubits());
  }
  return u;
}

StateVector run(const StateVector& psi, const Circuit& circuit) {
  if (psi.num_qubits() != circuit.num_qubits()) throw std::invalid_argument("circuit width mismatch");
  ComplexMatrix col = psi.amplitudes();
  for (const Layer& layer : circuit.layers()) {
    for (const Gate& g : layer.gates) apply_to_columns(col, g.matrix(), g.targets, circuit.num_qubits());
  }
  return StateVector::adopt_unchecked(psi.num_qubits(), col.col(0));
}

DensityMatrix run(const DensityMatrix& rho, const Circuit& circuit) {
  if (rho.num_qubits() != circuit.num_qubits()) throw std::invalid_argument("circuit width mismatch");
  DensityMatrix out = rho;
  for (const Layer& layer : circuit.layers()) {
    for (const Gate& g : layer.gates) out = conjugate(out, g.matrix(), g.targets);
  }
  return out;
}

double phase_aligned_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_aligned_norm: shape mismatch");
  }
  // The optimal phase aligns <b, a>.
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return (a - phase * b).norm();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qec513
