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

#include <set>

#include "qec513/code/encoder.hpp"
#include "qec513/code/operations.hpp"
#include "qec513/core/ops.hpp"
#include "qec513/pauli/stabilizer.hpp"
#include "qec513/tomography/code_space.hpp"
#include "qec513/tomography/fidelity.hpp"
#include "qec513/tomography/process_tomography.hpp"
#include "test_util.hpp"

namespace qec513 {
namespace {

const Complex kI{0.0, 1.0};

Complex inner(const StateVector& a, const StateVector& b) { return a.amplitudes().dot(b.amplitudes()); }

// Permutation matrix sending basis bit k of the input to bit p[k].
ComplexMatrix permutation_matrix(const std::array<int, kCodeQubits>& p) {
  const Eigen::Index d = 32;
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (std::uint64_t x = 0; x < 32; ++x) {
    std::uint64_t y = 0;
    for (int k = 0; k < kCodeQubits; ++k) {
      if (x & qubit_mask(kCodeQubits, k)) y |= qubit_mask(kCodeQubits, p[static_cast<std::size_t>(k)]);
    }
    m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return m;
}

StateVector input_state(const LogicalAmplitudes& amps) {
  ComplexVector v = ComplexVector::Zero(32);
  v(0) = amps.a;
  v(16) = amps.b;
  return StateVector::from_amplitudes(v);
}

TEST(LogicalStates, KnownAmplitudesAndNormalization) {
  const StateVector& z = logical_zero();
  for (std::uint64_t k : {0b00000u, 0b10010u, 0b01001u, 0b10100u}) EXPECT_NEAR(std::abs(z[k] - 0.25), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(inner(logical_zero(), logical_one())), 0.0, 1e-12);
  EXPECT_NEAR(z.norm(), 1.0, 1e-12);
  EXPECT_NEAR(logical_one().norm(), 1.0, 1e-12);
  // Every ket of |0_L> has even weight, every ket of |1_L> odd weight.
  for (std::uint64_t k = 0; k < 32; ++k) {
    const bool odd = std::popcount(k) % 2 == 1;
    EXPECT_EQ(odd ? z[k] : logical_one()[k], Complex(0.0)) << k;
  }
}

TEST(LogicalStates, StabilizedByGeneratorsForAllNamedStates) {
  const StabilizerSet s = StabilizerSet::five_qubit();
  for (NamedState n : all_named_states()) {
    const StateVector psi = logical_state(amplitudes_of(n));
    for (const PauliString& g : s.generators()) {
      EXPECT_LT((apply_pauli(psi, g).amplitudes() - psi.amplitudes()).norm(), 1e-12) << state_name(n);
    }
  }
}

TEST(LogicalStates, TStateBlochVector) {
  const DensityMatrix rho = DensityMatrix::from_state(logical_state(amplitudes_of(NamedState::kT)));
  const double h = std::sqrt(0.5);
  EXPECT_NEAR(expectation(rho, logical_pauli(PauliLetter::kX)), h, 1e-12);
  EXPECT_NEAR(expectation(rho, logical_pauli(PauliLetter::kY)), h, 1e-12);
  EXPECT_NEAR(expectation(rho, logical_pauli(PauliLetter::kZ)), 0.0, 1e-12);
}

TEST(LogicalStates, AmplitudeValidation) {
  EXPECT_THROW(LogicalAmplitudes::make(1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(LogicalAmplitudes::normalized(0.0, 0.0), std::invalid_argument);
  const LogicalAmplitudes a = LogicalAmplitudes::normalized(3.0, 4.0);
  EXPECT_NEAR(a.a.real(), 0.6, 1e-15);
  EXPECT_EQ(parse_state("+i"), NamedState::kPlusI);
  EXPECT_EQ(state_name(NamedState::kT), "T");
  EXPECT_THROW(parse_state("2"), std::invalid_argument);
  EXPECT_EQ(all_named_states().size(), 7u);
}

TEST(LogicalOperators, TransversalActionOnBasis) {
  EXPECT_EQ(logical_pauli(PauliLetter::kX), PauliString::parse("XXXXX"));
  const StateVector& z = logical_zero();
  const StateVector& o = logical_one();
  EXPECT_NEAR(std::abs(inner(z, apply_pauli(z, logical_pauli(PauliLetter::kZ))) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(inner(o, apply_pauli(o, logical_pauli(PauliLetter::kZ))) + 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(inner(o, apply_pauli(z, logical_pauli(PauliLetter::kX))) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(inner(o, apply_pauli(z, logical_pauli(PauliLetter::kY))) - kI), 0.0, 1e-12);
  // Y_L |+i_L> = +|+i_L>.
  const StateVector pi = logical_state(amplitudes_of(NamedState::kPlusI));
  EXPECT_NEAR(std::abs(inner(pi, apply_pauli(pi, logical_pauli(PauliLetter::kY))) - 1.0), 0.0, 1e-12);
}

TEST(LogicalOperators, XAndZAnticommuteOnCodeSpace) {
  const ComplexMatrix x = logical_pauli(PauliLetter::kX).matrix();
  const ComplexMatrix z = logical_pauli(PauliLetter::kZ).matrix();
  for (const StateVector* v : {&logical_zero(), &logical_one()}) {
    const ComplexVector a = x * (z * v->amplitudes());
    const ComplexVector b = z * (x * v->amplitudes());
    EXPECT_LT((a + b).norm(), 1e-12);
  }
}

TEST(LogicalOperators, ApplyLogicalOnTState) {
  const DensityMatrix t = DensityMatrix::from_state(logical_state(amplitudes_of(NamedState::kT)));
  const double h = std::sqrt(0.5);
  const DensityMatrix xt = apply_logical(t, PauliLetter::kX);
  EXPECT_NEAR(expectation(xt, logical_pauli(PauliLetter::kX)), h, 1e-12);
  EXPECT_NEAR(expectation(xt, logical_pauli(PauliLetter::kY)), -h, 1e-12);
  EXPECT_NEAR(project_code_space(xt).p_i, 1.0, 1e-12);
  const Circuit layer = logical_layer(PauliLetter::kY);
  ASSERT_EQ(layer.depth(), 1u);
  EXPECT_EQ(layer.gate_count(), 5u);
}

TEST(LogicalOperators, NoisyLogicalKeepsCodeSpaceProbability) {
  NoiseParams p;
  p.device = DeviceParams::reference_profile();
  const DensityMatrix rho = encode(amplitudes_of(NamedState::kZero), &p);
  const DensityMatrix out = apply_logical(rho, PauliLetter::kX, &p);
  EXPECT_NEAR(project_code_space(out).p_i, 0.576, 0.05);
}

TEST(ErrorInjection, SyndromesAndOrthogonality) {
  const StabilizerSet s = StabilizerSet::five_qubit();
  const DensityMatrix t = DensityMatrix::from_state(logical_state(amplitudes_of(NamedState::kT)));
  const std::vector<InjectedError> x1{{0, PauliLetter::kX}};
  const std::vector<double> g = generator_expectations(inject_error(t, x1), s);
  EXPECT_NEAR(g[0], 1.0, 1e-12);
  EXPECT_NEAR(g[1], 1.0, 1e-12);
  EXPECT_NEAR(g[2], 1.0, 1e-12);
  EXPECT_NEAR(g[3], -1.0, 1e-12);
  for (double v : generator_expectations(inject_error(t, {}), s)) EXPECT_NEAR(v, 1.0, 1e-12);
  for (int q = 0; q < 5; ++q) {
    for (PauliLetter l : {PauliLetter::kX, PauliLetter::kY, PauliLetter::kZ}) {
      const std::vector<InjectedError> e{{q, l}};
      const DensityMatrix bad = inject_error(t, e);
      EXPECT_NEAR(std::real((bad.matrix() * s.code_projector()).trace()), 0.0, 1e-10);
      EXPECT_THROW(project_code_space(bad), std::domain_error);
    }
  }
  const std::vector<InjectedError> same{{1, PauliLetter::kX}, {1, PauliLetter::kZ}};
  EXPECT_THROW(inject_error(t, same), std::invalid_argument);
  const std::vector<InjectedError> three{{0, PauliLetter::kX}, {1, PauliLetter::kX}, {2, PauliLetter::kX}};
  EXPECT_THROW(inject_error(t, three), std::invalid_argument);
}

TEST(Relabeling, MapIsBijection) {
  RelabelingMap m;
  EXPECT_NO_THROW(m.validate());
  EXPECT_EQ(m.original(1), 4);
  EXPECT_EQ(m.chain(4), 1);
  m.chain_to_original = {0, 1, 1, 3, 2};
  EXPECT_THROW(m.validate(), std::invalid_argument);
}

TEST(Encoder, OptimizedCircuitShape) {
  const Circuit c = build_encoder(EncoderVariant::kOptimized);
  EXPECT_EQ(c.depth(), 25u);
  EXPECT_EQ(c.two_qubit_gate_count(), 8u);
  for (const Gate& g : c.gates()) {
    if (g.is_two_qubit()) {
      EXPECT_EQ(g.kind, GateKind::kCz);
      const RelabelingMap m;
      EXPECT_EQ(std::abs(m.chain(g.targets[0]) - m.chain(g.targets[1])), 1) << g.to_string();
    } else {
      EXPECT_TRUE(g.kind == GateKind::kH || g.kind == GateKind::kS || g.kind == GateKind::kRz ||
                  g.kind == GateKind::kRy)
          << g.to_string();
      if (is_rotation(g.kind)) {
        const double twelfths = g.angle * 12.0;
        EXPECT_NEAR(twelfths, std::round(twelfths), 1e-12) << g.to_string();
      }
    }
  }
  const Circuit full = build_encoding_circuit(amplitudes_of(NamedState::kT));
  EXPECT_EQ(full.depth(), 27u);
  EXPECT_EQ(full.single_qubit_gate_count(), 54u);
}

TEST(Encoder, NearestNeighbourGateCounts) {
  const std::vector<Gate> g = encoder_gates(EncoderVariant::kNearestNeighbour);
  int two = 0, swaps = 0;
  for (const Gate& x : g) {
    if (x.kind == GateKind::kSwap) ++swaps;
    else if (x.is_two_qubit()) ++two;
  }
  EXPECT_EQ(two, 6);
  EXPECT_EQ(swaps, 2);
  EXPECT_EQ(two + 3 * swaps, 12);
}

TEST(Encoder, VariantsAgreeAsUnitaries) {
  const ComplexMatrix ref = circuit_unitary(build_encoder(EncoderVariant::kReference));
  const ComplexMatrix nn = circuit_unitary(build_encoder(EncoderVariant::kNearestNeighbour));
  const ComplexMatrix opt = circuit_unitary(build_encoder(EncoderVariant::kOptimized));
  EXPECT_LT(phase_aligned_norm(opt, nn), 1e-9);
  EXPECT_LT(phase_aligned_norm(ref, nn * permutation_matrix(reference_input_permutation())), 1e-9);
}

TEST(Encoder, ProducesLogicalStatesForAllInputs) {
  std::mt19937_64 rng(5);
  std::vector<LogicalAmplitudes> inputs;
  for (NamedState n : all_named_states()) inputs.push_back(amplitudes_of(n));
  for (int k = 0; k < 10; ++k) {
    const StateVector q = testing::random_state(1, rng);
    inputs.push_back(LogicalAmplitudes::make(q[0], q[1]));
  }
  for (EncoderVariant v : {EncoderVariant::kReference, EncoderVariant::kNearestNeighbour, EncoderVariant::kOptimized}) {
    const Circuit enc = build_encoder(v);
    for (const LogicalAmplitudes& a : inputs) {
      const StateVector out = run(input_state(a), enc);
      EXPECT_NEAR(std::abs(inner(logical_state(a), out)), 1.0, 1e-9) << variant_name(v);
    }
  }
  for (const LogicalAmplitudes& a : inputs) {
    EXPECT_NEAR(state_fidelity(encode(a), logical_state(a)), 1.0, 1e-9);
    const StateVector prepared = run(StateVector::zero(1), Circuit::schedule(1, preparation_gates(a), {}));
    EXPECT_NEAR(std::abs(inner(qubit_state(a), prepared)), 1.0, 1e-12);
  }
}

TEST(Decoder, PrunedToThreeQubitsAndInvertsEncoder) {
  const Circuit dec = build_decoder();
  EXPECT_LE(dec.touched_qubits().size(), 3u);
  EXPECT_TRUE(dec.touched_qubits().contains(0));

  // Against the unpruned inverse and against the input, for the QPT inputs.
  const Circuit full_inverse = build_encoder(EncoderVariant::kOptimized).inverse();
  const std::vector<int> keep{0};
  std::array<Eigen::Matrix2cd, 4> outputs;
  const std::array<NamedState, 4> in{NamedState::kZero, NamedState::kOne, NamedState::kPlus, NamedState::kPlusI};
  for (std::size_t k = 0; k < in.size(); ++k) {
    const LogicalAmplitudes a = amplitudes_of(in[k]);
    const DensityMatrix enc = encode(a);
    const DensityMatrix out = decode(enc);
    const DensityMatrix ref = partial_trace(run(enc, full_inverse), keep);
    EXPECT_LT((out.matrix() - ref.matrix()).norm(), 1e-9);
    EXPECT_NEAR(state_fidelity(out, qubit_state(a)), 1.0, 1e-9);
    outputs[k] = out.matrix();
  }
  const ChiMatrix chi = qpt_standard(outputs, false);
  EXPECT_LT((chi - chi_of_unitary(Eigen::Matrix2cd::Identity())).norm(), 1e-9);
}

TEST(Decoder, PruningKeepsOnlyTheBackwardCone) {
  const std::vector<Gate> gates{Gate::cz(1, 2), Gate::h(3), Gate::cz(0, 1), Gate::x(4)};
  const std::vector<Gate> kept = prune_to_cone(gates, {0});
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0], gates[0]);
  EXPECT_EQ(kept[1], gates[2]);
}

}  // namespace
}  // namespace qec513
