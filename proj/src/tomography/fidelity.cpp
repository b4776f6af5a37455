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

#include "qec513/tomography/fidelity.hpp"

#include <cmath>
#include <stdexcept>

#include "qec513/tomography/state_tomography.hpp"

namespace qec513 {

namespace {

template <typename Evaluate>
std::vector<StabilizerTerm> collect_terms(const StabilizerSet& set, const LogicalAmplitudes& amps, Evaluate&& eval) {
  const auto terms = expand_group(set, PauliCombination::from_amplitudes(amps.a, amps.b));
  const double scale = static_cast<double>(terms.size());
  std::vector<StabilizerTerm> out;
  for (std::size_t j = 1; j < terms.size(); ++j) {
    StabilizerTerm t;
    t.index = static_cast<int>(j);
    for (std::size_t i = 0; i < set.generators().size() + 1; ++i) {
      if (j & (std::size_t{1} << i)) t.label += "g" + std::to_string(i + 1);
    }
    t.value = scale * eval(terms[j]);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<StabilizerTerm> stabilizer_expectations(const DensityMatrix& rho, const LogicalAmplitudes& amps,
                                                    const StabilizerSet& set) {
  return collect_terms(set, amps, [&](const PauliSum& sum) { return expectation(rho, sum); });
}

std::vector<StabilizerTerm> sample_stabilizer_expectations(const DensityMatrix& rho, const LogicalAmplitudes& amps,
                                                           std::uint64_t shots, const ReadoutModel* readout,
                                                           std::mt19937_64& rng, const StabilizerSet& set) {
  if (rho.num_qubits() != set.num_qubits()) throw std::invalid_argument("state size does not match code");
  return collect_terms(set, amps, [&](const PauliSum& sum) {
    double acc = 0.0;
    for (const WeightedPauli& w : sum) {
      if (w.weight == 0.0) continue;
      acc += w.weight * estimate_expectation(rho, w.op, shots, readout, rng);
    }
    return acc;
  });
}

double fidelity_from_terms(std::span<const StabilizerTerm> terms) {
  double acc = 1.0;
  for (const StabilizerTerm& t : terms) acc += t.value;
  return acc / static_cast<double>(terms.size() + 1);
}

double stabilizer_fidelity(const DensityMatrix& rho, const LogicalAmplitudes& amps, const StabilizerSet& set) {
  if (rho.num_qubits() != set.num_qubits()) throw std::invalid_argument("state size does not match code");
  double f = 0.0;
  for (const PauliSum& term : expand_group(set, PauliCombination::from_amplitudes(amps.a, amps.b))) {
    f += expectation(rho, term);
  }
  return f;
}

double syndrome_success_probability(std::span<const double> expectations) {
  double p = 1.0;
  for (double e : expectations) {
    if (!std::isfinite(e) || std::abs(e) > 1.0 + tol::kEvolution) {
      throw std::invalid_argument("stabilizer expectation outside [-1, 1]");
    }
    p *= (std::min(1.0, std::abs(e)) + 1.0) / 2.0;
  }
  return p;
}

std::vector<double> generator_expectations(const DensityMatrix& rho, const StabilizerSet& set) {
  std::vector<double> out;
  for (const PauliString& g : set.generators()) out.push_back(expectation(rho, g));
  return out;
}

}  // namespace qec513
