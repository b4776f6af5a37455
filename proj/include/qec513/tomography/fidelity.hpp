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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qec513/code/logical.hpp"
#include "qec513/noise/readout.hpp"
#include "qec513/pauli/stabilizer.hpp"

namespace qec513 {

/// One nontrivial term of the stabilizer-group expansion together with its
/// measured value Tr(rho g_j) (no 2^-5 weight).
struct StabilizerTerm {
  int index = 0;  // bit i - 1 set iff generator g_i participates
  std::string label;
  double value = 0.0;
};

/// Values of the 31 nontrivial terms of prod_i (g_0 + g_i), in expand_group
/// order.
std::vector<StabilizerTerm> stabilizer_expectations(const DensityMatrix& rho, const LogicalAmplitudes& amps,
                                                    const StabilizerSet& set = StabilizerSet::five_qubit());

/// Shot estimates of the same 31 terms. Every Pauli inside a term gets its
/// own `shots` measurements, readout-corrected when a model is given.
std::vector<StabilizerTerm> sample_stabilizer_expectations(const DensityMatrix& rho, const LogicalAmplitudes& amps,
                                                           std::uint64_t shots, const ReadoutModel* readout,
                                                           std::mt19937_64& rng,
                                                           const StabilizerSet& set = StabilizerSet::five_qubit());

/// (1 + sum of term values) / 32.
double fidelity_from_terms(std::span<const StabilizerTerm> terms);

/// 2^-5 sum over the 32 terms of Tr(rho g_j); equals <psi_L|rho|psi_L>.
double stabilizer_fidelity(const DensityMatrix& rho, const LogicalAmplitudes& amps,
                           const StabilizerSet& set = StabilizerSet::five_qubit());

/// prod_i (|p_i| + 1) / 2. Throws if any |p_i| > 1 (plus rounding slack).
double syndrome_success_probability(std::span<const double> expectations);

/// Tr(rho g_i) for the four generators.
std::vector<double> generator_expectations(const DensityMatrix& rho,
                                           const StabilizerSet& set = StabilizerSet::five_qubit());

}  // namespace qec513
