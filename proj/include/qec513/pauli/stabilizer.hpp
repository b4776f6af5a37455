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

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qec513/pauli/pauli_string.hpp"

namespace qec513 {

/// Stabilizer generators plus logical operators of a one-logical-qubit code.
/// The constructor rejects generators that fail to commute, carry a phase
/// other than +1, or are dependent, and logical operators that do not commute
/// with every generator or fail to anticommute pairwise.
class StabilizerSet {
 public:
  StabilizerSet(std::vector<PauliString> generators, PauliString logical_x,
                PauliString logical_y, PauliString logical_z);

  /// g1 = XZZXI, g2 = IXZZX, g3 = XIXZZ, g4 = ZXIXZ; X_L = XXXXX,
  /// Y_L = YYYYY, Z_L = ZZZZZ.
  static StabilizerSet five_qubit();

  /// Same code with qubits renamed: new qubit k is old qubit map[k].
  StabilizerSet relabeled(std::span<const int> map) const;

  int num_qubits() const { return generators_.front().num_qubits(); }
  const std::vector<PauliString>& generators() const { return generators_; }
  const PauliString& logical(PauliLetter axis) const;

  /// prod_i (I + g_i) / 2.
  ComplexMatrix code_projector() const;

 private:
  std::vector<PauliString> generators_;
  PauliString logical_x_;
  PauliString logical_y_;
  PauliString logical_z_;
};

/// Real combination c_x X_L + c_y Y_L + c_z Z_L with unit norm; the fifth
/// stabilizer of the logical state whose Bloch vector is (c_x, c_y, c_z).
struct PauliCombination {
  double c_x = 0.0;
  double c_y = 0.0;
  double c_z = 1.0;

  /// Bloch vector of a|0> + b|1>.
  static PauliCombination from_amplitudes(Complex a, Complex b);
};

/// Expansion of prod_{i=1..5} (g_0 + g_i) / 2^5, g_5 being the combination.
/// Term j contains generator i (1-based) iff bit (i - 1) of j is set, so term
/// 0 is g_0 with weight 1/32. Throws if the combination is not unit norm
/// within 1e-10.
std::vector<PauliSum> expand_group(const StabilizerSet& set, const PauliCombination& fifth);

/// Signs of the four generator measurements, ordered (g1, g2, g3, g4).
struct Syndrome {
  std::array<int, 4> signs{1, 1, 1, 1};

  bool trivial() const { return signs == std::array<int, 4>{1, 1, 1, 1}; }
  /// Bit i set iff sign i is -1.
  int index() const;
  std::string to_string() const;

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
  friend auto operator<=>(const Syndrome&, const Syndrome&) = default;
};

Syndrome syndrome_of_error(const PauliString& error, const StabilizerSet& set);

struct SyndromeEntry {
  int qubit = 0;
  PauliLetter letter = PauliLetter::kX;
  PauliString error;
  Syndrome syndrome;
};

/// The 15 single-qubit errors ordered by qubit, then X, Y, Z. Throws
/// std::logic_error if two errors share a syndrome or one is trivial.
std::vector<SyndromeEntry> build_syndrome_table(const StabilizerSet& set);

}  // namespace qec513
