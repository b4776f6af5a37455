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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qec513/core/state.hpp"
#include "qec513/core/types.hpp"

namespace qec513 {

enum class PauliLetter : std::uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

char letter_char(PauliLetter letter);
PauliLetter parse_letter(char c);

/// n-qubit Pauli operator i^k * P_0 (x) ... (x) P_{n-1}. Letter q acts on
/// qubit q. The phase convention is Y = i X Z, so X * Z = -i Y.
class PauliString {
 public:
  PauliString() = default;
  /// Identity on n qubits.
  explicit PauliString(int num_qubits);
  PauliString(std::vector<PauliLetter> letters, int phase_power);

  /// Accepts an optional phase prefix out of "+", "-", "i", "+i", "-i"
  /// followed by letters, e.g. "XZZXI" or "-iXZ".
  static PauliString parse(std::string_view text);
  static PauliString single(int num_qubits, int qubit, PauliLetter letter);

  int num_qubits() const { return static_cast<int>(letters_.size()); }
  PauliLetter letter(int qubit) const { return letters_.at(static_cast<std::size_t>(qubit)); }
  const std::vector<PauliLetter>& letters() const { return letters_; }

  /// Exponent k of the phase i^k, in [0, 4).
  int phase_power() const { return phase_power_; }
  Complex phase() const;
  PauliString with_phase_power(int k) const;

  int weight() const;
  bool has_identity_letters() const { return weight() == 0; }
  bool is_hermitian() const { return phase_power_ % 2 == 0; }

  /// Bit masks over computational basis indices: the X part flips bits,
  /// the Z part contributes signs. Y letters appear in both.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  ComplexMatrix matrix() const;
  std::string to_string() const;
  std::string letter_string() const;

  PauliString operator-() const { return with_phase_power(phase_power_ + 2); }
  friend PauliString operator*(const PauliString& p, const PauliString& q);
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<PauliLetter> letters_;
  int phase_power_ = 0;
};

PauliString multiply(const PauliString& p, const PauliString& q);
bool commutes(const PauliString& p, const PauliString& q);

/// Letter k of the result is letter map[k] of p.
PauliString permute_qubits(const PauliString& p, std::span<const int> map);

/// P|psi>.
StateVector apply_pauli(const StateVector& psi, const PauliString& p);

/// Tr(rho P). Throws std::invalid_argument if P is not Hermitian.
double expectation(const DensityMatrix& rho, const PauliString& p);
double expectation(const StateVector& psi, const PauliString& p);

struct WeightedPauli {
  double weight = 0.0;
  PauliString op;
};

/// Real linear combination of Hermitian Pauli strings.
using PauliSum = std::vector<WeightedPauli>;

double expectation(const DensityMatrix& rho, const PauliSum& sum);
ComplexMatrix matrix_of(const PauliSum& sum, int num_qubits);

/// All Pauli strings on n qubits with exactly `weight` non-identity letters,
/// in lexicographic order of (qubits, letters).
std::vector<PauliString> enumerate_errors(int num_qubits, int weight);

}  // namespace qec513
