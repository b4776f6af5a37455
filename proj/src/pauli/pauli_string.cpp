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

#include "qec513/pauli/pauli_string.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace qec513 {

namespace {

const Complex kPhases[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

int mod4(int k) { return ((k % 4) + 4) % 4; }

ComplexMatrix letter_matrix(PauliLetter l) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (l) {
    case PauliLetter::kI:
      m(0, 0) = m(1, 1) = 1.0;
      break;
    case PauliLetter::kX:
      m(0, 1) = m(1, 0) = 1.0;
      break;
    case PauliLetter::kY:
      m(0, 1) = Complex{0.0, -1.0};
      m(1, 0) = Complex{0.0, 1.0};
      break;
    case PauliLetter::kZ:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

void check_sizes(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("Pauli strings have different lengths");
  }
}

}  // namespace

char letter_char(PauliLetter letter) { return "IXYZ"[static_cast<int>(letter)]; }

PauliLetter parse_letter(char c) {
  switch (c) {
    case 'I': return PauliLetter::kI;
    case 'X': return PauliLetter::kX;
    case 'Y': return PauliLetter::kY;
    case 'Z': return PauliLetter::kZ;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliString::PauliString(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 16) {
    throw std::invalid_argument("Pauli string size must be 1..16 qubits");
  }
  letters_.assign(static_cast<std::size_t>(num_qubits), PauliLetter::kI);
}

PauliString::PauliString(std::vector<PauliLetter> letters, int phase_power)
    : letters_(std::move(letters)), phase_power_(mod4(phase_power)) {
  if (letters_.empty() || letters_.size() > 16) {
    throw std::invalid_argument("Pauli string size must be 1..16 qubits");
  }
}

PauliString PauliString::parse(std::string_view text) {
  int k = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    if (text[0] == '-') k += 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text[0] == 'i') {
    k += 1;
    text.remove_prefix(1);
  }
  std::vector<PauliLetter> letters;
  for (char c : text) letters.push_back(parse_letter(c));
  return PauliString(std::move(letters), k);
}

PauliString PauliString::single(int num_qubits, int qubit, PauliLetter letter) {
  PauliString p(num_qubits);
  if (qubit < 0 || qubit >= num_qubits) throw std::invalid_argument("qubit out of range");
  p.letters_[static_cast<std::size_t>(qubit)] = letter;
  return p;
}

Complex PauliString::phase() const { return kPhases[phase_power_]; }

PauliString PauliString::with_phase_power(int k) const {
  PauliString p = *this;
  p.phase_power_ = mod4(k);
  return p;
}

int PauliString::weight() const {
  int w = 0;
  for (PauliLetter l : letters_) w += l != PauliLetter::kI;
  return w;
}

std::uint64_t PauliString::x_mask() const {
  std::uint64_t m = 0;
  const int n = num_qubits();
  for (int q = 0; q < n; ++q) {
    const PauliLetter l = letters_[static_cast<std::size_t>(q)];
    if (l == PauliLetter::kX || l == PauliLetter::kY) m |= qubit_mask(n, q);
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t m = 0;
  const int n = num_qubits();
  for (int q = 0; q < n; ++q) {
    const PauliLetter l = letters_[static_cast<std::size_t>(q)];
    if (l == PauliLetter::kZ || l == PauliLetter::kY) m |= qubit_mask(n, q);
  }
  return m;
}

ComplexMatrix PauliString::matrix() const {
  ComplexMatrix m = ComplexMatrix::Identity(1, 1) * phase();
  for (PauliLetter l : letters_) {
    const ComplexMatrix lm = letter_matrix(l);
    ComplexMatrix next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = m(i, j) * lm;
    }
    m = std::move(next);
  }
  return m;
}

std::string PauliString::letter_string() const {
  std::string s;
  for (PauliLetter l : letters_) s.push_back(letter_char(l));
  return s;
}

std::string PauliString::to_string() const {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  return kPrefix[phase_power_] + letter_string();
}

PauliString operator*(const PauliString& p, const PauliString& q) {
  check_sizes(p, q);
  std::vector<PauliLetter> out(p.letters_.size());
  int k = p.phase_power_ + q.phase_power_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int a = static_cast<int>(p.letters_[i]);
    const int b = static_cast<int>(q.letters_[i]);
    out[i] = static_cast<PauliLetter>(a ^ b);
    if (a != 0 && b != 0 && a != b) {
      // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
      k += ((b - a + 3) % 3 == 1) ? 1 : 3;
    }
  }
  return PauliString(std::move(out), k);
}

PauliString multiply(const PauliString& p, const PauliString& q) { return p * q; }

bool commutes(const PauliString& p, const PauliString& q) {
  check_sizes(p, q);
  int anti = 0;
  for (int i = 0; i < p.num_qubits(); ++i) {
    const PauliLetter a = p.letter(i);
    const PauliLetter b = q.letter(i);
    anti += a != PauliLetter::kI && b != PauliLetter::kI && a != b;
  }
  return anti % 2 == 0;
}

PauliString permute_qubits(const PauliString& p, std::span<const int> map) {
  if (static_cast<int>(map.size()) != p.num_qubits()) {
    throw std::invalid_argument("permutation length does not match Pauli string");
  }
  std::vector<bool> seen(map.size(), false);
  std::vector<PauliLetter> out(map.size());
  for (std::size_t k = 0; k < map.size(); ++k) {
    const int src = map[k];
    if (src < 0 || src >= p.num_qubits() || seen[static_cast<std::size_t>(src)]) {
      throw std::invalid_argument("qubit map is not a permutation");
    }
    seen[static_cast<std::size_t>(src)] = true;
    out[k] = p.letter(src);
  }
  return PauliString(std::move(out), p.phase_power());
}

namespace {

// P|k> = coefficient(k) |k ^ x_mask>.
struct PauliAction {
  std::uint64_t xm;
  std::uint64_t zm;
  int base_power;  // phase power plus one factor of i per Y

  explicit PauliAction(const PauliString& p) : xm(p.x_mask()), zm(p.z_mask()) {
    int ys = 0;
    for (PauliLetter l : p.letters()) ys += l == PauliLetter::kY;
    base_power = p.phase_power() + ys;
  }

  Complex coefficient(std::uint64_t k) const {
    const int sign = std::popcount(k & zm) & 1;
    return kPhases[mod4(base_power + 2 * sign)];
  }
};

}  // namespace

StateVector apply_pauli(const StateVector& psi, const PauliString& p) {
  if (p.num_qubits() != psi.num_qubits()) throw std::invalid_argument("Pauli/state size mismatch");
  const PauliAction act(p);
  ComplexVector out(psi.amplitudes().size());
  for (std::uint64_t k = 0; k < psi.dimension(); ++k) {
    out[static_cast<Eigen::Index>(k ^ act.xm)] = act.coefficient(k) * psi[k];
  }
  return StateVector::adopt_unchecked(psi.num_qubits(), std::move(out));
}

double expectation(const DensityMatrix& rho, const PauliString& p) {
  if (p.num_qubits() != rho.num_qubits()) throw std::invalid_argument("Pauli/state size mismatch");
  if (!p.is_hermitian()) {
    throw std::invalid_argument("Pauli string " + p.to_string() + " has an imaginary phase");
  }
  const PauliAction act(p);
  Complex acc{0.0, 0.0};
  const ComplexMatrix& m = rho.matrix();
  for (std::uint64_t k = 0; k < rho.dimension(); ++k) {
    acc += act.coefficient(k) *
           m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k ^ act.xm));
  }
  return acc.real();
}

double expectation(const StateVector& psi, const PauliString& p) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("Pauli string " + p.to_string() + " has an imaginary phase");
  }
  return psi.amplitudes().dot(apply_pauli(psi, p).amplitudes()).real();
}

double expectation(const DensityMatrix& rho, const PauliSum& sum) {
  double acc = 0.0;
  for (const WeightedPauli& t : sum) acc += t.weight * expectation(rho, t.op);
  return acc;
}

ComplexMatrix matrix_of(const PauliSum& sum, int num_qubits) {
  const auto d = static_cast<Eigen::Index>(dimension_of(num_qubits));
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (const WeightedPauli& t : sum) m += t.weight * t.op.matrix();
  return m;
}

std::vector<PauliString> enumerate_errors(int num_qubits, int weight) {
  if (weight < 0 || weight > num_qubits) throw std::invalid_argument("invalid error weight");
  std::vector<PauliString> out;
  std::vector<int> support;
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(support.size()) == weight) {
      const int combos = 1 << (2 * weight);
      for (int c = 0; c < combos; ++c) {
        PauliString p(num_qubits);
        std::vector<PauliLetter> letters = p.letters();
        bool ok = true;
        for (int j = 0; j < weight; ++j) {
          const int l = ((c >> (2 * (weight - 1 - j))) & 3);
          if (l == 0) ok = false;
          letters[static_cast<std::size_t>(support[static_cast<std::size_t>(j)])] =
              static_cast<PauliLetter>(l);
        }
        if (ok) out.emplace_back(std::move(letters), 0);
      }
      return;
    }
    for (int q = start; q < num_qubits; ++q) {
      support.push_back(q);
      choose(q + 1);
      support.pop_back();
    }
  };
  choose(0);
  return out;
}

}  // namespace qec513
