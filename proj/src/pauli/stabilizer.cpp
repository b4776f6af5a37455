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

#include "qec513/pauli/stabilizer.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qec513 {

namespace {

// Rank over GF(2) of the symplectic (x|z) vectors.
int symplectic_rank(const std::vector<PauliString>& ops) {
  std::vector<std::uint64_t> rows;
  for (const PauliString& p : ops) rows.push_back((p.x_mask() << 32) | p.z_mask());
  int rank = 0;
  for (int bit = 63; bit >= 0 && rank < static_cast<int>(rows.size()); --bit) {
    const std::uint64_t m = std::uint64_t{1} << bit;
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && !(rows[pivot] & m)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && (rows[r] & m)) rows[r] ^= rows[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

StabilizerSet::StabilizerSet(std::vector<PauliString> generators, PauliString logical_x,
                             PauliString logical_y, PauliString logical_z)
    : generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_y_(std::move(logical_y)),
      logical_z_(std::move(logical_z)) {
  if (generators_.empty()) throw std::invalid_argument("no stabilizer generators");
  const int n = generators_.front().num_qubits();
  for (const PauliString* p : {&logical_x_, &logical_y_, &logical_z_}) {
    if (p->num_qubits() != n) throw std::invalid_argument("logical operator size mismatch");
    if (!p->is_hermitian()) throw std::invalid_argument("logical operator is not Hermitian");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const PauliString& g = generators_[i];
    if (g.num_qubits() != n) throw std::invalid_argument("generator size mismatch");
    if (g.phase_power() != 0) {
      throw std::invalid_argument("generator " + g.to_string() + " must have phase +1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!commutes(g, generators_[j])) {
        throw std::invalid_argument("generators " + generators_[j].to_string() + " and " +
                                    g.to_string() + " anticommute");
      }
    }
    for (const PauliString* l : {&logical_x_, &logical_y_, &logical_z_}) {
      if (!commutes(g, *l)) {
        throw std::invalid_argument("logical " + l->to_string() +
                                    " anticommutes with generator " + g.to_string());
      }
    }
  }
  if (symplectic_rank(generators_) != static_cast<int>(generators_.size())) {
    throw std::invalid_argument("stabilizer generators are not independent");
  }
  if (commutes(logical_x_, logical_z_) || commutes(logical_x_, logical_y_) ||
      commutes(logical_y_, logical_z_)) {
    throw std::invalid_argument("logical operators must pairwise anticommute");
  }
}

StabilizerSet StabilizerSet::five_qubit() {
  return StabilizerSet({PauliString::parse("XZZXI"), PauliString::parse("IXZZX"),
                        PauliString::parse("XIXZZ"), PauliString::parse("ZXIXZ")},
                       PauliString::parse("XXXXX"), PauliString::parse("YYYYY"),
                       PauliString::parse("ZZZZZ"));
}

StabilizerSet StabilizerSet::relabeled(std::span<const int> map) const {
  std::vector<PauliString> gens;
  for (const PauliString& g : generators_) gens.push_back(permute_qubits(g, map));
  return StabilizerSet(std::move(gens), permute_qubits(logical_x_, map),
                       permute_qubits(logical_y_, map), permute_qubits(logical_z_, map));
}

const PauliString& StabilizerSet::logical(PauliLetter axis) const {
  switch (axis) {
    case PauliLetter::kX: return logical_x_;
    case PauliLetter::kY: return logical_y_;
    case PauliLetter::kZ: return logical_z_;
    default: throw std::invalid_argument("logical axis must be X, Y or Z");
  }
}

ComplexMatrix StabilizerSet::code_projector() const {
  const auto d = static_cast<Eigen::Index>(dimension_of(num_qubits()));
  ComplexMatrix proj = ComplexMatrix::Identity(d, d);
  for (const PauliString& g : generators_) {
    proj = proj * (ComplexMatrix::Identity(d, d) + g.matrix()) / 2.0;
  }
  return proj;
}

PauliCombination PauliCombination::from_amplitudes(Complex a, Complex b) {
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

std::vector<PauliSum> expand_group(const StabilizerSet& set, const PauliCombination& fifth) {
  const double norm2 = fifth.c_x * fifth.c_x + fifth.c_y * fifth.c_y + fifth.c_z * fifth.c_z;
  if (std::abs(norm2 - 1.0) > tol::kEvolution) {
    throw std::invalid_argument("fifth stabilizer coefficients are not normalized");
  }
  const auto& gens = set.generators();
  const int k = static_cast<int>(gens.size());
  const int terms = 1 << (k + 1);
  const double w = 1.0 / static_cast<double>(terms);
  const std::array<std::pair<double, PauliLetter>, 3> logicals{{
      {fifth.c_x, PauliLetter::kX}, {fifth.c_y, PauliLetter::kY}, {fifth.c_z, PauliLetter::kZ}}};

  std::vector<PauliSum> out;
  out.reserve(static_cast<std::size_t>(terms));
  for (int j = 0; j < terms; ++j) {
    PauliString prod(set.num_qubits());
    for (int i = 0; i < k; ++i) {
      if (j & (1 << i)) prod = prod * gens[static_cast<std::size_t>(i)];
    }
    PauliSum term;
    if (j & (1 << k)) {
      for (const auto& [c, axis] : logicals) {
        if (c != 0.0) term.push_back({w * c, prod * set.logical(axis)});
      }
    } else {
      term.push_back({w, prod});
    }
    out.push_back(std::move(term));
  }
  return out;
}

int Syndrome::index() const {
  int idx = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] < 0) idx |= 1 << i;
  }
  return idx;
}

std::string Syndrome::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) s += ',';
    s += signs[i] > 0 ? '+' : '-';
  }
  return s + ")";
}

Syndrome syndrome_of_error(const PauliString& error, const StabilizerSet& set) {
  if (set.generators().size() != 4) {
    throw std::invalid_argument("syndromes are defined for four generators");
  }
  Syndrome s;
  for (std::size_t i = 0; i < 4; ++i) s.signs[i] = commutes(error, set.generators()[i]) ? 1 : -1;
  return s;
}

std::vector<SyndromeEntry> build_syndrome_table(const StabilizerSet& set) {
  std::vector<SyndromeEntry> table;
  std::set<int> seen;
  for (int q = 0; q < set.num_qubits(); ++q) {
    for (PauliLetter l : {PauliLetter::kX, PauliLetter::kY, PauliLetter::kZ}) {
      SyndromeEntry e;
      e.qubit = q;
      e.letter = l;
      e.error = PauliString::single(set.num_qubits(), q, l);
      e.syndrome = syndrome_of_error(e.error, set);
      if (e.syndrome.trivial() || !seen.insert(e.syndrome.index()).second) {
        throw std::logic_error("syndrome map is not injective at " + e.error.to_string());
      }
      table.push_back(std::move(e));
    }
  }
  return table;
}

}  // namespace qec513
