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

#include "qec513/core/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qec513 {

double GateTiming::layer_duration(std::span<const Gate> gates) const {
  if (gates.empty()) return 0.0;
  double d = 0.0;
  for (const Gate& g : gates) {
    d = std::max(d, g.is_two_qubit() ? two_qubit : single_qubit);
  }
  return d;
}

bool Layer::has_two_qubit_gate() const {
  return std::any_of(gates.begin(), gates.end(),
                     [](const Gate& g) { return g.is_two_qubit(); });
}

void validate_layer(const Layer& layer, int num_qubits) {
  std::vector<bool> used(static_cast<std::size_t>(num_qubits), false);
  int two_qubit = 0;
  for (const Gate& g : layer.gates) {
    validate_gate(g, num_qubits);
    for (int t : g.targets) {
      if (used[static_cast<std::size_t>(t)]) {
        throw std::invalid_argument("qubit " + std::to_string(t) +
                                    " targeted twice in one layer");
      }
      used[static_cast<std::size_t>(t)] = true;
    }
    if (g.is_two_qubit()) ++two_qubit;
  }
  if (two_qubit > 1) {
    throw std::invalid_argument("more than one two-qubit gate in a layer");
  }
  if (!(layer.duration >= 0.0)) {
    throw std::invalid_argument("negative layer duration");
  }
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 16) {
    throw std::invalid_argument("circuit size must be 1..16 qubits");
  }
}

void Circuit::add_layer(Layer layer) {
  validate_layer(layer, num_qubits_);
  layers_.push_back(std::move(layer));
}

Circuit Circuit::schedule(int num_qubits, std::span<const Gate> gates,
                          const GateTiming& timing) {
  std::vector<std::vector<Gate>> slots;
  std::vector<int> next_free(static_cast<std::size_t>(num_qubits), 0);
  int next_two_qubit = 0;
  for (const Gate& g : gates) {
    validate_gate(g, num_qubits);
    int layer = 0;
    for (int t : g.targets) layer = std::max(layer, next_free[static_cast<std::size_t>(t)]);
    if (g.is_two_qubit()) layer = std::max(layer, next_two_qubit);
    if (static_cast<std::size_t>(layer) >= slots.size()) slots.resize(layer + 1);
    slots[static_cast<std::size_t>(layer)].push_back(g);
    for (int t : g.targets) next_free[static_cast<std::size_t>(t)] = layer + 1;
    if (g.is_two_qubit()) next_two_qubit = layer + 1;
  }
  Circuit c(num_qubits);
  for (auto& s : slots) {
    Layer l{std::move(s), 0.0};
    l.duration = timing.layer_duration(l.gates);
    c.add_layer(std::move(l));
  }
  return c;
}

std::size_t Circuit::gate_count() const {
  std::size_t n = 0;
  for (const Layer& l : layers_) n += l.gates.size();
  return n;
}

std::size_t Circuit::two_qubit_gate_count() const {
  std::size_t n = 0;
  for (const Layer& l : layers_) {
    n += static_cast<std::size_t>(std::count_if(
        l.gates.begin(), l.gates.end(), [](const Gate& g) { return g.is_two_qubit(); }));
  }
  return n;
}

std::size_t Circuit::single_qubit_gate_count() const {
  return gate_count() - two_qubit_gate_count();
}

double Circuit::total_duration() const {
  double t = 0.0;
  for (const Layer& l : layers_) t += l.duration;
  return t;
}

std::vector<Gate> Circuit::gates() const {
  std::vector<Gate> out;
  for (const Layer& l : layers_) out.insert(out.end(), l.gates.begin(), l.gates.end());
  return out;
}

std::set<int> Circuit::touched_qubits() const {
  std::set<int> out;
  for (const Layer& l : layers_) {
    for (const Gate& g : l.gates) out.insert(g.targets.begin(), g.targets.end());
  }
  return out;
}

Circuit Circuit::inverse() const {
  Circuit inv(num_qubits_);
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    Layer l;
    l.duration = it->duration;
    for (auto g = it->gates.rbegin(); g != it->gates.rend(); ++g) l.gates.push_back(g->inverse());
    inv.layers_.push_back(std::move(l));
  }
  return inv;
}

Circuit Circuit::then(const Circuit& next) const {
  if (next.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("cannot concatenate circuits of different width");
  }
  Circuit out = *this;
  out.layers_.insert(out.layers_.end(), next.layers_.begin(), next.layers_.end());
  return out;
}

}  // namespace qec513
