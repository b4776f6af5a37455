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

#include "qec513/code/encoder.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qec513/core/ops.hpp"
#include "qec513/noise/decoherence.hpp"

namespace qec513 {

namespace {

// Columns of the optimized encoder, one row per chain wire 1'..5'.
// Zq / Yq: rotation by q units of pi; C: CZ with the next row; c: its
// partner; '.': idle.
constexpr std::array<std::string_view, kCodeQubits> kOptimizedRows{
    "Z4/3 Y1 Z7/6 . . C Z7/6 Y1/2 Z1 . . . . . . . . C Z1 Y1/2 Z1 . . . . . .",
    "H C Z5/6 Y1 Z7/6 c Z7/6 Y1/2 Z1 . . . . C Z1 Y3/2 Z3/4 c Z3/4 Y1/2 Z3/4 C Z3/4 Y1/2 Z1 . .",
    "H c Z5/4 Y1/2 Z1 . C Z1 Y1/2 Z5/4 C Z1/4 Y3/2 c Z1 Y3/2 Z3/4 . . . . c Z3/4 Y1/2 Z3/2 . .",
    "H C Z1/2 Y1/2 Z1/4 . c Z3/4 Y1/2 Z1/2 c Z1/2 Y3/2 Z5/4 . . . . . . . . . . . . .",
    "H c S . . . . . . . . . . . . . . . . . . . . . . . .",
};
constexpr std::size_t kOptimizedColumns = 27;

double parse_fraction(std::string_view s) {
  const auto slash = s.find('/');
  auto parse_int = [](std::string_view t) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw std::logic_error("bad angle token " + std::string(t));
    }
    return v;
  };
  if (slash == std::string_view::npos) return parse_int(s);
  return static_cast<double>(parse_int(s.substr(0, slash))) / parse_int(s.substr(slash + 1));
}

std::vector<Gate> optimized_gates() {
  const RelabelingMap map;
  std::array<std::vector<std::string>, kCodeQubits> rows;
  for (std::size_t r = 0; r < kCodeQubits; ++r) {
    std::istringstream in{std::string(kOptimizedRows[r])};
    std::string tok;
    while (in >> tok) rows[r].push_back(tok);
    if (rows[r].size() != kOptimizedColumns) throw std::logic_error("malformed encoder row");
  }
  std::vector<Gate> gates;
  for (std::size_t col = 0; col < kOptimizedColumns; ++col) {
    for (std::size_t r = 0; r < kCodeQubits; ++r) {
      const std::string& t = rows[r][col];
      const int q = map.original(static_cast<int>(r));
      if (t == "." || t == "c") continue;
      if (t == "C") {
        gates.push_back(Gate::cz(q, map.original(static_cast<int>(r) + 1)));
      } else if (t == "H") {
        gates.push_back(Gate::h(q));
      } else if (t == "S") {
        gates.push_back(Gate::s(q));
      } else if (t[0] == 'Z') {
        gates.push_back(Gate::rz(q, parse_fraction(std::string_view(t).substr(1))));
      } else if (t[0] == 'Y') {
        gates.push_back(Gate::ry(q, parse_fraction(std::string_view(t).substr(1))));
      } else {
        throw std::logic_error("unknown encoder token " + t);
      }
    }
  }
  return gates;
}

std::vector<Gate> reference_gates() {
  return {Gate::z(0),       Gate::h(2),       Gate::sdg(0),     Gate::cnot(2, 4), Gate::h(3),
          Gate::cnot(3, 1), Gate::cnot(3, 4), Gate::h(1),       Gate::sdg(4),     Gate::cnot(1, 0),
          Gate::s(3),       Gate::s(0),       Gate::s(1),       Gate::cnot(4, 0), Gate::h(4),
          Gate::cnot(4, 1), Gate::sdg(2),     Gate::z(2)};
}

std::vector<Gate> nearest_neighbour_gates() {
  const RelabelingMap map;
  auto w = [&](int chain_1based) { return map.original(chain_1based - 1); };
  return {Gate::s(w(1)),          Gate::h(w(3)),          Gate::h(w(5)),
          Gate::cnot(w(3), w(2)), Gate::cnot(w(5), w(4)), Gate::h(w(2)),
          Gate::cnot(w(3), w(4)), Gate::s(w(5)),          Gate::s(w(3)),
          Gate::sdg(w(4)),        Gate::swap(w(3), w(4)), Gate::cnot(w(2), w(1)),
          Gate::s(w(1)),          Gate::s(w(2)),          Gate::swap(w(2), w(3)),
          Gate::cnot(w(2), w(1)), Gate::h(w(2)),          Gate::cnot(w(2), w(3))};
}

}  // namespace

std::string_view variant_name(EncoderVariant v) {
  switch (v) {
    case EncoderVariant::kReference: return "reference";
    case EncoderVariant::kNearestNeighbour: return "nearest-neighbour";
    case EncoderVariant::kOptimized: return "optimized";
  }
  return "?";
}

std::vector<Gate> encoder_gates(EncoderVariant variant) {
  switch (variant) {
    case EncoderVariant::kReference: return reference_gates();
    case EncoderVariant::kNearestNeighbour: return nearest_neighbour_gates();
    case EncoderVariant::kOptimized: return optimized_gates();
  }
  throw std::logic_error("unknown encoder variant");
}

Circuit build_encoder(EncoderVariant variant, const GateTiming& timing) {
  const std::vector<Gate> gates = encoder_gates(variant);
  return Circuit::schedule(kCodeQubits, gates, timing);
}

std::array<Gate, 2> preparation_gates(const LogicalAmplitudes& amps) {
  LogicalAmplitudes::make(amps.a, amps.b);
  const double theta = 2.0 * std::acos(std::min(1.0, std::abs(amps.a)));
  double phi = 0.0;
  if (std::abs(amps.a) > tol::kConstruction && std::abs(amps.b) > tol::kConstruction) {
    phi = std::arg(amps.b) - std::arg(amps.a);
  }
  return {Gate::ry(0, theta / kPi), Gate::rz(0, phi / kPi)};
}

Circuit build_encoding_circuit(const LogicalAmplitudes& amps, const GateTiming& timing) {
  // G1 and G2 occupy their own two layers ahead of the body.
  const auto prep = preparation_gates(amps);
  const Circuit g1 = Circuit::schedule(kCodeQubits, std::span(prep).first(1), timing);
  const Circuit g2 = Circuit::schedule(kCodeQubits, std::span(prep).last(1), timing);
  return g1.then(g2).then(build_encoder(EncoderVariant::kOptimized, timing));
}

DensityMatrix encode(const LogicalAmplitudes& amps, const NoiseParams* noise) {
  const Circuit c = build_encoding_circuit(amps, noise ? noise->timing : GateTiming{});
  const DensityMatrix init = DensityMatrix::zero(kCodeQubits);
  return noise ? run_noisy(init, c, *noise) : run(init, c);
}

std::array<int, kCodeQubits> reference_input_permutation() { return {0, 4, 2, 1, 3}; }

std::vector<Gate> prune_to_cone(const std::vector<Gate>& gates, const std::set<int>& outputs) {
  std::set<int> cone = outputs;
  std::vector<bool> keep(gates.size(), false);
  for (std::size_t i = gates.size(); i-- > 0;) {
    const Gate& g = gates[i];
    bool hit = false;
    for (int t : g.targets) hit = hit || cone.count(t) > 0;
    if (!hit) continue;
    keep[i] = true;
    cone.insert(g.targets.begin(), g.targets.end());
  }
  std::vector<Gate> out;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (keep[i]) out.push_back(gates[i]);
  }
  return out;
}

Circuit build_decoder(const GateTiming& timing) {
  const std::vector<Gate> inverse = build_encoder(EncoderVariant::kOptimized, timing).inverse().gates();
  const std::vector<Gate> pruned = prune_to_cone(inverse, {0});
  return Circuit::schedule(kCodeQubits, pruned, timing);
}

DensityMatrix decode(const DensityMatrix& rho, const NoiseParams* noise) {
  const Circuit c = build_decoder(noise ? noise->timing : GateTiming{});
  const DensityMatrix out = noise ? run_noisy(rho, c, *noise) : run(rho, c);
  const std::array<int, 1> keep{0};
  return partial_trace(out, keep);
}

}  // namespace qec513
