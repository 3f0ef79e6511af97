// Copyright 2026 The Accredia Authors
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

#include "accredia/circuit.hpp"

#include <cmath>

#include "accredia/errors.hpp"

namespace accredia {

std::string_view gate_name(Gate g) noexcept {
  switch (g) {
    case Gate::I: return "I";
    case Gate::X: return "X";
    case Gate::Y: return "Y";
    case Gate::Z: return "Z";
    case Gate::H: return "H";
  }
  return "?";
}

Gate gate_from_name(std::string_view name) {
  if (name == "I") return Gate::I;
  if (name == "X") return Gate::X;
  if (name == "Y") return Gate::Y;
  if (name == "Z") return Gate::Z;
  if (name == "H") return Gate::H;
  throw ParseError("unknown gate '" + std::string(name) + "'");
}

Gate gate_from_letter(PauliLetter letter) noexcept {
  switch (letter) {
    case PauliLetter::I: return Gate::I;
    case PauliLetter::X: return Gate::X;
    case PauliLetter::Y: return Gate::Y;
    case PauliLetter::Z: return Gate::Z;
  }
  return Gate::I;
}

GateSequence parse_gate_sequence(std::string_view text) {
  if (text.empty()) throw ParseError("empty gate sequence");
  GateSequence seq;
  for (char c : text) seq.push_back(gate_from_name(std::string_view(&c, 1)));
  return seq;
}

std::string format_gate_sequence(const GateSequence& seq) {
  if (seq.empty()) return "I";
  std::string out;
  for (auto g : seq) out += gate_name(g);
  return out;
}

GateLayer GateLayer::identity(std::size_t n_qubits) {
  return GateLayer{std::vector<GateSequence>(n_qubits, GateSequence{Gate::I})};
}

GateLayer GateLayer::from_pauli(const PauliString& word) {
  GateLayer layer;
  layer.gates.reserve(word.n_qubits());
  for (std::size_t q = 0; q < word.n_qubits(); ++q) {
    layer.gates.push_back({gate_from_letter(word.letter(q))});
  }
  return layer;
}

bool GateLayer::is_identity() const noexcept {
  for (const auto& seq : gates) {
    for (auto g : seq) {
      if (g != Gate::I) return false;
    }
  }
  return true;
}

std::string_view circuit_kind_name(CircuitKind k) noexcept {
  switch (k) {
    case CircuitKind::bare: return "bare";
    case CircuitKind::target: return "target";
    case CircuitKind::trap: return "trap";
  }
  return "?";
}

std::size_t HybridCircuit::evolution_count() const {
  std::size_t n = 0;
  for (const auto& s : body) n += std::holds_alternative<Evolution>(s) ? 1 : 0;
  return n;
}

std::size_t HybridCircuit::gate_layer_count() const {
  return body.size() - evolution_count();
}

std::vector<SegmentKind> HybridCircuit::shape() const {
  std::vector<SegmentKind> out;
  out.reserve(body.size());
  for (const auto& s : body) {
    out.push_back(std::holds_alternative<Evolution>(s) ? SegmentKind::evolution
                                                       : SegmentKind::gate_layer);
  }
  return out;
}

std::vector<double> HybridCircuit::evolution_durations() const {
  std::vector<double> out;
  for (const auto& s : body) {
    if (const auto* e = std::get_if<Evolution>(&s)) out.push_back(e->duration);
  }
  return out;
}

void HybridCircuit::validate() const {
  if (n_qubits == 0) throw ParameterError("n_qubits", "must be positive");
  auto check_layer = [&](const GateLayer& layer, const char* where) {
    if (layer.width() != n_qubits) {
      throw DimensionError(std::string(where) + " layer has " +
                           std::to_string(layer.width()) + " entries for " +
                           std::to_string(n_qubits) + " qubits");
    }
  };
  check_layer(prep, "prep");
  check_layer(meas, "meas");
  for (const auto& s : body) {
    if (const auto* layer = std::get_if<GateLayer>(&s)) {
      check_layer(*layer, "body");
    } else {
      const double d = std::get<Evolution>(s).duration;
      if (!std::isfinite(d)) throw ParameterError("duration", "non-finite evolution time");
      if (!hamiltonian) throw ParameterError("hamiltonian", "evolution without a Hamiltonian");
    }
  }
  if (hamiltonian && hamiltonian->n_qubits() != n_qubits) {
    throw DimensionError("circuit and Hamiltonian widths differ");
  }
  if (expected_outcome && expected_outcome->size() != n_qubits) {
    throw DimensionError("expected outcome has wrong length");
  }
}

}  // namespace accredia
