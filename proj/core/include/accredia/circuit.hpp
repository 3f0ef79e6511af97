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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "accredia/hamiltonian.hpp"

namespace accredia {

enum class Gate : std::uint8_t { I, X, Y, Z, H };

std::string_view gate_name(Gate g) noexcept;
Gate gate_from_name(std::string_view name);
Gate gate_from_letter(PauliLetter letter) noexcept;

// Single-qubit gates in application order. Sequences are never merged
// algebraically; each entry is one physical gate slot.
using GateSequence = std::vector<Gate>;

// Parses "H", "ZH" (Z then H), or "I". Throws ParseError.
GateSequence parse_gate_sequence(std::string_view text);
std::string format_gate_sequence(const GateSequence& seq);

// One gate sequence per qubit, applied simultaneously.
struct GateLayer {
  std::vector<GateSequence> gates;

  static GateLayer identity(std::size_t n_qubits);
  static GateLayer from_pauli(const PauliString& word);

  std::size_t width() const noexcept { return gates.size(); }
  bool is_identity() const noexcept;
  friend bool operator==(const GateLayer&, const GateLayer&) = default;
};

// exp(-i H duration) under the circuit's Hamiltonian.
struct Evolution {
  double duration = 0.0;
  friend bool operator==(const Evolution&, const Evolution&) = default;
};

using Segment = std::variant<GateLayer, Evolution>;

enum class SegmentKind : std::uint8_t { gate_layer, evolution };

enum class CircuitKind : std::uint8_t { bare, target, trap };

std::string_view circuit_kind_name(CircuitKind k) noexcept;

// |0...0>, then the preparation layer, the body, the measurement layer and
// a Z-basis readout of every qubit.
struct HybridCircuit {
  std::size_t n_qubits = 0;
  std::shared_ptr<const WeightedHamiltonian> hamiltonian;
  GateLayer prep;
  std::vector<Segment> body;
  GateLayer meas;
  CircuitKind kind = CircuitKind::bare;
  std::optional<std::string> expected_outcome;
  std::optional<std::uint64_t> seed;

  std::size_t evolution_count() const;
  std::size_t gate_layer_count() const;

  // Kind sequence of body segments; equal shapes mean the same circuit
  // positions (the redaction-class skeleton).
  std::vector<SegmentKind> shape() const;
  std::vector<double> evolution_durations() const;

  // Throws DimensionError / ParameterError on malformed structure.
  void validate() const;
};

}  // namespace accredia
