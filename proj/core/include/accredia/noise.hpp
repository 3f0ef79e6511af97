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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "accredia/pauli.hpp"
#include "accredia/rng.hpp"

namespace accredia {

// rho -> (1 - sum r) rho + sum_P r_P P rho P.
struct StochasticPauli {
  std::vector<std::pair<PauliString, double>> rates;
  double total() const noexcept;
};

// rho -> (1 - p) rho + p I/d on the whole register.
struct Depolarizing {
  double p = 0.0;
};

// rho -> U rho U^dagger with U = exp(-i angle/2 * axis).
struct CoherentOverrotation {
  PauliString axis;
  double angle = 0.0;
};

// Independent amplitude damping of strength gamma on every qubit.
struct AmplitudeDamping {
  double gamma = 0.0;
};

using Channel = std::variant<StochasticPauli, Depolarizing, CoherentOverrotation, AmplitudeDamping>;

std::string_view channel_kind(const Channel& ch) noexcept;

// Multiplies the strength parameter (rates, p, angle, gamma) and clamps the
// result into the channel's valid range. Rates that would sum past 1 are
// rescaled to sum to exactly 1.
Channel scale_channel(const Channel& ch, double multiplier);

// Range checks plus a Choi positivity / trace-preservation check for
// registers small enough to form the Choi state. Throws ParameterError.
void validate_channel(const Channel& ch, std::size_t n_qubits);

enum class LocationKind : std::uint8_t { prep, evolution_slice, gate_layer, measurement };

std::string_view location_name(LocationKind k) noexcept;

// Circuit position a channel is attached to. Evolution slices are counted
// over the body's Evolution segments from 0; an unset range means every
// slice. Gate-layer bindings cover every body gate layer.
struct NoiseLocation {
  LocationKind kind = LocationKind::evolution_slice;
  std::optional<std::size_t> first;
  std::optional<std::size_t> last;

  static NoiseLocation prep() { return {LocationKind::prep, {}, {}}; }
  static NoiseLocation measurement() { return {LocationKind::measurement, {}, {}}; }
  static NoiseLocation gate_layer() { return {LocationKind::gate_layer, {}, {}}; }
  static NoiseLocation any_slice() { return {LocationKind::evolution_slice, {}, {}}; }
  static NoiseLocation slices(std::size_t first, std::size_t last) {
    return {LocationKind::evolution_slice, first, last};
  }

  bool covers_slice(std::size_t index) const noexcept;
};

// Per-execution strength multiplier.
struct Drift {
  enum class Kind : std::uint8_t { uniform, gaussian };
  Kind kind = Kind::uniform;
  double a = 1.0;  // uniform: low,  gaussian: mean
  double b = 1.0;  // uniform: high, gaussian: stddev

  double draw(RngStream& rng) const;
};

struct NoiseBinding {
  NoiseLocation where;
  Channel channel;
  std::optional<Drift> drift;
};

// Channels keyed by circuit position only; the gates at a position never
// select the channel.
class NoiseModel {
 public:
  NoiseModel() = default;
  explicit NoiseModel(std::vector<NoiseBinding> bindings) : bindings_(std::move(bindings)) {}

  const std::vector<NoiseBinding>& bindings() const noexcept { return bindings_; }
  bool empty() const noexcept { return bindings_.empty(); }
  bool has_drift() const noexcept;

  NoiseModel& add(NoiseLocation where, Channel channel, std::optional<Drift> drift = {});

  // Draws one multiplier per drifting binding and returns the fixed
  // instance for a single execution.
  NoiseModel resolve(RngStream& rng) const;

  void validate(std::size_t n_qubits) const;

 private:
  std::vector<NoiseBinding> bindings_;
};

}  // namespace accredia
