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

#include "accredia/noise.hpp"

#include <algorithm>
#include <cmath>

#include "accredia/densim.hpp"
#include "accredia/errors.hpp"
#include "accredia/limits.hpp"

namespace accredia {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::size_t kCptpCheckQubits = 4;

}  // namespace

double StochasticPauli::total() const noexcept {
  double s = 0.0;
  for (const auto& [word, r] : rates) s += r;
  return s;
}

std::string_view channel_kind(const Channel& ch) noexcept {
  return std::visit(Overloaded{
                        [](const StochasticPauli&) { return std::string_view("stochastic_pauli"); },
                        [](const Depolarizing&) { return std::string_view("depolarizing"); },
                        [](const CoherentOverrotation&) { return std::string_view("coherent_overrotation"); },
                        [](const AmplitudeDamping&) { return std::string_view("amplitude_damping"); },
                    },
                    ch);
}

Channel scale_channel(const Channel& ch, double multiplier) {
  const double m = std::max(0.0, multiplier);
  return std::visit(Overloaded{
                        [m](StochasticPauli c) -> Channel {
                          for (auto& [word, r] : c.rates) r = std::max(0.0, r * m);
                          const double total = c.total();
                          if (total > 1.0) {
                            for (auto& [word, r] : c.rates) r /= total;
                          }
                          return c;
                        },
                        [m](Depolarizing c) -> Channel {
                          c.p = std::clamp(c.p * m, 0.0, 1.0);
                          return c;
                        },
                        [multiplier](CoherentOverrotation c) -> Channel {
                          c.angle *= multiplier;
                          return c;
                        },
                        [m](AmplitudeDamping c) -> Channel {
                          c.gamma = std::clamp(c.gamma * m, 0.0, 1.0);
                          return c;
                        },
                    },
                    ch);
}

void validate_channel(const Channel& ch, std::size_t n_qubits) {
  std::visit(Overloaded{
                 [n_qubits](const StochasticPauli& c) {
                   for (const auto& [word, r] : c.rates) {
                     if (word.n_qubits() != n_qubits) {
                       throw ParameterError("rates", "word " + word.word() + " does not span " +
                                                         std::to_string(n_qubits) + " qubits");
                     }
                     if (!(r >= 0.0) || !std::isfinite(r)) {
                       throw ParameterError("rates", "negative or non-finite rate on " + word.word());
                     }
                   }
                   if (c.total() > 1.0 + 1e-12) {
                     throw ParameterError("rates", "rates sum to more than 1");
                   }
                 },
                 [](const Depolarizing& c) {
                   if (!(c.p >= 0.0 && c.p <= 1.0)) throw ParameterError("p", "must lie in [0, 1]");
                 },
                 [n_qubits](const CoherentOverrotation& c) {
                   if (c.axis.n_qubits() != n_qubits) {
                     throw ParameterError("axis", "axis word does not span the register");
                   }
                   if (c.axis.phase_exponent() != 0) {
                     throw ParameterError("axis", "axis word must carry phase +1");
                   }
                   if (!std::isfinite(c.angle)) throw ParameterError("angle", "must be finite");
                 },
                 [](const AmplitudeDamping& c) {
                   if (!(c.gamma >= 0.0 && c.gamma <= 1.0)) {
                     throw ParameterError("gamma", "must lie in [0, 1]");
                   }
                 },
             },
             ch);
  if (n_qubits <= std::min(kCptpCheckQubits, choi_qubit_limit())) {
    const CptpReport report = check_cptp(ch, n_qubits);
    if (!report.ok()) {
      throw ParameterError(std::string(channel_kind(ch)),
                           "channel is not CPTP (min Choi eigenvalue " +
                               std::to_string(report.min_eigenvalue) + ", TP defect " +
                               std::to_string(report.trace_defect) + ")");
    }
  }
}

std::string_view location_name(LocationKind k) noexcept {
  switch (k) {
    case LocationKind::prep: return "prep";
    case LocationKind::evolution_slice: return "evolution_slice";
    case LocationKind::gate_layer: return "gate_layer";
    case LocationKind::measurement: return "measurement";
  }
  return "?";
}

bool NoiseLocation::covers_slice(std::size_t index) const noexcept {
  if (kind != LocationKind::evolution_slice) return false;
  if (first && index < *first) return false;
  if (last && index > *last) return false;
  return true;
}

double Drift::draw(RngStream& rng) const {
  if (kind == Kind::uniform) return a + (b - a) * rng.uniform();
  return rng.normal(a, b);
}

bool NoiseModel::has_drift() const noexcept {
  return std::any_of(bindings_.begin(), bindings_.end(),
                     [](const NoiseBinding& b) { return b.drift.has_value(); });
}

NoiseModel& NoiseModel::add(NoiseLocation where, Channel channel, std::optional<Drift> drift) {
  bindings_.push_back({where, std::move(channel), drift});
  return *this;
}

NoiseModel NoiseModel::resolve(RngStream& rng) const {
  NoiseModel out;
  for (const auto& b : bindings_) {
    if (b.drift) {
      out.add(b.where, scale_channel(b.channel, b.drift->draw(rng)));
    } else {
      out.add(b.where, b.channel);
    }
  }
  return out;
}

void NoiseModel::validate(std::size_t n_qubits) const {
  for (const auto& b : bindings_) {
    validate_channel(b.channel, n_qubits);
    if (b.where.first && b.where.last && *b.where.first > *b.where.last) {
      throw ParameterError("where", "slice range is empty");
    }
    if (b.where.kind != LocationKind::evolution_slice && (b.where.first || b.where.last)) {
      throw ParameterError("where", "index ranges apply only to evolution slices");
    }
    if (b.drift) {
      const Drift& d = *b.drift;
      if (!std::isfinite(d.a) || !std::isfinite(d.b)) throw ParameterError("drift", "must be finite");
      if (d.kind == Drift::Kind::uniform && d.a > d.b) {
        throw ParameterError("drift", "uniform interval has low > high");
      }
      if (d.kind == Drift::Kind::gaussian && d.b < 0.0) {
        throw ParameterError("drift", "gaussian stddev must be non-negative");
      }
    }
  }
}

}  // namespace accredia
