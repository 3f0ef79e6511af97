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

#include "accredia/builder.hpp"

#include <cmath>
#include <string>

#include "accredia/errors.hpp"

namespace accredia {
namespace {

void require_L(std::size_t L) {
  if (L < 2) throw ParameterError("L", "inversion needs L >= 2, got " + std::to_string(L));
}

HybridCircuit bare_circuit(std::shared_ptr<const WeightedHamiltonian> h) {
  HybridCircuit c;
  c.n_qubits = h->n_qubits();
  c.prep = GateLayer::identity(c.n_qubits);
  c.meas = GateLayer::identity(c.n_qubits);
  c.hamiltonian = std::move(h);
  return c;
}

void require_layer(std::span<const GateSequence> gates, std::size_t n, const char* what) {
  if (gates.size() != n) {
    throw DimensionError(std::string(what) + " has " + std::to_string(gates.size()) +
                         " gate sequences for " + std::to_string(n) + " qubits");
  }
}

}  // namespace

std::size_t compute_M(const WeightedHamiltonian& h, double t, double eps, std::size_t L) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps", "must be positive");
  require_L(L);
  if (!std::isfinite(t)) throw ParameterError("t", "must be finite");
  const double lambda = h.coefficient_l1();
  const double Ld = static_cast<double>(L);
  const double raw = 2.0 * t * t * lambda * lambda * Ld / (eps * (Ld - 1.0));
  // Shave representation noise so exact products like 4/0.01 land on 400.
  const double m = std::ceil(raw * (1.0 - 1e-12));
  if (m > static_cast<double>(kMaxSlices)) {
    throw ParameterError("eps", "needs " + std::to_string(m) + " slices, above the limit of " +
                                    std::to_string(kMaxSlices));
  }
  return m < 1.0 ? 1 : static_cast<std::size_t>(m);
}

SplitTimes split_time(double t, std::size_t L) {
  require_L(L);
  const double Ld = static_cast<double>(L);
  return {t / Ld, (Ld - 1.0) * t / Ld};
}

InversionPlan make_plan(std::shared_ptr<const WeightedHamiltonian> h, double t, double eps) {
  if (!h) throw ParameterError("hamiltonian", "missing");
  InversionPlan plan{h, build_inversion_group(*h), t, eps, {}, 1};
  plan.split = split_time(t, plan.L());
  plan.slices = compute_M(*h, plan.split.t2, eps, plan.L());
  return plan;
}

InversionPlan make_plan(const WeightedHamiltonian& h, double t, double eps) {
  return make_plan(std::make_shared<const WeightedHamiltonian>(h), t, eps);
}

void append_evolution_slices(std::vector<Segment>& body, const InversionGroup& group, double t,
                             std::size_t slices, Direction j, RngStream& rng) {
  const auto conjugators = group.non_identity();
  if (j == Direction::inverted && conjugators.empty()) require_L(group.size());
  const double dt = t / static_cast<double>(slices);
  const GateLayer identity = GateLayer::identity(group.n_qubits());
  body.reserve(body.size() + 3 * slices);
  for (std::size_t k = 0; k < slices; ++k) {
    GateLayer layer = identity;
    if (j == Direction::inverted) {
      layer = GateLayer::from_pauli(conjugators[rng.index(conjugators.size())]);
    }
    body.emplace_back(layer);
    body.emplace_back(Evolution{dt});
    body.emplace_back(std::move(layer));
  }
}

HybridCircuit build_evolution_subcircuit(const WeightedHamiltonian& h, double t, double eps,
                                         Direction j, RngStream& rng) {
  auto shared = std::make_shared<const WeightedHamiltonian>(h);
  const InversionGroup group = build_inversion_group(h);
  const std::size_t slices = compute_M(h, t, eps, group.size());
  HybridCircuit c = bare_circuit(shared);
  c.seed = rng.seed();
  append_evolution_slices(c.body, group, t, slices, j, rng);
  return c;
}

HybridCircuit build_vanishing_block(const InversionPlan& plan, Direction j, RngStream& rng) {
  HybridCircuit c = bare_circuit(plan.hamiltonian);
  c.seed = rng.seed();
  c.body.emplace_back(Evolution{plan.split.t1});
  append_evolution_slices(c.body, plan.group, plan.split.t2, plan.slices, j, rng);
  return c;
}

HybridCircuit build_vanishing_block(const WeightedHamiltonian& h, double t, double eps,
                                    Direction j, RngStream& rng) {
  return build_vanishing_block(make_plan(h, t, eps), j, rng);
}

HybridCircuit build_target(const InversionPlan& plan, std::span<const GateSequence> prep_gates,
                           std::span<const GateSequence> meas_gates) {
  const std::size_t n = plan.n_qubits();
  require_layer(prep_gates, n, "prep layer");
  require_layer(meas_gates, n, "meas layer");
  // The forward block draws nothing; the stream only satisfies the interface.
  RngStream unused(0);
  HybridCircuit c = build_vanishing_block(plan, Direction::forward, unused);
  c.seed.reset();
  c.kind = CircuitKind::target;
  c.prep.gates.assign(prep_gates.begin(), prep_gates.end());
  c.meas.gates.assign(meas_gates.begin(), meas_gates.end());
  return c;
}

HybridCircuit build_target(const WeightedHamiltonian& h, double t, double eps,
                           std::span<const GateSequence> prep_gates,
                           std::span<const GateSequence> meas_gates) {
  return build_target(make_plan(h, t, eps), prep_gates, meas_gates);
}

TrapDressing draw_trap_dressing(std::size_t n_qubits, RngStream& rng) {
  static constexpr PauliLetter letters[4] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y,
                                             PauliLetter::Z};
  TrapDressing d;
  d.hadamard = rng.coin();
  for (std::size_t q = 0; q < n_qubits; ++q) {
    d.z_before.push_back(rng.coin());
    d.pauli.push_back(letters[rng.index(4)]);
    d.z_after.push_back(rng.coin());
  }
  return d;
}

GateLayer trap_pre_layer(const TrapDressing& d) {
  GateLayer layer;
  for (std::size_t q = 0; q < d.pauli.size(); ++q) {
    GateSequence seq;
    if (d.z_before[q]) seq.push_back(Gate::Z);
    if (d.hadamard) seq.push_back(Gate::H);
    seq.push_back(gate_from_letter(d.pauli[q]));
    layer.gates.push_back(std::move(seq));
  }
  return layer;
}

GateLayer trap_post_layer(const TrapDressing& d) {
  GateLayer layer;
  for (std::size_t q = 0; q < d.pauli.size(); ++q) {
    GateSequence seq{gate_from_letter(d.pauli[q])};
    if (d.hadamard) seq.push_back(Gate::H);
    if (d.z_after[q]) seq.push_back(Gate::Z);
    layer.gates.push_back(std::move(seq));
  }
  return layer;
}

HybridCircuit build_trap(const InversionPlan& plan, RngStream& rng) {
  const std::uint64_t seed = rng.seed();
  const TrapDressing dressing = draw_trap_dressing(plan.n_qubits(), rng);
  HybridCircuit c = build_vanishing_block(plan, Direction::inverted, rng);
  c.kind = CircuitKind::trap;
  c.seed = seed;
  c.prep = trap_pre_layer(dressing);
  c.meas = trap_post_layer(dressing);
  c.expected_outcome = std::string(plan.n_qubits(), '0');
  return c;
}

HybridCircuit build_trap(const WeightedHamiltonian& h, double t, double eps, RngStream& rng) {
  return build_trap(make_plan(h, t, eps), rng);
}

}  // namespace accredia
