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
#include <memory>
#include <span>
#include <vector>

#include "accredia/circuit.hpp"
#include "accredia/hamiltonian.hpp"
#include "accredia/hypergraph.hpp"
#include "accredia/rng.hpp"

namespace accredia {

// j = 0 reproduces exp(-iHt); j = 1 approximately runs it backwards.
enum class Direction : int { forward = 0, inverted = 1 };

// Largest slice count a builder will emit.
inline constexpr std::size_t kMaxSlices = 10'000'000;

// M = ceil(2 t^2 (sum|c|)^2 L / (eps (L-1))), at least 1.
std::size_t compute_M(const WeightedHamiltonian& h, double t, double eps, std::size_t L);

struct SplitTimes {
  double t1 = 0.0;  // t / L, run forwards
  double t2 = 0.0;  // (L-1) t / L, run through the sliced subcircuit
};

SplitTimes split_time(double t, std::size_t L);

// Everything a target or trap needs that depends only on (H, t, eps).
struct InversionPlan {
  std::shared_ptr<const WeightedHamiltonian> hamiltonian;
  InversionGroup group;
  double t = 0.0;
  double eps = 0.0;
  SplitTimes split;
  std::size_t slices = 1;  // M of the subcircuit over duration split.t2

  std::size_t L() const noexcept { return group.size(); }
  std::size_t n_qubits() const noexcept { return hamiltonian->n_qubits(); }
  double slice_duration() const noexcept { return split.t2 / static_cast<double>(slices); }
};

InversionPlan make_plan(std::shared_ptr<const WeightedHamiltonian> h, double t, double eps);
InversionPlan make_plan(const WeightedHamiltonian& h, double t, double eps);

// Appends M sandwiches [layer_k, exp(-iH t/M), layer_k]. Forward layers are
// identity; inverted layers are a word drawn uniformly from the group minus
// the identity, independently per slice.
void append_evolution_slices(std::vector<Segment>& body, const InversionGroup& group,
                             double t, std::size_t slices, Direction j, RngStream& rng);

// B(H, t, eps, j) as a bare circuit with identity prep/meas layers.
HybridCircuit build_evolution_subcircuit(const WeightedHamiltonian& h, double t, double eps,
                                         Direction j, RngStream& rng);

// exp(-iH t1) followed by B(H, t2, eps, j).
HybridCircuit build_vanishing_block(const WeightedHamiltonian& h, double t, double eps,
                                    Direction j, RngStream& rng);
HybridCircuit build_vanishing_block(const InversionPlan& plan, Direction j, RngStream& rng);

HybridCircuit build_target(const WeightedHamiltonian& h, double t, double eps,
                           std::span<const GateSequence> prep_gates,
                           std::span<const GateSequence> meas_gates);
HybridCircuit build_target(const InversionPlan& plan, std::span<const GateSequence> prep_gates,
                           std::span<const GateSequence> meas_gates);

// Random single-qubit dressing of a trap: a shared Hadamard coin, and per
// qubit a Z coin before, a uniform Pauli, and a Z coin after.
struct TrapDressing {
  bool hadamard = false;
  std::vector<bool> z_before;
  std::vector<PauliLetter> pauli;
  std::vector<bool> z_after;
};

TrapDressing draw_trap_dressing(std::size_t n_qubits, RngStream& rng);
// Per qubit, in application order: [Z], [H], P.
GateLayer trap_pre_layer(const TrapDressing& d);
// Per qubit, in application order: P, [H], [Z].
GateLayer trap_post_layer(const TrapDressing& d);

HybridCircuit build_trap(const WeightedHamiltonian& h, double t, double eps, RngStream& rng);
HybridCircuit build_trap(const InversionPlan& plan, RngStream& rng);

}  // namespace accredia
