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
#include <span>
#include <string>
#include <vector>

#include "accredia/builder.hpp"
#include "accredia/circuit.hpp"
#include "accredia/errors.hpp"
#include "accredia/hamiltonian.hpp"
#include "accredia/noise.hpp"

namespace accredia {

// N_tr = ceil((2 / theta^2) ln(2 / (1 - alpha))) + 1.
std::size_t num_traps(double theta, double alpha);

// min(1, 2 (n_failed / n_traps + theta)).
double epsilon_vd(std::size_t n_failed, std::size_t n_traps, double theta);

struct ProtocolConfig {
  std::shared_ptr<const WeightedHamiltonian> hamiltonian;
  double t = 1.0;
  std::vector<GateSequence> prep;  // one sequence per qubit
  std::vector<GateSequence> meas;
  double eps = 0.05;
  double alpha = 0.9;
  double theta = 0.1;
  std::uint64_t seed = 0;
  std::size_t parallelism = 1;
  std::size_t target_shots = 1;

  // Throws ParameterError naming the field.
  void validate() const;
};

struct TrapRecord {
  std::size_t position = 0;  // 1-based slot among all N_tr + 1 executions
  std::uint64_t seed = 0;    // rebuilds the trap via build_trap(plan, RngStream(seed))
  std::string outcome;
  bool passed = false;
};

struct ProtocolResult {
  std::vector<std::string> target_outcomes;
  double epsilon_vd = 1.0;
  std::size_t n_traps = 0;
  std::size_t n_traps_failed = 0;
  std::size_t target_position = 0;
  std::vector<TrapRecord> traps;  // position order

  // Provenance.
  std::uint64_t seed = 0;
  double theta = 0.0;
  double alpha = 0.0;
  double eps = 0.0;
  std::size_t group_size = 0;
  std::size_t slices = 0;
  bool complete = true;

  double failed_fraction() const noexcept;
};

// Thrown when an execution fails mid-run; carries everything finished so
// far with `complete` cleared.
class ProtocolAborted : public Error {
 public:
  ProtocolAborted(const std::string& what, ProtocolResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const ProtocolResult& partial() const noexcept { return partial_; }

 private:
  ProtocolResult partial_;
};

// The target circuit run_protocol executes for this config.
HybridCircuit protocol_target(const ProtocolConfig& cfg);

// One target and N_tr traps in a uniformly random interleaving. Execution
// at position p draws only from RngStream(seed).split(p), so the result is
// independent of `parallelism`. A null noise model is noiseless.
ProtocolResult run_protocol(const ProtocolConfig& cfg, const NoiseModel* noise = nullptr);

// Exact TVD between the ideal and noisy target distributions. The noise
// model must be drift-free.
double true_ideal_actual_distance(const HybridCircuit& target, const NoiseModel* noise);

inline const double kAdvantageThreshold = 1.0 - 1.0 / 1.4142135623730951;

struct AdvantageVerdict {
  double threshold = kAdvantageThreshold;
  double epsilon_vd = 1.0;
  double margin = 0.0;  // threshold - epsilon_vd
  bool passed = false;  // epsilon_vd < threshold, strictly
};

AdvantageVerdict advantage_verdict(double epsilon_vd);
AdvantageVerdict advantage_verdict(const ProtocolResult& result);

// Square-lattice Ising model sum_edges J Z_i Z_j - sum_v h_v Z_v on a
// row-major grid. Edges are listed per vertex, right neighbour then the one
// below. A single J or h value is broadcast; an empty h means zero field.
WeightedHamiltonian advantage_preset(std::size_t rows, std::size_t cols,
                                     std::span<const double> J, std::span<const double> h);

std::vector<std::pair<std::size_t, std::size_t>> lattice_edges(std::size_t rows, std::size_t cols);

// Probability that a trap reports a failure, averaged exactly over every
// dressing draw and over the slice conjugations. `noise` is bound in the
// usual positions; evolution_slice index 0 is the forward segment.
double trap_detection_probability(const InversionPlan& plan, const NoiseModel& noise);

struct TrapAuditRow {
  PauliString error;
  double detection = 0.0;
};

struct TrapAudit {
  std::size_t boundary = 0;
  std::size_t dressings = 0;  // 2 * 16^N
  double baseline = 0.0;      // failure probability without injected error
  std::vector<TrapAuditRow> rows;
  double min_detection() const;
};

// Injects every non-identity Pauli word with certainty after evolution
// segment `boundary` (0 is the forward segment) and reports detection.
TrapAudit trap_audit(const InversionPlan& plan, std::size_t boundary);

}  // namespace accredia
