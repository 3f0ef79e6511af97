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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "accredia/builder.hpp"
#include "accredia/circuit.hpp"
#include "accredia/hamiltonian.hpp"
#include "accredia/noise.hpp"
#include "accredia/pauli.hpp"
#include "accredia/rng.hpp"

namespace accredia {

// exp(-iHt) by spectral decomposition. Throws CapacityError.
Matrix exact_unitary(const WeightedHamiltonian& h, double t);

// Caches the eigendecomposition of H so repeated durations are cheap.
class Propagator {
 public:
  explicit Propagator(const WeightedHamiltonian& h);
  Matrix unitary(double t) const;
  std::size_t dim() const noexcept { return static_cast<std::size_t>(values_.size()); }

 private:
  Eigen::VectorXd values_;
  Matrix vectors_;
};

// Bitstrings are written qubit 0 first, matching basis-index MSB order.
std::string bitstring(std::uint64_t index, std::size_t n_qubits);
std::uint64_t bitstring_index(std::string_view bits);

// Dense outcome distribution over all 2^N bitstrings.
class Distribution {
 public:
  explicit Distribution(std::size_t n_qubits);
  Distribution(std::size_t n_qubits, std::vector<double> probabilities);

  static Distribution point_mass(std::size_t n_qubits, std::uint64_t index);
  static Distribution from_map(std::size_t n_qubits, const std::map<std::string, double>& probs);
  static Distribution empirical(std::size_t n_qubits, const std::vector<std::string>& shots);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<double>& probabilities() const noexcept { return probs_; }
  double operator[](std::uint64_t index) const { return probs_.at(index); }
  double probability(std::string_view bits) const;
  double total() const noexcept;

  // Outcomes with probability above `threshold`, keyed by bitstring.
  std::map<std::string, double> to_map(double threshold = 0.0) const;

 private:
  std::size_t n_qubits_;
  std::vector<double> probs_;
};

// Half the l1 distance. Missing keys read as zero.
double tvd(const Distribution& p, const Distribution& q);
double tvd(const std::map<std::string, double>& p, const std::map<std::string, double>& q);

struct DensityReport {
  double hermiticity_error = 0.0;  // max |rho - rho^dagger|
  double trace_error = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;
  bool ok() const noexcept {
    return hermiticity_error <= 1e-10 && trace_error <= 1e-10 && min_eigenvalue >= -1e-9;
  }
};

DensityReport check_density(const Matrix& rho);

// Final pre-measurement state. A null noise model means noiseless; drift on
// a non-null model is ignored (nominal strengths).
Matrix final_state(const HybridCircuit& c, const NoiseModel* noise = nullptr);

Distribution output_distribution(const HybridCircuit& c);
Distribution output_distribution(const HybridCircuit& c, const NoiseModel& noise);

std::vector<std::string> sample(const Distribution& d, RngStream& rng, std::size_t shots);

// Resolves drift once for this execution, then samples `shots` outcomes.
std::vector<std::string> execute(const HybridCircuit& c, const NoiseModel& noise, RngStream& rng,
                                 std::size_t shots);

// Normalized Choi state (1/d) sum_ij S(|i><j|) (x) |i><j|, system register
// first. Throws CapacityError above the Choi limit.
Matrix channel_choi(const HybridCircuit& c, const NoiseModel* noise = nullptr);
Matrix channel_choi(const Channel& ch, std::size_t n_qubits);
Matrix unitary_choi(const Matrix& u);

// S(rho) recovered from a normalized Choi state.
Matrix apply_choi(const Matrix& choi, const Matrix& rho);

struct CptpReport {
  double min_eigenvalue = 0.0;
  double trace_defect = 0.0;  // max |Tr_sys(choi) - I/d|
  bool ok() const noexcept { return min_eigenvalue >= -1e-9 && trace_defect <= 1e-9; }
};

CptpReport check_cptp(const Channel& ch, std::size_t n_qubits);

struct ChoiDistance {
  double distance = 0.0;
  double diamond_lower = 0.0;
  double diamond_upper = 0.0;
};

// Trace distance of Choi states; the diamond distance lies in
// [distance, d * distance].
ChoiDistance choi_trace_distance(const Matrix& a, const Matrix& b);

// Process matrix in the Pauli basis, chi_ab = <<P_a| choi |P_b>>, with words
// ordered by their symplectic index (X plane high, Z plane low).
Matrix chi_matrix(const Matrix& choi);

// Largest off-diagonal magnitude of chi_matrix(choi).
double pauli_offdiagonal(const Matrix& choi);

// Which words the averaged slices conjugate by.
enum class TwirlSet : std::uint8_t { non_identity, full_group };

// Choi state of `slices` slices of duration t / slices, each averaged over
// conjugation by the chosen word set (j = 1) or left bare (j = 0). Noise
// bound to evolution_slice index k hits slice k; gate_layer bindings follow
// every conjugation layer.
Matrix averaged_subcircuit_choi(const WeightedHamiltonian& h, const InversionGroup& group, double t,
                                std::size_t slices, Direction j, const NoiseModel* noise = nullptr,
                                TwirlSet set = TwirlSet::non_identity);

// Same for the vanishing block; evolution_slice index 0 is the forward t1
// segment and the averaged slices follow from index 1.
Matrix averaged_block_choi(const InversionPlan& plan, Direction j,
                           const NoiseModel* noise = nullptr);

// Dense unitary of one gate layer.
Matrix layer_unitary(const GateLayer& layer);

}  // namespace accredia
