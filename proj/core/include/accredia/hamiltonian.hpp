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
#include <initializer_list>
#include <string_view>
#include <utility>
#include <vector>

#include "accredia/pauli.hpp"

namespace accredia {

struct PauliTerm {
  double coeff = 0.0;
  PauliString pauli;  // phase +1
};

// Real-weighted sum of phase-free Pauli words, H = sum_j c_j P_j.
//
// Ingest is canonicalizing: a +-1 phase on an incoming word is folded into
// its coefficient, duplicate words are merged (first occurrence fixes the
// term order), and merged coefficients below 1e-15 in magnitude are
// dropped. An all-I term is rejected unless `allow_identity` is set.
class WeightedHamiltonian {
 public:
  static constexpr double kDropTolerance = 1e-15;

  WeightedHamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms,
                      bool allow_identity = false);

  // Convenience: {{1.0, "ZZ"}, {0.5, "XI"}}.
  static WeightedHamiltonian from_words(
      std::initializer_list<std::pair<double, std::string_view>> terms,
      bool allow_identity = false);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  // sum_j |c_j|; stands in for the operator-norm bound when sizing slices.
  double coefficient_l1() const noexcept;
  bool has_identity_term() const noexcept;
  std::size_t non_identity_count() const noexcept;

  // Tr(H) = 2^N times the identity coefficient.
  double trace() const noexcept;

  Matrix to_matrix() const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

}  // namespace accredia
