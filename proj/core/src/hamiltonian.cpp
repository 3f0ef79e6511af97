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

#include "accredia/hamiltonian.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "accredia/errors.hpp"
#include "accredia/limits.hpp"

namespace accredia {

WeightedHamiltonian::WeightedHamiltonian(std::size_t n_qubits,
                                         std::vector<PauliTerm> terms,
                                         bool allow_identity)
    : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw ParameterError("n_qubits", "must be positive");
  std::unordered_map<PauliString, std::size_t, PauliWordHash> index;
  std::vector<PauliTerm> merged;
  for (auto& term : terms) {
    if (term.pauli.n_qubits() != n_qubits) {
      throw DimensionError("term " + term.pauli.to_string() + " acts on " +
                           std::to_string(term.pauli.n_qubits()) +
                           " qubits, Hamiltonian on " + std::to_string(n_qubits));
    }
    if (!std::isfinite(term.coeff)) {
      throw ParameterError("coeff", "non-finite coefficient on " + term.pauli.word());
    }
    double coeff = term.coeff;
    switch (term.pauli.phase_exponent()) {
      case 0: break;
      case 2: coeff = -coeff; break;
      default:
        throw ParameterError("pauli", "imaginary phase on " + term.pauli.to_string() +
                                          " makes the term non-Hermitian");
    }
    PauliString word = term.pauli.without_phase();
    auto [it, inserted] = index.try_emplace(word, merged.size());
    if (inserted) {
      merged.push_back({coeff, std::move(word)});
    } else {
      merged[it->second].coeff += coeff;
    }
  }
  for (auto& term : merged) {
    if (std::abs(term.coeff) < kDropTolerance) continue;
    if (term.pauli.is_identity() && !allow_identity) {
      throw ParameterError("pauli", "identity term with nonzero coefficient");
    }
    terms_.push_back(std::move(term));
  }
}

WeightedHamiltonian WeightedHamiltonian::from_words(
    std::initializer_list<std::pair<double, std::string_view>> terms,
    bool allow_identity) {
  std::vector<PauliTerm> out;
  std::size_t n = 0;
  for (const auto& [coeff, text] : terms) {
    PauliString p = PauliString::parse(text);
    n = p.n_qubits();
    out.push_back({coeff, std::move(p)});
  }
  return WeightedHamiltonian(n, std::move(out), allow_identity);
}

double WeightedHamiltonian::coefficient_l1() const noexcept {
  double total = 0.0;
  for (const auto& t : terms_) total += std::abs(t.coeff);
  return total;
}

bool WeightedHamiltonian::has_identity_term() const noexcept {
  for (const auto& t : terms_) {
    if (t.pauli.is_identity()) return true;
  }
  return false;
}

std::size_t WeightedHamiltonian::non_identity_count() const noexcept {
  std::size_t n = 0;
  for (const auto& t : terms_) n += t.pauli.is_identity() ? 0 : 1;
  return n;
}

double WeightedHamiltonian::trace() const noexcept {
  for (const auto& t : terms_) {
    if (t.pauli.is_identity()) return t.coeff * std::ldexp(1.0, static_cast<int>(n_qubits_));
  }
  return 0.0;
}

Matrix WeightedHamiltonian::to_matrix() const {
  require_dense(n_qubits_, "Hamiltonian matrix");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits_);
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& t : terms_) h += t.coeff * accredia::to_matrix(t.pauli);
  return h;
}

}  // namespace accredia
