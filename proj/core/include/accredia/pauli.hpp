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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace accredia {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Two-bit symplectic code: bit 0 is the X component, bit 1 the Z component.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(PauliLetter letter) noexcept;
PauliLetter letter_from_char(char c);

// Phase-tagged N-qubit Pauli word, q * P_0 (x) P_1 (x) ... (x) P_{N-1} with
// q = i^k, k in {0,1,2,3}. Qubit 0 is the leftmost letter and the most
// significant bit of a computational-basis index.
//
// Letters are packed into X and Z bit planes so products and commutation
// checks run a machine word at a time. Values are immutable.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);

  // Parses a letter word with an optional phase prefix: "+", "-", "i",
  // "+i", "-i". Throws ParseError.
  static PauliString parse(std::string_view text);
  static PauliString from_word(std::string_view word, int phase_exponent = 0);
  static PauliString single(std::size_t n_qubits, std::size_t qubit,
                            PauliLetter letter);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  PauliLetter letter(std::size_t qubit) const;
  int phase_exponent() const noexcept { return phase_; }
  std::complex<double> phase() const noexcept;

  // True when every letter is I (the phase is not consulted).
  bool is_identity() const noexcept;
  std::size_t weight() const noexcept;
  std::vector<std::size_t> support() const;

  PauliString without_phase() const;
  PauliString with_letter(std::size_t qubit, PauliLetter letter) const;
  PauliString with_phase_exponent(int k) const;

  // Letters only, e.g. "XIZY".
  std::string word() const;
  // Letters with phase prefix ("-iXZ"); +1 carries no prefix.
  std::string to_string() const;

  const std::vector<std::uint64_t>& x_bits() const noexcept { return x_; }
  const std::vector<std::uint64_t>& z_bits() const noexcept { return z_; }

  bool same_word(const PauliString& other) const noexcept {
    return n_qubits_ == other.n_qubits_ && x_ == other.x_ && z_ == other.z_;
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  friend PauliString multiply(const PauliString& a, const PauliString& b);

  std::size_t n_qubits_ = 0;
  int phase_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

// Group product a * b with exact phase. Throws DimensionError.
PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}

// +1 if sigma and term commute, -1 if they anticommute. Phases are ignored.
int conjugate_sign(const PauliString& sigma, const PauliString& term);
inline bool anticommutes(const PauliString& a, const PauliString& b) {
  return conjugate_sign(a, b) < 0;
}

// Dense 2^N x 2^N realization. Throws CapacityError above the dense limit.
Matrix to_matrix(const PauliString& p);

// Index of the nonzero entry in column c is c ^ flip_mask(p); the entry
// value is column_value(p, c). Shared by the simulator's permutation paths.
std::uint64_t flip_mask(const PauliString& p);
std::uint64_t phase_mask(const PauliString& p);

struct PauliWordHash {
  std::size_t operator()(const PauliString& p) const noexcept;
};

// Orders by letter word; phases are not compared.
struct PauliWordLess {
  bool operator()(const PauliString& a, const PauliString& b) const noexcept;
};

std::ostream& operator<<(std::ostream& os, const PauliString& p);

}  // namespace accredia
