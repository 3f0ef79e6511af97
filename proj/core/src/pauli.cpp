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

#include "accredia/pauli.hpp"

#include <bit>
#include <ostream>

#include "accredia/errors.hpp"
#include "accredia/limits.hpp"

namespace accredia {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

std::size_t popcount_and(const std::vector<std::uint64_t>& a,
                         const std::vector<std::uint64_t>& b) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("Pauli strings act on " + std::to_string(a.n_qubits()) +
                         " and " + std::to_string(b.n_qubits()) + " qubits");
  }
}

}  // namespace

char to_char(PauliLetter letter) noexcept {
  switch (letter) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Z: return 'Z';
    case PauliLetter::Y: return 'Y';
  }
  return '?';
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default:
      throw ParseError(std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliString::PauliString(std::size_t n_qubits)
    : n_qubits_(n_qubits), x_(word_count(n_qubits), 0), z_(word_count(n_qubits), 0) {}

PauliString PauliString::from_word(std::string_view word, int phase_exponent) {
  if (word.empty()) throw ParseError("empty Pauli word");
  PauliString p(word.size());
  for (std::size_t q = 0; q < word.size(); ++q) {
    const auto code = static_cast<std::uint8_t>(letter_from_char(word[q]));
    const std::uint64_t bit = std::uint64_t{1} << (q % kWordBits);
    if (code & 1U) p.x_[q / kWordBits] |= bit;
    if (code & 2U) p.z_[q / kWordBits] |= bit;
  }
  p.phase_ = ((phase_exponent % 4) + 4) % 4;
  return p;
}

PauliString PauliString::parse(std::string_view text) {
  int k = 0;
  if (text.starts_with("+i")) {
    k = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("-i")) {
    k = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("i")) {
    k = 1;
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    k = 2;
    text.remove_prefix(1);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  }
  return from_word(text, k);
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit,
                                PauliLetter letter) {
  return PauliString(n_qubits).with_letter(qubit, letter);
}

PauliLetter PauliString::letter(std::size_t qubit) const {
  if (qubit >= n_qubits_) throw DimensionError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (qubit % kWordBits);
  const std::size_t w = qubit / kWordBits;
  const unsigned code = ((x_[w] & bit) ? 1U : 0U) | ((z_[w] & bit) ? 2U : 0U);
  return static_cast<PauliLetter>(code);
}

std::complex<double> PauliString::phase() const noexcept {
  static constexpr std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_];
}

bool PauliString::is_identity() const noexcept {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

std::size_t PauliString::weight() const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) total += std::popcount(x_[w] | z_[w]);
  return total;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    if (letter(q) != PauliLetter::I) out.push_back(q);
  }
  return out;
}

PauliString PauliString::without_phase() const { return with_phase_exponent(0); }

PauliString PauliString::with_letter(std::size_t qubit, PauliLetter letter) const {
  if (qubit >= n_qubits_) throw DimensionError("qubit index out of range");
  PauliString p = *this;
  const std::uint64_t bit = std::uint64_t{1} << (qubit % kWordBits);
  const std::size_t w = qubit / kWordBits;
  const auto code = static_cast<std::uint8_t>(letter);
  p.x_[w] = (code & 1U) ? (p.x_[w] | bit) : (p.x_[w] & ~bit);
  p.z_[w] = (code & 2U) ? (p.z_[w] | bit) : (p.z_[w] & ~bit);
  return p;
}

PauliString PauliString::with_phase_exponent(int k) const {
  PauliString p = *this;
  p.phase_ = ((k % 4) + 4) % 4;
  return p;
}

std::string PauliString::word() const {
  std::string out(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) out[q] = to_char(letter(q));
  return out;
}

std::string PauliString::to_string() const {
  static constexpr const char* prefix[4] = {"", "+i", "-", "-i"};
  return prefix[phase_] + word();
}

// With P = i^{x.z} X^x Z^z per qubit, reordering Z^{z1} X^{x2} costs
// (-1)^{z1.x2}, so a*b = i^{k} X^{x1^x2} Z^{z1^z2} with
// k = ka + kb + |x1&z1| + |x2&z2| + 2|z1&x2| - |x3&z3|  (mod 4).
PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  PauliString out(a.n_qubits_);
  for (std::size_t w = 0; w < a.x_.size(); ++w) {
    out.x_[w] = a.x_[w] ^ b.x_[w];
    out.z_[w] = a.z_[w] ^ b.z_[w];
  }
  const std::size_t k = static_cast<std::size_t>(a.phase_ + b.phase_) +
                        popcount_and(a.x_, a.z_) + popcount_and(b.x_, b.z_) +
                        2 * popcount_and(a.z_, b.x_);
  const std::size_t y_out = popcount_and(out.x_, out.z_);
  out.phase_ = static_cast<int>((k + 4 * y_out - y_out) % 4);
  return out;
}

int conjugate_sign(const PauliString& sigma, const PauliString& term) {
  require_same_size(sigma, term);
  std::size_t parity = 0;
  for (std::size_t w = 0; w < sigma.x_bits().size(); ++w) {
    parity += std::popcount((sigma.x_bits()[w] & term.z_bits()[w]) ^
                            (sigma.z_bits()[w] & term.x_bits()[w]));
  }
  return (parity % 2 == 0) ? 1 : -1;
}

std::uint64_t flip_mask(const PauliString& p) {
  std::uint64_t mask = 0;
  const std::size_t n = p.n_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    const auto code = static_cast<unsigned>(p.letter(q));
    if (code & 1U) mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

std::uint64_t phase_mask(const PauliString& p) {
  std::uint64_t mask = 0;
  const std::size_t n = p.n_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    const auto code = static_cast<unsigned>(p.letter(q));
    if (code & 2U) mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

// P|c> = q * i^{#Y} * (-1)^{|z & c|} |c ^ x>.
Matrix to_matrix(const PauliString& p) {
  require_dense(p.n_qubits(), "Pauli matrix");
  const std::size_t dim = std::size_t{1} << p.n_qubits();
  const std::uint64_t x = flip_mask(p);
  const std::uint64_t z = phase_mask(p);
  const int n_y = std::popcount(x & z);
  static constexpr std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> base = powers[(p.phase_exponent() + n_y) % 4];
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t c = 0; c < dim; ++c) {
    const double sign = (std::popcount(z & c) % 2 == 0) ? 1.0 : -1.0;
    m(static_cast<Eigen::Index>(c ^ x), static_cast<Eigen::Index>(c)) = base * sign;
  }
  return m;
}

std::size_t PauliWordHash::operator()(const PauliString& p) const noexcept {
  std::size_t h = p.n_qubits();
  for (std::size_t w = 0; w < p.x_bits().size(); ++w) {
    h ^= std::hash<std::uint64_t>{}(p.x_bits()[w]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(p.z_bits()[w]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool PauliWordLess::operator()(const PauliString& a, const PauliString& b) const noexcept {
  if (a.n_qubits() != b.n_qubits()) return a.n_qubits() < b.n_qubits();
  return a.word() < b.word();
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) {
  return os << p.to_string();
}

}  // namespace accredia
