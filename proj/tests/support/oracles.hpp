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

// Brute-force reference implementations used as test oracles. They share
// no code with the library beyond its data types: Pauli matrices come from
// Kronecker products, propagators from a Pade matrix exponential, and noise
// from explicit Kraus sums.

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "accredia/circuit.hpp"
#include "accredia/hamiltonian.hpp"
#include "accredia/noise.hpp"
#include "accredia/pauli.hpp"
#include "accredia/rng.hpp"

namespace oracle {

using accredia::Matrix;
using cplx = std::complex<double>;

inline Matrix letter(char c) {
  Matrix m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad letter");
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Matrix identity(std::size_t n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  return Matrix::Identity(d, d);
}

// Qubit 0 is the leftmost Kronecker factor.
inline Matrix pauli(std::string_view word, cplx phase = 1.0) {
  Matrix m = Matrix::Identity(1, 1);
  for (char c : word) m = kron(m, letter(c));
  return phase * m;
}

inline Matrix pauli(const accredia::PauliString& p) { return pauli(p.word(), p.phase()); }

inline Matrix hamiltonian(const accredia::WeightedHamiltonian& h) {
  Matrix m = Matrix::Zero(Eigen::Index{1} << h.n_qubits(), Eigen::Index{1} << h.n_qubits());
  for (const auto& t : h.terms()) m += t.coeff * pauli(t.pauli.word());
  return m;
}

inline Matrix expm(const Matrix& h, double t) {
  const Matrix a = cplx(0, -t) * h;
  return a.exp();
}

inline Matrix gate(accredia::Gate g) {
  using accredia::Gate;
  switch (g) {
    case Gate::I: return letter('I');
    case Gate::X: return letter('X');
    case Gate::Y: return letter('Y');
    case Gate::Z: return letter('Z');
    case Gate::H: {
      Matrix m(2, 2);
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    }
  }
  return letter('I');
}

inline Matrix layer(const accredia::GateLayer& l) {
  Matrix m = Matrix::Identity(1, 1);
  for (const auto& seq : l.gates) {
    Matrix u = letter('I');
    for (auto g : seq) u = gate(g) * u;
    m = kron(m, u);
  }
  return m;
}

// Product of every layer and slice, ignoring prep/meas.
inline Matrix body_unitary(const accredia::HybridCircuit& c) {
  const Matrix hm = hamiltonian(*c.hamiltonian);
  Matrix u = identity(c.n_qubits);
  for (const auto& seg : c.body) {
    if (const auto* l = std::get_if<accredia::GateLayer>(&seg)) {
      u = layer(*l) * u;
    } else {
      u = expm(hm, std::get<accredia::Evolution>(seg).duration) * u;
    }
  }
  return u;
}

inline std::vector<std::string> all_words(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (char c : std::string("IXYZ")) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Matrix> kraus(const accredia::Channel& ch, std::size_t n) {
  using namespace accredia;
  const double d = static_cast<double>(std::size_t{1} << n);
  std::vector<Matrix> ks;
  if (const auto* c = std::get_if<StochasticPauli>(&ch)) {
    ks.push_back(std::sqrt(std::max(0.0, 1.0 - c->total())) * identity(n));
    for (const auto& [w, r] : c->rates) ks.push_back(std::sqrt(r) * pauli(w.word()));
  } else if (const auto* c = std::get_if<Depolarizing>(&ch)) {
    // p I/d = (p/d^2) sum over all Pauli conjugations.
    const auto words = all_words(n);
    for (const auto& w : words) {
      const double weight = c->p / (d * d) + (w == std::string(n, 'I') ? 1.0 - c->p : 0.0);
      ks.push_back(std::sqrt(weight) * pauli(w));
    }
  } else if (const auto* c = std::get_if<CoherentOverrotation>(&ch)) {
    ks.push_back(std::cos(c->angle / 2) * identity(n) -
                 cplx(0, std::sin(c->angle / 2)) * pauli(c->axis.word()));
  } else if (const auto* c = std::get_if<AmplitudeDamping>(&ch)) {
    Matrix k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1 - c->gamma);
    k1 << 0, std::sqrt(c->gamma), 0, 0;
    std::vector<Matrix> acc{Matrix::Identity(1, 1)};
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<Matrix> next;
      for (const auto& m : acc) {
        next.push_back(kron(m, k0));
        next.push_back(kron(m, k1));
      }
      acc = std::move(next);
    }
    ks = std::move(acc);
  }
  return ks;
}

inline Matrix apply_kraus(const std::vector<Matrix>& ks, const Matrix& rho) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : ks) out += k * rho * k.adjoint();
  return out;
}

inline void apply_bound(Matrix& rho, const accredia::NoiseModel* noise, accredia::LocationKind kind,
                        std::size_t n, std::size_t slice = 0) {
  if (!noise) return;
  for (const auto& b : noise->bindings()) {
    if (b.where.kind != kind) continue;
    if (kind == accredia::LocationKind::evolution_slice && !b.where.covers_slice(slice)) continue;
    rho = apply_kraus(kraus(b.channel, n), rho);
  }
}

// Straight-line dense simulation with Kraus noise.
inline Matrix simulate(const accredia::HybridCircuit& c, const accredia::NoiseModel* noise) {
  using accredia::LocationKind;
  const std::size_t n = c.n_qubits;
  Matrix rho = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  rho(0, 0) = 1.0;
  auto conj = [&](const Matrix& u) { rho = u * rho * u.adjoint(); };
  conj(layer(c.prep));
  apply_bound(rho, noise, LocationKind::prep, n);
  std::size_t slice = 0;
  const Matrix hm = c.hamiltonian ? hamiltonian(*c.hamiltonian) : identity(n);
  for (const auto& seg : c.body) {
    if (const auto* l = std::get_if<accredia::GateLayer>(&seg)) {
      conj(layer(*l));
      apply_bound(rho, noise, LocationKind::gate_layer, n);
    } else {
      conj(expm(hm, std::get<accredia::Evolution>(seg).duration));
      apply_bound(rho, noise, LocationKind::evolution_slice, n, slice++);
    }
  }
  conj(layer(c.meas));
  apply_bound(rho, noise, LocationKind::measurement, n);
  return rho;
}

// Normalized Choi state of a Kraus map, system factor first.
inline Matrix choi(const std::vector<Matrix>& ks) {
  const Eigen::Index d = ks.front().rows();
  Matrix out = Matrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Matrix eij = Matrix::Zero(d, d);
      eij(i, j) = 1.0;
      out += kron(apply_kraus(ks, eij), eij);
    }
  }
  return out / static_cast<double>(d);
}

inline double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

inline double spectral_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

// Random CPTP map: complex Gaussian Kraus operators normalized by
// S^{-1/2} with S = sum K^dagger K.
inline std::vector<Matrix> random_channel(std::size_t n, std::size_t rank, accredia::RngStream& rng) {
  const Eigen::Index d = Eigen::Index{1} << n;
  std::vector<Matrix> ks;
  Matrix s = Matrix::Zero(d, d);
  for (std::size_t r = 0; r < rank; ++r) {
    Matrix k(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) k(i, j) = cplx(rng.normal(0, 1), rng.normal(0, 1));
    }
    s += k.adjoint() * k;
    ks.push_back(k);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  const Matrix inv_sqrt = es.eigenvectors() *
                          es.eigenvalues().cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() *
                          es.eigenvectors().adjoint();
  for (auto& k : ks) k = k * inv_sqrt;
  return ks;
}

inline std::vector<Matrix> compose(const std::vector<Matrix>& second, const std::vector<Matrix>& first) {
  std::vector<Matrix> out;
  for (const auto& b : second) {
    for (const auto& a : first) out.push_back(b * a);
  }
  return out;
}

// Random Hamiltonian with coefficients in [-2, 2].
inline accredia::WeightedHamiltonian random_hamiltonian(std::size_t n, std::size_t max_terms,
                                                        accredia::RngStream& rng) {
  std::vector<accredia::PauliTerm> terms;
  const std::size_t count = 1 + rng.index(max_terms);
  for (std::size_t k = 0; k < count; ++k) {
    std::string w;
    do {
      w.clear();
      for (std::size_t q = 0; q < n; ++q) w += "IXYZ"[rng.index(4)];
    } while (w == std::string(n, 'I'));
    terms.push_back({-2.0 + 4.0 * rng.uniform(), accredia::PauliString::from_word(w)});
  }
  return accredia::WeightedHamiltonian(n, std::move(terms));
}

}  // namespace oracle
