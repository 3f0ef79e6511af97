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

#include "accredia/densim.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "accredia/errors.hpp"
#include "accredia/limits.hpp"

namespace accredia {
namespace {

using cplx = std::complex<double>;
using Index = Eigen::Index;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Gate2 {
  cplx a, b, c, d;  // [[a, b], [c, d]]
};

Gate2 gate_matrix(Gate g) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (g) {
    case Gate::I: return {1, 0, 0, 1};
    case Gate::X: return {0, 1, 1, 0};
    case Gate::Y: return {0, cplx(0, -1), cplx(0, 1), 0};
    case Gate::Z: return {1, 0, 0, -1};
    case Gate::H: return {r, r, r, -r};
  }
  return {1, 0, 0, 1};
}

inline double parity_sign(std::uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

inline cplx i_power(int k) {
  static constexpr cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return powers[((k % 4) + 4) % 4];
}

// rho <- g rho on the qubit at bit `mask`.
void left_1q(Matrix& m, std::uint64_t mask, const Gate2& g) {
  const auto dim = static_cast<std::uint64_t>(m.rows());
  for (Index col = 0; col < m.cols(); ++col) {
    for (std::uint64_t i0 = 0; i0 < dim; ++i0) {
      if (i0 & mask) continue;
      const auto r0 = static_cast<Index>(i0);
      const auto r1 = static_cast<Index>(i0 | mask);
      const cplx u = m(r0, col);
      const cplx v = m(r1, col);
      m(r0, col) = g.a * u + g.b * v;
      m(r1, col) = g.c * u + g.d * v;
    }
  }
}

// rho <- rho g^dagger on the qubit at bit `mask`.
void right_1q_adjoint(Matrix& m, std::uint64_t mask, const Gate2& g) {
  const auto dim = static_cast<std::uint64_t>(m.cols());
  for (std::uint64_t i0 = 0; i0 < dim; ++i0) {
    if (i0 & mask) continue;
    const auto c0 = static_cast<Index>(i0);
    const auto c1 = static_cast<Index>(i0 | mask);
    for (Index row = 0; row < m.rows(); ++row) {
      const cplx u = m(row, c0);
      const cplx v = m(row, c1);
      m(row, c0) = u * std::conj(g.a) + v * std::conj(g.b);
      m(row, c1) = u * std::conj(g.c) + v * std::conj(g.d);
    }
  }
}

void left_1q(Vector& psi, std::uint64_t mask, const Gate2& g) {
  const auto dim = static_cast<std::uint64_t>(psi.size());
  for (std::uint64_t i0 = 0; i0 < dim; ++i0) {
    if (i0 & mask) continue;
    const auto r0 = static_cast<Index>(i0);
    const auto r1 = static_cast<Index>(i0 | mask);
    const cplx u = psi(r0);
    const cplx v = psi(r1);
    psi(r0) = g.a * u + g.b * v;
    psi(r1) = g.c * u + g.d * v;
  }
}

// P rho P for a phase-free word given by masks over the whole register.
Matrix pauli_conjugate(const Matrix& rho, std::uint64_t x, std::uint64_t z) {
  const auto dim = static_cast<std::uint64_t>(rho.rows());
  Matrix out(rho.rows(), rho.cols());
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double sb = parity_sign(z & b);
    for (std::uint64_t a = 0; a < dim; ++a) {
      out(static_cast<Index>(a), static_cast<Index>(b)) =
          sb * parity_sign(z & a) * rho(static_cast<Index>(a ^ x), static_cast<Index>(b ^ x));
    }
  }
  return out;
}

Matrix kron_identity(const Matrix& u, Index d_anc) {
  if (d_anc == 1) return u;
  Matrix out = Matrix::Zero(u.rows() * d_anc, u.cols() * d_anc);
  for (Index s = 0; s < u.rows(); ++s) {
    for (Index t = 0; t < u.cols(); ++t) {
      const cplx v = u(s, t);
      if (v == cplx(0.0)) continue;
      for (Index a = 0; a < d_anc; ++a) out(s * d_anc + a, t * d_anc + a) = v;
    }
  }
  return out;
}

// System register in the high bits, optional ancilla register in the low
// bits. Stays a state vector until a mixing channel forces a density matrix.
class Register {
 public:
  Register(std::size_t n_sys, std::size_t n_anc)
      : n_sys_(n_sys), n_anc_(n_anc), dim_(Index{1} << (n_sys + n_anc)) {
    psi_ = Vector::Zero(dim_);
    if (n_anc == 0) {
      psi_(0) = 1.0;
    } else {
      const Index d = Index{1} << n_sys;
      const double amp = 1.0 / std::sqrt(static_cast<double>(d));
      for (Index i = 0; i < d; ++i) psi_(i * d + i) = amp;
    }
  }

  std::size_t n_sys() const noexcept { return n_sys_; }
  std::size_t n_anc() const noexcept { return n_anc_; }
  Index d_anc() const noexcept { return Index{1} << n_anc_; }
  Index d_sys() const noexcept { return Index{1} << n_sys_; }
  bool pure() const noexcept { return pure_; }

  void make_mixed() {
    if (!pure_) return;
    rho_ = psi_ * psi_.adjoint();
    psi_.resize(0);
    pure_ = false;
  }

  std::uint64_t bit(std::size_t sys_qubit) const noexcept {
    return std::uint64_t{1} << (n_sys_ + n_anc_ - 1 - sys_qubit);
  }

  void apply_gate(std::size_t q, Gate g) {
    if (g == Gate::I) return;
    const Gate2 m = gate_matrix(g);
    if (pure_) {
      left_1q(psi_, bit(q), m);
    } else {
      left_1q(rho_, bit(q), m);
      right_1q_adjoint(rho_, bit(q), m);
    }
  }

  void apply_layer(const GateLayer& layer) {
    for (std::size_t q = 0; q < layer.gates.size(); ++q) {
      for (Gate g : layer.gates[q]) apply_gate(q, g);
    }
  }

  // `u` acts on the full register.
  void apply_unitary(const Matrix& u) {
    if (pure_) {
      psi_ = u * psi_;
    } else {
      rho_ = u * rho_ * u.adjoint();
    }
  }

  void apply_pauli(const PauliString& word) {
    const std::uint64_t x = flip_mask(word) << n_anc_;
    const std::uint64_t z = phase_mask(word) << n_anc_;
    if (x == 0 && z == 0) return;
    if (pure_) {
      const cplx base = i_power(word.phase_exponent() + std::popcount(x & z));
      Vector out(dim_);
      for (Index a = 0; a < dim_; ++a) {
        const auto src = static_cast<std::uint64_t>(a) ^ x;
        out(a) = base * parity_sign(z & src) * psi_(static_cast<Index>(src));
      }
      psi_ = std::move(out);
    } else {
      rho_ = pauli_conjugate(rho_, x, z);
    }
  }

  void apply_channel(const Channel& ch) {
    std::visit(Overloaded{
                   [this](const StochasticPauli& c) { apply_stochastic(c); },
                   [this](const Depolarizing& c) { apply_depolarizing(c.p); },
                   [this](const CoherentOverrotation& c) { apply_rotation(c); },
                   [this](const AmplitudeDamping& c) { apply_damping(c.gamma); },
               },
               ch);
  }

  Matrix density() const {
    if (pure_) return psi_ * psi_.adjoint();
    return rho_;
  }

  Matrix& rho() {
    make_mixed();
    return rho_;
  }

  std::vector<double> probabilities() const {
    std::vector<double> p(static_cast<std::size_t>(dim_));
    for (Index i = 0; i < dim_; ++i) {
      const double v = pure_ ? std::norm(psi_(i)) : rho_(i, i).real();
      p[static_cast<std::size_t>(i)] = std::max(0.0, v);
    }
    return p;
  }

 private:
  void apply_stochastic(const StochasticPauli& c) {
    const double total = c.total();
    if (total <= 0.0) return;
    make_mixed();
    Matrix out = (1.0 - total) * rho_;
    for (const auto& [word, r] : c.rates) {
      if (r <= 0.0) continue;
      const std::uint64_t x = flip_mask(word) << n_anc_;
      const std::uint64_t z = phase_mask(word) << n_anc_;
      if (x == 0 && z == 0) {
        out += r * rho_;
      } else {
        out += r * pauli_conjugate(rho_, x, z);
      }
    }
    rho_ = std::move(out);
  }

  void apply_depolarizing(double p) {
    if (p <= 0.0) return;
    make_mixed();
    const Index da = d_anc();
    const Index ds = d_sys();
    Matrix anc = Matrix::Zero(da, da);
    for (Index s = 0; s < ds; ++s) anc += rho_.block(s * da, s * da, da, da);
    rho_ *= (1.0 - p);
    const double w = p / static_cast<double>(ds);
    for (Index s = 0; s < ds; ++s) rho_.block(s * da, s * da, da, da) += w * anc;
  }

  void apply_rotation(const CoherentOverrotation& c) {
    const std::uint64_t x = flip_mask(c.axis) << n_anc_;
    const std::uint64_t z = phase_mask(c.axis) << n_anc_;
    const double co = std::cos(c.angle / 2.0);
    const double si = std::sin(c.angle / 2.0);
    const cplx base = i_power(c.axis.phase_exponent() + std::popcount(x & z));
    auto omega = [&](std::uint64_t k) { return base * parity_sign(z & k); };
    if (pure_) {
      Vector out(dim_);
      for (Index a = 0; a < dim_; ++a) {
        const auto ua = static_cast<std::uint64_t>(a);
        out(a) = co * psi_(a) - cplx(0, si) * omega(ua ^ x) * psi_(static_cast<Index>(ua ^ x));
      }
      psi_ = std::move(out);
      return;
    }
    // U rho U^dagger with U = cos I - i sin P and P Hermitian.
    Matrix out(dim_, dim_);
    for (Index b = 0; b < dim_; ++b) {
      const auto ub = static_cast<std::uint64_t>(b);
      const auto bx = static_cast<Index>(ub ^ x);
      for (Index a = 0; a < dim_; ++a) {
        const auto ua = static_cast<std::uint64_t>(a);
        const auto ax = static_cast<Index>(ua ^ x);
        const cplx p_rho = omega(ua ^ x) * rho_(ax, b);
        const cplx rho_p = rho_(a, bx) * omega(ub);
        const cplx p_rho_p = omega(ua ^ x) * rho_(ax, bx) * omega(ub);
        out(a, b) = co * co * rho_(a, b) + si * si * p_rho_p - cplx(0, co * si) * p_rho +
                    cplx(0, co * si) * rho_p;
      }
    }
    rho_ = std::move(out);
  }

  void apply_damping(double gamma) {
    if (gamma <= 0.0) return;
    make_mixed();
    const Gate2 k0{1, 0, 0, std::sqrt(1.0 - gamma)};
    const Gate2 k1{0, std::sqrt(gamma), 0, 0};
    for (std::size_t q = 0; q < n_sys_; ++q) {
      Matrix a = rho_;
      left_1q(a, bit(q), k0);
      right_1q_adjoint(a, bit(q), k0);
      Matrix b = std::move(rho_);
      left_1q(b, bit(q), k1);
      right_1q_adjoint(b, bit(q), k1);
      rho_ = a + b;
    }
  }

  std::size_t n_sys_;
  std::size_t n_anc_;
  Index dim_;
  bool pure_ = true;
  Vector psi_;
  Matrix rho_;
};

void apply_bound(Register& reg, const NoiseModel* noise, LocationKind kind,
                 std::optional<std::size_t> slice = std::nullopt) {
  if (noise == nullptr) return;
  for (const auto& b : noise->bindings()) {
    if (b.where.kind != kind) continue;
    if (kind == LocationKind::evolution_slice && !b.where.covers_slice(*slice)) continue;
    reg.apply_channel(b.channel);
  }
}

class UnitaryCache {
 public:
  UnitaryCache(std::shared_ptr<const WeightedHamiltonian> h, Index d_anc)
      : h_(std::move(h)), d_anc_(d_anc) {}

  const Matrix& get(double t) {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    if (!prop_) prop_.emplace(*h_);
    return cache_.emplace(t, kron_identity(prop_->unitary(t), d_anc_)).first->second;
  }

 private:
  std::shared_ptr<const WeightedHamiltonian> h_;
  Index d_anc_;
  std::optional<Propagator> prop_;
  std::map<double, Matrix> cache_;
};

Register simulate(const HybridCircuit& c, const NoiseModel* noise, std::size_t n_anc) {
  c.validate();
  if (noise) noise->validate(c.n_qubits);
  Register reg(c.n_qubits, n_anc);
  UnitaryCache cache(c.hamiltonian, reg.d_anc());
  reg.apply_layer(c.prep);
  apply_bound(reg, noise, LocationKind::prep);
  std::size_t slice = 0;
  for (const Segment& seg : c.body) {
    if (const auto* layer = std::get_if<GateLayer>(&seg)) {
      reg.apply_layer(*layer);
      apply_bound(reg, noise, LocationKind::gate_layer);
    } else {
      const double t = std::get<Evolution>(seg).duration;
      if (t != 0.0) reg.apply_unitary(cache.get(t));
      apply_bound(reg, noise, LocationKind::evolution_slice, slice);
      ++slice;
    }
  }
  reg.apply_layer(c.meas);
  apply_bound(reg, noise, LocationKind::measurement);
  return reg;
}

std::size_t log2_dim(Index dim) {
  const auto d = static_cast<std::uint64_t>(dim);
  if (d == 0 || !std::has_single_bit(d)) throw DimensionError("dimension is not a power of two");
  return static_cast<std::size_t>(std::countr_zero(d));
}

// Choi dimension d^2 -> system dimension d.
Index choi_system_dim(const Matrix& choi) {
  if (choi.rows() != choi.cols()) throw DimensionError("Choi matrix must be square");
  const std::size_t bits = log2_dim(choi.rows());
  if (bits % 2 != 0) throw DimensionError("Choi dimension must be a square power of two");
  return Index{1} << (bits / 2);
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

void accumulate_slices(Register& reg, const Matrix& u_full, const std::vector<PauliString>& words,
                       std::size_t slices, std::size_t first_index, const NoiseModel* noise) {
  reg.make_mixed();
  const double weight = 1.0 / static_cast<double>(words.size());
  for (std::size_t k = 0; k < slices; ++k) {
    const Matrix start = reg.rho();
    Matrix acc = Matrix::Zero(start.rows(), start.cols());
    for (const PauliString& w : words) {
      reg.rho() = start;
      reg.apply_pauli(w);
      apply_bound(reg, noise, LocationKind::gate_layer);
      reg.apply_unitary(u_full);
      apply_bound(reg, noise, LocationKind::evolution_slice, first_index + k);
      reg.apply_pauli(w);
      apply_bound(reg, noise, LocationKind::gate_layer);
      acc += reg.rho();
    }
    reg.rho() = weight * acc;
  }
}

std::vector<PauliString> twirl_words(const InversionGroup& group, Direction j, TwirlSet set) {
  if (j == Direction::forward) return {PauliString(group.n_qubits())};
  if (set == TwirlSet::full_group) return group.elements();
  auto words = group.non_identity();
  if (words.empty()) throw ParameterError("group", "inversion group has no non-identity word");
  return words;
}

}  // namespace

Matrix exact_unitary(const WeightedHamiltonian& h, double t) {
  require_dense(h.n_qubits(), "exact_unitary");
  return Propagator(h).unitary(t);
}

Propagator::Propagator(const WeightedHamiltonian& h) {
  require_dense(h.n_qubits(), "propagator");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.to_matrix());
  if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
  values_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

Matrix Propagator::unitary(double t) const {
  Vector phases(values_.size());
  for (Index k = 0; k < values_.size(); ++k) phases(k) = std::polar(1.0, -values_(k) * t);
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

std::string bitstring(std::uint64_t index, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if ((index >> (n_qubits - 1 - q)) & 1U) s[q] = '1';
  }
  return s;
}

std::uint64_t bitstring_index(std::string_view bits) {
  if (bits.size() > 63) throw ParseError("bitstring too long");
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("bitstring contains '" + std::string(1, c) + "'");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return v;
}

Distribution::Distribution(std::size_t n_qubits)
    : n_qubits_(n_qubits), probs_(std::size_t{1} << n_qubits, 0.0) {}

Distribution::Distribution(std::size_t n_qubits, std::vector<double> probabilities)
    : n_qubits_(n_qubits), probs_(std::move(probabilities)) {
  if (probs_.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("distribution length does not match 2^" + std::to_string(n_qubits));
  }
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw ParameterError("probabilities", "must be >= 0");
  }
}

Distribution Distribution::point_mass(std::size_t n_qubits, std::uint64_t index) {
  Distribution d(n_qubits);
  d.probs_.at(index) = 1.0;
  return d;
}

Distribution Distribution::from_map(std::size_t n_qubits,
                                    const std::map<std::string, double>& probs) {
  Distribution d(n_qubits);
  for (const auto& [bits, p] : probs) {
    if (bits.size() != n_qubits) throw DimensionError("bitstring '" + bits + "' has wrong width");
    if (!(p >= 0.0)) throw ParameterError("probabilities", "must be >= 0");
    d.probs_[bitstring_index(bits)] += p;
  }
  return d;
}

Distribution Distribution::empirical(std::size_t n_qubits, const std::vector<std::string>& shots) {
  if (shots.empty()) throw ParameterError("shots", "empty shot list");
  Distribution d(n_qubits);
  const double w = 1.0 / static_cast<double>(shots.size());
  for (const auto& s : shots) {
    if (s.size() != n_qubits) throw DimensionError("shot '" + s + "' has wrong width");
    d.probs_[bitstring_index(s)] += w;
  }
  return d;
}

double Distribution::probability(std::string_view bits) const {
  if (bits.size() != n_qubits_) throw DimensionError("bitstring has wrong width");
  return probs_[bitstring_index(bits)];
}

double Distribution::total() const noexcept {
  return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

std::map<std::string, double> Distribution::to_map(double threshold) const {
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] > threshold) out.emplace(bitstring(i, n_qubits_), probs_[i]);
  }
  return out;
}

double tvd(const Distribution& p, const Distribution& q) {
  if (p.n_qubits() != q.n_qubits()) throw DimensionError("tvd over different sample spaces");
  double s = 0.0;
  for (std::size_t i = 0; i < p.probabilities().size(); ++i) {
    s += std::abs(p.probabilities()[i] - q.probabilities()[i]);
  }
  return 0.5 * s;
}

double tvd(const std::map<std::string, double>& p, const std::map<std::string, double>& q) {
  double s = 0.0;
  for (const auto& [k, v] : p) {
    auto it = q.find(k);
    s += std::abs(v - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [k, v] : q) {
    if (!p.contains(k)) s += std::abs(v);
  }
  return 0.5 * s;
}

DensityReport check_density(const Matrix& rho) {
  DensityReport r;
  r.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  r.trace_error = std::abs(rho.trace() - cplx(1.0));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(rho), Eigen::EigenvaluesOnly);
  r.min_eigenvalue = solver.eigenvalues().minCoeff();
  return r;
}

Matrix final_state(const HybridCircuit& c, const NoiseModel* noise) {
  require_dense(c.n_qubits, "final_state");
  return simulate(c, noise, 0).density();
}

Distribution output_distribution(const HybridCircuit& c) {
  require_dense(c.n_qubits, "output_distribution");
  return Distribution(c.n_qubits, simulate(c, nullptr, 0).probabilities());
}

Distribution output_distribution(const HybridCircuit& c, const NoiseModel& noise) {
  require_dense(c.n_qubits, "output_distribution");
  return Distribution(c.n_qubits, simulate(c, &noise, 0).probabilities());
}

std::vector<std::string> sample(const Distribution& d, RngStream& rng, std::size_t shots) {
  if (shots == 0) throw ParameterError("shots", "must be >= 1");
  const auto& p = d.probabilities();
  std::vector<double> cdf(p.size());
  std::partial_sum(p.begin(), p.end(), cdf.begin());
  const double total = cdf.back();
  if (!(total > 0.0)) throw ParameterError("distribution", "has zero mass");
  std::vector<std::string> out;
  out.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto idx = static_cast<std::size_t>(it - cdf.begin());
    // Guard against rounding past the last nonzero entry.
    if (idx >= p.size()) idx = p.size() - 1;
    while (p[idx] == 0.0 && idx > 0) --idx;
    out.push_back(bitstring(idx, d.n_qubits()));
  }
  return out;
}

std::vector<std::string> execute(const HybridCircuit& c, const NoiseModel& noise, RngStream& rng,
                                 std::size_t shots) {
  if (shots == 0) throw ParameterError("shots", "must be >= 1");
  const NoiseModel instance = noise.resolve(rng);
  return sample(output_distribution(c, instance), rng, shots);
}

Matrix channel_choi(const HybridCircuit& c, const NoiseModel* noise) {
  require_choi(c.n_qubits, "channel_choi");
  require_dense(2 * c.n_qubits, "channel_choi");
  return simulate(c, noise, c.n_qubits).density();
}

Matrix channel_choi(const Channel& ch, std::size_t n_qubits) {
  require_choi(n_qubits, "channel_choi");
  require_dense(2 * n_qubits, "channel_choi");
  Register reg(n_qubits, n_qubits);
  reg.apply_channel(ch);
  return reg.density();
}

Matrix unitary_choi(const Matrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("unitary must be square");
  log2_dim(u.rows());
  const Index d = u.rows();
  Vector v(d * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index s = 0; s < d; ++s) {
    for (Index a = 0; a < d; ++a) v(s * d + a) = u(s, a) * norm;
  }
  return v * v.adjoint();
}

Matrix apply_choi(const Matrix& choi, const Matrix& rho) {
  const Index d = choi_system_dim(choi);
  if (rho.rows() != d || rho.cols() != d) throw DimensionError("state does not match channel");
  Matrix out = Matrix::Zero(d, d);
  for (Index s = 0; s < d; ++s) {
    for (Index t = 0; t < d; ++t) {
      out(s, t) = (choi.block(s * d, t * d, d, d).array() * rho.array()).sum();
    }
  }
  return static_cast<double>(d) * out;
}

CptpReport check_cptp(const Channel& ch, std::size_t n_qubits) {
  const Matrix choi = channel_choi(ch, n_qubits);
  const Index d = Index{1} << n_qubits;
  CptpReport r;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(choi), Eigen::EigenvaluesOnly);
  r.min_eigenvalue = solver.eigenvalues().minCoeff();
  Matrix reduced = Matrix::Zero(d, d);
  for (Index s = 0; s < d; ++s) reduced += choi.block(s * d, s * d, d, d);
  reduced -= Matrix::Identity(d, d) / static_cast<double>(d);
  r.trace_defect = reduced.cwiseAbs().maxCoeff();
  return r;
}

ChoiDistance choi_trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("Choi matrices have different dimensions");
  }
  const Index d = choi_system_dim(a);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(a - b), Eigen::EigenvaluesOnly);
  const double dist = 0.5 * solver.eigenvalues().cwiseAbs().sum();
  return {dist, dist, static_cast<double>(d) * dist};
}

Matrix chi_matrix(const Matrix& choi) {
  const Index d = choi_system_dim(choi);
  const std::size_t n = log2_dim(d);
  const Index n_words = d * d;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix basis = Matrix::Zero(d * d, n_words);
  for (Index w = 0; w < n_words; ++w) {
    const auto x = static_cast<std::uint64_t>(w) >> n;
    const auto z = static_cast<std::uint64_t>(w) & (static_cast<std::uint64_t>(d) - 1);
    const cplx base = i_power(std::popcount(x & z));
    for (Index a = 0; a < d; ++a) {
      const auto ua = static_cast<std::uint64_t>(a);
      const auto s = static_cast<Index>(ua ^ x);
      basis(s * d + a, w) = base * parity_sign(z & ua) * norm;
    }
  }
  return basis.adjoint() * choi * basis;
}

double pauli_offdiagonal(const Matrix& choi) {
  const Matrix chi = chi_matrix(choi);
  double worst = 0.0;
  for (Index r = 0; r < chi.rows(); ++r) {
    for (Index c = 0; c < chi.cols(); ++c) {
      if (r != c) worst = std::max(worst, std::abs(chi(r, c)));
    }
  }
  return worst;
}

Matrix averaged_subcircuit_choi(const WeightedHamiltonian& h, const InversionGroup& group, double t,
                                std::size_t slices, Direction j, const NoiseModel* noise,
                                TwirlSet set) {
  const std::size_t n = h.n_qubits();
  if (group.n_qubits() != n) throw DimensionError("group and Hamiltonian widths differ");
  if (slices == 0) throw ParameterError("slices", "must be >= 1");
  require_choi(n, "averaged_subcircuit_choi");
  require_dense(2 * n, "averaged_subcircuit_choi");
  if (noise) noise->validate(n);
  Register reg(n, n);
  const Matrix u = kron_identity(exact_unitary(h, t / static_cast<double>(slices)), reg.d_anc());
  accumulate_slices(reg, u, twirl_words(group, j, set), slices, 0, noise);
  return reg.density();
}

Matrix averaged_block_choi(const InversionPlan& plan, Direction j, const NoiseModel* noise) {
  const std::size_t n = plan.n_qubits();
  require_choi(n, "averaged_block_choi");
  require_dense(2 * n, "averaged_block_choi");
  if (noise) noise->validate(n);
  Register reg(n, n);
  Propagator prop(*plan.hamiltonian);
  reg.apply_unitary(kron_identity(prop.unitary(plan.split.t1), reg.d_anc()));
  apply_bound(reg, noise, LocationKind::evolution_slice, 0);
  const Matrix u = kron_identity(prop.unitary(plan.slice_duration()), reg.d_anc());
  accumulate_slices(reg, u, twirl_words(plan.group, j, TwirlSet::non_identity), plan.slices, 1,
                    noise);
  return reg.density();
}

Matrix layer_unitary(const GateLayer& layer) {
  const std::size_t n = layer.width();
  require_dense(n, "layer_unitary");
  const Index d = Index{1} << n;
  Matrix u = Matrix::Identity(d, d);
  for (std::size_t q = 0; q < n; ++q) {
    for (Gate g : layer.gates[q]) {
      if (g != Gate::I) left_1q(u, std::uint64_t{1} << (n - 1 - q), gate_matrix(g));
    }
  }
  return u;
}

}  // namespace accredia
