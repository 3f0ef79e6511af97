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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "accredia/builder.hpp"
#include "accredia/densim.hpp"
#include "accredia/errors.hpp"
#include "oracles.hpp"

namespace accredia {
namespace {

using cplx = std::complex<double>;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

HybridCircuit one_slice(const WeightedHamiltonian& h, double t) {
  HybridCircuit c;
  c.n_qubits = h.n_qubits();
  c.hamiltonian = std::make_shared<const WeightedHamiltonian>(h);
  c.prep = GateLayer::identity(c.n_qubits);
  c.meas = GateLayer::identity(c.n_qubits);
  c.body.emplace_back(Evolution{t});
  return c;
}

Channel random_channel(std::size_t n, RngStream& rng) {
  switch (rng.index(4)) {
    case 0: {
      StochasticPauli c;
      const auto words = oracle::all_words(n);
      double budget = 1.0;
      for (int k = 0; k < 3; ++k) {
        const double r = budget * rng.uniform() * 0.5;
        budget -= r;
        c.rates.emplace_back(PauliString::from_word(words[rng.index(words.size())]), r);
      }
      return c;
    }
    case 1: return Depolarizing{rng.uniform()};
    case 2: {
      std::string w;
      for (std::size_t q = 0; q < n; ++q) w += "IXYZ"[rng.index(4)];
      return CoherentOverrotation{PauliString::from_word(w), -3.0 + 6.0 * rng.uniform()};
    }
    default: return AmplitudeDamping{rng.uniform()};
  }
}

NoiseLocation random_location(RngStream& rng) {
  switch (rng.index(5)) {
    case 0: return NoiseLocation::prep();
    case 1: return NoiseLocation::measurement();
    case 2: return NoiseLocation::gate_layer();
    case 3: return NoiseLocation::any_slice();
    default: {
      const std::size_t a = rng.index(3);
      return NoiseLocation::slices(a, a + rng.index(3));
    }
  }
}

HybridCircuit random_circuit(std::size_t n, RngStream& rng) {
  HybridCircuit c;
  c.n_qubits = n;
  c.hamiltonian = std::make_shared<const WeightedHamiltonian>(oracle::random_hamiltonian(n, 4, rng));
  auto random_layer = [&] {
    GateLayer l;
    for (std::size_t q = 0; q < n; ++q) {
      GateSequence seq;
      const std::size_t len = 1 + rng.index(3);
      for (std::size_t k = 0; k < len; ++k) seq.push_back(static_cast<Gate>(rng.index(5)));
      l.gates.push_back(seq);
    }
    return l;
  };
  c.prep = random_layer();
  c.meas = random_layer();
  const std::size_t segments = rng.index(6);
  for (std::size_t s = 0; s < segments; ++s) {
    if (rng.coin()) {
      c.body.emplace_back(random_layer());
    } else {
      c.body.emplace_back(Evolution{-1.0 + 2.0 * rng.uniform()});
    }
  }
  return c;
}

NoiseModel random_noise(std::size_t n, RngStream& rng) {
  NoiseModel m;
  const std::size_t k = rng.index(4);
  for (std::size_t i = 0; i < k; ++i) m.add(random_location(rng), random_channel(n, rng));
  return m;
}

TEST(ExactUnitary, ZAtPiIsMinusIdentity) {
  const Matrix u = exact_unitary(WeightedHamiltonian::from_words({{1.0, "Z"}}), std::numbers::pi);
  EXPECT_LT(max_abs(u + Matrix::Identity(2, 2)), 1e-12);
}

TEST(ExactUnitary, ZeroTimeIsIdentity) {
  RngStream rng(1);
  const auto h = oracle::random_hamiltonian(3, 6, rng);
  EXPECT_LT(max_abs(exact_unitary(h, 0.0) - Matrix::Identity(8, 8)), 1e-12);
}

TEST(ExactUnitary, XAtHalfPiIsMinusIX) {
  const Matrix u = exact_unitary(WeightedHamiltonian::from_words({{1.0, "X"}}), std::numbers::pi / 2);
  EXPECT_LT(max_abs(u - cplx(0, -1) * oracle::letter('X')), 1e-12);
}

TEST(ExactUnitary, UnitaryAndMatchesPadeOracle) {
  RngStream rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto h = oracle::random_hamiltonian(1 + rng.index(4), 8, rng);
    const double t = -3.0 + 6.0 * rng.uniform();
    const Matrix u = exact_unitary(h, t);
    const auto d = u.rows();
    EXPECT_LT(max_abs(u.adjoint() * u - Matrix::Identity(d, d)), 1e-11);
    EXPECT_LT(max_abs(u - oracle::expm(oracle::hamiltonian(h), t)), 1e-10);
  }
}

TEST(ExactUnitary, CapacityLimit) {
  ::setenv("ACCREDIA_MAX_QUBITS", "2", 1);
  EXPECT_THROW(exact_unitary(WeightedHamiltonian::from_words({{1.0, "ZZZ"}}), 1.0), CapacityError);
  ::unsetenv("ACCREDIA_MAX_QUBITS");
}

TEST(OutputDistribution, EmptyBodyIsPointMass) {
  HybridCircuit c;
  c.n_qubits = 3;
  c.prep = GateLayer::identity(3);
  c.meas = GateLayer::identity(3);
  EXPECT_EQ(output_distribution(c).to_map(), (std::map<std::string, double>{{"000", 1.0}}));
}

TEST(OutputDistribution, HadamardIsUniform) {
  HybridCircuit c;
  c.n_qubits = 1;
  c.prep.gates = {parse_gate_sequence("H")};
  c.meas = GateLayer::identity(1);
  const auto d = output_distribution(c);
  EXPECT_NEAR(d.probability("0"), 0.5, 1e-15);
  EXPECT_NEAR(d.probability("1"), 0.5, 1e-15);
}

TEST(OutputDistribution, BitFlipOnOneSlice) {
  // Z evolution leaves |0> alone, so only the channel acts.
  const auto c = one_slice(WeightedHamiltonian::from_words({{1.0, "Z"}}), 0.3);
  NoiseModel noise;
  noise.add(NoiseLocation::any_slice(), StochasticPauli{{{PauliString::parse("X"), 0.2}}});
  const auto d = output_distribution(c, noise);
  EXPECT_NEAR(d.probability("0"), 0.8, 1e-12);
  EXPECT_NEAR(d.probability("1"), 0.2, 1e-12);
}

TEST(OutputDistribution, MatchesBruteForceOracle) {
  RngStream rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.index(3);
    const auto c = random_circuit(n, rng);
    const auto noise = random_noise(n, rng);
    const Matrix expected = oracle::simulate(c, &noise);
    const Matrix got = final_state(c, &noise);
    ASSERT_LT(max_abs(got - expected), 1e-10) << "trial " << trial;
    std::vector<double> p(expected.rows());
    for (Eigen::Index i = 0; i < expected.rows(); ++i) p[i] = std::max(0.0, expected(i, i).real());
    EXPECT_LT(tvd(output_distribution(c, noise), Distribution(n, p)), 1e-10);
  }
}

TEST(DensityInvariants, HoldAcrossRandomCompositions) {
  RngStream rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.index(3);
    const auto c = random_circuit(n, rng);
    const auto noise = random_noise(n, rng);
    const auto report = check_density(final_state(c, &noise));
    ASSERT_TRUE(report.ok()) << "trial " << trial << " herm " << report.hermiticity_error
                             << " trace " << report.trace_error << " min " << report.min_eigenvalue;
    EXPECT_NEAR(output_distribution(c, noise).total(), 1.0, 1e-10);
  }
}

TEST(Execute, NoiselessTrapGivesZeros) {
  const auto plan = make_plan(WeightedHamiltonian::from_words({{1.0, "ZZ"}}), 1.0, 0.1);
  RngStream rng(5);
  for (int i = 0; i < 5; ++i) {
    const auto trap = build_trap(plan, rng);
    for (const auto& s : execute(trap, NoiseModel{}, rng, 50)) EXPECT_EQ(s, "00");
  }
}

TEST(Execute, BinomialFrequency) {
  const auto c = one_slice(WeightedHamiltonian::from_words({{1.0, "Z"}}), 0.3);
  NoiseModel noise;
  noise.add(NoiseLocation::any_slice(), StochasticPauli{{{PauliString::parse("X"), 0.2}}});
  RngStream rng(6);
  const auto shots = execute(c, noise, rng, 100000);
  const double ones = static_cast<double>(std::count(shots.begin(), shots.end(), "1")) / shots.size();
  EXPECT_NEAR(ones, 0.2, 0.01);
}

TEST(Execute, DeterministicForSeed) {
  const auto c = one_slice(WeightedHamiltonian::from_words({{1.0, "X"}}), 0.4);
  NoiseModel noise;
  noise.add(NoiseLocation::any_slice(), Depolarizing{0.3}, Drift{Drift::Kind::uniform, 0.5, 1.5});
  RngStream a(7), b(7);
  EXPECT_EQ(execute(c, noise, a, 200), execute(c, noise, b, 200));
}

TEST(Execute, DriftRedrawnPerExecution) {
  NoiseModel noise;
  noise.add(NoiseLocation::any_slice(), StochasticPauli{{{PauliString::parse("X"), 0.2}}},
            Drift{Drift::Kind::uniform, 0.0, 2.0});
  RngStream rng(8);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto inst = noise.resolve(rng);
    const double r = std::get<StochasticPauli>(inst.bindings()[0].channel).rates[0].second;
    EXPECT_FALSE(inst.has_drift());
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  EXPECT_LT(lo, 0.1);
  EXPECT_GT(hi, 0.3);
}

TEST(Choi, IdentityIsMaximallyEntangled) {
  const Matrix c = channel_choi(StochasticPauli{}, 1);
  Matrix omega = Matrix::Zero(4, 4);
  for (int i : {0, 3}) {
    for (int j : {0, 3}) omega(i, j) = 0.5;
  }
  EXPECT_LT(max_abs(c - omega), 1e-15);
  EXPECT_NEAR((c * c).trace().real(), 1.0, 1e-15);
}

TEST(Choi, XGateIsOrthogonalToIdentity) {
  const Matrix cx = unitary_choi(oracle::letter('X'));
  const Matrix ci = unitary_choi(oracle::identity(1));
  EXPECT_NEAR((cx * cx).trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs((cx * ci).trace()), 0.0, 1e-15);
  EXPECT_NEAR(choi_trace_distance(ci, cx).distance, 1.0, 1e-12);
}

TEST(Choi, FullDepolarizingIsMaximallyMixed) {
  EXPECT_LT(max_abs(channel_choi(Depolarizing{1.0}, 1) - Matrix::Identity(4, 4) / 4.0), 1e-15);
}

TEST(Choi, ChannelsMatchKrausOracle) {
  RngStream rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.index(2);
    const Channel ch = random_channel(n, rng);
    const Matrix got = channel_choi(ch, n);
    EXPECT_LT(max_abs(got - oracle::choi(oracle::kraus(ch, n))), 1e-12) << channel_kind(ch);
    EXPECT_TRUE(check_cptp(ch, n).ok());
  }
}

TEST(Choi, CircuitChoiMatchesUnitaryChoi) {
  RngStream rng(10);
  const auto h = oracle::random_hamiltonian(2, 4, rng);
  const auto c = one_slice(h, 0.8);
  EXPECT_LT(max_abs(channel_choi(c) - unitary_choi(exact_unitary(h, 0.8))), 1e-12);
}

TEST(Choi, ApplyRecoversChannelAction) {
  RngStream rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Channel ch = random_channel(2, rng);
    Matrix rho = oracle::random_channel(2, 1, rng)[0];
    rho = rho * rho.adjoint();
    rho /= rho.trace();
    EXPECT_LT(max_abs(apply_choi(channel_choi(ch, 2), rho) - oracle::apply_kraus(oracle::kraus(ch, 2), rho)),
              1e-12);
  }
}

TEST(Choi, CapacityLimit) {
  EXPECT_THROW(channel_choi(Depolarizing{0.1}, 7), CapacityError);
}

TEST(Tvd, Examples) {
  const auto p = Distribution::from_map(2, {{"00", 0.5}, {"11", 0.5}});
  EXPECT_EQ(tvd(p, p), 0.0);
  EXPECT_DOUBLE_EQ(tvd(Distribution::point_mass(2, 0), p), 0.5);
  const auto uniform = Distribution(2, {0.25, 0.25, 0.25, 0.25});
  EXPECT_DOUBLE_EQ(tvd(Distribution::point_mass(2, 0), uniform), 0.75);
  EXPECT_DOUBLE_EQ(tvd(std::map<std::string, double>{{"00", 1.0}},
                       std::map<std::string, double>{{"00", 0.5}, {"11", 0.5}}),
                   0.5);
}

TEST(Tvd, EmpiricalConverges) {
  RngStream rng(12);
  const auto p = Distribution(2, {0.1, 0.2, 0.3, 0.4});
  const auto shots = sample(p, rng, 50000);
  EXPECT_LT(tvd(p, Distribution::empirical(2, shots)), 0.01);
}

TEST(ChoiDistance, Examples) {
  const Matrix a = channel_choi(AmplitudeDamping{0.3}, 1);
  const auto same = choi_trace_distance(a, a);
  EXPECT_NEAR(same.distance, 0.0, 1e-14);
  EXPECT_NEAR(same.diamond_upper, 0.0, 1e-14);
  const auto d = choi_trace_distance(a, channel_choi(Depolarizing{0.4}, 1));
  EXPECT_LE(d.diamond_lower, d.diamond_upper);
  EXPECT_DOUBLE_EQ(d.diamond_upper, 2.0 * d.distance);
  EXPECT_THROW(choi_trace_distance(a, channel_choi(Depolarizing{0.4}, 2)), DimensionError);
}

TEST(ChoiDistance, MatchesTraceNormOracle) {
  RngStream rng(13);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = oracle::choi(oracle::random_channel(2, 2, rng));
    const Matrix b = oracle::choi(oracle::random_channel(2, 3, rng));
    EXPECT_NEAR(choi_trace_distance(a, b).distance, 0.5 * oracle::trace_norm(a - b), 1e-10);
  }
}

TEST(ChoiDistance, Chaining) {
  RngStream rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.index(2);
    const auto a1 = oracle::random_channel(n, 1 + rng.index(3), rng);
    const auto a2 = oracle::random_channel(n, 1 + rng.index(3), rng);
    const auto b1 = oracle::random_channel(n, 1 + rng.index(3), rng);
    const auto b2 = oracle::random_channel(n, 1 + rng.index(3), rng);
    const double composed = choi_trace_distance(oracle::choi(oracle::compose(b1, a1)),
                                                oracle::choi(oracle::compose(b2, a2)))
                                .distance;
    const double da = choi_trace_distance(oracle::choi(a1), oracle::choi(a2)).distance;
    const double db = choi_trace_distance(oracle::choi(b1), oracle::choi(b2)).distance;
    EXPECT_LE(composed, da + db + 1e-9) << "trial " << trial;
  }
}

TEST(Twirl, FullGroupTwirlOfOverrotationIsPauliDiagonal) {
  // Both Hamiltonians have the full Pauli group as inversion group, so
  // averaging over it is a Pauli twirl.
  const auto h1 = WeightedHamiltonian::from_words({{1.0, "X"}, {1.0, "Z"}});
  const auto h2 = WeightedHamiltonian::from_words(
      {{1.0, "XZ"}, {1.0, "ZX"}, {1.0, "XI"}, {1.0, "IX"}, {1.0, "ZI"}, {1.0, "IZ"}});
  for (const auto* h : {&h1, &h2}) {
    const std::size_t n = h->n_qubits();
    const auto g = build_inversion_group(*h);
    ASSERT_EQ(g.size(), std::size_t{1} << (2 * n));
    NoiseModel noise;
    noise.add(NoiseLocation::any_slice(),
              CoherentOverrotation{PauliString::from_word(n == 1 ? "Y" : "XY"), 0.37});
    const Matrix raw = channel_choi(std::get<CoherentOverrotation>(noise.bindings()[0].channel), n);
    EXPECT_GT(pauli_offdiagonal(raw), 1e-3);
    const Matrix twirled =
        averaged_subcircuit_choi(*h, g, 0.0, 1, Direction::inverted, &noise, TwirlSet::full_group);
    EXPECT_LT(pauli_offdiagonal(twirled), 1e-8);
  }
}

TEST(Twirl, TrapPauliDressingDiagonalizesNoisyBlock) {
  const auto plan = make_plan(WeightedHamiltonian::from_words({{1.0, "ZZ"}, {0.5, "XI"}}), 1.0, 0.5);
  NoiseModel noise;
  noise.add(NoiseLocation::any_slice(), CoherentOverrotation{PauliString::parse("XY"), 0.2});
  const Matrix block = averaged_block_choi(plan, Direction::inverted, &noise);
  // P rho P for uniformly random P acts on the Choi state as (P (x) P*).
  Matrix twirled = Matrix::Zero(block.rows(), block.cols());
  const auto words = oracle::all_words(2);
  for (const auto& w : words) {
    const Matrix p = oracle::pauli(w);
    const Matrix k = oracle::kron(p, p.conjugate());
    twirled += k * block * k.adjoint();
  }
  twirled /= static_cast<double>(words.size());
  EXPECT_LT(pauli_offdiagonal(twirled), 1e-8);
}

TEST(Chi, IdentityChannelHasSingleEntry) {
  const Matrix chi = chi_matrix(channel_choi(StochasticPauli{}, 2));
  EXPECT_NEAR(chi(0, 0).real(), 1.0, 1e-12);
  EXPECT_NEAR(chi.cwiseAbs().sum(), 1.0, 1e-12);
}

TEST(Noise, ValidationNamesField) {
  NoiseModel bad;
  bad.add(NoiseLocation::prep(), StochasticPauli{{{PauliString::parse("X"), 0.7}, {PauliString::parse("Z"), 0.5}}});
  try {
    bad.validate(1);
    FAIL();
  } catch (const ParameterError& e) {
    EXPECT_EQ(e.field(), "rates");
  }
  NoiseModel neg;
  neg.add(NoiseLocation::prep(), Depolarizing{-0.1});
  EXPECT_THROW(neg.validate(1), ParameterError);
  NoiseModel width;
  width.add(NoiseLocation::prep(), StochasticPauli{{{PauliString::parse("XX"), 0.1}}});
  EXPECT_THROW(width.validate(1), ParameterError);
}

TEST(Noise, ScalingClampsToValidRange) {
  const auto c = std::get<StochasticPauli>(
      scale_channel(StochasticPauli{{{PauliString::parse("X"), 0.4}, {PauliString::parse("Z"), 0.4}}}, 3.0));
  EXPECT_NEAR(c.total(), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(std::get<Depolarizing>(scale_channel(Depolarizing{0.6}, 2.0)).p, 1.0);
  EXPECT_DOUBLE_EQ(std::get<AmplitudeDamping>(scale_channel(AmplitudeDamping{0.6}, -1.0)).gamma, 0.0);
  EXPECT_DOUBLE_EQ(
      std::get<CoherentOverrotation>(scale_channel(CoherentOverrotation{PauliString::parse("Z"), 0.5}, 2.0))
          .angle,
      1.0);
}

TEST(Noise, PositionNotGateIdentitySelectsChannel) {
  // Two circuits with the same shape but different gates see the same channel
  // at the same position.
  const auto h = std::make_shared<const WeightedHamiltonian>(WeightedHamiltonian::from_words({{1.0, "Z"}}));
  HybridCircuit a;
  a.n_qubits = 1;
  a.hamiltonian = h;
  a.prep = GateLayer::identity(1);
  a.meas = GateLayer::identity(1);
  a.body = {GateLayer::identity(1), Evolution{0.2}, GateLayer::identity(1)};
  HybridCircuit b = a;
  b.body = {GateLayer::from_pauli(PauliString::parse("X")), Evolution{0.2},
            GateLayer::from_pauli(PauliString::parse("X"))};
  NoiseModel noise;
  noise.add(NoiseLocation::gate_layer(), StochasticPauli{{{PauliString::parse("X"), 0.1}}});
  // Both see two bit flips of rate 0.1: P(1) = 2 * 0.1 * 0.9.
  EXPECT_NEAR(output_distribution(a, noise).probability("1"), 0.18, 1e-12);
  EXPECT_NEAR(output_distribution(b, noise).probability("1"), 0.18, 1e-12);
}

}  // namespace
}  // namespace accredia
