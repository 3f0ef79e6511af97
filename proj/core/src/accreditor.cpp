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

#include "accredia/accreditor.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "accredia/densim.hpp"
#include "accredia/limits.hpp"

namespace accredia {
namespace {

void require_open_unit(double v, const char* field) {
  if (!(v > 0.0 && v < 1.0)) throw ParameterError(field, "must lie strictly between 0 and 1");
}

std::vector<TrapDressing> all_dressings(std::size_t n) {
  static constexpr PauliLetter letters[4] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y,
                                             PauliLetter::Z};
  const std::uint64_t per_qubit = 16;
  std::uint64_t total = 2;
  for (std::size_t q = 0; q < n; ++q) total *= per_qubit;
  std::vector<TrapDressing> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    TrapDressing d;
    d.hadamard = (code & 1U) != 0;
    std::uint64_t rest = code >> 1;
    for (std::size_t q = 0; q < n; ++q) {
      const std::uint64_t digit = rest % per_qubit;
      rest /= per_qubit;
      d.z_before.push_back((digit & 1U) != 0);
      d.z_after.push_back((digit & 2U) != 0);
      d.pauli.push_back(letters[digit >> 2]);
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Matrix> chois_at(const NoiseModel& noise, LocationKind kind, std::size_t n) {
  std::vector<Matrix> out;
  for (const auto& b : noise.bindings()) {
    if (b.where.kind == kind) out.push_back(channel_choi(b.channel, n));
  }
  return out;
}

}  // namespace

std::size_t num_traps(double theta, double alpha) {
  require_open_unit(theta, "theta");
  require_open_unit(alpha, "alpha");
  const double raw = (2.0 / (theta * theta)) * std::log(2.0 / (1.0 - alpha));
  return static_cast<std::size_t>(std::ceil(raw)) + 1;
}

double epsilon_vd(std::size_t n_failed, std::size_t n_traps, double theta) {
  if (n_traps == 0) throw ParameterError("n_traps", "must be >= 1");
  if (n_failed > n_traps) throw ParameterError("n_failed", "exceeds n_traps");
  if (!(theta >= 0.0 && theta < 1.0)) throw ParameterError("theta", "must lie in [0, 1)");
  const double frac = static_cast<double>(n_failed) / static_cast<double>(n_traps);
  return std::min(1.0, 2.0 * (frac + theta));
}

void ProtocolConfig::validate() const {
  if (!hamiltonian) throw ParameterError("hamiltonian", "missing");
  const std::size_t n = hamiltonian->n_qubits();
  if (!std::isfinite(t)) throw ParameterError("t", "must be finite");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps", "must be positive");
  require_open_unit(alpha, "alpha");
  require_open_unit(theta, "theta");
  if (parallelism == 0) throw ParameterError("parallelism", "must be >= 1");
  if (target_shots == 0) throw ParameterError("target_shots", "must be >= 1");
  if (prep.size() != n) throw ParameterError("prep", "needs one gate sequence per qubit");
  if (meas.size() != n) throw ParameterError("meas", "needs one gate sequence per qubit");
  require_dense(n, "protocol");
}

double ProtocolResult::failed_fraction() const noexcept {
  return n_traps == 0 ? 0.0 : static_cast<double>(n_traps_failed) / static_cast<double>(n_traps);
}

HybridCircuit protocol_target(const ProtocolConfig& cfg) {
  cfg.validate();
  return build_target(make_plan(cfg.hamiltonian, cfg.t, cfg.eps), cfg.prep, cfg.meas);
}

ProtocolResult run_protocol(const ProtocolConfig& cfg, const NoiseModel* noise) {
  cfg.validate();
  const std::size_t n = cfg.hamiltonian->n_qubits();
  if (noise) noise->validate(n);
  const InversionPlan plan = make_plan(cfg.hamiltonian, cfg.t, cfg.eps);
  const HybridCircuit target = build_target(plan, cfg.prep, cfg.meas);
  const NoiseModel none;
  const NoiseModel& model = noise ? *noise : none;

  ProtocolResult result;
  result.seed = cfg.seed;
  result.theta = cfg.theta;
  result.alpha = cfg.alpha;
  result.eps = cfg.eps;
  result.group_size = plan.L();
  result.slices = plan.slices;
  result.n_traps = num_traps(cfg.theta, cfg.alpha);

  const RngStream root(cfg.seed);
  const std::size_t executions = result.n_traps + 1;
  // Split 0 is reserved for the interleaving; executions use 1..N_tr+1.
  RngStream position_stream = root.split(0);
  result.target_position = 1 + position_stream.index(executions);

  const std::string zeros(n, '0');
  std::vector<std::optional<TrapRecord>> slots(executions + 1);
  std::vector<std::string> target_outcomes;
  std::atomic<std::size_t> next{1};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t pos = next.fetch_add(1);
      if (pos > executions) break;
      try {
        RngStream stream = root.split(pos);
        if (pos == result.target_position) {
          target_outcomes = execute(target, model, stream, cfg.target_shots);
        } else {
          const HybridCircuit trap = build_trap(plan, stream);
          std::string outcome = execute(trap, model, stream, 1).front();
          const bool passed = outcome == zeros;
          slots[pos] = TrapRecord{pos, *trap.seed, std::move(outcome), passed};
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };

  const std::size_t threads = std::min(cfg.parallelism, executions);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (auto& slot : slots) {
    if (!slot) continue;
    if (!slot->passed) ++result.n_traps_failed;
    result.traps.push_back(std::move(*slot));
  }
  result.target_outcomes = std::move(target_outcomes);

  if (error) {
    result.complete = false;
    const std::size_t done = std::max<std::size_t>(result.traps.size(), 1);
    result.epsilon_vd = epsilon_vd(result.n_traps_failed, done, cfg.theta);
    std::string what = "protocol aborted";
    try {
      std::rethrow_exception(error);
    } catch (const std::exception& e) {
      what += ": ";
      what += e.what();
    }
    throw ProtocolAborted(what, std::move(result));
  }
  result.epsilon_vd = epsilon_vd(result.n_traps_failed, result.n_traps, cfg.theta);
  return result;
}

double true_ideal_actual_distance(const HybridCircuit& target, const NoiseModel* noise) {
  if (noise == nullptr || noise->empty()) return 0.0;
  if (noise->has_drift()) throw ParameterError("drift", "resolve drift before computing the distance");
  return tvd(output_distribution(target), output_distribution(target, *noise));
}

AdvantageVerdict advantage_verdict(double eps_vd) {
  AdvantageVerdict v;
  v.epsilon_vd = eps_vd;
  v.margin = v.threshold - eps_vd;
  v.passed = eps_vd < v.threshold;
  return v;
}

AdvantageVerdict advantage_verdict(const ProtocolResult& result) {
  return advantage_verdict(result.epsilon_vd);
}

std::vector<std::pair<std::size_t, std::size_t>> lattice_edges(std::size_t rows, std::size_t cols) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return edges;
}

WeightedHamiltonian advantage_preset(std::size_t rows, std::size_t cols,
                                     std::span<const double> J, std::span<const double> h) {
  if (rows == 0) throw ParameterError("rows", "must be >= 1");
  if (cols == 0) throw ParameterError("cols", "must be >= 1");
  const std::size_t n = rows * cols;
  const auto edges = lattice_edges(rows, cols);
  if (J.size() != 1 && J.size() != edges.size()) {
    throw ParameterError("J", "expected 1 or " + std::to_string(edges.size()) + " couplings");
  }
  if (h.size() > 1 && h.size() != n) {
    throw ParameterError("h", "expected 0, 1 or " + std::to_string(n) + " fields");
  }
  std::vector<PauliTerm> terms;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    PauliString word(n);
    word = word.with_letter(edges[e].first, PauliLetter::Z).with_letter(edges[e].second, PauliLetter::Z);
    terms.push_back({J.size() == 1 ? J[0] : J[e], word});
  }
  for (std::size_t v = 0; v < n; ++v) {
    const double field = h.empty() ? 0.0 : (h.size() == 1 ? h[0] : h[v]);
    terms.push_back({-field, PauliString::single(n, v, PauliLetter::Z)});
  }
  return WeightedHamiltonian(n, std::move(terms));
}

double trap_detection_probability(const InversionPlan& plan, const NoiseModel& noise) {
  const std::size_t n = plan.n_qubits();
  require_choi(n, "trap_detection_probability");
  noise.validate(n);
  if (noise.has_drift()) throw ParameterError("drift", "audit needs a drift-free noise model");
  const Matrix block = averaged_block_choi(plan, Direction::inverted, &noise);
  const auto prep_chois = chois_at(noise, LocationKind::prep, n);
  const auto meas_chois = chois_at(noise, LocationKind::measurement, n);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  Matrix zero = Matrix::Zero(d, d);
  zero(0, 0) = 1.0;

  const auto dressings = all_dressings(n);
  double pass = 0.0;
  for (const TrapDressing& dr : dressings) {
    const Matrix pre = layer_unitary(trap_pre_layer(dr));
    const Matrix post = layer_unitary(trap_post_layer(dr));
    Matrix rho = pre * zero * pre.adjoint();
    for (const auto& c : prep_chois) rho = apply_choi(c, rho);
    rho = apply_choi(block, rho);
    rho = post * rho * post.adjoint();
    for (const auto& c : meas_chois) rho = apply_choi(c, rho);
    pass += rho(0, 0).real();
  }
  return std::clamp(1.0 - pass / static_cast<double>(dressings.size()), 0.0, 1.0);
}

double TrapAudit::min_detection() const {
  double m = 1.0;
  for (const auto& r : rows) m = std::min(m, r.detection);
  return m;
}

TrapAudit trap_audit(const InversionPlan& plan, std::size_t boundary) {
  const std::size_t n = plan.n_qubits();
  require_choi(n, "trap_audit");
  if (boundary > plan.slices) {
    throw ParameterError("boundary", "block has only " + std::to_string(plan.slices + 1) +
                                         " evolution segments");
  }
  TrapAudit audit;
  audit.boundary = boundary;
  audit.dressings = all_dressings(n).size();
  audit.baseline = trap_detection_probability(plan, NoiseModel{});
  const std::uint64_t words = std::uint64_t{1} << (2 * n);
  static constexpr PauliLetter letters[4] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y,
                                             PauliLetter::Z};
  for (std::uint64_t w = 1; w < words; ++w) {
    PauliString err(n);
    for (std::size_t q = 0; q < n; ++q) {
      err = err.with_letter(q, letters[(w >> (2 * (n - 1 - q))) & 3U]);
    }
    NoiseModel model;
    model.add(NoiseLocation::slices(boundary, boundary), StochasticPauli{{{err, 1.0}}});
    audit.rows.push_back({err, trap_detection_probability(plan, model)});
  }
  return audit;
}

}  // namespace accredia
