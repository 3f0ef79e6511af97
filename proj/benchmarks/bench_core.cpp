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

#include <benchmark/benchmark.h>

#include <string>

#include "accredia/accreditor.hpp"
#include "accredia/builder.hpp"
#include "accredia/densim.hpp"
#include "accredia/hypergraph.hpp"

namespace {

using namespace accredia;

WeightedHamiltonian chain(std::size_t n) {
  std::vector<PauliTerm> terms;
  for (std::size_t q = 0; q + 1 < n; ++q) {
    std::string zz(n, 'I');
    zz[q] = zz[q + 1] = 'Z';
    terms.push_back({1.0, PauliString::from_word(zz)});
  }
  for (std::size_t q = 0; q < n; ++q) {
    std::string x(n, 'I');
    x[q] = 'X';
    terms.push_back({0.5, PauliString::from_word(x)});
  }
  return WeightedHamiltonian(n, std::move(terms));
}

void BM_PauliProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = PauliString::from_word(std::string(n, 'X'));
  const auto b = PauliString::from_word(std::string(n, 'Y'));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PauliProduct)->Arg(8)->Arg(64)->Arg(512);

void BM_InversionGroup(benchmark::State& state) {
  const auto h = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_inversion_group(h));
}
BENCHMARK(BM_InversionGroup)->DenseRange(2, 10, 4);

void BM_TrapOutputDistribution(benchmark::State& state) {
  const auto plan = make_plan(chain(static_cast<std::size_t>(state.range(0))), 1.0, 0.5);
  RngStream rng(1);
  const HybridCircuit trap = build_trap(plan, rng);
  for (auto _ : state) benchmark::DoNotOptimize(output_distribution(trap));
  state.counters["segments"] = static_cast<double>(trap.body.size());
}
BENCHMARK(BM_TrapOutputDistribution)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_NoisyTrapOutputDistribution(benchmark::State& state) {
  const auto plan = make_plan(chain(static_cast<std::size_t>(state.range(0))), 1.0, 0.5);
  RngStream rng(1);
  const HybridCircuit trap = build_trap(plan, rng);
  NoiseModel noise;
  noise.add(NoiseLocation::any_slice(), Depolarizing{0.01});
  for (auto _ : state) benchmark::DoNotOptimize(output_distribution(trap, noise));
}
BENCHMARK(BM_NoisyTrapOutputDistribution)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_AveragedBlockChoi(benchmark::State& state) {
  const auto plan = make_plan(chain(static_cast<std::size_t>(state.range(0))), 1.0, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(averaged_block_choi(plan, Direction::inverted));
}
BENCHMARK(BM_AveragedBlockChoi)->DenseRange(1, 2, 1)->Unit(benchmark::kMillisecond);

void BM_NoiselessProtocol(benchmark::State& state) {
  ProtocolConfig cfg;
  cfg.hamiltonian = std::make_shared<const WeightedHamiltonian>(chain(2));
  cfg.prep = {parse_gate_sequence("H"), parse_gate_sequence("I")};
  cfg.meas = cfg.prep;
  cfg.parallelism = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_protocol(cfg));
}
BENCHMARK(BM_NoiselessProtocol)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
