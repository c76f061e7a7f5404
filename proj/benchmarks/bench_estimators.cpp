// Copyright 2026 The Fidelis Authors
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

#include "fidelis/estimators.hpp"
#include "fidelis/exploration.hpp"
#include "fidelis/oracle.hpp"

namespace {

using namespace fidelis;

void BM_Proposed(benchmark::State& state) {
  const auto gates = static_cast<std::size_t>(state.range(0));
  const auto circ = generate_random({64, gates, 0.3, 1});
  const auto calib = CalibrationData::uniform(1e-3, 5e-3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_proposed(circ, calib).value);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gates));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Proposed)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_ProposedCoherence(benchmark::State& state) {
  const auto gates = static_cast<std::size_t>(state.range(0));
  const auto circ = generate_random({16, gates, 0.3, 2});
  std::vector<QubitCalibration> qubits;
  for (Qubit q = 0; q < 16; ++q) qubits.push_back({q, 1.2e5, 9e4, 0.98});
  const CalibrationData calib(qubits, {}, UniformDefaults{1e-3, 5e-3, 35, 300});
  EstimatorConfig cfg;
  cfg.include_coherence = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_proposed(circ, calib, cfg).value);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gates));
}
BENCHMARK(BM_ProposedCoherence)->Arg(10000)->Arg(100000);

void BM_Esp(benchmark::State& state) {
  const auto circ = generate_random({64, 100000, 0.3, 3});
  const auto calib = CalibrationData::uniform(1e-3, 5e-3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_esp(circ, calib).value);
  }
}
BENCHMARK(BM_Esp);

void BM_Oracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto circ = generate_random({n, 200, 0.3, 4});
  const auto calib = CalibrationData::uniform(1e-3, 5e-3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::simulate_fidelity(circ, calib));
  }
}
BENCHMARK(BM_Oracle)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const std::vector<std::size_t> ns{8, 16, 32};
  std::vector<double> p1, p2;
  for (int i = 0; i < 10; ++i) {
    p1.push_back(1e-6 * i);
    p2.push_back(1e-5 * i);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_grid(CircuitFamily::qft(), ns, p1, p2).rows.size());
  }
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
