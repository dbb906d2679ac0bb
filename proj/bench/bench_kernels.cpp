// Copyright 2026 The pauli-dilate Authors
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


// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "pauli_dilate/collision.hpp"
#include "pauli_dilate/dilation.hpp"
#include "pauli_dilate/pauli.hpp"
#include "pauli_dilate/physdil.hpp"

namespace pd = pauli_dilate;

namespace {

std::vector<pd::PauliString> commutant_generators(std::size_t qubits) {
  std::vector<pd::PauliString> g;
  std::string a(qubits, 'I'), b(qubits, 'I');
  a[0] = 'X';
  a[qubits - 1] = 'Z';
  b[0] = 'Y';
  b[qubits / 2] = 'X';
  g.push_back(pd::PauliString::parse(a));
  g.push_back(pd::PauliString::parse(b));
  return g;
}

std::vector<double> time_grid(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = 0.01 * static_cast<double>(i);
  return t;
}

pd::CollisionConfig collision_config() {
  pd::CollisionConfig c;
  c.a = {0.4, 0.9, 0.2};
  c.zeta = 1.0;
  c.dt = 0.01;
  c.n = 100;
  return c;
}

void BM_Commutant(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  const auto g = commutant_generators(q);
  for (auto _ : state) benchmark::DoNotOptimize(pd::pauli_commutant(g, q));
}

void BM_CommutantSerial(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  const auto g = commutant_generators(q);
  for (auto _ : state) benchmark::DoNotOptimize(pd::pauli_commutant_serial(g, q));
}

void BM_ChannelSeries(benchmark::State& state) {
  const auto b = pd::build_depolarizing_dilation();
  const auto t = time_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pd::channel_series(b, t));
}

void BM_ChannelSeriesSerial(benchmark::State& state) {
  const auto b = pd::build_depolarizing_dilation();
  const auto t = time_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pd::channel_series_serial(b, t));
}

void BM_Convergence(benchmark::State& state) {
  const auto c = collision_config();
  const auto dts = pd::halving_sequence(c.dt, static_cast<std::size_t>(state.range(0)));
  const auto rho = pd::default_probe_state();
  for (auto _ : state) benchmark::DoNotOptimize(pd::convergence_report(c, dts, 1.0, rho));
}

void BM_ConvergenceSerial(benchmark::State& state) {
  const auto c = collision_config();
  const auto dts = pd::halving_sequence(c.dt, static_cast<std::size_t>(state.range(0)));
  const auto rho = pd::default_probe_state();
  for (auto _ : state) benchmark::DoNotOptimize(pd::convergence_report_serial(c, dts, 1.0, rho));
}

void BM_SolveEnvRep(benchmark::State& state) {
  const auto v = pd::dilation_from_kraus(pd::kraus_ops(pd::PauliChannel({0.4, 0.3, 0.2, 0.1})));
  const auto rep = pd::pauli_defining_rep();
  for (auto _ : state) benchmark::DoNotOptimize(pd::solve_env_rep(v, rep));
}

}  // namespace

BENCHMARK(BM_Commutant)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_CommutantSerial)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_ChannelSeries)->Arg(256)->Arg(1024);
BENCHMARK(BM_ChannelSeriesSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_Convergence)->Arg(3);
BENCHMARK(BM_ConvergenceSerial)->Arg(3);
BENCHMARK(BM_SolveEnvRep);

BENCHMARK_MAIN();
