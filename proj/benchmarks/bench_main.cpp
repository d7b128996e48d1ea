// Copyright 2026 The isingsynth Authors
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

#include <numbers>
#include <random>

#include "isingsynth/circuit.hpp"
#include "isingsynth/matcore.hpp"
#include "isingsynth/robustness.hpp"
#include "isingsynth/schmidt.hpp"
#include "isingsynth/synth.hpp"

namespace {

using namespace isingsynth;

constexpr double kPi = std::numbers::pi;

PulseCircuit sample_circuit(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  PulseCircuit c;
  for (std::size_t i = 0; i < n; ++i) c.couplings.push_back(angle(rng) + 4.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    c.locals.push_back(LocalLayer{{LocalGate{angle(rng), angle(rng)}},
                                  {LocalGate{angle(rng), angle(rng)}}});
  return c;
}

void BM_evaluate(benchmark::State& state) {
  const PulseCircuit c = sample_circuit(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(c));
}
BENCHMARK(BM_evaluate)->Arg(3)->Arg(6)->Arg(12);

void BM_delta_u(benchmark::State& state) {
  const PulseCircuit c = sample_circuit(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_u(c));
}
BENCHMARK(BM_delta_u)->Arg(3)->Arg(6)->Arg(12);

void BM_svd4(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  Mat4 m;
  for (auto& v : m.a) v = Complex(g(rng), g(rng));
  for (auto _ : state) benchmark::DoNotOptimize(svd4(m));
}
BENCHMARK(BM_svd4);

void BM_schmidt_decompose(benchmark::State& state) {
  const Mat4 m = evaluate(build_v_gate());
  for (auto _ : state) benchmark::DoNotOptimize(schmidt_decompose(m));
}
BENCHMARK(BM_schmidt_decompose);

void BM_robust_s(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(robust_s(kPi, 0));
}
BENCHMARK(BM_robust_s);

void BM_solve_theta_star(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_theta_star());
}
BENCHMARK(BM_solve_theta_star);

}  // namespace

BENCHMARK_MAIN();
