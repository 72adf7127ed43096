// Copyright 2026 The unipart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// OpenMP kernels against their serial twins. Set UNIPART_THREADS to pin the
// thread count.
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "unipart/kernels.hpp"

using namespace unipart;

namespace {

std::vector<kernels::complex> amplitudes(std::size_t n_qubits) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<kernels::complex> a(std::size_t{1} << n_qubits);
  double norm = 0.0;
  for (auto& x : a) {
    x = {g(rng), g(rng)};
    norm += std::norm(x);
  }
  for (auto& x : a) x /= std::sqrt(norm);
  return a;
}

std::vector<double> samples(std::size_t n) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = g(rng);
  return x;
}

template <auto Kernel>
void BM_Probabilities(benchmark::State& state) {
  const auto a = amplitudes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <auto Kernel>
void BM_Sample(benchmark::State& state) {
  const auto cdf = kernels::cumulative(kernels::probabilities_serial(amplitudes(10)));
  const auto shots = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(cdf, 1, 2, 0, shots));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_Expectation(benchmark::State& state) {
  const auto a = amplitudes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, 0b1011, 0b0110, 0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <auto Kernel>
void BM_Bootstrap(benchmark::State& state) {
  const auto x = samples(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(x, 100, 3));
  state.SetItemsProcessed(state.iterations() * 100 * state.range(0));
}

}  // namespace

BENCHMARK(BM_Probabilities<kernels::probabilities>)->Arg(12)->Arg(18);
BENCHMARK(BM_Probabilities<kernels::probabilities_serial>)->Arg(12)->Arg(18);
BENCHMARK(BM_Sample<kernels::sample_basis_states>)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_Sample<kernels::sample_basis_states_serial>)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_Expectation<kernels::pauli_expectation>)->Arg(12)->Arg(18);
BENCHMARK(BM_Expectation<kernels::pauli_expectation_serial>)->Arg(12)->Arg(18);
BENCHMARK(BM_Bootstrap<kernels::bootstrap_resamples>)->Arg(10000)->Arg(100000);
BENCHMARK(BM_Bootstrap<kernels::bootstrap_resamples_serial>)->Arg(10000)->Arg(100000);

int main(int argc, char** argv) {
  kernels::configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
