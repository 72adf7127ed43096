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

#include "unipart/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "unipart/rng.hpp"

namespace unipart::kernels {
namespace {

// Below this size the OpenMP fork costs more than the loop.
constexpr std::int64_t kParallelThreshold = 1 << 12;

const complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

inline double parity_sign(std::uint64_t v) {
  return (std::popcount(v) & 1) ? -1.0 : 1.0;
}

ResampleStats one_resample(std::span<const double> centered, double shift,
                           std::uint64_t seed, std::uint64_t r) {
  CounterRng rng(seed, kBootstrapStream, r);
  const std::size_t n = centered.size();
  double sum = 0.0;
  double sum2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = centered[rng.below(n)];
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / static_cast<double>(n);
  const double var = std::max(0.0, (sum2 - sum * mean) / static_cast<double>(n - 1));
  return {mean + shift, std::sqrt(var)};
}

std::vector<double> centered_copy(std::span<const double> samples, double& shift) {
  double sum = 0.0;
  for (const double v : samples) sum += v;
  shift = sum / static_cast<double>(samples.size());
  std::vector<double> out(samples.begin(), samples.end());
  for (auto& v : out) v -= shift;
  return out;
}

}  // namespace

int configure_threads_from_env() {
  if (const char* env = std::getenv("UNIPART_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) omp_set_num_threads(cap);
    } catch (const std::exception&) {
      // Ignore malformed values and keep the OpenMP default.
    }
  }
  return omp_get_max_threads();
}

int max_threads() { return omp_get_max_threads(); }

std::vector<double> probabilities(std::span<const complex> amplitudes) {
  const auto n = static_cast<std::int64_t>(amplitudes.size());
  std::vector<double> out(amplitudes.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) out[i] = std::norm(amplitudes[i]);
  return out;
}

std::vector<double> probabilities_serial(std::span<const complex> amplitudes) {
  std::vector<double> out(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) out[i] = std::norm(amplitudes[i]);
  return out;
}

std::vector<double> cumulative(std::span<const double> probabilities) {
  std::vector<double> cdf(probabilities.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    running += probabilities[i];
    cdf[i] = running;
  }
  if (!cdf.empty()) {
    // Renormalize away accumulated rounding so u in [0, 1) always lands.
    for (auto& c : cdf) c /= running;
    cdf.back() = 1.0;
  }
  return cdf;
}

std::uint64_t sample_index(std::span<const double> cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  const auto idx = static_cast<std::uint64_t>(it - cdf.begin());
  return std::min<std::uint64_t>(idx, cdf.size() - 1);
}

std::vector<std::uint64_t> sample_basis_states(std::span<const double> cdf,
                                               std::uint64_t seed,
                                               std::uint64_t stream,
                                               std::uint64_t first_shot,
                                               std::size_t n_shots) {
  std::vector<std::uint64_t> out(n_shots);
  const auto n = static_cast<std::int64_t>(n_shots);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t j = 0; j < n; ++j) {
    CounterRng rng(seed, stream, first_shot + static_cast<std::uint64_t>(j));
    out[j] = sample_index(cdf, rng.uniform());
  }
  return out;
}

std::vector<std::uint64_t> sample_basis_states_serial(std::span<const double> cdf,
                                                      std::uint64_t seed,
                                                      std::uint64_t stream,
                                                      std::uint64_t first_shot,
                                                      std::size_t n_shots) {
  std::vector<std::uint64_t> out(n_shots);
  for (std::size_t j = 0; j < n_shots; ++j) {
    CounterRng rng(seed, stream, first_shot + j);
    out[j] = sample_index(cdf, rng.uniform());
  }
  return out;
}

complex pauli_expectation(std::span<const complex> amplitudes, std::uint64_t x_mask,
                          std::uint64_t z_mask, int internal_phase) {
  // P|b> = i^k (-1)^{|z & b|} |b ^ x>, so <psi|P|psi> = sum_b conj(a[b^x]) s_b a[b].
  const auto n = static_cast<std::int64_t>(amplitudes.size());
  double re = 0.0;
  double im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im) if (n >= kParallelThreshold)
  for (std::int64_t b = 0; b < n; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const complex v = std::conj(amplitudes[ub ^ x_mask]) * amplitudes[ub] *
                      parity_sign(z_mask & ub);
    re += v.real();
    im += v.imag();
  }
  return kPhases[internal_phase & 3] * complex(re, im);
}

complex pauli_expectation_serial(std::span<const complex> amplitudes,
                                 std::uint64_t x_mask, std::uint64_t z_mask,
                                 int internal_phase) {
  complex acc = 0.0;
  for (std::uint64_t b = 0; b < amplitudes.size(); ++b) {
    acc += std::conj(amplitudes[b ^ x_mask]) * amplitudes[b] * parity_sign(z_mask & b);
  }
  return kPhases[internal_phase & 3] * acc;
}

std::vector<ResampleStats> bootstrap_resamples(std::span<const double> samples,
                                               std::size_t resamples,
                                               std::uint64_t seed) {
  double shift = 0.0;
  const std::vector<double> centered = centered_copy(samples, shift);
  std::vector<ResampleStats> out(resamples);
  const auto n = static_cast<std::int64_t>(resamples);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t r = 0; r < n; ++r) {
    out[r] = one_resample(centered, shift, seed, static_cast<std::uint64_t>(r));
  }
  return out;
}

std::vector<ResampleStats> bootstrap_resamples_serial(std::span<const double> samples,
                                                      std::size_t resamples,
                                                      std::uint64_t seed) {
  double shift = 0.0;
  const std::vector<double> centered = centered_copy(samples, shift);
  std::vector<ResampleStats> out(resamples);
  for (std::size_t r = 0; r < resamples; ++r) {
    out[r] = one_resample(centered, shift, seed, r);
  }
  return out;
}

}  // namespace unipart::kernels
