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

#pragma once

// Data-parallel inner loops. Every OpenMP kernel has a `_serial` twin with
// the same contract; the sampling and bootstrap kernels are bit-identical to
// their twins because every index owns its own CounterRng stream.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace unipart::kernels {

using complex = std::complex<double>;

/// Applies UNIPART_THREADS (if set) as the OpenMP thread cap. Returns the
/// resulting maximum thread count.
int configure_threads_from_env();
int max_threads();

std::vector<double> probabilities(std::span<const complex> amplitudes);
std::vector<double> probabilities_serial(std::span<const complex> amplitudes);

/// Inclusive prefix sum, last entry forced to exactly 1.
std::vector<double> cumulative(std::span<const double> probabilities);

/// Index of the first cdf entry exceeding u.
std::uint64_t sample_index(std::span<const double> cdf, double u);

/// Shot j draws from CounterRng(seed, stream, first_shot + j).
std::vector<std::uint64_t> sample_basis_states(std::span<const double> cdf,
                                               std::uint64_t seed,
                                               std::uint64_t stream,
                                               std::uint64_t first_shot,
                                               std::size_t n_shots);
std::vector<std::uint64_t> sample_basis_states_serial(std::span<const double> cdf,
                                                      std::uint64_t seed,
                                                      std::uint64_t stream,
                                                      std::uint64_t first_shot,
                                                      std::size_t n_shots);

/// <psi| i^phase X^x Z^z |psi> with masks in state-index bit positions.
complex pauli_expectation(std::span<const complex> amplitudes, std::uint64_t x_mask,
                          std::uint64_t z_mask, int internal_phase);
complex pauli_expectation_serial(std::span<const complex> amplitudes,
                                 std::uint64_t x_mask, std::uint64_t z_mask,
                                 int internal_phase);

struct ResampleStats {
  double mean;
  double sd;
};

/// Nonparametric bootstrap: resample r draws samples.size() indices with
/// replacement from CounterRng(seed, kBootstrapStream, r) and reports the
/// resample mean and standard deviation (n - 1 denominator).
std::vector<ResampleStats> bootstrap_resamples(std::span<const double> samples,
                                               std::size_t resamples,
                                               std::uint64_t seed);
std::vector<ResampleStats> bootstrap_resamples_serial(std::span<const double> samples,
                                                      std::size_t resamples,
                                                      std::uint64_t seed);

inline constexpr std::uint64_t kBootstrapStream = 0xB0075712A9ull;

}  // namespace unipart::kernels
