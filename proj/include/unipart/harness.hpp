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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unipart/lcu.hpp"
#include "unipart/partition.hpp"
#include "unipart/pauli.hpp"
#include "unipart/seqrot.hpp"
#include "unipart/statevector.hpp"

namespace unipart {

enum class Method { Standard, SeqRot, Lcu };
enum class Allocation { Even, Weighted };

std::string to_string(Method m);
Method parse_method(const std::string& name);
std::string to_string(Allocation a);
Allocation parse_allocation(const std::string& name);

/// Split of a total shot count over measurement circuits.
struct ShotBudget {
  std::size_t total = 0;
  Allocation allocation = Allocation::Even;
  std::vector<std::size_t> per_circuit;

  /// Even: total / C each, remainder to the first circuits. Weighted:
  /// proportional to weights, largest remainders first. Sums to total.
  static ShotBudget allocate(std::size_t total, Allocation allocation,
                             std::span<const double> weights);
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
  bool contains(double v) const { return low <= v && v <= high; }
};

struct EstimateOptions {
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  Allocation allocation = Allocation::Even;
  /// LCU only: rerun rejected shots until every circuit has its share of
  /// accepted draws. Otherwise rejected shots consume budget.
  bool retry_rejected = false;
  std::size_t resamples = 1000;
  double confidence = 0.95;
};

struct EstimateStats {
  Method method = Method::Standard;
  /// Energy samples entering the mean.
  std::size_t n_samples = 0;
  /// Device calls, rejected LCU shots included.
  std::size_t total_calls = 0;
  std::size_t circuits = 0;
  /// Device calls spent on each circuit.
  std::vector<std::size_t> circuit_calls;
  double mean = 0.0;
  double sigma = 0.0;
  double sem = 0.0;
  Interval ci95;
  Interval sigma_ci;
  Interval sem_ci;
  /// LCU only.
  std::optional<double> accepted_fraction;
  std::vector<double> set_accepted_fraction;
  /// Per-sample energies e_j.
  std::vector<double> samples;
};

/// Term-by-term single-shot VQE: e_j = c_I + sum_i c_i s_ij with one fresh +-1
/// draw per term and sample.
EstimateStats estimate_standard(const WeightedPauliSum& h, const Statevector& state,
                                const EstimateOptions& options);

/// One circuit per set: apply R_S, measure P_n. e_j = offset + sum_l gamma_l s_lj.
EstimateStats estimate_seqrot(const CliqueCover& cover, const std::vector<SeqRotPlan>& plans,
                              const Statevector& state, const EstimateOptions& options);

/// One circuit per set: G, U_LCU, G^dag, post-select ancilla zeros, measure
/// P_n. Samples pair the accepted draws of every set by index. Throws
/// ContractError if some set gets no accepted shot.
EstimateStats estimate_lcu(const CliqueCover& cover, const std::vector<LcuPlan>& plans,
                           const Statevector& state, const EstimateOptions& options);

EstimateStats estimate(Method method, const CliqueCover& cover, const Statevector& state,
                       const EstimateOptions& options);

struct SampleSummary {
  double mean = 0.0;
  double sigma = 0.0;
  double sem = 0.0;
};

/// Mean, sample standard deviation (n - 1), and sigma / sqrt(n).
SampleSummary summarize(std::span<const double> samples);

/// Percentile bootstrap interval of the mean. Needs >= 2 samples.
Interval bootstrap_ci(std::span<const double> samples, std::size_t resamples,
                      double confidence, std::uint64_t seed);

struct BootstrapSummary {
  Interval mean;
  Interval sigma;
  Interval sem;
};

BootstrapSummary bootstrap_summary(std::span<const double> samples, std::size_t resamples,
                                   double confidence, std::uint64_t seed);

struct Histogram {
  std::vector<double> edges;
  std::vector<std::size_t> counts;
};

Histogram make_histogram(std::span<const double> samples, std::size_t bins);

}  // namespace unipart
