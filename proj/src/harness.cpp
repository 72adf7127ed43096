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

#include "unipart/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "unipart/error.hpp"
#include "unipart/kernels.hpp"

namespace unipart {
namespace {

// A prepared measurement circuit: the final-state outcome distribution, the
// bits whose parity gives the eigenvalue, and the bits that must read zero
// for the shot to count (LCU post-selection).
struct Circuit {
  std::vector<double> cdf;
  std::uint64_t support = 0;
  std::uint64_t postselect = 0;
  int sign = 1;
  double weight = 0.0;
};

// +-1 draws of one circuit, rejected shots removed.
struct Draws {
  std::vector<std::int8_t> values;
  std::size_t calls = 0;
};

std::uint64_t method_id(Method m) { return static_cast<std::uint64_t>(m) + 1; }

std::uint64_t stream_of(Method m, std::size_t circuit) {
  return (method_id(m) << 32) | static_cast<std::uint64_t>(circuit);
}

Circuit finish_circuit(const Statevector& rotated, const PauliWord& target,
                       std::size_t offset, double weight) {
  Circuit c;
  c.cdf = kernels::cumulative(kernels::probabilities(rotated.amplitudes()));
  c.support = support_mask(rotated, target, offset);
  c.sign = target.phase() == 2 ? -1 : 1;
  c.weight = weight;
  return c;
}

void draw_into(const Circuit& c, std::uint64_t seed, std::uint64_t stream,
               std::size_t n_shots, Draws& out) {
  const auto outcomes =
      kernels::sample_basis_states(c.cdf, seed, stream, out.calls, n_shots);
  out.calls += n_shots;
  for (const std::uint64_t bits : outcomes) {
    if (bits & c.postselect) continue;
    const int parity = std::popcount(bits & c.support) & 1;
    out.values.push_back(static_cast<std::int8_t>((parity ? -1 : 1) * c.sign));
  }
}

Draws draw(const Circuit& c, std::uint64_t seed, std::uint64_t stream, std::size_t shots,
           bool retry_rejected) {
  Draws out;
  out.values.reserve(shots);
  draw_into(c, seed, stream, shots, out);
  if (!retry_rejected) return out;
  constexpr std::size_t kMaxRounds = 100000;
  for (std::size_t round = 0; out.values.size() < shots; ++round) {
    if (round == kMaxRounds) {
      throw ContractError("post-selection never reached the requested shot count");
    }
    draw_into(c, seed, stream, shots - out.values.size(), out);
  }
  out.values.resize(shots);
  return out;
}

void check_options(const EstimateOptions& options) {
  if (options.shots == 0) throw ContractError("shot budget must be positive");
}

std::vector<double> weights_of(const std::vector<Circuit>& circuits) {
  std::vector<double> w;
  for (const auto& c : circuits) w.push_back(std::abs(c.weight));
  return w;
}

EstimateStats run(Method method, const std::vector<Circuit>& circuits, double offset,
                  const EstimateOptions& options) {
  check_options(options);
  EstimateStats stats;
  stats.method = method;
  stats.circuits = circuits.size();

  std::vector<Draws> draws;
  if (circuits.empty()) {
    stats.samples.assign(options.shots, offset);
  } else {
    const auto w = weights_of(circuits);
    const ShotBudget budget = ShotBudget::allocate(options.shots, options.allocation, w);
    const bool retry = method == Method::Lcu && options.retry_rejected;
    for (std::size_t c = 0; c < circuits.size(); ++c) {
      if (budget.per_circuit[c] == 0) {
        throw ContractError("shot budget too small: circuit " + std::to_string(c) +
                            " received no shots");
      }
      draws.push_back(draw(circuits[c], options.seed, stream_of(method, c),
                           budget.per_circuit[c], retry));
      stats.total_calls += draws.back().calls;
      stats.circuit_calls.push_back(draws.back().calls);
      if (draws.back().values.empty()) {
        throw ContractError("no accepted shots for set " + std::to_string(c) +
                            "; estimate unavailable");
      }
    }
    std::size_t n = draws.front().values.size();
    for (const auto& d : draws) n = std::min(n, d.values.size());
    stats.samples.assign(n, offset);
    for (std::size_t c = 0; c < circuits.size(); ++c) {
      const double w = circuits[c].weight;
      const auto& v = draws[c].values;
      for (std::size_t j = 0; j < n; ++j) stats.samples[j] += w * v[j];
    }
  }

  if (method == Method::Lcu) {
    std::size_t accepted = 0;
    for (const auto& d : draws) {
      accepted += d.values.size();
      stats.set_accepted_fraction.push_back(static_cast<double>(d.values.size()) /
                                            static_cast<double>(d.calls));
    }
    if (stats.total_calls > 0) {
      stats.accepted_fraction =
          static_cast<double>(accepted) / static_cast<double>(stats.total_calls);
    }
  }

  stats.n_samples = stats.samples.size();
  const SampleSummary s = summarize(stats.samples);
  stats.mean = s.mean;
  stats.sigma = s.sigma;
  stats.sem = s.sem;
  if (stats.n_samples >= 2) {
    const std::uint64_t boot_seed = options.seed ^ (method_id(method) * 0xA24BAED4963EE407ull);
    const BootstrapSummary b =
        bootstrap_summary(stats.samples, options.resamples, options.confidence, boot_seed);
    stats.ci95 = b.mean;
    stats.sigma_ci = b.sigma;
    stats.sem_ci = b.sem;
  } else {
    stats.ci95 = {s.mean, s.mean};
    stats.sigma_ci = {s.sigma, s.sigma};
    stats.sem_ci = {s.sem, s.sem};
  }
  return stats;
}

template <typename Plan>
void check_plans(const CliqueCover& cover, const std::vector<Plan>& plans) {
  if (plans.size() != cover.sets.size()) {
    throw ContractError("plan/cover mismatch: " + std::to_string(plans.size()) +
                        " plans for " + std::to_string(cover.sets.size()) + " sets");
  }
  for (std::size_t l = 0; l < plans.size(); ++l) {
    const auto& set = cover.sets[l];
    const auto& plan = plans[l];
    if (plan.set_index != set.index || plan.target_index >= set.size() ||
        compare_letters(plan.target, set.members[plan.target_index].word) != 0) {
      throw ContractError("plan/cover mismatch at set " + std::to_string(l));
    }
  }
}

void check_state(const Statevector& state, std::size_t n_qubits) {
  if (state.num_qubits() != n_qubits) {
    throw DimensionError("state has " + std::to_string(state.num_qubits()) +
                         " qubits, Hamiltonian has " + std::to_string(n_qubits));
  }
}

double quantile(std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Interval percentile_interval(std::vector<double> values, double confidence) {
  std::sort(values.begin(), values.end());
  const double tail = (1.0 - confidence) / 2.0;
  return {quantile(values, tail), quantile(values, 1.0 - tail)};
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Standard: return "standard";
    case Method::SeqRot: return "seqrot";
    case Method::Lcu: return "lcu";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "standard") return Method::Standard;
  if (name == "seqrot") return Method::SeqRot;
  if (name == "lcu") return Method::Lcu;
  throw Error(ErrorKind::Usage, "unknown method '" + name + "'");
}

std::string to_string(Allocation a) {
  return a == Allocation::Even ? "even" : "weighted";
}

Allocation parse_allocation(const std::string& name) {
  if (name == "even") return Allocation::Even;
  if (name == "weighted") return Allocation::Weighted;
  throw Error(ErrorKind::Usage, "unknown allocation '" + name + "'");
}

ShotBudget ShotBudget::allocate(std::size_t total, Allocation allocation,
                                std::span<const double> weights) {
  ShotBudget b;
  b.total = total;
  b.allocation = allocation;
  const std::size_t c = weights.size();
  if (c == 0) return b;
  b.per_circuit.assign(c, total / c);
  std::size_t assigned = (total / c) * c;

  const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (allocation == Allocation::Weighted && wsum > 0.0) {
    std::vector<double> remainder(c);
    assigned = 0;
    for (std::size_t i = 0; i < c; ++i) {
      const double exact = static_cast<double>(total) * weights[i] / wsum;
      b.per_circuit[i] = static_cast<std::size_t>(std::floor(exact));
      remainder[i] = exact - static_cast<double>(b.per_circuit[i]);
      assigned += b.per_circuit[i];
    }
    std::vector<std::size_t> order(c);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return remainder[x] > remainder[y]; });
    for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++b.per_circuit[order[k % c]];
    return b;
  }
  for (std::size_t i = 0; assigned < total; ++i, ++assigned) ++b.per_circuit[i];
  return b;
}

EstimateStats estimate_standard(const WeightedPauliSum& h, const Statevector& state,
                                const EstimateOptions& options) {
  if (!h.is_hermitian()) throw ContractError("Hamiltonian is not Hermitian");
  check_state(state, h.num_qubits());
  double offset = 0.0;
  std::vector<Circuit> circuits;
  for (const auto& t : h.canonical().terms()) {
    if (t.word.is_identity()) {
      offset += t.coeff.real();
      continue;
    }
    circuits.push_back(
        finish_circuit(rotate_to_measurement_basis(state, t.word), t.word, 0, t.coeff.real()));
  }
  return run(Method::Standard, circuits, offset, options);
}

EstimateStats estimate_seqrot(const CliqueCover& cover, const std::vector<SeqRotPlan>& plans,
                              const Statevector& state, const EstimateOptions& options) {
  check_plans(cover, plans);
  check_state(state, cover.n_qubits);
  std::vector<Circuit> circuits;
  for (std::size_t l = 0; l < plans.size(); ++l) {
    Statevector s = state;
    for (const auto& rot : plan_as_exponentials(plans[l])) {
      s = apply_pauli_exponential(std::move(s), rot.generator, rot.angle);
    }
    s = rotate_to_measurement_basis(std::move(s), plans[l].target);
    circuits.push_back(finish_circuit(s, plans[l].target, 0, cover.sets[l].gamma));
  }
  return run(Method::SeqRot, circuits, cover.identity_offset, options);
}

EstimateStats estimate_lcu(const CliqueCover& cover, const std::vector<LcuPlan>& plans,
                           const Statevector& state, const EstimateOptions& options) {
  check_plans(cover, plans);
  check_state(state, cover.n_qubits);
  std::vector<Circuit> circuits;
  for (std::size_t l = 0; l < plans.size(); ++l) {
    const LcuPlan& plan = plans[l];
    const std::size_t na = plan.ancilla_count;
    if (na + state.num_qubits() > Statevector::kMaxQubits) {
      throw DimensionError("LCU circuit exceeds the statevector cap");
    }
    const Register anc{0, na};
    Statevector s = tensor(Statevector(na), state);
    s = prepare_g(std::move(s), anc, plan.g_amplitudes);
    for (std::size_t q = 0; q < plan.terms.size(); ++q) {
      s = apply_controlled_word(std::move(s), anc, q, plan.terms[q].word, na,
                                plan.terms[q].unit);
    }
    s = apply_g_adjoint(std::move(s), anc, plan.g_amplitudes);
    s = rotate_to_measurement_basis(std::move(s), plan.target, na);
    Circuit c = finish_circuit(s, plan.target, na, cover.sets[l].gamma);
    c.postselect = ((std::uint64_t{1} << na) - 1) << state.num_qubits();
    circuits.push_back(std::move(c));
  }
  return run(Method::Lcu, circuits, cover.identity_offset, options);
}

EstimateStats estimate(Method method, const CliqueCover& cover, const Statevector& state,
                       const EstimateOptions& options) {
  switch (method) {
    case Method::Standard:
      return estimate_standard(cover.reconstruct(), state, options);
    case Method::SeqRot: {
      std::vector<SeqRotPlan> plans;
      for (const auto& set : cover.sets) plans.push_back(build_seqrot_plan(set));
      return estimate_seqrot(cover, plans, state, options);
    }
    case Method::Lcu: {
      std::vector<LcuPlan> plans;
      for (const auto& set : cover.sets) plans.push_back(build_lcu_plan(set));
      return estimate_lcu(cover, plans, state, options);
    }
  }
  throw Error(ErrorKind::Usage, "unknown method");
}

SampleSummary summarize(std::span<const double> samples) {
  SampleSummary s;
  if (samples.empty()) return s;
  const double n = static_cast<double>(samples.size());
  s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  if (samples.size() < 2) return s;
  double ss = 0.0;
  for (const double v : samples) ss += (v - s.mean) * (v - s.mean);
  s.sigma = std::sqrt(ss / (n - 1.0));
  s.sem = s.sigma / std::sqrt(n);
  return s;
}

Interval bootstrap_ci(std::span<const double> samples, std::size_t resamples,
                      double confidence, std::uint64_t seed) {
  return bootstrap_summary(samples, resamples, confidence, seed).mean;
}

BootstrapSummary bootstrap_summary(std::span<const double> samples, std::size_t resamples,
                                   double confidence, std::uint64_t seed) {
  if (samples.size() < 2) throw ContractError("bootstrap needs at least 2 samples");
  if (resamples < 2) throw ContractError("bootstrap needs at least 2 resamples");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw ContractError("confidence must lie in (0, 1)");
  }
  const auto stats = kernels::bootstrap_resamples(samples, resamples, seed);
  std::vector<double> means;
  std::vector<double> sds;
  means.reserve(stats.size());
  sds.reserve(stats.size());
  for (const auto& r : stats) {
    means.push_back(r.mean);
    sds.push_back(r.sd);
  }
  BootstrapSummary out;
  out.mean = percentile_interval(std::move(means), confidence);
  out.sigma = percentile_interval(std::move(sds), confidence);
  const double root_n = std::sqrt(static_cast<double>(samples.size()));
  out.sem = {out.sigma.low / root_n, out.sigma.high / root_n};
  return out;
}

Histogram make_histogram(std::span<const double> samples, std::size_t bins) {
  if (bins == 0) throw ContractError("histogram needs at least one bin");
  Histogram h;
  if (samples.empty()) return h;
  auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t b = 0; b <= bins; ++b) h.edges.push_back(lo + width * static_cast<double>(b));
  h.edges.back() = hi;
  h.counts.assign(bins, 0);
  for (const double v : samples) {
    auto b = static_cast<std::size_t>((v - lo) / width);
    ++h.counts[std::min(b, bins - 1)];
  }
  return h;
}

}  // namespace unipart
