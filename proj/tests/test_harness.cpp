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

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "h2.hpp"
#include "oracle.hpp"
#include "unipart/error.hpp"
#include "unipart/harness.hpp"
#include "unipart/kernels.hpp"

using namespace unipart;

namespace {

struct H2Fixture {
  WeightedPauliSum h = h2::hamiltonian();
  CliqueCover cover = clique_cover(h);
  GroundState ground = exact_ground_state(h);
};

const H2Fixture& fixture() {
  static const H2Fixture f;
  return f;
}

EstimateOptions opts(std::size_t shots, std::uint64_t seed) {
  EstimateOptions o;
  o.shots = shots;
  o.seed = seed;
  o.resamples = 200;
  return o;
}

void expect_consistent(const EstimateStats& s) {
  EXPECT_EQ(s.n_samples, s.samples.size());
  EXPECT_NEAR(s.sem, s.sigma / std::sqrt(static_cast<double>(s.n_samples)), 1e-12);
  EXPECT_LE(s.ci95.low, s.mean);
  EXPECT_GE(s.ci95.high, s.mean);
}

}  // namespace

TEST(ShotBudget, EvenAndWeighted) {
  const std::vector<double> w = {1.0, 1.0, 1.0};
  const auto even = ShotBudget::allocate(10, Allocation::Even, w);
  EXPECT_EQ(even.per_circuit, (std::vector<std::size_t>{4, 3, 3}));

  const std::vector<double> w2 = {0.1, 0.3, 0.6};
  const auto weighted = ShotBudget::allocate(101, Allocation::Weighted, w2);
  EXPECT_EQ(std::accumulate(weighted.per_circuit.begin(), weighted.per_circuit.end(), 0u), 101u);
  EXPECT_EQ(weighted.per_circuit, (std::vector<std::size_t>{10, 30, 61}));

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> ws(1 + trial % 9);
    for (auto& x : ws) x = u(rng);
    for (auto a : {Allocation::Even, Allocation::Weighted}) {
      const auto b = ShotBudget::allocate(1000 + trial, a, ws);
      EXPECT_EQ(std::accumulate(b.per_circuit.begin(), b.per_circuit.end(), std::size_t{0}),
                1000u + trial);
    }
  }
}

TEST(Estimate, IdentityOnlyAndSingleTerm) {
  WeightedPauliSum c(1);
  c.add(0.75, PauliWord(1));
  const auto s = estimate_standard(c, Statevector(1), opts(100, 1));
  EXPECT_DOUBLE_EQ(s.mean, 0.75);
  EXPECT_DOUBLE_EQ(s.sigma, 0.0);
  EXPECT_DOUBLE_EQ(s.ci95.low, 0.75);
  EXPECT_DOUBLE_EQ(s.ci95.high, 0.75);

  WeightedPauliSum z(1);
  z.add(1.0, PauliWord::from_letters("Z"));
  const auto t = estimate_standard(z, Statevector(1), opts(100, 1));
  EXPECT_EQ(t.n_samples, 100u);
  for (double e : t.samples) EXPECT_EQ(e, 1.0);
  EXPECT_DOUBLE_EQ(t.mean, 1.0);
  EXPECT_DOUBLE_EQ(t.sigma, 0.0);

  const auto cover = clique_cover(z.scaled(0.4));
  const auto r = estimate(Method::SeqRot, cover, Statevector(1), opts(50, 2));
  EXPECT_DOUBLE_EQ(r.mean, 0.4);
  const auto l = estimate(Method::Lcu, cover, Statevector(1), opts(50, 2));
  EXPECT_DOUBLE_EQ(l.mean, 0.4);
  ASSERT_TRUE(l.accepted_fraction.has_value());
  EXPECT_DOUBLE_EQ(*l.accepted_fraction, 1.0);
}

TEST(Estimate, NegativeSingletonSign) {
  WeightedPauliSum h(1);
  h.add(-0.4, PauliWord::from_letters("Z"));
  const auto cover = clique_cover(h);
  for (auto m : {Method::Standard, Method::SeqRot, Method::Lcu}) {
    EXPECT_DOUBLE_EQ(estimate(m, cover, Statevector(1), opts(30, 3)).mean, -0.4);
  }
}

TEST(Estimate, ErrorPaths) {
  const auto& f = fixture();
  EXPECT_THROW(estimate(Method::SeqRot, f.cover, f.ground.state, opts(0, 1)), ContractError);
  EXPECT_THROW(estimate(Method::Standard, f.cover, f.ground.state, opts(2, 1)), ContractError);
  std::vector<SeqRotPlan> plans;
  for (const auto& s : f.cover.sets) plans.push_back(build_seqrot_plan(s));
  plans.pop_back();
  EXPECT_THROW(estimate_seqrot(f.cover, plans, f.ground.state, opts(100, 1)), ContractError);
  plans.push_back(build_seqrot_plan(f.cover.sets[1]));
  EXPECT_THROW(estimate_seqrot(f.cover, plans, f.ground.state, opts(100, 1)), ContractError);
  EXPECT_THROW(estimate(Method::SeqRot, f.cover, Statevector(3), opts(100, 1)), DimensionError);

  // With one call per circuit some seed rejects a whole LCU set.
  bool threw = false;
  for (std::uint64_t seed = 0; seed < 200 && !threw; ++seed) {
    try {
      estimate(Method::Lcu, f.cover, f.ground.state, opts(3, seed));
    } catch (const ContractError&) {
      threw = true;
    }
  }
  EXPECT_TRUE(threw);
}

TEST(Estimate, StatsInvariantsAndDeterminism) {
  const auto& f = fixture();
  for (auto m : {Method::Standard, Method::SeqRot, Method::Lcu}) {
    const auto a = estimate(m, f.cover, f.ground.state, opts(30000, 5));
    const auto b = estimate(m, f.cover, f.ground.state, opts(30000, 5));
    const auto c = estimate(m, f.cover, f.ground.state, opts(30000, 6));
    expect_consistent(a);
    EXPECT_EQ(a.samples, b.samples);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.ci95.low, b.ci95.low);
    EXPECT_EQ(a.sigma_ci.high, b.sigma_ci.high);
    EXPECT_NE(a.samples, c.samples);
    EXPECT_EQ(a.total_calls, 30000u);
  }
}

TEST(Estimate, ThreadCountDoesNotChangeResults) {
  const auto& f = fixture();
  setenv("UNIPART_THREADS", "1", 1);
  kernels::configure_threads_from_env();
  const auto one = estimate(Method::Lcu, f.cover, f.ground.state, opts(40000, 9));
  setenv("UNIPART_THREADS", "4", 1);
  kernels::configure_threads_from_env();
  const auto four = estimate(Method::Lcu, f.cover, f.ground.state, opts(40000, 9));
  EXPECT_EQ(one.samples, four.samples);
  EXPECT_EQ(one.ci95.low, four.ci95.low);
  EXPECT_EQ(one.ci95.high, four.ci95.high);
}

TEST(Estimate, LcuAcceptanceMatchesPlan) {
  const auto& f = fixture();
  const auto s = estimate(Method::Lcu, f.cover, f.ground.state, opts(300000, 12));
  ASSERT_EQ(s.set_accepted_fraction.size(), 3u);
  for (std::size_t l = 0; l < 3; ++l) {
    const double p = success_probability(build_lcu_plan(f.cover.sets[l]));
    const double sd = std::sqrt(p * (1 - p) / 100000.0);
    EXPECT_NEAR(s.set_accepted_fraction[l], p, 3 * sd + 1e-12) << "set " << l;
  }
}

TEST(Estimate, RetryRejectedFillsEveryShare) {
  const auto& f = fixture();
  auto o = opts(30000, 4);
  o.retry_rejected = true;
  const auto s = estimate(Method::Lcu, f.cover, f.ground.state, o);
  EXPECT_EQ(s.n_samples, 10000u);
  EXPECT_GT(s.total_calls, 30000u);
}

TEST(Estimate, WeightedAllocationUsesPairedDraws) {
  const auto& f = fixture();
  auto o = opts(30000, 4);
  o.allocation = Allocation::Weighted;
  const auto s = estimate(Method::SeqRot, f.cover, f.ground.state, o);
  expect_consistent(s);
  EXPECT_LT(s.n_samples, 10000u);
  EXPECT_EQ(s.total_calls, 30000u);
}

TEST(Estimate, RandomHamiltonianIsUnbiased) {
  std::mt19937_64 rng(77);
  const auto h = oracle::random_hamiltonian(rng, 4, 12);
  const Eigen::VectorXcd psi = oracle::random_state(rng, 4);
  const double exact = psi.dot(oracle::sum(h) * psi).real();
  const auto state = Statevector::from_amplitudes({psi.data(), psi.data() + psi.size()});
  const auto cover = clique_cover(h);
  for (auto m : {Method::Standard, Method::SeqRot, Method::Lcu}) {
    const auto s = estimate(m, cover, state, opts(400000, 21));
    EXPECT_NEAR(s.mean, exact, 3 * s.sem) << to_string(m);
  }
}

TEST(Estimate, GrandMeanIsUnbiasedOverRuns) {
  const auto& f = fixture();
  for (auto m : {Method::Standard, Method::SeqRot, Method::Lcu}) {
    std::vector<double> means;
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
      means.push_back(estimate(m, f.cover, f.ground.state, opts(20000, seed)).mean);
    }
    const auto s = summarize(means);
    EXPECT_NEAR(s.mean, f.ground.energy, 3 * s.sem) << to_string(m);
  }
}

TEST(Estimate, VarianceOrderingOnH2) {
  const auto& f = fixture();
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto o = opts(150000, seed);
    const auto standard = estimate(Method::Standard, f.cover, f.ground.state, o);
    o.shots = 90000;  // three circuits, same 30000 samples as five standard circuits
    const auto seqrot = estimate(Method::SeqRot, f.cover, f.ground.state, o);
    ASSERT_EQ(standard.n_samples, seqrot.n_samples);
    EXPECT_LT(seqrot.sigma, standard.sigma);
  }
}

TEST(Estimate, SemScalesAsInverseRootN) {
  const auto& f = fixture();
  double ratio = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto small = estimate(Method::Standard, f.cover, f.ground.state, opts(50000, seed));
    const auto large = estimate(Method::Standard, f.cover, f.ground.state, opts(100000, seed + 50));
    ratio += small.sem / large.sem / 10.0;
  }
  EXPECT_NEAR(ratio, std::sqrt(2.0), 0.1 * std::sqrt(2.0));
}

TEST(Bootstrap, ConstantAndErrors) {
  const std::vector<double> c(50, 2.5);
  const auto ci = bootstrap_ci(c, 100, 0.95, 1);
  EXPECT_DOUBLE_EQ(ci.low, 2.5);
  EXPECT_DOUBLE_EQ(ci.high, 2.5);
  EXPECT_THROW(bootstrap_ci(std::vector<double>{1.0}, 100, 0.95, 1), ContractError);
  EXPECT_THROW(bootstrap_ci(c, 100, 1.5, 1), ContractError);
}

TEST(Bootstrap, NormalWidthMatchesTheory) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> x(10000);
  for (auto& v : x) v = g(rng);
  const auto ci = bootstrap_ci(x, 2000, 0.95, 3);
  const double analytic = 2 * 1.96 / std::sqrt(10000.0);
  EXPECT_NEAR(ci.high - ci.low, analytic, 0.15 * analytic);
  EXPECT_TRUE(ci.contains(summarize(x).mean));

  const auto b = bootstrap_summary(x, 2000, 0.95, 3);
  EXPECT_TRUE(b.sigma.contains(summarize(x).sigma));
  EXPECT_NEAR(b.sem.low, b.sigma.low / 100.0, 1e-15);
  EXPECT_EQ(bootstrap_ci(x, 2000, 0.95, 3).low, ci.low);
}

TEST(Histogram, CountsSumToSamples) {
  const std::vector<double> x = {0.0, 0.1, 0.5, 0.9, 1.0, 1.0};
  const auto h = make_histogram(x, 4);
  ASSERT_EQ(h.edges.size(), 5u);
  EXPECT_DOUBLE_EQ(h.edges.front(), 0.0);
  EXPECT_DOUBLE_EQ(h.edges.back(), 1.0);
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{2, 0, 1, 3}));
  const auto flat = make_histogram(std::vector<double>{3.0, 3.0}, 2);
  EXPECT_EQ(flat.counts[0] + flat.counts[1], 2u);
  EXPECT_THROW(make_histogram(x, 0), ContractError);
}

TEST(Method, Names) {
  for (auto m : {Method::Standard, Method::SeqRot, Method::Lcu}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_EQ(parse_allocation("weighted"), Allocation::Weighted);
  EXPECT_THROW(parse_method("vqe"), Error);
}
