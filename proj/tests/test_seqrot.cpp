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

#include <random>

#include <gtest/gtest.h>

#include "h2.hpp"
#include "oracle.hpp"
#include "unipart/error.hpp"
#include "unipart/partition.hpp"
#include "unipart/seqrot.hpp"

using namespace unipart;

namespace {

// R = U_last ... U_first with U = exp(-i angle/2 G), from the dense oracle.
oracle::Mat dense_rotation(const SeqRotPlan& plan, std::size_t n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  oracle::Mat r = oracle::Mat::Identity(dim, dim);
  for (const auto& step : plan.steps) r = oracle::rotation(oracle::word(step.generator), step.angle) * r;
  return r;
}

double conjugation_error(const SeqRotPlan& plan, const AnticommutingSet& set) {
  const std::size_t n = set.num_qubits();
  const oracle::Mat r = dense_rotation(plan, n);
  const oracle::Mat hs = oracle::sum(set.normalized());
  return (r * hs * r.adjoint() - oracle::word(plan.target)).norm();
}

}  // namespace

TEST(SeqRot, H2AnglesAndGenerators) {
  const auto cover = clique_cover(h2::hamiltonian());
  const auto p2 = build_seqrot_plan(cover.sets[1]);
  const auto p3 = build_seqrot_plan(cover.sets[2]);

  ASSERT_EQ(p2.steps.size(), 1u);
  EXPECT_EQ(p2.target.letters(), "IZ");
  EXPECT_NEAR(p2.steps[0].angle, h2::kTheta2, 1e-9);
  EXPECT_EQ(p2.steps[0].generator.letters(), "XY");
  EXPECT_EQ(p2.steps[0].generator.phase(), 2);  // -X0 Y1

  ASSERT_EQ(p3.steps.size(), 1u);
  EXPECT_EQ(p3.target.letters(), "ZI");
  EXPECT_NEAR(p3.steps[0].angle, h2::kTheta3, 1e-9);
  EXPECT_EQ(p3.steps[0].generator.letters(), "XY");
  EXPECT_EQ(p3.steps[0].generator.phase(), 0);

  EXPECT_LT(conjugation_error(p2, cover.sets[1]), 1e-10);
  EXPECT_LT(conjugation_error(p3, cover.sets[2]), 1e-10);
}

TEST(SeqRot, SymbolicConjugationGivesTarget) {
  const auto cover = clique_cover(h2::hamiltonian());
  for (const auto& set : cover.sets) {
    const auto plan = build_seqrot_plan(set);
    EXPECT_TRUE(is_single_term(conjugated_operator(plan, set), plan.target.without_phase(),
                               plan.target.phase_factor(), 1e-12));
  }
}

TEST(SeqRot, SingletonPlans) {
  AnticommutingSet pos = AnticommutingSet::from_terms(0, {{0.5, PauliWord::from_letters("ZI")}});
  const auto p = build_seqrot_plan(pos);
  EXPECT_TRUE(p.steps.empty());
  EXPECT_EQ(p.target.phase(), 0);

  AnticommutingSet neg = AnticommutingSet::from_terms(0, {{-0.5, PauliWord::from_letters("ZI")}});
  const auto q = build_seqrot_plan(neg);
  EXPECT_TRUE(q.steps.empty());
  EXPECT_EQ(q.target.phase(), 2);
  EXPECT_TRUE(is_single_term(conjugated_operator(q, neg), PauliWord::from_letters("ZI"), -1.0, 1e-15));
}

TEST(SeqRot, ExplicitTargetAndErrors) {
  const auto cover = clique_cover(h2::hamiltonian());
  const auto& set = cover.sets[1];
  const auto p = build_seqrot_plan(set, 1);
  EXPECT_EQ(p.target.letters(), "XX");
  EXPECT_LT(conjugation_error(p, set), 1e-10);
  EXPECT_THROW(build_seqrot_plan(set, 5), ContractError);
  EXPECT_THROW(conjugated_operator(p, cover.sets[2]), ContractError);
  EXPECT_THROW(conjugate_by_rotation(set.normalized(), PauliWord::from_letters("XY", 1), 0.1),
               ContractError);
}

TEST(SeqRot, RandomSetsConjugateToTarget) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto set = oracle::random_set(rng, 5, 6);
    const auto plan = build_seqrot_plan(set);
    ASSERT_EQ(plan.steps.size() + 1, set.size());
    ASSERT_LT(conjugation_error(plan, set), 1e-10) << "trial " << trial;
    ASSERT_TRUE(is_single_term(conjugated_operator(plan, set), plan.target, 1.0, 1e-10));
    for (const auto& step : plan.steps) {
      EXPECT_TRUE(step.generator.is_hermitian());
      EXPECT_TRUE(anticommutes(step.generator, plan.target));
    }
  }
}

TEST(SeqRot, ExponentialsMatchSteps) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto set = oracle::random_set(rng, 4, 5);
    const auto plan = build_seqrot_plan(set);
    const auto exps = plan_as_exponentials(plan);
    ASSERT_EQ(exps.size(), plan.steps.size());
    const std::size_t n = set.num_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    oracle::Mat r = oracle::Mat::Identity(dim, dim);
    for (const auto& e : exps) {
      EXPECT_EQ(e.generator.phase(), 0);
      r = oracle::rotation(oracle::word(e.generator), e.angle) * r;
    }
    EXPECT_LT((r - dense_rotation(plan, n)).norm(), 1e-10);
  }
}

TEST(SeqRot, ConjugationByRotationMatchesDense) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = oracle::random_hamiltonian(rng, 3, 6);
    const auto g = PauliWord::from_letters(oracle::random_letters(rng, 3), 2 * (trial % 2));
    const double a = angle(rng);
    const oracle::Mat u = oracle::rotation(oracle::word(g), a);
    const oracle::Mat expected = u * oracle::sum(h) * u.adjoint();
    EXPECT_LT((oracle::sum(conjugate_by_rotation(h, g, a)) - expected).norm(), 1e-10);
  }
}
