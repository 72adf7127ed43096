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

#include "unipart/seqrot.hpp"

#include <cmath>

#include "unipart/error.hpp"

namespace unipart {

std::size_t resolve_target(const AnticommutingSet& set, TargetChoice choice) {
  if (set.members.empty()) throw ContractError("anticommuting set is empty");
  if (choice) {
    if (*choice >= set.size()) {
      throw ContractError("target index " + std::to_string(*choice) +
                          " out of range for set of size " +
                          std::to_string(set.size()));
    }
    return *choice;
  }
  std::size_t best = 0;
  for (std::size_t j = 1; j < set.size(); ++j) {
    if (std::abs(set.members[j].beta) > std::abs(set.members[best].beta)) best = j;
  }
  return best;
}

SeqRotPlan build_seqrot_plan(const AnticommutingSet& set, TargetChoice target) {
  const std::size_t n = resolve_target(set, target);
  SeqRotPlan plan;
  plan.set_index = set.index;
  plan.target_index = n;
  plan.target = set.members[n].word;
  plan.gamma = set.gamma;
  if (set.size() == 1 && set.members[n].beta < 0.0) {
    plan.target = plan.target.with_phase(2);
  }

  double beta_n = set.members[n].beta;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k == n) continue;
    const double beta_k = set.members[k].beta;
    RotationStep step;
    const PauliWord product = multiply(plan.target, set.members[k].word);
    step.generator = product.with_phase(product.phase() + 1);  // i P_n P_k
    // Zeroes the P_k coefficient and leaves a positive P_n coefficient.
    step.angle = std::atan2(beta_k, beta_n);
    step.removed_index = k;
    plan.steps.push_back(step);
    beta_n = std::hypot(beta_n, beta_k);
  }
  return plan;
}

WeightedPauliSum conjugate_by_rotation(const WeightedPauliSum& h,
                                       const PauliWord& generator, double angle) {
  if (!generator.is_hermitian()) {
    throw ContractError("rotation generator must be Hermitian");
  }
  // exp(-ia/2 X) P exp(ia/2 X) = P if [X, P] = 0, else cos(a) P - i sin(a) X P.
  const complex i(0, 1);
  WeightedPauliSum out(h.num_qubits());
  for (const auto& t : h.terms()) {
    if (commutes(generator, t.word)) {
      out.add(t.coeff, t.word);
    } else {
      out.add(t.coeff * std::cos(angle), t.word);
      out.add(-i * std::sin(angle) * t.coeff, multiply(generator, t.word));
    }
  }
  return out.canonical();
}

WeightedPauliSum conjugated_operator(const SeqRotPlan& plan,
                                     const AnticommutingSet& set) {
  const bool matches = plan.set_index == set.index &&
                       plan.target_index < set.size() &&
                       compare_letters(set.members[plan.target_index].word, plan.target) == 0 &&
                       plan.steps.size() + 1 == set.size() &&
                       std::abs(plan.gamma - set.gamma) <= 1e-12 * set.gamma;
  if (!matches) throw ContractError("SeqRot plan was not built from this set");
  WeightedPauliSum h = set.normalized();
  for (const auto& step : plan.steps) {
    h = conjugate_by_rotation(h, step.generator, step.angle);
  }
  return h;
}

std::vector<PauliRotation> plan_as_exponentials(const SeqRotPlan& plan) {
  std::vector<PauliRotation> out;
  out.reserve(plan.steps.size());
  for (const auto& step : plan.steps) {
    const double sign = step.generator.phase() == 2 ? -1.0 : 1.0;
    out.push_back({step.generator.without_phase(), sign * step.angle});
  }
  return out;
}

}  // namespace unipart
