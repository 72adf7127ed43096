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

#include "unipart/lcu.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "unipart/error.hpp"

namespace unipart {
namespace {

constexpr double kUnitPhaseTolerance = 1e-12;

std::size_t ceil_log2(std::size_t d) {
  return d <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(d - 1));
}

LcuTerm make_term(const Term& t) {
  LcuTerm out;
  out.alpha = std::abs(t.coeff);
  const complex unit = t.coeff / out.alpha;
  const double quarter_turns = std::arg(unit) / (std::numbers::pi / 2);
  const int k = static_cast<int>(std::lround(quarter_turns));
  const PauliWord phased = t.word.with_phase(k);
  if (std::abs(unit - phased.phase_factor()) <= kUnitPhaseTolerance) {
    out.word = phased;
  } else {
    out.word = t.word;
    out.unit = unit;
  }
  return out;
}

void fill_amplitudes(LcuPlan& plan) {
  plan.l1 = 0.0;
  for (const auto& t : plan.terms) plan.l1 += t.alpha;
  plan.g_amplitudes.clear();
  for (const auto& t : plan.terms) plan.g_amplitudes.push_back(std::sqrt(t.alpha / plan.l1));
  plan.ancilla_count = std::max<std::size_t>(1, ceil_log2(plan.terms.size()));
}

}  // namespace

LcuPlan build_lcu_plan(const AnticommutingSet& set, TargetChoice target) {
  const std::size_t n = resolve_target(set, target);
  LcuPlan plan;
  plan.set_index = set.index;
  plan.target_index = n;
  plan.target = set.members[n].word;
  plan.gamma = set.gamma;
  const std::size_t nq = plan.target.num_qubits();

  if (set.size() == 1) {
    if (set.members[n].beta < 0.0) plan.target = plan.target.with_phase(2);
    plan.terms.push_back({1.0, PauliWord(nq)});
    fill_amplitudes(plan);
    return plan;
  }

  double omega2 = 0.0;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k != n) omega2 += set.members[k].beta * set.members[k].beta;
  }
  plan.residual.omega = std::sqrt(omega2);
  if (plan.residual.omega > 0.0) {
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (k == n) continue;
      plan.residual.indices.push_back(k);
      plan.residual.delta.push_back(set.members[k].beta / plan.residual.omega);
    }
  }
  const double beta_n = set.members[n].beta;
  plan.phi = std::atan2(plan.residual.omega, beta_n);

  // R = cos(phi/2) I + sin(phi/2) sum_k delta_k P_n P_k.
  WeightedPauliSum r(nq);
  r.add(std::cos(plan.phi / 2), PauliWord(nq));
  for (std::size_t j = 0; j < plan.residual.delta.size(); ++j) {
    const PauliWord& pk = set.members[plan.residual.indices[j]].word;
    r.add(std::sin(plan.phi / 2) * plan.residual.delta[j], multiply(plan.target, pk));
  }
  for (const auto& t : r.canonical().terms()) plan.terms.push_back(make_term(t));
  if (plan.terms.empty()) {
    throw ContractError("LCU expansion of R_l vanished");
  }
  fill_amplitudes(plan);
  return plan;
}

WeightedPauliSum lcu_operator(const LcuPlan& plan) {
  WeightedPauliSum out(plan.target.num_qubits());
  for (const auto& t : plan.terms) out.add(t.alpha * t.unit, t.word);
  return out.canonical();
}

WeightedPauliSum rotation_axis(const LcuPlan& plan, const AnticommutingSet& set) {
  const complex i(0, 1);
  WeightedPauliSum out(plan.target.num_qubits());
  for (std::size_t j = 0; j < plan.residual.delta.size(); ++j) {
    const PauliWord& pk = set.members.at(plan.residual.indices[j]).word;
    out.add(i * plan.residual.delta[j], multiply(plan.target, pk));
  }
  return out.canonical();
}

double success_probability(const LcuPlan& plan) { return 1.0 / (plan.l1 * plan.l1); }

WeightedPauliSum conjugated_operator_lcu(const LcuPlan& plan,
                                         const AnticommutingSet& set) {
  const bool matches = plan.set_index == set.index &&
                       plan.target_index < set.size() &&
                       compare_letters(set.members[plan.target_index].word, plan.target) == 0 &&
                       std::abs(plan.gamma - set.gamma) <= 1e-12 * set.gamma;
  if (!matches) throw ContractError("LCU plan was not built from this set");
  const WeightedPauliSum r = lcu_operator(plan);
  return r * set.normalized() * r.adjoint();
}

std::size_t ancilla_dimension(const LcuPlan& plan) {
  return std::size_t{1} << plan.ancilla_count;
}

Eigen::MatrixXd preparation_unitary(std::span<const double> g, std::size_t dim) {
  if (g.size() > dim) throw DimensionError("more amplitudes than ancilla states");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t q = 0; q < g.size(); ++q) v(static_cast<Eigen::Index>(q)) = -g[q];
  v(0) += 1.0;
  const double vv = v.squaredNorm();
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
  if (vv > 1e-30) out -= (2.0 / vv) * v * v.transpose();
  return out;
}

double block_encoding_check(const LcuPlan& plan) {
  const std::size_t nq = plan.target.num_qubits();
  if (nq + plan.ancilla_count > kDenseQubitCap) {
    throw DimensionError("block encoding check exceeds the dense qubit cap");
  }
  const std::size_t dim_a = ancilla_dimension(plan);
  const Eigen::Index dim_s = Eigen::Index{1} << nq;
  const Eigen::Index dim = static_cast<Eigen::Index>(dim_a) * dim_s;

  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t q = 0; q < dim_a; ++q) {
    const Eigen::Index off = static_cast<Eigen::Index>(q) * dim_s;
    if (q < plan.terms.size()) {
      u.block(off, off, dim_s, dim_s) =
          plan.terms[q].unit * to_dense_matrix(plan.terms[q].word);
    } else {
      u.block(off, off, dim_s, dim_s).setIdentity();
    }
  }
  const Eigen::MatrixXd g_small = preparation_unitary(plan.g_amplitudes, dim_a);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t r = 0; r < dim_a; ++r) {
    for (std::size_t c = 0; c < dim_a; ++c) {
      g.block(static_cast<Eigen::Index>(r) * dim_s, static_cast<Eigen::Index>(c) * dim_s,
              dim_s, dim_s) =
          g_small(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
          Eigen::MatrixXcd::Identity(dim_s, dim_s);
    }
  }
  const Eigen::MatrixXcd full = g.adjoint() * u * g;
  const Eigen::MatrixXcd block = full.topLeftCorner(dim_s, dim_s);
  const Eigen::MatrixXcd expected = to_dense_matrix(lcu_operator(plan)) / plan.l1;
  return (block - expected).norm();
}

}  // namespace unipart
