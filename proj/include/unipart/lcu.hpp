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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "unipart/partition.hpp"
#include "unipart/pauli.hpp"
#include "unipart/seqrot.hpp"

namespace unipart {

/// alpha * unit * word with alpha >= 0. Unit phases that are powers of i live
/// in word.phase(); any other unit factor stays in `unit`.
struct LcuTerm {
  double alpha = 0.0;
  PauliWord word;
  complex unit{1.0, 0.0};

  complex unitary_factor() const { return unit * word.phase_factor(); }
};

/// H_S/gamma = beta_n P_n + omega * sum_k delta_k P_k with sum delta^2 = 1.
struct ResidualView {
  std::vector<std::size_t> indices;  ///< member index of each delta
  std::vector<double> delta;
  double omega = 0.0;
};

/// R_l written as a single linear combination of unitaries, plus the ancilla
/// preparation amplitudes g_q = sqrt(alpha_q / l1).
struct LcuPlan {
  std::size_t set_index = 0;
  std::size_t target_index = 0;
  PauliWord target;
  double gamma = 0.0;
  double phi = 0.0;
  ResidualView residual;
  std::vector<LcuTerm> terms;
  double l1 = 1.0;
  std::size_t ancilla_count = 1;
  std::vector<double> g_amplitudes;

  bool is_identity() const { return terms.size() == 1 && terms[0].word.is_identity(); }
};

LcuPlan build_lcu_plan(const AnticommutingSet& set,
                       TargetChoice target = std::nullopt);

/// R_l = sum_q alpha_q U_q as a Pauli sum.
WeightedPauliSum lcu_operator(const LcuPlan& plan);

/// Rotation axis X = i sum_k delta_k P_n P_k, so that
/// R_l = cos(phi/2) I - i sin(phi/2) X.
WeightedPauliSum rotation_axis(const LcuPlan& plan, const AnticommutingSet& set);

/// Post-selection acceptance probability 1 / l1^2.
double success_probability(const LcuPlan& plan);

/// R_l (H_S/gamma) R_l^dag, symbolically.
WeightedPauliSum conjugated_operator_lcu(const LcuPlan& plan,
                                         const AnticommutingSet& set);

/// Ancilla register dimension, 2^ancilla_count.
std::size_t ancilla_dimension(const LcuPlan& plan);

/// Real orthogonal G with G e_0 = g (zero padded to dim): the Householder
/// reflection I - 2 v v^T / v^T v with v = e_0 - g.
Eigen::MatrixXd preparation_unitary(std::span<const double> g, std::size_t dim);

/// || <0|_a G^dag U_LCU G |0>_a - R_l / l1 ||_F on dense matrices, ancilla
/// register leftmost.
double block_encoding_check(const LcuPlan& plan);

}  // namespace unipart
