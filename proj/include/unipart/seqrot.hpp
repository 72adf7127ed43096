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
#include <optional>
#include <vector>

#include "unipart/partition.hpp"
#include "unipart/pauli.hpp"

namespace unipart {

/// Member index to reduce onto; nullopt picks the member with largest |beta|
/// (first such member on ties).
using TargetChoice = std::optional<std::size_t>;

std::size_t resolve_target(const AnticommutingSet& set, TargetChoice choice);

/// One factor exp(-i angle/2 * generator), generator = i P_n P_k.
struct RotationStep {
  PauliWord generator;
  double angle = 0.0;
  std::size_t removed_index = 0;
};

/// Sequence of rotations R_S with R_S (H_S / gamma) R_S^dag = target.
struct SeqRotPlan {
  std::size_t set_index = 0;
  std::size_t target_index = 0;
  PauliWord target;
  double gamma = 0.0;
  /// In application order; the first step is the rightmost factor of R_S.
  std::vector<RotationStep> steps;
};

SeqRotPlan build_seqrot_plan(const AnticommutingSet& set,
                             TargetChoice target = std::nullopt);

/// R H R^dag for R = exp(-i angle/2 * generator), generator Hermitian and
/// self-inverse. Exact Pauli-sum expansion.
WeightedPauliSum conjugate_by_rotation(const WeightedPauliSum& h,
                                       const PauliWord& generator, double angle);

/// Applies every step of the plan to H_S / gamma by conjugation.
WeightedPauliSum conjugated_operator(const SeqRotPlan& plan,
                                     const AnticommutingSet& set);

/// exp(-i angle/2 * generator) with a phase-free generator.
struct PauliRotation {
  PauliWord generator;
  double angle = 0.0;
};

/// The plan's exponentials in application order with each generator's sign
/// folded into its angle.
std::vector<PauliRotation> plan_as_exponentials(const SeqRotPlan& plan);

}  // namespace unipart
