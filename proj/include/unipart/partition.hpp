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
#include <vector>

#include "unipart/pauli.hpp"

namespace unipart {

struct SetMember {
  double beta;
  PauliWord word;
};

/// One clique H_S = gamma * sum_j beta_j P_j of pairwise anticommuting words,
/// with sum_j beta_j^2 = 1 and gamma > 0.
struct AnticommutingSet {
  std::size_t index = 0;
  double gamma = 0.0;
  std::vector<SetMember> members;

  std::size_t size() const noexcept { return members.size(); }
  std::size_t num_qubits() const;

  /// H_S / gamma.
  WeightedPauliSum normalized() const;
  /// H_S.
  WeightedPauliSum as_sum() const;

  /// Builds a normalized set from raw (real) coefficients.
  static AnticommutingSet from_terms(std::size_t index,
                                     const std::vector<Term>& terms);
};

struct CliqueCover {
  std::size_t n_qubits = 0;
  std::vector<AnticommutingSet> sets;
  double identity_offset = 0.0;
  /// The input carried an explicit identity term.
  bool has_identity_term = false;

  /// m_c, counting the bare-identity clique when present.
  std::size_t clique_count() const noexcept {
    return sets.size() + (has_identity_term ? 1 : 0);
  }

  /// identity_offset * I + sum_l gamma_l sum_j beta_j P_j.
  WeightedPauliSum reconstruct() const;
};

/// Nodes are the non-identity terms of the canonical Hamiltonian in canonical
/// (lexicographic) order; an edge joins two anticommuting words.
struct AnticommutationGraph {
  std::vector<Term> nodes;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t edge_count() const;
  bool adjacent(std::size_t i, std::size_t j) const;
};

AnticommutationGraph build_anticommutation_graph(const WeightedPauliSum& h);

enum class ColoringStrategy {
  /// Descending complement-graph degree, ties in canonical order.
  LargestFirst,
  /// Canonical order.
  Sequential,
};

/// Greedy coloring of the complement of the anticommutation graph; every
/// color class is one AnticommutingSet. Throws ContractError on non-Hermitian
/// input.
CliqueCover clique_cover(const WeightedPauliSum& h,
                         ColoringStrategy strategy = ColoringStrategy::LargestFirst);

/// Splits every set larger than max_size into consecutive chunks of at most
/// max_size members, renormalizing each chunk. Sets are renumbered.
CliqueCover split_large_cliques(const CliqueCover& cover, std::size_t max_size);

}  // namespace unipart
