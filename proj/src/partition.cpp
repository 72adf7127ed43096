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

#include "unipart/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unipart/error.hpp"

namespace unipart {

std::size_t AnticommutingSet::num_qubits() const {
  return members.empty() ? 0 : members.front().word.num_qubits();
}

WeightedPauliSum AnticommutingSet::normalized() const {
  WeightedPauliSum out(num_qubits());
  for (const auto& m : members) out.add(m.beta, m.word);
  return out.canonical();
}

WeightedPauliSum AnticommutingSet::as_sum() const {
  return normalized().scaled(gamma);
}

AnticommutingSet AnticommutingSet::from_terms(std::size_t index,
                                              const std::vector<Term>& terms) {
  if (terms.empty()) throw ContractError("anticommuting set is empty");
  double norm2 = 0.0;
  for (const auto& t : terms) norm2 += std::norm(t.coeff);
  AnticommutingSet set;
  set.index = index;
  set.gamma = std::sqrt(norm2);
  set.members.reserve(terms.size());
  for (const auto& t : terms) {
    set.members.push_back({t.coeff.real() / set.gamma, t.word.without_phase()});
  }
  return set;
}

WeightedPauliSum CliqueCover::reconstruct() const {
  WeightedPauliSum out(n_qubits);
  if (identity_offset != 0.0) out.add(identity_offset, PauliWord(n_qubits));
  for (const auto& s : sets) {
    for (const auto& m : s.members) out.add(s.gamma * m.beta, m.word);
  }
  return out.canonical();
}

std::size_t AnticommutationGraph::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& adj : adjacency) degree_sum += adj.size();
  return degree_sum / 2;
}

bool AnticommutationGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& adj = adjacency.at(i);
  return std::binary_search(adj.begin(), adj.end(), j);
}

AnticommutationGraph build_anticommutation_graph(const WeightedPauliSum& h) {
  AnticommutationGraph g;
  for (const auto& t : h.canonical().terms()) {
    if (!t.word.is_identity()) g.nodes.push_back(t);
  }
  g.adjacency.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
      if (anticommutes(g.nodes[i].word, g.nodes[j].word)) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  return g;
}

CliqueCover clique_cover(const WeightedPauliSum& h, ColoringStrategy strategy) {
  if (!h.is_hermitian()) {
    throw ContractError("clique cover needs a Hermitian Hamiltonian");
  }
  const WeightedPauliSum canon = h.canonical();
  CliqueCover cover;
  cover.n_qubits = h.num_qubits();
  for (const auto& t : canon.terms()) {
    if (t.word.is_identity()) {
      cover.identity_offset += t.coeff.real();
      cover.has_identity_term = true;
    }
  }

  const AnticommutationGraph g = build_anticommutation_graph(canon);
  const std::size_t n = g.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (strategy == ColoringStrategy::LargestFirst) {
    // Complement degree is (n - 1) - anticommutation degree, so the largest
    // complement degree is the smallest anticommutation degree. Node indices
    // are already in canonical order, which breaks ties.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return g.adjacency[a].size() < g.adjacency[b].size();
    });
  }

  // Two nodes may share a color iff they anticommute (no complement edge).
  std::vector<std::vector<std::size_t>> classes;
  for (const std::size_t node : order) {
    bool placed = false;
    for (auto& members : classes) {
      const bool fits = std::all_of(members.begin(), members.end(), [&](std::size_t m) {
        return g.adjacent(node, m);
      });
      if (fits) {
        members.push_back(node);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({node});
  }

  cover.sets.reserve(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<Term> terms;
    for (const std::size_t node : classes[c]) terms.push_back(g.nodes[node]);
    cover.sets.push_back(AnticommutingSet::from_terms(c, terms));
  }
  return cover;
}

CliqueCover split_large_cliques(const CliqueCover& cover, std::size_t max_size) {
  if (max_size == 0) throw ContractError("max_size must be at least 1");
  CliqueCover out;
  out.n_qubits = cover.n_qubits;
  out.identity_offset = cover.identity_offset;
  out.has_identity_term = cover.has_identity_term;
  for (const auto& set : cover.sets) {
    if (set.size() <= max_size) {
      AnticommutingSet copy = set;
      copy.index = out.sets.size();
      out.sets.push_back(std::move(copy));
      continue;
    }
    for (std::size_t begin = 0; begin < set.size(); begin += max_size) {
      const std::size_t end = std::min(begin + max_size, set.size());
      std::vector<Term> terms;
      for (std::size_t j = begin; j < end; ++j) {
        terms.push_back({set.gamma * set.members[j].beta, set.members[j].word});
      }
      out.sets.push_back(AnticommutingSet::from_terms(out.sets.size(), terms));
    }
  }
  return out;
}

}  // namespace unipart
