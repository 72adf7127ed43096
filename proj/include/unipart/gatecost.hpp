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
#include <string>
#include <vector>

#include "unipart/partition.hpp"

namespace unipart {

/// Gate and qubit counts for one measurement circuit. `toffoli` counts
/// Toffolis left undecomposed; the closed forms for N_c >= 3 already expand
/// them into single-qubit and CNOT gates.
struct CostReport {
  std::uint64_t single_qubit = 0;
  std::uint64_t cnot = 0;
  std::uint64_t toffoli = 0;
  std::uint64_t ancilla = 0;
  std::uint64_t work = 0;
  std::uint64_t control_bits = 0;

  CostReport& operator+=(const CostReport& o);
  friend bool operator==(const CostReport&, const CostReport&) = default;
};

inline constexpr std::uint64_t kToffoliSingle = 9;
inline constexpr std::uint64_t kToffoliCnot = 6;

enum class LcuMode { Cascade, Direct };
enum class CostMethod { SeqRot, LcuCascade, LcuDirect };

std::string to_string(CostMethod m);
CostMethod parse_cost_method(const std::string& name);

/// single (2Ns+1)(k-1), cnot 2(Ns-1)(k-1).
CostReport seqrot_cost(std::uint64_t n_system, std::uint64_t set_size);

/// Nc >= 3 only; smaller Nc throws ContractError (use special_cost).
CostReport lcu_cascade_cost(std::uint64_t n_system, std::uint64_t n_control);
CostReport lcu_direct_cost(std::uint64_t n_system, std::uint64_t n_control);

struct ToffoliCount {
  std::uint64_t toffoli = 0;
  std::uint64_t extra_cnot = 0;
};

/// Control-register Toffolis for all 2^Nc control states. Nc >= 2.
ToffoliCount toffoli_counts(std::uint64_t n_control, bool gray_reduced);

/// Expands Toffolis into 9 single-qubit and 6 CNOT gates each.
CostReport decompose_toffolis(const CostReport& r);

/// Nc in {1, 2}, no work qubits.
CostReport special_cost(std::uint64_t n_system, std::uint64_t n_control, LcuMode mode);

/// Control bits for a set of the given size: max(1, ceil(log2 size)).
std::uint64_t control_bits_for(std::uint64_t set_size);

struct SetCost {
  std::size_t set_index = 0;
  std::size_t set_size = 0;
  CostReport report;
};

struct CoverCost {
  CostMethod method = CostMethod::SeqRot;
  std::size_t n_system = 0;
  std::vector<SetCost> sets;
  CostReport total;
  /// Some set has more than split_threshold members.
  bool split_recommended = false;
  std::size_t split_threshold = 5;
  std::string label = "analytic estimate";
};

/// Per-set and total costs. Singleton sets need no circuit and cost zero.
CoverCost cover_cost(const CliqueCover& cover, CostMethod method,
                     std::size_t split_threshold = 5);

}  // namespace unipart
