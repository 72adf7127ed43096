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

#include "unipart/gatecost.hpp"

#include <bit>

#include "unipart/error.hpp"

namespace unipart {
namespace {

std::uint64_t pow2(std::uint64_t e) {
  if (e >= 62) throw ContractError("control register too large for exact counts");
  return std::uint64_t{1} << e;
}

void require_system(std::uint64_t n_system) {
  if (n_system == 0) throw ContractError("system register must have at least one qubit");
}

void require_general(std::uint64_t n_control) {
  if (n_control < 3) {
    throw ContractError("closed form needs N_c >= 3; use special_cost for N_c = " +
                        std::to_string(n_control));
  }
}

CostReport lcu_registers(std::uint64_t n_control) {
  CostReport r;
  r.control_bits = n_control;
  r.ancilla = n_control;
  r.work = n_control >= 3 ? n_control - 1 : 0;
  return r;
}

}  // namespace

CostReport& CostReport::operator+=(const CostReport& o) {
  single_qubit += o.single_qubit;
  cnot += o.cnot;
  toffoli += o.toffoli;
  ancilla += o.ancilla;
  work += o.work;
  control_bits += o.control_bits;
  return *this;
}

std::string to_string(CostMethod m) {
  switch (m) {
    case CostMethod::SeqRot: return "seqrot";
    case CostMethod::LcuCascade: return "lcu-cascade";
    case CostMethod::LcuDirect: return "lcu-direct";
  }
  return "?";
}

CostMethod parse_cost_method(const std::string& name) {
  if (name == "seqrot") return CostMethod::SeqRot;
  if (name == "lcu-cascade") return CostMethod::LcuCascade;
  if (name == "lcu-direct") return CostMethod::LcuDirect;
  throw Error(ErrorKind::Usage, "unknown cost method '" + name + "'");
}

CostReport seqrot_cost(std::uint64_t n_system, std::uint64_t set_size) {
  require_system(n_system);
  if (set_size == 0) throw ContractError("set size must be positive");
  CostReport r;
  r.single_qubit = (2 * n_system + 1) * (set_size - 1);
  r.cnot = 2 * (n_system - 1) * (set_size - 1);
  return r;
}

CostReport lcu_cascade_cost(std::uint64_t n_system, std::uint64_t n_control) {
  require_system(n_system);
  require_general(n_control);
  CostReport r = lcu_registers(n_control);
  r.single_qubit = pow2(n_control - 1) * (4 * n_system + 31) - 45;
  r.cnot = pow2(n_control) * (2 * n_system + 9) - 31;
  return r;
}

CostReport lcu_direct_cost(std::uint64_t n_system, std::uint64_t n_control) {
  require_system(n_system);
  require_general(n_control);
  CostReport r = lcu_registers(n_control);
  r.single_qubit = pow2(n_control - 1) * (2 * n_system + 27) - 45;
  r.cnot = pow2(n_control) * (n_system + 10) - 31;
  return r;
}

ToffoliCount toffoli_counts(std::uint64_t n_control, bool gray_reduced) {
  if (n_control < 2) throw ContractError("Toffoli counts need N_c >= 2");
  if (!gray_reduced) return {pow2(n_control) * (2 * n_control - 2), 0};
  return {3 * pow2(n_control - 1) - 5, pow2(n_control) - 1};
}

CostReport decompose_toffolis(const CostReport& r) {
  CostReport out = r;
  out.single_qubit += kToffoliSingle * r.toffoli;
  out.cnot += kToffoliCnot * r.toffoli;
  out.toffoli = 0;
  return out;
}

CostReport special_cost(std::uint64_t n_system, std::uint64_t n_control, LcuMode mode) {
  require_system(n_system);
  CostReport r = lcu_registers(n_control);
  if (n_control == 1) {
    r.single_qubit = 4 * n_system;
    r.cnot = 2 * n_system;
  } else if (n_control == 2 && mode == LcuMode::Direct) {
    r.single_qubit = 8 * n_system;
    r.toffoli = 4 * n_system;
  } else if (n_control == 2) {
    r.single_qubit = 8 * n_system;
    r.cnot = 8 * n_system;
    r.toffoli = 4;
  } else {
    throw ContractError("special_cost covers N_c in {1, 2}, got " + std::to_string(n_control));
  }
  return r;
}

std::uint64_t control_bits_for(std::uint64_t set_size) {
  if (set_size <= 2) return 1;
  return static_cast<std::uint64_t>(std::bit_width(set_size - 1));
}

CoverCost cover_cost(const CliqueCover& cover, CostMethod method, std::size_t split_threshold) {
  CoverCost out;
  out.method = method;
  out.n_system = cover.n_qubits;
  out.split_threshold = split_threshold;
  for (const auto& set : cover.sets) {
    SetCost row;
    row.set_index = set.index;
    row.set_size = set.size();
    if (set.size() > split_threshold) out.split_recommended = true;
    if (set.size() > 1) {
      if (method == CostMethod::SeqRot) {
        row.report = seqrot_cost(cover.n_qubits, set.size());
      } else {
        const std::uint64_t nc = control_bits_for(set.size());
        const LcuMode mode = method == CostMethod::LcuDirect ? LcuMode::Direct : LcuMode::Cascade;
        if (nc <= 2) {
          row.report = special_cost(cover.n_qubits, nc, mode);
        } else if (mode == LcuMode::Direct) {
          row.report = lcu_direct_cost(cover.n_qubits, nc);
        } else {
          row.report = lcu_cascade_cost(cover.n_qubits, nc);
        }
      }
    }
    out.total += row.report;
    out.sets.push_back(row);
  }
  return out;
}

}  // namespace unipart
