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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unipart/gatecost.hpp"
#include "unipart/harness.hpp"
#include "unipart/lcu.hpp"
#include "unipart/partition.hpp"
#include "unipart/seqrot.hpp"
#include "unipart/statevector.hpp"

namespace unipart::io {

using json = nlohmann::json;

/// Hamiltonian text format, one item per line:
///
///   # comment
///   qubits: 2            (optional; default 1 + max qubit index)
///   molecule: H2         (optional metadata)
///   bond_length: 0.74
///   units: angstrom
///   0.5731061703432151 Z0 Z1
///   0.2460355896585992 I
///
/// A bare coefficient, "I", or "[]" after it is the identity.
struct HamiltonianFile {
  WeightedPauliSum hamiltonian;
  std::optional<std::string> molecule;
  std::optional<double> bond_length;
  std::optional<std::string> units;
};

HamiltonianFile parse_hamiltonian_file(std::string_view text);
WeightedPauliSum parse_hamiltonian(std::string_view text);
/// Canonical terms, 17 significant digits, qubit count header first.
std::string print_hamiltonian(const HamiltonianFile& file);
std::string print_hamiltonian(const WeightedPauliSum& h);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// Fixed 17 significant digits.
std::string format_double(double v);

json word_to_json(const PauliWord& w);
PauliWord word_from_json(const json& j, std::size_t n_qubits);

/// Sets in cover order, then the bare-identity clique when present.
json cover_to_json(const CliqueCover& cover);
CliqueCover cover_from_json(const json& j);

json plan_to_json(const SeqRotPlan& plan);
SeqRotPlan seqrot_plan_from_json(const json& j, std::size_t n_qubits);
json plan_to_json(const LcuPlan& plan);
LcuPlan lcu_plan_from_json(const json& j, std::size_t n_qubits);

json stats_to_json(const EstimateStats& stats);
json exact_to_json(const GroundState& ground, std::size_t top_k);

/// One row per set plus a total row.
std::string cover_cost_csv(const CoverCost& cost);

/// Parses JSON text; syntax errors become ParseError.
json parse_json(std::string_view text);

}  // namespace unipart::io
