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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace unipart {

using complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// An n-qubit tensor product of single-qubit Paulis times a phase i^k.
///
/// Stored symplectically: bit q of x_mask / z_mask marks an X / Z factor on
/// qubit q, and the operator is i^internal_phase * X^x * Z^z, so Y is
/// represented as i*X*Z. phase() reports the public exponent k in
/// i^k * (letters), with Y read as the ordinary Pauli Y.
class PauliWord {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  PauliWord() = default;
  /// Identity word on n qubits.
  explicit PauliWord(std::size_t n_qubits);

  /// From a dense letter string, qubit 0 first: "XIZ" = X0 Z2.
  static PauliWord from_letters(std::string_view letters, int phase = 0);
  /// From the sparse text form "X0 Z1" (bare "I" or "" for identity).
  static PauliWord parse(std::string_view text, std::size_t n_qubits);
  static PauliWord single(std::size_t n_qubits, std::size_t qubit, Pauli p);

  std::size_t num_qubits() const noexcept { return n_qubits_; }
  Pauli letter(std::size_t qubit) const;
  std::string letters() const;
  int phase() const noexcept;

  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  /// Exponent k of i^k in i^k * X^x * Z^z.
  int internal_phase() const noexcept { return phase_; }

  bool is_identity() const noexcept { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const noexcept { return phase() % 2 == 0; }
  std::size_t weight() const noexcept;

  PauliWord with_phase(int k) const;
  PauliWord without_phase() const { return with_phase(0); }
  complex phase_factor() const;

  /// Sparse text form of the letters, phase omitted ("X0 Y1", "I").
  std::string to_string() const;

  /// Letter-wise lexicographic order (I < X < Y < Z, qubit 0 most
  /// significant), then phase.
  friend bool operator<(const PauliWord& a, const PauliWord& b);
  friend bool operator==(const PauliWord& a, const PauliWord& b) = default;

  static PauliWord from_masks(std::size_t n_qubits, std::uint64_t x,
                              std::uint64_t z, int internal_phase);

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  std::size_t n_qubits_ = 0;
  int phase_ = 0;
};

/// Letters-only comparison, ignoring phase.
int compare_letters(const PauliWord& a, const PauliWord& b);

PauliWord multiply(const PauliWord& a, const PauliWord& b);
bool commutes(const PauliWord& a, const PauliWord& b);
inline bool anticommutes(const PauliWord& a, const PauliWord& b) {
  return !commutes(a, b);
}

struct Term {
  complex coeff;
  PauliWord word;
};

/// sum_i c_i P_i over a fixed qubit count.
class WeightedPauliSum {
 public:
  static constexpr double kZeroTolerance = 1e-14;

  WeightedPauliSum() = default;
  explicit WeightedPauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}
  WeightedPauliSum(std::size_t n_qubits, std::vector<Term> terms);

  std::size_t num_qubits() const noexcept { return n_qubits_; }
  const std::vector<Term>& terms() const& noexcept { return terms_; }
  /// By value on temporaries, so `for (auto& t : h.canonical().terms())` is safe.
  std::vector<Term> terms() && noexcept { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  void add(complex coeff, const PauliWord& word);

  /// Phases folded into coefficients, equal letters merged, |c| < 1e-14
  /// dropped, terms sorted by letters.
  WeightedPauliSum canonical() const;

  /// All canonical coefficients real within tol.
  bool is_hermitian(double tol = 1e-12) const;
  WeightedPauliSum adjoint() const;
  WeightedPauliSum scaled(complex factor) const;

  friend WeightedPauliSum operator+(const WeightedPauliSum& a,
                                    const WeightedPauliSum& b);
  friend WeightedPauliSum operator-(const WeightedPauliSum& a,
                                    const WeightedPauliSum& b);
  friend WeightedPauliSum operator*(const WeightedPauliSum& a,
                                    const WeightedPauliSum& b);

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Term> terms_;
};

WeightedPauliSum canonicalize(const WeightedPauliSum& s);
double l1_norm(const WeightedPauliSum& s);

/// Largest |c| over the canonical terms of a - b.
double max_coefficient_difference(const WeightedPauliSum& a,
                                  const WeightedPauliSum& b);

/// True when the canonical sum is c * word with |c - coeff| <= tol, ignoring
/// leftover terms smaller than tol.
bool is_single_term(const WeightedPauliSum& s, const PauliWord& word,
                    complex coeff, double tol);

inline constexpr std::size_t kDenseQubitCap = 14;

/// Dense 2^n x 2^n Kronecker expansion, qubit 0 as the leftmost factor.
Eigen::MatrixXcd to_dense_matrix(const PauliWord& word);
Eigen::MatrixXcd to_dense_matrix(const WeightedPauliSum& s);

}  // namespace unipart
