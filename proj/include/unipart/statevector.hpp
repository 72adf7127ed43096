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
#include <optional>
#include <span>
#include <vector>

#include "unipart/pauli.hpp"
#include "unipart/rng.hpp"

namespace unipart {

/// Contiguous qubit range [offset, offset + count).
struct Register {
  std::size_t offset = 0;
  std::size_t count = 0;
};

/// Dense state over n qubits. Qubit 0 is the most significant bit of the
/// amplitude index, so the basis label |q0 q1 ...> reads left to right.
class Statevector {
 public:
  static constexpr std::size_t kMaxQubits = 20;

  /// |0...0>.
  explicit Statevector(std::size_t n_qubits);
  static Statevector basis_state(std::size_t n_qubits, std::uint64_t index);
  /// Takes the amplitudes as given; length must be a power of two.
  static Statevector from_amplitudes(std::vector<complex> amplitudes);

  std::size_t num_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const complex> amplitudes() const noexcept { return amps_; }
  std::span<complex> amplitudes() noexcept { return amps_; }
  complex amplitude(std::uint64_t index) const { return amps_.at(index); }

  double norm() const;
  void normalize();

  /// Bit position of a qubit inside the amplitude index.
  std::size_t bit_of(std::size_t qubit) const noexcept { return n_qubits_ - 1 - qubit; }

 private:
  Statevector() = default;
  std::size_t n_qubits_ = 0;
  std::vector<complex> amps_;
};

/// |a> (x) |b>, a on the leading qubits.
Statevector tensor(const Statevector& a, const Statevector& b);

struct GroundState {
  double energy;
  Statevector state;
};

/// Lowest eigenpair by dense diagonalization (n <= 12). The largest-magnitude
/// amplitude is made real positive.
GroundState exact_ground_state(const WeightedPauliSum& h);

inline constexpr std::size_t kExactQubitCap = 12;

/// unit * word on qubits [offset, offset + word.num_qubits()), in place.
void apply_pauli_word_inplace(Statevector& state, const PauliWord& word,
                              std::size_t offset = 0, complex unit = 1.0);
Statevector apply_pauli_word(Statevector state, const PauliWord& word,
                             std::size_t offset = 0, complex unit = 1.0);

/// exp(-i angle/2 * generator) |state> = cos(angle/2)|state> - i sin(angle/2) generator|state>.
Statevector apply_pauli_exponential(Statevector state, const PauliWord& generator,
                                    double angle, std::size_t offset = 0);

/// Applies unit * word on the system qubits starting at system_offset, only on
/// the amplitudes whose ancilla register reads control_value.
Statevector apply_controlled_word(Statevector state, Register ancilla,
                                  std::uint64_t control_value, const PauliWord& word,
                                  std::size_t system_offset, complex unit = 1.0);

/// G on the ancilla register, with G|0> = sum_q g_q |q> (Householder
/// completion). Throws ContractError if sum g^2 != 1.
Statevector prepare_g(Statevector state, Register ancilla, std::span<const double> g);
/// G^dag on the ancilla register.
Statevector apply_g_adjoint(Statevector state, Register ancilla, std::span<const double> g);

/// Per-qubit basis change so that measuring Z on the support measures the
/// word: H for X, H S^dag for Y.
Statevector rotate_to_measurement_basis(Statevector state, const PauliWord& word,
                                        std::size_t offset = 0);

/// Support of the word as a mask over amplitude-index bits.
std::uint64_t support_mask(const Statevector& state, const PauliWord& word,
                           std::size_t offset = 0);

complex expectation(const Statevector& state, const PauliWord& word,
                    std::size_t offset = 0);
double expectation(const Statevector& state, const WeightedPauliSum& h);

struct ShotOutcome {
  int eigenvalue = 1;
  bool accepted = true;
  std::uint64_t bits = 0;
};

/// One computational-basis shot in the word's eigenbasis. The eigenvalue is
/// the support parity times the sign of a -1 phase. Throws ContractError for
/// non-Hermitian words.
ShotOutcome measure_word_single_shot(const Statevector& state, const PauliWord& word,
                                     CounterRng& rng, std::size_t offset = 0);

struct PostselectResult {
  bool accepted = false;
  /// The remaining (non-ancilla) qubits in order, renormalized. Empty on
  /// reject.
  std::optional<Statevector> collapsed;
};

/// Measures the ancilla register; accepts on all zeros. Acceptance
/// probability is the squared norm of the all-zeros slice.
PostselectResult measure_ancilla_postselect(const Statevector& state, Register ancilla,
                                            CounterRng& rng);

/// Squared norm of the all-zeros slice of a register.
double zero_slice_probability(const Statevector& state, Register ancilla);

}  // namespace unipart
