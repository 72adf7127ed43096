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

#include "unipart/statevector.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "unipart/error.hpp"
#include "unipart/kernels.hpp"

namespace unipart {
namespace {

const complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

struct StateMasks {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
};

void check_word_fits(const Statevector& state, const PauliWord& word, std::size_t offset) {
  if (offset + word.num_qubits() > state.num_qubits()) {
    throw DimensionError("word on qubits [" + std::to_string(offset) + ", " +
                         std::to_string(offset + word.num_qubits()) +
                         ") does not fit a " + std::to_string(state.num_qubits()) +
                         "-qubit state");
  }
}

StateMasks state_masks(const Statevector& state, const PauliWord& word, std::size_t offset) {
  check_word_fits(state, word, offset);
  StateMasks m;
  for (std::size_t j = 0; j < word.num_qubits(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << state.bit_of(offset + j);
    if ((word.x_mask() >> j) & 1u) m.x |= bit;
    if ((word.z_mask() >> j) & 1u) m.z |= bit;
  }
  return m;
}

void check_register(const Statevector& state, Register reg) {
  if (reg.count == 0 || reg.offset + reg.count > state.num_qubits()) {
    throw DimensionError("register out of range");
  }
}

std::size_t register_shift(const Statevector& state, Register reg) {
  return state.num_qubits() - reg.offset - reg.count;
}

std::uint64_t register_value(std::uint64_t index, std::size_t shift, std::size_t count) {
  return (index >> shift) & ((std::uint64_t{1} << count) - 1);
}

// 2x2 gate on one qubit.
void apply_single(Statevector& state, std::size_t qubit, complex m00, complex m01,
                  complex m10, complex m11) {
  auto amps = state.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << state.bit_of(qubit);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & bit) continue;
    const complex a0 = amps[i];
    const complex a1 = amps[i | bit];
    amps[i] = m00 * a0 + m01 * a1;
    amps[i | bit] = m10 * a0 + m11 * a1;
  }
}

void check_amplitudes(std::span<const double> g, std::size_t dim) {
  if (g.empty() || g.size() > dim) {
    throw DimensionError("ancilla amplitudes do not fit the register");
  }
  double total = 0.0;
  for (const double v : g) total += v * v;
  if (std::abs(total - 1.0) > 1e-12) {
    throw ContractError("ancilla amplitudes are not normalized");
  }
}

// Householder reflection I - 2 v v^T / v^T v with v = e_0 - g; self-inverse,
// so it serves as both G and G^dag.
Statevector reflect_register(Statevector state, Register reg, std::span<const double> g) {
  check_register(state, reg);
  const std::size_t dim = std::size_t{1} << reg.count;
  check_amplitudes(g, dim);
  std::vector<double> v(dim, 0.0);
  for (std::size_t q = 0; q < g.size(); ++q) v[q] = -g[q];
  v[0] += 1.0;
  double vv = 0.0;
  for (const double x : v) vv += x * x;
  if (vv <= 1e-30) return state;

  const std::size_t shift = register_shift(state, reg);
  auto amps = state.amplitudes();
  for (std::uint64_t base = 0; base < amps.size(); ++base) {
    if (register_value(base, shift, reg.count) != 0) continue;
    complex dot = 0.0;
    for (std::uint64_t q = 0; q < dim; ++q) dot += v[q] * amps[base | (q << shift)];
    const complex scale = 2.0 * dot / vv;
    for (std::uint64_t q = 0; q < dim; ++q) amps[base | (q << shift)] -= scale * v[q];
  }
  return state;
}

}  // namespace

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw DimensionError("statevector qubit count " + std::to_string(n_qubits) +
                         " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  amps_.assign(std::size_t{1} << n_qubits, complex(0.0));
  amps_[0] = 1.0;
}

Statevector Statevector::basis_state(std::size_t n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dimension()) throw DimensionError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::vector<complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw DimensionError("amplitude count must be a power of two >= 2");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  if (n > kMaxQubits) throw DimensionError("statevector exceeds the dense cap");
  Statevector s;
  s.n_qubits_ = n;
  s.amps_ = std::move(amplitudes);
  return s;
}

double Statevector::norm() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

void Statevector::normalize() {
  const double n = norm();
  if (n == 0.0) throw ContractError("cannot normalize a zero state");
  for (auto& a : amps_) a /= n;
}

Statevector tensor(const Statevector& a, const Statevector& b) {
  std::vector<complex> out(a.dimension() * b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      out[i * b.dimension() + j] = a.amplitudes()[i] * b.amplitudes()[j];
    }
  }
  return Statevector::from_amplitudes(std::move(out));
}

GroundState exact_ground_state(const WeightedPauliSum& h) {
  if (h.num_qubits() > kExactQubitCap) {
    throw DimensionError("exact diagonalization limited to " +
                         std::to_string(kExactQubitCap) + " qubits");
  }
  if (!h.is_hermitian()) throw ContractError("Hamiltonian is not Hermitian");
  const Eigen::MatrixXcd m = to_dense_matrix(h.canonical());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw ContractError("eigensolver failed");

  Eigen::VectorXcd v = solver.eigenvectors().col(0);
  Eigen::Index largest = 0;
  v.cwiseAbs().maxCoeff(&largest);
  v *= std::abs(v(largest)) / v(largest);
  v(largest) = std::abs(v(largest));

  std::vector<complex> amps(v.data(), v.data() + v.size());
  Statevector state = Statevector::from_amplitudes(std::move(amps));
  state.normalize();
  return {solver.eigenvalues()(0), std::move(state)};
}

void apply_pauli_word_inplace(Statevector& state, const PauliWord& word,
                              std::size_t offset, complex unit) {
  const StateMasks m = state_masks(state, word, offset);
  const complex factor = unit * kPhases[word.internal_phase()];
  auto amps = state.amplitudes();
  std::vector<complex> out(amps.size());
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    const double sign = (std::popcount(m.z & b) & 1) ? -1.0 : 1.0;
    out[b ^ m.x] = factor * sign * amps[b];
  }
  std::copy(out.begin(), out.end(), amps.begin());
}

Statevector apply_pauli_word(Statevector state, const PauliWord& word,
                             std::size_t offset, complex unit) {
  apply_pauli_word_inplace(state, word, offset, unit);
  return state;
}

Statevector apply_pauli_exponential(Statevector state, const PauliWord& generator,
                                    double angle, std::size_t offset) {
  if (!generator.is_hermitian()) {
    throw ContractError("Pauli exponential needs a Hermitian generator");
  }
  Statevector rotated = apply_pauli_word(state, generator, offset);
  const double c = std::cos(angle / 2);
  const complex s = complex(0.0, -std::sin(angle / 2));
  auto out = state.amplitudes();
  const auto p = rotated.amplitudes();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * out[i] + s * p[i];
  return state;
}

Statevector apply_controlled_word(Statevector state, Register ancilla,
                                  std::uint64_t control_value, const PauliWord& word,
                                  std::size_t system_offset, complex unit) {
  check_register(state, ancilla);
  check_word_fits(state, word, system_offset);
  const bool overlap = system_offset < ancilla.offset + ancilla.count &&
                       ancilla.offset < system_offset + word.num_qubits();
  if (overlap) throw DimensionError("ancilla and system registers overlap");
  if (control_value >> ancilla.count) {
    throw DimensionError("control value does not fit the ancilla register");
  }

  const StateMasks m = state_masks(state, word, system_offset);
  const complex factor = unit * kPhases[word.internal_phase()];
  const std::size_t shift = register_shift(state, ancilla);
  const std::vector<complex> in(state.amplitudes().begin(), state.amplitudes().end());
  auto out = state.amplitudes();
  for (std::uint64_t b = 0; b < in.size(); ++b) {
    if (register_value(b, shift, ancilla.count) != control_value) continue;
    const double sign = (std::popcount(m.z & b) & 1) ? -1.0 : 1.0;
    out[b ^ m.x] = factor * sign * in[b];
  }
  return state;
}

Statevector prepare_g(Statevector state, Register ancilla, std::span<const double> g) {
  return reflect_register(std::move(state), ancilla, g);
}

Statevector apply_g_adjoint(Statevector state, Register ancilla, std::span<const double> g) {
  return reflect_register(std::move(state), ancilla, g);
}

Statevector rotate_to_measurement_basis(Statevector state, const PauliWord& word,
                                        std::size_t offset) {
  check_word_fits(state, word, offset);
  const double r = 1.0 / std::sqrt(2.0);
  const complex i(0, 1);
  for (std::size_t j = 0; j < word.num_qubits(); ++j) {
    switch (word.letter(j)) {
      case Pauli::X:
        apply_single(state, offset + j, r, r, r, -r);
        break;
      case Pauli::Y:
        // H S^dag
        apply_single(state, offset + j, r, -i * r, r, i * r);
        break;
      default:
        break;
    }
  }
  return state;
}

std::uint64_t support_mask(const Statevector& state, const PauliWord& word,
                           std::size_t offset) {
  const StateMasks m = state_masks(state, word, offset);
  return m.x | m.z;
}

complex expectation(const Statevector& state, const PauliWord& word, std::size_t offset) {
  const StateMasks m = state_masks(state, word, offset);
  return kernels::pauli_expectation(state.amplitudes(), m.x, m.z, word.internal_phase());
}

double expectation(const Statevector& state, const WeightedPauliSum& h) {
  if (h.num_qubits() != state.num_qubits()) {
    throw DimensionError("Hamiltonian and state qubit counts differ");
  }
  complex total = 0.0;
  for (const auto& t : h.terms()) total += t.coeff * expectation(state, t.word);
  return total.real();
}

ShotOutcome measure_word_single_shot(const Statevector& state, const PauliWord& word,
                                     CounterRng& rng, std::size_t offset) {
  if (!word.is_hermitian()) throw ContractError("cannot measure a non-Hermitian word");
  const Statevector rotated = rotate_to_measurement_basis(state, word, offset);
  const std::vector<double> cdf =
      kernels::cumulative(kernels::probabilities(rotated.amplitudes()));
  ShotOutcome out;
  out.bits = kernels::sample_index(cdf, rng.uniform());
  const int parity = std::popcount(out.bits & support_mask(state, word, offset)) & 1;
  out.eigenvalue = (parity ? -1 : 1) * (word.phase() == 2 ? -1 : 1);
  return out;
}

double zero_slice_probability(const Statevector& state, Register ancilla) {
  check_register(state, ancilla);
  const std::size_t shift = register_shift(state, ancilla);
  double p = 0.0;
  for (std::uint64_t b = 0; b < state.dimension(); ++b) {
    if (register_value(b, shift, ancilla.count) == 0) p += std::norm(state.amplitudes()[b]);
  }
  return p;
}

PostselectResult measure_ancilla_postselect(const Statevector& state, Register ancilla,
                                            CounterRng& rng) {
  const double p_accept = zero_slice_probability(state, ancilla);
  PostselectResult out;
  out.accepted = rng.uniform() < p_accept;
  if (!out.accepted) return out;
  if (ancilla.count == state.num_qubits()) return out;

  const std::size_t shift = register_shift(state, ancilla);
  const std::uint64_t low_mask = (std::uint64_t{1} << shift) - 1;
  std::vector<complex> rest(state.dimension() >> ancilla.count);
  for (std::uint64_t b = 0; b < state.dimension(); ++b) {
    if (register_value(b, shift, ancilla.count) != 0) continue;
    // Drop the register bits: high part shifted down over them.
    const std::uint64_t high = b >> (shift + ancilla.count);
    rest[(high << shift) | (b & low_mask)] = state.amplitudes()[b];
  }
  Statevector collapsed = Statevector::from_amplitudes(std::move(rest));
  collapsed.normalize();
  out.collapsed = std::move(collapsed);
  return out;
}

}  // namespace unipart
