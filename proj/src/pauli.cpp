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

#include "unipart/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "unipart/error.hpp"

namespace unipart {
namespace {

constexpr int mod4(int k) { return ((k % 4) + 4) % 4; }

int popcount(std::uint64_t v) { return std::popcount(v); }

// I < X < Y < Z
int letter_rank(bool x, bool z) {
  if (x) return z ? 2 : 1;
  return z ? 3 : 0;
}

void check_qubits(std::size_t n) {
  if (n == 0 || n > PauliWord::kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) +
                         " outside [1, 64]");
  }
}

void check_same_size(const PauliWord& a, const PauliWord& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("qubit count mismatch: " +
                         std::to_string(a.num_qubits()) + " vs " +
                         std::to_string(b.num_qubits()));
  }
}

const complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliWord::PauliWord(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
}

PauliWord PauliWord::from_masks(std::size_t n_qubits, std::uint64_t x,
                                std::uint64_t z, int internal_phase) {
  PauliWord w(n_qubits);
  const std::uint64_t mask =
      n_qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_qubits) - 1;
  if ((x | z) & ~mask) {
    throw DimensionError("Pauli mask has bits beyond qubit count");
  }
  w.x_ = x;
  w.z_ = z;
  w.phase_ = mod4(internal_phase);
  return w;
}

PauliWord PauliWord::single(std::size_t n_qubits, std::size_t qubit, Pauli p) {
  if (qubit >= n_qubits) {
    throw DimensionError("qubit index " + std::to_string(qubit) +
                         " out of range");
  }
  std::string letters(n_qubits, 'I');
  letters[qubit] = to_char(p);
  return from_letters(letters);
}

PauliWord PauliWord::from_letters(std::string_view letters, int phase) {
  PauliWord w(letters.size());
  int n_y = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (letters[q]) {
      case 'I': break;
      case 'X': w.x_ |= bit; break;
      case 'Z': w.z_ |= bit; break;
      case 'Y':
        w.x_ |= bit;
        w.z_ |= bit;
        ++n_y;
        break;
      default:
        throw ParseError(std::string("bad Pauli letter '") + letters[q] + "'");
    }
  }
  w.phase_ = mod4(phase + n_y);
  return w;
}

PauliWord PauliWord::parse(std::string_view text, std::size_t n_qubits) {
  std::string letters(n_qubits, 'I');
  std::vector<bool> seen(n_qubits, false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    const char letter = token[0];
    if (letter != 'I' && letter != 'X' && letter != 'Y' && letter != 'Z') {
      throw ParseError("bad Pauli token '" + std::string(token) + "'");
    }
    if (token.size() == 1) {
      if (letter != 'I') {
        throw ParseError("Pauli token '" + std::string(token) +
                         "' is missing a qubit index");
      }
      continue;
    }
    if (token[1] == '-') {
      throw ParseError("negative qubit index in '" + std::string(token) + "'");
    }
    std::size_t index = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data() + 1, token.data() + token.size(), index);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad qubit index in '" + std::string(token) + "'");
    }
    if (index >= n_qubits) {
      throw ParseError("qubit index " + std::to_string(index) +
                       " exceeds qubit count " + std::to_string(n_qubits));
    }
    if (letter == 'I') continue;
    if (seen[index]) {
      throw ParseError("qubit " + std::to_string(index) + " appears twice");
    }
    seen[index] = true;
    letters[index] = letter;
  }
  return from_letters(letters);
}

Pauli PauliWord::letter(std::size_t qubit) const {
  const bool x = (x_ >> qubit) & 1u;
  const bool z = (z_ >> qubit) & 1u;
  return static_cast<Pauli>(letter_rank(x, z));
}

std::string PauliWord::letters() const {
  std::string out(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) out[q] = to_char(letter(q));
  return out;
}

int PauliWord::phase() const noexcept {
  return mod4(phase_ - popcount(x_ & z_));
}

std::size_t PauliWord::weight() const noexcept {
  return static_cast<std::size_t>(popcount(x_ | z_));
}

PauliWord PauliWord::with_phase(int k) const {
  PauliWord w = *this;
  w.phase_ = mod4(k + popcount(x_ & z_));
  return w;
}

complex PauliWord::phase_factor() const { return kPhases[phase()]; }

std::string PauliWord::to_string() const {
  std::string out;
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    const Pauli p = letter(q);
    if (p == Pauli::I) continue;
    if (!out.empty()) out += ' ';
    out += to_char(p);
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

int compare_letters(const PauliWord& a, const PauliWord& b) {
  if (a.num_qubits() != b.num_qubits()) {
    return a.num_qubits() < b.num_qubits() ? -1 : 1;
  }
  const std::uint64_t diff = (a.x_mask() ^ b.x_mask()) | (a.z_mask() ^ b.z_mask());
  if (diff == 0) return 0;
  const int q = std::countr_zero(diff);
  const int ra = letter_rank((a.x_mask() >> q) & 1u, (a.z_mask() >> q) & 1u);
  const int rb = letter_rank((b.x_mask() >> q) & 1u, (b.z_mask() >> q) & 1u);
  return ra < rb ? -1 : 1;
}

bool operator<(const PauliWord& a, const PauliWord& b) {
  const int c = compare_letters(a, b);
  if (c != 0) return c < 0;
  return a.phase() < b.phase();
}

PauliWord multiply(const PauliWord& a, const PauliWord& b) {
  check_same_size(a, b);
  // (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
  const int phase = a.internal_phase() + b.internal_phase() +
                    2 * popcount(a.z_mask() & b.x_mask());
  return PauliWord::from_masks(a.num_qubits(), a.x_mask() ^ b.x_mask(),
                               a.z_mask() ^ b.z_mask(), phase);
}

bool commutes(const PauliWord& a, const PauliWord& b) {
  check_same_size(a, b);
  const int overlap = popcount(a.x_mask() & b.z_mask()) +
                      popcount(a.z_mask() & b.x_mask());
  return overlap % 2 == 0;
}

WeightedPauliSum::WeightedPauliSum(std::size_t n_qubits, std::vector<Term> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.word.num_qubits() != n_qubits_) {
      throw DimensionError("term qubit count does not match the sum");
    }
  }
}

void WeightedPauliSum::add(complex coeff, const PauliWord& word) {
  if (n_qubits_ == 0) n_qubits_ = word.num_qubits();
  if (word.num_qubits() != n_qubits_) {
    throw DimensionError("term qubit count does not match the sum");
  }
  terms_.push_back({coeff, word});
}

WeightedPauliSum WeightedPauliSum::canonical() const {
  std::map<PauliWord, complex> merged;
  for (const auto& t : terms_) {
    merged[t.word.without_phase()] += t.coeff * t.word.phase_factor();
  }
  WeightedPauliSum out(n_qubits_);
  out.terms_.reserve(merged.size());
  for (const auto& [word, c] : merged) {
    if (std::abs(c) < kZeroTolerance) continue;
    out.terms_.push_back({c, word});
  }
  return out;
}

bool WeightedPauliSum::is_hermitian(double tol) const {
  const auto c = canonical();
  return std::all_of(c.terms_.begin(), c.terms_.end(),
                     [tol](const Term& t) { return std::abs(t.coeff.imag()) <= tol; });
}

WeightedPauliSum WeightedPauliSum::adjoint() const {
  WeightedPauliSum out(n_qubits_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    // (c i^k P)^dag = conj(c) i^{-k} P for Hermitian letters P.
    out.terms_.push_back({std::conj(t.coeff), t.word.with_phase(-t.word.phase())});
  }
  return out;
}

WeightedPauliSum WeightedPauliSum::scaled(complex factor) const {
  WeightedPauliSum out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

WeightedPauliSum operator+(const WeightedPauliSum& a, const WeightedPauliSum& b) {
  WeightedPauliSum out = a;
  for (const auto& t : b.terms()) out.add(t.coeff, t.word);
  return out.canonical();
}

WeightedPauliSum operator-(const WeightedPauliSum& a, const WeightedPauliSum& b) {
  return a + b.scaled(-1.0);
}

WeightedPauliSum operator*(const WeightedPauliSum& a, const WeightedPauliSum& b) {
  if (!a.empty() && !b.empty() && a.num_qubits() != b.num_qubits()) {
    throw DimensionError("qubit count mismatch in sum product");
  }
  WeightedPauliSum out(a.num_qubits() ? a.num_qubits() : b.num_qubits());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      out.add(ta.coeff * tb.coeff, multiply(ta.word, tb.word));
    }
  }
  return out.canonical();
}

WeightedPauliSum canonicalize(const WeightedPauliSum& s) { return s.canonical(); }

double l1_norm(const WeightedPauliSum& s) {
  double total = 0.0;
  for (const auto& t : s.canonical().terms()) total += std::abs(t.coeff);
  return total;
}

double max_coefficient_difference(const WeightedPauliSum& a,
                                  const WeightedPauliSum& b) {
  double worst = 0.0;
  for (const auto& t : (a - b).terms()) worst = std::max(worst, std::abs(t.coeff));
  return worst;
}

bool is_single_term(const WeightedPauliSum& s, const PauliWord& word,
                    complex coeff, double tol) {
  const PauliWord target = word.without_phase();
  const complex expected = coeff * word.phase_factor();
  bool found = false;
  for (const auto& t : s.canonical().terms()) {
    if (compare_letters(t.word, target) == 0) {
      if (std::abs(t.coeff - expected) > tol) return false;
      found = true;
    } else if (std::abs(t.coeff) > tol) {
      return false;
    }
  }
  return found;
}

namespace {

Eigen::Matrix2cd letter_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  const complex i(0, 1);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

void check_dense_cap(std::size_t n) {
  if (n > kDenseQubitCap) {
    throw DimensionError("dense lowering limited to " +
                         std::to_string(kDenseQubitCap) + " qubits, got " +
                         std::to_string(n));
  }
}

}  // namespace

Eigen::MatrixXcd to_dense_matrix(const PauliWord& word) {
  check_dense_cap(word.num_qubits());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = 0; q < word.num_qubits(); ++q) {
    const Eigen::Matrix2cd m = letter_matrix(word.letter(q));
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block<2, 2>(2 * r, 2 * c) = out(r, c) * m;
      }
    }
    out = std::move(next);
  }
  return word.phase_factor() * out;
}

Eigen::MatrixXcd to_dense_matrix(const WeightedPauliSum& s) {
  check_dense_cap(s.num_qubits());
  const Eigen::Index dim = Eigen::Index{1} << s.num_qubits();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : s.terms()) out += t.coeff * to_dense_matrix(t.word);
  return out;
}

}  // namespace unipart
