// Copyright 2026 The pauli-dilate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pauli_dilate/matcore.hpp"

namespace pauli_dilate {

/// Single-qubit Pauli label in enumeration order. The symplectic (x, z) bits
/// come from x_bit / z_bit.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
bool x_bit(Pauli p);
bool z_bit(Pauli p);

/// Phase i^k times a tensor product of Pauli factors. Factor 0 is the
/// leftmost tensor slot (the system qubit in a dilation).
///
/// Text form: optional phase prefix "+", "-", "+i", "-i" followed by
/// [IXYZ]+, e.g. "-iZXI". Printing omits the prefix for phase +1.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> factors, int phase_exponent = 0);

  static PauliString parse(std::string_view text);
  static PauliString identity(std::size_t qubits);

  std::size_t qubits() const { return factors_.size(); }
  const std::vector<Pauli>& factors() const { return factors_; }
  Pauli factor(std::size_t q) const { return factors_[q]; }
  /// Phase is i^phase_exponent(), exponent in [0, 4).
  int phase_exponent() const { return phase_; }
  cplx phase() const;

  /// Same factors, phase +1.
  PauliString phase_free() const { return PauliString(factors_, 0); }
  PauliString with_phase(int exponent) const { return PauliString(factors_, exponent); }

  std::string to_string() const;

  /// Lexicographic over factors (I < X < Y < Z, leftmost most significant),
  /// then phase exponent.
  auto operator<=>(const PauliString&) const = default;

 private:
  std::vector<Pauli> factors_;
  int phase_ = 0;
};

/// Group product with exact phase. Throws MatrixError on length mismatch.
PauliString multiply(const PauliString& a, const PauliString& b);
PauliString operator*(const PauliString& a, const PauliString& b);

/// Symplectic commutation test; phases never matter.
bool commutes(const PauliString& a, const PauliString& b);

CMat to_matrix(const PauliString& a);

/// All 4^n phase-free strings in lexicographic order.
std::vector<PauliString> all_pauli_strings(std::size_t qubits);

/// c_P = Tr(P^dagger m) / 2^n for every phase-free P with |c_P| > 1e-14.
std::map<PauliString, cplx> pauli_basis_expand(const CMat& m);
/// Sum of c_P P.
CMat pauli_basis_reconstruct(const std::map<PauliString, cplx>& coeffs);

/// Phase-free Pauli strings on `qubits` qubits commuting with every
/// generator, lexicographic order. Runs the enumeration in parallel; the
/// result is identical to pauli_commutant_serial.
std::vector<PauliString> pauli_commutant(const std::vector<PauliString>& generators,
                                         std::size_t qubits);
std::vector<PauliString> pauli_commutant_serial(const std::vector<PauliString>& generators,
                                                std::size_t qubits);

/// Number of independent generators over GF(2) (rank of the symplectic
/// matrix of the phase-free generators).
std::size_t symplectic_rank(const std::vector<PauliString>& generators);

/// The 16 elements {+-1, +-i} x {I, X, Y, Z} of the single-qubit Pauli group,
/// ordered by factor then phase exponent.
std::vector<PauliString> pauli_group();

}  // namespace pauli_dilate
