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

#include "pauli_dilate/pauli.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace pauli_dilate {

namespace {

constexpr std::array<bool, 4> kXBit = {false, true, true, false};
constexpr std::array<bool, 4> kZBit = {false, false, true, true};

// Single-factor products a*b = i^kProdPhase[a][b] * kProdFactor[a][b].
constexpr std::array<std::array<Pauli, 4>, 4> kProdFactor = {{
    {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z},
    {Pauli::X, Pauli::I, Pauli::Z, Pauli::Y},
    {Pauli::Y, Pauli::Z, Pauli::I, Pauli::X},
    {Pauli::Z, Pauli::Y, Pauli::X, Pauli::I},
}};
constexpr std::array<std::array<int, 4>, 4> kProdPhase = {{
    {0, 0, 0, 0},
    {0, 0, 1, 3},  // XY = iZ, XZ = -iY
    {0, 3, 0, 1},  // YX = -iZ, YZ = iX
    {0, 1, 3, 0},  // ZX = iY, ZY = -iX
}};

void require_same_length(const PauliString& a, const PauliString& b, const char* what) {
  if (a.qubits() != b.qubits()) {
    throw MatrixError(std::string(what) + ": Pauli strings of different lengths");
  }
}

bool commutes_with_all(const PauliString& p, const std::vector<PauliString>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const PauliString& g) { return commutes(p, g); });
}

PauliString string_from_index(std::uint64_t index, std::size_t qubits) {
  std::vector<Pauli> f(qubits);
  for (std::size_t q = qubits; q-- > 0;) {
    f[q] = static_cast<Pauli>(index & 3u);
    index >>= 2;
  }
  return PauliString(std::move(f));
}

void check_generators(const std::vector<PauliString>& gens, std::size_t qubits) {
  for (const auto& g : gens) {
    if (g.qubits() != qubits) {
      throw MatrixError("pauli_commutant: generator length differs from qubit count");
    }
  }
}

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }
bool x_bit(Pauli p) { return kXBit[static_cast<int>(p)]; }
bool z_bit(Pauli p) { return kZBit[static_cast<int>(p)]; }

PauliString::PauliString(std::vector<Pauli> factors, int phase_exponent)
    : factors_(std::move(factors)), phase_(((phase_exponent % 4) + 4) % 4) {}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  if (text.starts_with("+i")) {
    phase = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("-i")) {
    phase = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    phase = 2;
    text.remove_prefix(1);
  }
  if (text.empty()) throw MatrixError("PauliString::parse: no factors");
  std::vector<Pauli> f;
  f.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': f.push_back(Pauli::I); break;
      case 'X': f.push_back(Pauli::X); break;
      case 'Y': f.push_back(Pauli::Y); break;
      case 'Z': f.push_back(Pauli::Z); break;
      default:
        throw MatrixError(std::string("PauliString::parse: bad factor '") + c + "'");
    }
  }
  return PauliString(std::move(f), phase);
}

PauliString PauliString::identity(std::size_t qubits) {
  return PauliString(std::vector<Pauli>(qubits, Pauli::I));
}

cplx PauliString::phase() const {
  static const std::array<cplx, 4> kPhases = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  return kPhases[phase_];
}

std::string PauliString::to_string() const {
  static const std::array<const char*, 4> kPrefix = {"", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  for (Pauli p : factors_) s.push_back(pauli_char(p));
  return s;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_length(a, b, "multiply");
  std::vector<Pauli> f(a.qubits());
  int phase = a.phase_exponent() + b.phase_exponent();
  for (std::size_t q = 0; q < a.qubits(); ++q) {
    const int fa = static_cast<int>(a.factor(q));
    const int fb = static_cast<int>(b.factor(q));
    f[q] = kProdFactor[fa][fb];
    phase += kProdPhase[fa][fb];
  }
  return PauliString(std::move(f), phase);
}

PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_length(a, b, "commutes");
  unsigned parity = 0;
  for (std::size_t q = 0; q < a.qubits(); ++q) {
    const Pauli pa = a.factor(q), pb = b.factor(q);
    parity ^= (x_bit(pa) & z_bit(pb)) ^ (z_bit(pa) & x_bit(pb));
  }
  return parity == 0;
}

CMat to_matrix(const PauliString& a) {
  CMat m = CMat::identity(1);
  for (Pauli p : a.factors()) {
    switch (p) {
      case Pauli::I: m = kron(m, pauli_matrix::I()); break;
      case Pauli::X: m = kron(m, pauli_matrix::X()); break;
      case Pauli::Y: m = kron(m, pauli_matrix::Y()); break;
      case Pauli::Z: m = kron(m, pauli_matrix::Z()); break;
    }
  }
  return m * a.phase();
}

std::vector<PauliString> all_pauli_strings(std::size_t qubits) {
  const std::uint64_t count = std::uint64_t{1} << (2 * qubits);
  std::vector<PauliString> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(string_from_index(i, qubits));
  return out;
}

std::map<PauliString, cplx> pauli_basis_expand(const CMat& m) {
  if (!m.is_square() || m.rows() == 0 || (m.rows() & (m.rows() - 1)) != 0) {
    throw MatrixError("pauli_basis_expand: dimension is not a power of two");
  }
  std::size_t qubits = 0;
  while ((std::size_t{1} << qubits) < m.rows()) ++qubits;
  std::map<PauliString, cplx> out;
  const double norm = static_cast<double>(m.rows());
  for (const auto& p : all_pauli_strings(qubits)) {
    const cplx c = (to_matrix(p).adjoint() * m).trace() / norm;
    if (std::abs(c) > 1e-14) out.emplace(p, c);
  }
  return out;
}

CMat pauli_basis_reconstruct(const std::map<PauliString, cplx>& coeffs) {
  if (coeffs.empty()) throw MatrixError("pauli_basis_reconstruct: empty expansion");
  const std::size_t dim = std::size_t{1} << coeffs.begin()->first.qubits();
  CMat m(dim, dim);
  for (const auto& [p, c] : coeffs) m += to_matrix(p) * c;
  return m;
}

std::vector<PauliString> pauli_commutant_serial(const std::vector<PauliString>& generators,
                                                std::size_t qubits) {
  check_generators(generators, qubits);
  std::vector<PauliString> out;
  for (const auto& p : all_pauli_strings(qubits))
    if (commutes_with_all(p, generators)) out.push_back(p);
  return out;
}

std::vector<PauliString> pauli_commutant(const std::vector<PauliString>& generators,
                                         std::size_t qubits) {
  check_generators(generators, qubits);
  const std::int64_t count = std::int64_t{1} << (2 * qubits);
  std::vector<char> keep(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    keep[static_cast<std::size_t>(i)] =
        commutes_with_all(string_from_index(static_cast<std::uint64_t>(i), qubits), generators);
  }
  std::vector<PauliString> out;
  for (std::int64_t i = 0; i < count; ++i)
    if (keep[static_cast<std::size_t>(i)])
      out.push_back(string_from_index(static_cast<std::uint64_t>(i), qubits));
  return out;
}

std::size_t symplectic_rank(const std::vector<PauliString>& generators) {
  std::vector<std::vector<bool>> rows;
  for (const auto& g : generators) {
    std::vector<bool> r;
    for (Pauli p : g.factors()) {
      r.push_back(x_bit(p));
      r.push_back(z_bit(p));
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) {
        for (std::size_t k = 0; k < ncols; ++k) rows[r][k] = rows[r][k] ^ rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<PauliString> pauli_group() {
  std::vector<PauliString> out;
  for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z})
    for (int k = 0; k < 4; ++k) out.emplace_back(std::vector<Pauli>{p}, k);
  return out;
}

}  // namespace pauli_dilate
