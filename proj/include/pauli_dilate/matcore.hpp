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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pauli_dilate {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

/// Raised on shape mismatches and violated numerical preconditions.
class MatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense complex matrix, row-major.
///
/// Tensor-product basis states are ordered descending: for two qubits the
/// rows are |11>, |10>, |01>, |00>. Under this ordering sigma_z = diag(1, -1)
/// and the standard Kronecker product needs no relabelling. The system factor
/// always occupies the left tensor slot.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols);
  CMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  /// Row-wise initializer, e.g. CMat{{0, 1}, {1, 0}}.
  CMat(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMat identity(std::size_t n);
  static CMat zeros(std::size_t rows, std::size_t cols);
  /// Column vector with a single unit entry.
  static CMat basis_vector(std::size_t dim, std::size_t index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const cplx> entries() const { return data_; }

  CMat adjoint() const;
  CMat transpose() const;
  CMat conj() const;
  cplx trace() const;
  CMat col(std::size_t c) const;
  void set_col(std::size_t c, const CMat& v);
  /// Rows/cols [r0, r0+nr) x [c0, c0+nc).
  CMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator-(CMat a) { return a *= -1.0; }
  friend CMat operator*(CMat a, cplx s) { return a *= s; }
  friend CMat operator*(cplx s, CMat a) { return a *= s; }
  friend CMat operator*(const CMat& a, const CMat& b);

  bool operator==(const CMat& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

namespace pauli_matrix {
CMat I();
CMat X();
CMat Y();
CMat Z();
}  // namespace pauli_matrix

CMat kron(const CMat& a, const CMat& b);
CMat kron(std::initializer_list<CMat> factors);

/// Trace over the right tensor factor of a (dimS*dimE)-square matrix.
CMat partial_trace_env(const CMat& m, std::size_t dim_s, std::size_t dim_e);
/// Trace over the left tensor factor.
CMat partial_trace_sys(const CMat& m, std::size_t dim_s, std::size_t dim_e);

CMat commutator(const CMat& a, const CMat& b);
CMat anticommutator(const CMat& a, const CMat& b);

double frob_norm(const CMat& a);
double frob_dist(const CMat& a, const CMat& b);
double max_abs(const CMat& a);

/// Max entrywise |a - a^dagger|.
double hermiticity_defect(const CMat& a);
bool is_hermitian(const CMat& a, double tol = 1e-12);
/// ||U^dagger U - I||_F.
double unitarity_defect(const CMat& u);

/// exp(-i h t) for Hermitian h, by scaling and squaring of a truncated Taylor
/// series. Throws MatrixError when h is not Hermitian within 1e-12 (relative
/// to max(1, ||h||_F)).
CMat mat_exp_hermitian(const CMat& h, double t);

struct EigenSystem {
  std::vector<double> values;  // ascending
  CMat vectors;                // columns, matching `values`
};

/// Cyclic Jacobi diagonalisation of a Hermitian matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below 1e-12 * max(1, ||h||_F).
EigenSystem eigh(const CMat& h);
std::vector<double> eigvalsh(const CMat& h);

/// Number of eigenvalues above `tol`.
int eig_rank(const CMat& h, double tol = kDefaultTol);

struct LeastSquares {
  CMat x;
  double residual = 0.0;  // ||A x - b||_F
  std::size_t rank = 0;
};

/// Minimises ||A x - b||_F by Householder QR. Columns whose pivot falls
/// below `rank_tol` relative to the largest pivot are reported through
/// `rank` and their unknowns set to zero.
LeastSquares lstsq(const CMat& a, const CMat& b, double rank_tol = 1e-10);

/// Orthonormalises the columns of `vectors` against `basis` (modified
/// Gram-Schmidt, two passes); columns whose remainder has norm <= tol are
/// dropped. Returns the extended basis.
CMat gram_schmidt_extend(const CMat& basis, const CMat& vectors, double tol = kDefaultTol);

/// Vectorisation by stacking rows.
CMat vec_rows(const CMat& m);

/// ||Tr(rho) - 1|| + hermiticity + negative-eigenvalue magnitude.
double density_matrix_defect(const CMat& rho);
/// Throws MatrixError unless rho is a density matrix within `tol`.
void require_density_matrix(const CMat& rho, double tol = 1e-10);

/// Half the sum of |eigenvalues| of the (Hermitian) difference.
double trace_distance(const CMat& a, const CMat& b);

// Seeded random fixtures.

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal absorbed into Q.
CMat random_unitary(std::size_t n, std::mt19937_64& rng);
CMat random_hermitian(std::size_t n, std::mt19937_64& rng);
/// Full-rank density matrix G G^dagger / Tr.
CMat random_density_matrix(std::size_t n, std::mt19937_64& rng);

std::string to_string(const CMat& m, int precision = 6);

}  // namespace pauli_dilate
