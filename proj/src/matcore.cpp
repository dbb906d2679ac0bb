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

#include "pauli_dilate/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace pauli_dilate {

namespace {

void require_same_shape(const CMat& a, const CMat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs "
       << b.rows() << "x" << b.cols();
    throw MatrixError(os.str());
  }
}

void require_square(const CMat& a, const char* what) {
  if (!a.is_square()) {
    throw MatrixError(std::string(what) + ": matrix is not square");
  }
}

}  // namespace

CMat::CMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

CMat::CMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw MatrixError("CMat: entry count does not match shape");
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw MatrixError("CMat: non-finite entry");
    }
  }
}

CMat::CMat(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MatrixError("CMat: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::zeros(std::size_t rows, std::size_t cols) { return CMat(rows, cols); }

CMat CMat::basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw MatrixError("basis_vector: index out of range");
  CMat v(dim, 1);
  v(index, 0) = 1.0;
  return v;
}

CMat CMat::adjoint() const {
  CMat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMat CMat::transpose() const {
  CMat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

CMat CMat::conj() const {
  CMat out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

cplx CMat::trace() const {
  require_square(*this, "trace");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

CMat CMat::col(std::size_t c) const {
  CMat v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

void CMat::set_col(std::size_t c, const CMat& v) {
  if (v.rows() != rows_ || v.cols() != 1) throw MatrixError("set_col: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v(r, 0);
}

CMat CMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw MatrixError("block: out of range");
  CMat out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

CMat& CMat::operator+=(const CMat& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream os;
    os << "matmul: inner dimensions " << a.cols() << " and " << b.rows();
    throw MatrixError(os.str());
  }
  CMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

namespace pauli_matrix {
CMat I() { return CMat::identity(2); }
CMat X() { return CMat{{0.0, 1.0}, {1.0, 0.0}}; }
CMat Y() { return CMat{{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}}; }
CMat Z() { return CMat{{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli_matrix

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cplx s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

CMat kron(std::initializer_list<CMat> factors) {
  if (factors.size() == 0) return CMat::identity(1);
  auto it = factors.begin();
  CMat out = *it++;
  for (; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

CMat partial_trace_env(const CMat& m, std::size_t dim_s, std::size_t dim_e) {
  if (m.rows() != dim_s * dim_e || m.cols() != dim_s * dim_e) {
    throw MatrixError("partial_trace_env: dimension mismatch");
  }
  CMat out(dim_s, dim_s);
  for (std::size_t i = 0; i < dim_s; ++i)
    for (std::size_t j = 0; j < dim_s; ++j) {
      cplx acc = 0.0;
      for (std::size_t e = 0; e < dim_e; ++e) acc += m(i * dim_e + e, j * dim_e + e);
      out(i, j) = acc;
    }
  return out;
}

CMat partial_trace_sys(const CMat& m, std::size_t dim_s, std::size_t dim_e) {
  if (m.rows() != dim_s * dim_e || m.cols() != dim_s * dim_e) {
    throw MatrixError("partial_trace_sys: dimension mismatch");
  }
  CMat out(dim_e, dim_e);
  for (std::size_t a = 0; a < dim_e; ++a)
    for (std::size_t b = 0; b < dim_e; ++b) {
      cplx acc = 0.0;
      for (std::size_t s = 0; s < dim_s; ++s) acc += m(s * dim_e + a, s * dim_e + b);
      out(a, b) = acc;
    }
  return out;
}

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }
CMat anticommutator(const CMat& a, const CMat& b) { return a * b + b * a; }

double frob_norm(const CMat& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double frob_dist(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "frob_dist");
  double s = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    s += std::norm(a.entries()[i] - b.entries()[i]);
  return std::sqrt(s);
}

double max_abs(const CMat& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double hermiticity_defect(const CMat& a) {
  require_square(a, "hermiticity_defect");
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
  return d;
}

bool is_hermitian(const CMat& a, double tol) {
  return a.is_square() && hermiticity_defect(a) <= tol * std::max(1.0, frob_norm(a));
}

double unitarity_defect(const CMat& u) {
  require_square(u, "unitarity_defect");
  return frob_dist(u.adjoint() * u, CMat::identity(u.rows()));
}

CMat mat_exp_hermitian(const CMat& h, double t) {
  require_square(h, "mat_exp_hermitian");
  if (!is_hermitian(h, 1e-12)) {
    throw MatrixError("mat_exp_hermitian: generator is not Hermitian");
  }
  const std::size_t n = h.rows();
  CMat m = h * cplx(0.0, -t);
  const double norm = frob_norm(m);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  m *= std::ldexp(1.0, -squarings);

  CMat sum = CMat::identity(n);
  CMat term = CMat::identity(n);
  for (int k = 1; k <= 60; ++k) {
    term = term * m;
    term *= 1.0 / k;
    sum += term;
    if (frob_norm(term) <= 1e-17 * frob_norm(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

EigenSystem eigh(const CMat& h) {
  require_square(h, "eigh");
  if (!is_hermitian(h, 1e-10)) throw MatrixError("eigh: matrix is not Hermitian");
  const std::size_t n = h.rows();
  CMat a = h;
  CMat v = CMat::identity(n);
  const double scale = std::max(1.0, frob_norm(h));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-12 * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const cplx phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double tt = (theta >= 0 ? 1.0 : -1.0) /
                          (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(tt * tt + 1.0);
        const double sn = tt * cs;
        // G = diag(1, conj(phase)) on (p, q) followed by a real rotation.
        const cplx gpp = cs;
        const cplx gpq = sn;
        const cplx gqp = -sn * std::conj(phase);
        const cplx gqq = cs * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenSystem es;
  es.values.reserve(n);
  es.vectors = CMat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values.push_back(a(order[k], order[k]).real());
    for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
  }
  return es;
}

std::vector<double> eigvalsh(const CMat& h) { return eigh(h).values; }

int eig_rank(const CMat& h, double tol) {
  const auto values = eigvalsh(h);
  return static_cast<int>(
      std::count_if(values.begin(), values.end(), [tol](double x) { return x > tol; }));
}

LeastSquares lstsq(const CMat& a, const CMat& b, double rank_tol) {
  if (a.rows() != b.rows()) throw MatrixError("lstsq: row count mismatch");
  if (a.rows() < a.cols()) throw MatrixError("lstsq: underdetermined system");
  const std::size_t m = a.rows(), n = a.cols(), nrhs = b.cols();
  CMat r = a;
  CMat qb = b;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  auto col_norm2 = [&](std::size_t c, std::size_t from) {
    double s = 0.0;
    for (std::size_t i = from; i < m; ++i) s += std::norm(r(i, c));
    return s;
  };

  for (std::size_t k = 0; k < n; ++k) {
    // Column pivoting on remaining norm.
    std::size_t best = k;
    double best_norm = col_norm2(k, k);
    for (std::size_t c = k + 1; c < n; ++c) {
      const double cn = col_norm2(c, k);
      if (cn > best_norm) {
        best = c;
        best_norm = cn;
      }
    }
    if (best != k) {
      for (std::size_t i = 0; i < m; ++i) std::swap(r(i, k), r(i, best));
      std::swap(perm[k], perm[best]);
    }
    const double xnorm = std::sqrt(best_norm);
    if (xnorm == 0.0) continue;
    const cplx x0 = r(k, k);
    const cplx phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : cplx(1.0);
    const cplx alpha = -phase * xnorm;
    std::vector<cplx> v(m - k);
    for (std::size_t i = k; i < m; ++i) v[i - k] = r(i, k);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (const auto& z : v) vnorm2 += std::norm(z);
    if (vnorm2 == 0.0) continue;
    auto reflect = [&](CMat& target, std::size_t c) {
      cplx dot = 0.0;
      for (std::size_t i = k; i < m; ++i) dot += std::conj(v[i - k]) * target(i, c);
      const cplx f = 2.0 * dot / vnorm2;
      for (std::size_t i = k; i < m; ++i) target(i, c) -= f * v[i - k];
    };
    for (std::size_t c = k; c < n; ++c) reflect(r, c);
    for (std::size_t c = 0; c < nrhs; ++c) reflect(qb, c);
  }

  double max_pivot = 0.0;
  for (std::size_t k = 0; k < n; ++k) max_pivot = std::max(max_pivot, std::abs(r(k, k)));
  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (max_pivot > 0 && std::abs(r(k, k)) > rank_tol * max_pivot) ++rank;

  CMat z(n, nrhs);
  for (std::size_t c = 0; c < nrhs; ++c) {
    for (std::size_t kk = n; kk-- > 0;) {
      if (kk >= rank) continue;
      cplx acc = qb(kk, c);
      for (std::size_t j = kk + 1; j < rank; ++j) acc -= r(kk, j) * z(j, c);
      z(kk, c) = acc / r(kk, kk);
    }
  }
  LeastSquares out;
  out.x = CMat(n, nrhs);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < nrhs; ++c) out.x(perm[k], c) = z(k, c);
  out.residual = frob_dist(a * out.x, b);
  out.rank = rank;
  return out;
}

CMat gram_schmidt_extend(const CMat& basis, const CMat& vectors, double tol) {
  const std::size_t dim = vectors.rows();
  if (!basis.empty() && basis.rows() != dim) {
    throw MatrixError("gram_schmidt_extend: dimension mismatch");
  }
  std::vector<CMat> cols;
  for (std::size_t c = 0; c < basis.cols(); ++c) cols.push_back(basis.col(c));
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    CMat w = vectors.col(c);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : cols) {
        const cplx proj = (q.adjoint() * w)(0, 0);
        w -= q * proj;
      }
    }
    const double nw = frob_norm(w);
    if (nw > tol) cols.push_back(w * (1.0 / nw));
  }
  CMat out(dim, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) out.set_col(c, cols[c]);
  return out;
}

CMat vec_rows(const CMat& m) {
  CMat v(m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.entries().size(); ++i) v(i, 0) = m.entries()[i];
  return v;
}

double density_matrix_defect(const CMat& rho) {
  if (!rho.is_square()) return std::numeric_limits<double>::infinity();
  const double herm = hermiticity_defect(rho);
  const double tr = std::abs(rho.trace() - 1.0);
  const CMat sym = (rho + rho.adjoint()) * 0.5;
  const auto values = eigvalsh(sym);
  const double neg = std::max(0.0, -values.front());
  return herm + tr + neg;
}

void require_density_matrix(const CMat& rho, double tol) {
  if (!rho.is_square()) throw MatrixError("density matrix must be square");
  const double d = density_matrix_defect(rho);
  if (!(d <= tol)) {
    std::ostringstream os;
    os << "invalid density matrix (defect " << d << ")";
    throw MatrixError(os.str());
  }
}

double trace_distance(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "trace_distance");
  const CMat d = a - b;
  const CMat sym = (d + d.adjoint()) * 0.5;
  double s = 0.0;
  for (double x : eigvalsh(sym)) s += std::abs(x);
  return 0.5 * s;
}

CMat random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = cplx(gauss(rng), gauss(rng)) / std::sqrt(2.0);
  // Modified Gram-Schmidt yields Q with R's diagonal real positive, which is
  // exactly the phase-fixed QR needed for Haar measure.
  CMat q = gram_schmidt_extend(CMat(), g, 0.0);
  if (q.cols() != n) throw MatrixError("random_unitary: degenerate Gaussian sample");
  return q;
}

CMat random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  return (g + g.adjoint()) * 0.5;
}

CMat random_density_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  CMat rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return (rho + rho.adjoint()) * 0.5;
}

std::string to_string(const CMat& m, int precision) {
  std::ostringstream os;
  os.precision(precision);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace pauli_dilate
