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

#include "pauli_dilate/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace pauli_dilate {

PauliChannel::PauliChannel(const std::array<double, 4>& p) : p_(p) {
  double sum = 0.0;
  for (double x : p_) {
    if (!std::isfinite(x) || x < -1e-12) {
      throw MatrixError("PauliChannel: probabilities must be non-negative");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "PauliChannel: probabilities sum to " << sum;
    throw MatrixError(os.str());
  }
  for (double& x : p_) x = std::max(0.0, x);
}

PauliChannel PauliChannel::phase_damping(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw MatrixError("phase_damping: p outside [0, 1]");
  return PauliChannel({1.0 - p, 0.0, 0.0, p});
}

PauliChannel PauliChannel::depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw MatrixError("depolarizing: p outside [0, 1]");
  return PauliChannel({1.0 - p, p / 3.0, p / 3.0, p / 3.0});
}

PauliChannel PauliChannel::from_bloch_scaling(const Vec3& l) {
  return PauliChannel({0.25 * (1.0 + l[0] + l[1] + l[2]), 0.25 * (1.0 + l[0] - l[1] - l[2]),
                       0.25 * (1.0 - l[0] + l[1] - l[2]), 0.25 * (1.0 - l[0] - l[1] + l[2])});
}

CMat KrausMap::apply(const CMat& rho) const {
  if (ops.empty()) throw MatrixError("KrausMap: no operators");
  CMat out(ops.front().rows(), ops.front().rows());
  for (const auto& k : ops) out += k * rho * k.adjoint();
  return out;
}

double KrausMap::completeness_defect() const {
  if (ops.empty()) return std::numeric_limits<double>::infinity();
  CMat s(ops.front().cols(), ops.front().cols());
  for (const auto& k : ops) s += k.adjoint() * k;
  return frob_dist(s, CMat::identity(s.rows()));
}

PauliLiouvillian::PauliLiouvillian(const Vec3& g) : gamma(g) {
  for (double x : gamma) {
    if (!std::isfinite(x) || x < 0.0) throw MatrixError("PauliLiouvillian: negative rate");
  }
}

CMat sigma(std::size_t alpha) {
  switch (alpha) {
    case 0: return pauli_matrix::I();
    case 1: return pauli_matrix::X();
    case 2: return pauli_matrix::Y();
    case 3: return pauli_matrix::Z();
    default: throw MatrixError("sigma: index out of range");
  }
}

CMat apply(const PauliChannel& ch, const CMat& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw MatrixError("apply: rho must be 2x2");
  require_density_matrix(rho);
  CMat out(2, 2);
  for (std::size_t a = 0; a < 4; ++a) {
    if (ch.p(a) == 0.0) continue;
    const CMat s = sigma(a);
    out += (s * rho * s) * ch.p(a);
  }
  return out;
}

std::vector<CMat> kraus_ops(const PauliChannel& ch) {
  std::vector<CMat> out;
  for (std::size_t a = 0; a < 4; ++a)
    if (ch.p(a) > 0.0) out.push_back(sigma(a) * std::sqrt(ch.p(a)));
  return out;
}

KrausMap to_kraus_map(const PauliChannel& ch) { return KrausMap{kraus_ops(ch)}; }

CMat choi(const KrausMap& map) {
  const std::size_t d = map.ops.front().cols();
  CMat c(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      CMat e(d, d);
      e(i, j) = 1.0;
      c += kron(e, map.apply(e));
    }
  return c;
}

CMat choi(const PauliChannel& ch) { return choi(to_kraus_map(ch)); }

int kraus_rank(const PauliChannel& ch, double tol) { return eig_rank(choi(ch), tol); }

Vec3 bloch_scaling(const PauliChannel& ch) {
  const auto& p = ch.probabilities();
  return {p[0] + p[1] - p[2] - p[3], p[0] - p[1] + p[2] - p[3], p[0] - p[1] - p[2] + p[3]};
}

Vec3 bloch_vector(const CMat& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw MatrixError("bloch_vector: rho must be 2x2");
  return {(pauli_matrix::X() * rho).trace().real(), (pauli_matrix::Y() * rho).trace().real(),
          (pauli_matrix::Z() * rho).trace().real()};
}

CMat state_from_bloch(const Vec3& r) {
  return (pauli_matrix::I() + pauli_matrix::X() * r[0] + pauli_matrix::Y() * r[1] +
          pauli_matrix::Z() * r[2]) *
         0.5;
}

PauliChannel compose(const PauliChannel& first, const PauliChannel& second) {
  const Vec3 a = bloch_scaling(first), b = bloch_scaling(second);
  return PauliChannel::from_bloch_scaling({a[0] * b[0], a[1] * b[1], a[2] * b[2]});
}

CovarianceCheck check_covariance(const KrausMap& map, const GroupRep& rep, double tol) {
  CovarianceCheck out;
  for (const auto& u : rep.mats) {
    for (std::size_t a = 0; a < 4; ++a) {
      const CMat x = sigma(a);
      const CMat lhs = map.apply(u * x * u.adjoint());
      const CMat rhs = u * map.apply(x) * u.adjoint();
      out.max_residual = std::max(out.max_residual, frob_dist(lhs, rhs));
    }
  }
  out.covariant = out.max_residual <= tol;
  return out;
}

CovarianceCheck check_covariance(const PauliChannel& ch, const GroupRep& rep, double tol) {
  return check_covariance(to_kraus_map(ch), rep, tol);
}

PauliChannel semigroup_channel(const PauliLiouvillian& lv, double t) {
  if (!(t >= 0.0)) throw MatrixError("semigroup_channel: negative time");
  const auto& g = lv.gamma;
  const double total = g[0] + g[1] + g[2];
  Vec3 lambda;
  for (std::size_t i = 0; i < 3; ++i) lambda[i] = std::exp(-2.0 * (total - g[i]) * t);
  return PauliChannel::from_bloch_scaling(lambda);
}

CMat liouvillian_apply(const PauliLiouvillian& lv, const CMat& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw MatrixError("liouvillian_apply: rho must be 2x2");
  }
  CMat out(2, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    const CMat s = sigma(i + 1);
    out += (s * rho * s - rho) * lv.gamma[i];
  }
  return out;
}

}  // namespace pauli_dilate
