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

#include <array>
#include <vector>

#include "pauli_dilate/group_rep.hpp"
#include "pauli_dilate/matcore.hpp"

namespace pauli_dilate {

using Vec3 = std::array<double, 3>;

/// phi[rho] = sum_alpha p_alpha sigma_alpha rho sigma_alpha, alpha = I, x, y, z.
class PauliChannel {
 public:
  /// Throws MatrixError unless p >= 0 and sum(p) = 1 within 1e-12.
  explicit PauliChannel(const std::array<double, 4>& p);

  static PauliChannel identity() { return PauliChannel({1.0, 0.0, 0.0, 0.0}); }
  /// (1 - p) rho + p Z rho Z.
  static PauliChannel phase_damping(double p);
  /// (1 - p) rho + (p / 3) sum_i sigma_i rho sigma_i.
  static PauliChannel depolarizing(double p);
  /// Inverse of bloch_scaling.
  static PauliChannel from_bloch_scaling(const Vec3& lambda);

  const std::array<double, 4>& probabilities() const { return p_; }
  double p(std::size_t alpha) const { return p_[alpha]; }

 private:
  std::array<double, 4> p_;
};

/// Generic Kraus map, for channels outside the Pauli family.
struct KrausMap {
  std::vector<CMat> ops;
  CMat apply(const CMat& rho) const;
  /// ||sum K^dagger K - I||_F.
  double completeness_defect() const;
};

/// gamma_i >= 0, generator L[rho] = sum_i gamma_i (sigma_i rho sigma_i - rho).
struct PauliLiouvillian {
  Vec3 gamma{};
  explicit PauliLiouvillian(const Vec3& g);
};

/// The Pauli matrix for alpha = 0..3 (I, x, y, z).
CMat sigma(std::size_t alpha);

CMat apply(const PauliChannel& ch, const CMat& rho);
/// Kraus operators sqrt(p_alpha) sigma_alpha in I, x, y, z order, zero terms
/// dropped.
std::vector<CMat> kraus_ops(const PauliChannel& ch);
KrausMap to_kraus_map(const PauliChannel& ch);

/// C = sum_ij E_ij (x) phi[E_ij]; trace 2.
CMat choi(const KrausMap& map);
CMat choi(const PauliChannel& ch);
int kraus_rank(const PauliChannel& ch, double tol = kDefaultTol);

/// (lambda_x, lambda_y, lambda_z).
Vec3 bloch_scaling(const PauliChannel& ch);
Vec3 bloch_vector(const CMat& rho);
CMat state_from_bloch(const Vec3& r);

/// Composition (first then second), itself a Pauli channel.
PauliChannel compose(const PauliChannel& first, const PauliChannel& second);

struct CovarianceCheck {
  bool covariant = false;
  double max_residual = 0.0;
};

/// phi[U X U^dagger] = U phi[X] U^dagger over every rep element and the
/// Hermitian basis {I, X, Y, Z}; covariant iff the residual is <= tol.
CovarianceCheck check_covariance(const KrausMap& map, const GroupRep& rep,
                                 double tol = kDefaultTol);
CovarianceCheck check_covariance(const PauliChannel& ch, const GroupRep& rep,
                                 double tol = kDefaultTol);

/// exp(L t) as a Pauli channel. Throws MatrixError for t < 0.
PauliChannel semigroup_channel(const PauliLiouvillian& lv, double t);
CMat liouvillian_apply(const PauliLiouvillian& lv, const CMat& rho);

}  // namespace pauli_dilate
