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

#include <optional>
#include <stdexcept>
#include <vector>

#include "pauli_dilate/channel.hpp"
#include "pauli_dilate/group_rep.hpp"
#include "pauli_dilate/matcore.hpp"
#include "pauli_dilate/pauli.hpp"

namespace pauli_dilate {

/// A solve or check on a dilation missed its tolerance.
class DilationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stinespring isometry V : H_S -> H_S (x) H_E, shape (dimS*dimE) x dimS.
struct Isometry {
  CMat v;
  std::size_t dim_s = 0;
  std::size_t dim_e = 0;

  /// Validates the shape and V^dagger V = I within 1e-10.
  Isometry(CMat v, std::size_t dim_s, std::size_t dim_e);

  double defect() const { return frob_dist(v.adjoint() * v, CMat::identity(dim_s)); }
};

/// V = sum_j phase_j K_j (x) |e_j>, with |e_1> = |1...1> the first
/// environment basis state. `phases` defaults to all ones; otherwise one unit
/// complex number per Kraus operator. Throws DilationError when
/// sum K^dagger K != I within 1e-10.
Isometry dilation_from_kraus(const std::vector<CMat>& kraus,
                             const std::vector<cplx>& phases = {});

/// dilation_from_kraus over sqrt(p_alpha) sigma_alpha for the listed
/// alphas (0..3), zero-probability terms kept so the shape is fixed. Throws
/// DilationError when the listed terms do not carry all the probability.
Isometry dilation_from_pauli(const PauliChannel& ch, const std::vector<std::size_t>& alphas);

/// Tr_E[V rho V^dagger].
CMat channel_of_isometry(const Isometry& v, const CMat& rho);

/// dim span{(a (x) I) V |phi>}: equals dimS*dimE iff the dilation is minimal.
std::size_t dilation_span_dim(const Isometry& v, double tol = kDefaultTol);

struct EnvRepSolution {
  GroupRep rep;
  std::vector<double> residuals;          // ||V U - (U (x) X) V||_F per element
  std::vector<double> unitarity_defects;  // ||X^dagger X - I||_F per element
  /// Exact labelled closure defect; only for Pauli-labelled reps.
  std::optional<double> rep_law_defect;

  double max_residual() const;
  double max_unitarity_defect() const;
};

/// Solves V pi_S(g) = (pi_S(g) (x) pi_E(g)) V for each g by least squares on
/// the vectorised pi_E(g). Throws DilationError when the system is rank
/// deficient (non-minimal dilation), when a residual exceeds `tol`, or when a
/// solution is not unitary within 1e-9.
EnvRepSolution solve_env_rep(const Isometry& v, const GroupRep& sys_rep,
                             double tol = kDefaultTol);

/// B = {pi_S(g) (x) pi_E(g)} as distinct phase-free Pauli strings, identity
/// excluded, in lexicographic order. Throws DilationError when an element is
/// not proportional to a single Pauli string.
std::vector<PauliString> symmetry_strings(const GroupRep& sys_rep, const GroupRep& env_rep);

struct SU2Generators {
  CMat jx, jy, jz;
  std::array<double, 3> residuals{};

  const CMat& operator[](std::size_t a) const { return a == 0 ? jx : (a == 1 ? jy : jz); }
};

/// Solves (I_2 (x) J_a) V = V sigma_a - (sigma_a (x) I_E) V for a = x, y, z.
SU2Generators solve_su2_generators(const Isometry& v, double tol = kDefaultTol);

/// max_{a,b} ||[J_a, J_b] - 2i eps_abc J_c||_F.
double su2_algebra_defect(const SU2Generators& j);

struct StrongConservation {
  bool conserved = false;
  double max_commutator = 0.0;
  /// ||V J - (J (x) I) V||_F for the dilation built from the Kraus list;
  /// only computed when conserved.
  std::optional<double> isometry_residual;
};

/// Whether [J, K_j] = 0 (within 1e-12) for every Kraus operator.
StrongConservation check_strong_conservation(const std::vector<CMat>& kraus, const CMat& j);

}  // namespace pauli_dilate
