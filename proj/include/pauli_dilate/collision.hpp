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
#include <optional>
#include <span>
#include <vector>

#include "pauli_dilate/channel.hpp"
#include "pauli_dilate/matcore.hpp"

namespace pauli_dilate {

struct CollisionConfig {
  Vec3 a{};           // Lindblad weights
  double zeta = 0.0;  // rate scale, >= 0
  double dt = 0.0;    // collision duration, > 0
  std::size_t n = 0;  // collision count, >= 1

  /// Throws MatrixError on any violated field constraint.
  void validate() const;
  /// sqrt(zeta / dt), so that nu^2 dt = zeta.
  double nu_int() const;
  /// gamma_i = zeta a_i^2.
  Vec3 target_rates() const;
};

/// B_x = I (x) X, B_y = X (x) I, B_z = X (x) X on the two-qubit ancilla.
std::array<CMat, 3> bath_operators();
/// |11>, the first ancilla basis state.
CMat bath_state();
/// c_ij = <psi_E| B_i^dagger B_j |psi_E>.
CMat bath_coefficients();
/// <psi_E| B_i |psi_E>.
std::array<cplx, 3> bath_means();

/// nu sum_i a_i sigma_i (x) B_i.
CMat collision_hamiltonian(const CollisionConfig& cfg);
/// exp(-i H_c dt).
CMat collision_unitary(const CollisionConfig& cfg);

/// One collision with a fresh ancilla: Tr_E[U (rho (x) |11><11|) U^dagger].
CMat collision_map(const CollisionConfig& cfg, const CMat& rho);
/// Same with a precomputed collision unitary.
CMat collision_step(const CMat& u, const CMat& rho);

/// rho + dt^2 nu^2 sum_ij c_ij (L_j rho L_i^dagger - {L_i^dagger L_j, rho} / 2)
/// with L_i = a_i sigma_i.
CMat expansion_map(const CollisionConfig& cfg, const CMat& rho);

/// States at t_k = k dt for k = 0..n.
std::vector<CMat> simulate_semigroup(const CollisionConfig& cfg, const CMat& rho0);

/// The semigroup with gamma_i = zeta a_i^2 applied to rho0.
CMat exact_semigroup_state(const CollisionConfig& cfg, const CMat& rho0, double t);

/// Pure state with Bloch vector (1, 1, 1) / sqrt(3); all components decay.
CMat default_probe_state();

struct ConvergenceRow {
  double dt = 0.0;
  std::size_t n = 0;
  double max_error = 0.0;
  /// max_error of the previous (coarser) row over this one.
  std::optional<double> ratio;
  std::vector<double> times;
  std::vector<double> errors;  // trace distance to the exact semigroup
};

/// Runs one trajectory per dt up to t_final (t_final / dt must be an
/// integer within 1e-9) and records the trace-distance error against the
/// exact semigroup. dts must be strictly decreasing. Rows are computed in
/// parallel; the result equals convergence_report_serial exactly.
std::vector<ConvergenceRow> convergence_report(const CollisionConfig& cfg,
                                               std::span<const double> dts, double t_final,
                                               const CMat& rho0);
std::vector<ConvergenceRow> convergence_report_serial(const CollisionConfig& cfg,
                                                      std::span<const double> dts,
                                                      double t_final, const CMat& rho0);

/// dts = dt, dt/2, ..., dt/2^halvings.
std::vector<double> halving_sequence(double dt, std::size_t halvings);

/// Least-squares slope through the origin of -ln(r_i(t)/r_i(0)) against t,
/// for each Bloch component. Components with |r_i(0)| <= 1e-12 yield nullopt.
std::array<std::optional<double>, 3> fit_decay_rates(std::span<const CMat> trajectory, double dt);

/// Inverts kappa_i = 2 sum_{j != i} gamma_j.
Vec3 rates_from_decay(const Vec3& kappa);

}  // namespace pauli_dilate
