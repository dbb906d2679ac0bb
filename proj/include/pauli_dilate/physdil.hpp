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
#include "pauli_dilate/dilation.hpp"
#include "pauli_dilate/matcore.hpp"

namespace pauli_dilate {

/// Time-independent Hamiltonian on system (x) environment together with a
/// pure initial environment state.
struct PhysicalDilation {
  CMat h;
  CMat psi_e;  // dim_e x 1
  std::size_t dim_s = 2;
  std::size_t dim_e = 0;

  /// Validates Hermiticity (1e-12) and the norm of psi_e (1e-12).
  PhysicalDilation(CMat h, CMat psi_e, std::size_t dim_s = 2);
};

/// V(t) = exp(-i h t) (I (x) |psi_E>).
Isometry isometry_at(const PhysicalDilation& pd, double t);
/// Tr_E[U(t) (rho (x) |psi_E><psi_E|) U(t)^dagger].
CMat evolve_state(const PhysicalDilation& pd, double t, const CMat& rho);

/// Pauli-channel fit of the map induced at one instant.
struct ChannelFit {
  double t = 0.0;
  std::array<double, 4> p{};  // p_I, p_x, p_y, p_z, unclamped
  Vec3 lambda{};
  /// Norm of every transfer-matrix entry a Pauli channel must have zero:
  /// off-diagonal entries and imaginary parts of the diagonal.
  double leakage = 0.0;
  CMat transfer;  // R_ab = Tr(sigma_a phi[sigma_b]) / 2

  bool is_pauli(double tol = kDefaultTol) const { return leakage <= tol; }
  /// Throws DilationError ("non-Pauli dynamics") when leakage exceeds tol.
  PauliChannel channel(double tol = kDefaultTol) const;
};

/// Fits the qubit map x -> Tr_E[V x V^dagger] to a Pauli channel.
ChannelFit fit_pauli_channel(const Isometry& v);
ChannelFit channel_at_time(const PhysicalDilation& pd, double t);

/// Fits at every sample time. Samples are evaluated in parallel; the output
/// order matches `times` and equals channel_series_serial exactly.
std::vector<ChannelFit> channel_series(const PhysicalDilation& pd, std::span<const double> times);
std::vector<ChannelFit> channel_series_serial(const PhysicalDilation& pd,
                                              std::span<const double> times);

/// 25 uniformly spaced points on [0, 2 pi], both ends included.
std::vector<double> verification_grid();

/// h = Z (x) X, psi_E = |1>.
PhysicalDilation build_phase_damping_dilation();
/// h = X(x)I(x)X + Y(x)X(x)I + Z(x)X(x)X, psi_E = |11>.
PhysicalDilation build_depolarizing_dilation();
/// h = a1 X(x)I(x)X + a2 Y(x)X(x)I + a3 Z(x)X(x)X, psi_E = |11>.
PhysicalDilation build_generic_pauli_dilation(double a1, double a2, double a3);

/// max_g ||pi_E(g) psi_E - psi_E|| for the Pauli-group representation solved
/// from V(t). Requires V(t) to be minimal.
double invariant_state_residual(const PhysicalDilation& pd, double t);

/// Piecewise-constant coupling: f(s) = couplings[k] on [times[k], times[k+1]).
struct Schedule {
  std::vector<double> times;      // strictly increasing from 0, size N + 1
  std::vector<double> couplings;  // size N

  Schedule(std::vector<double> times, std::vector<double> couplings);
};

/// Coupling for h = f(t) Z(x)X reproducing p_target sampled on a uniform
/// grid with spacing dt (p_target[0] = 0). Theta(t) = int f is the
/// continuously unwrapped half-arccos of 1 - 2 p; at each step the branch
/// closest to the linear extrapolation of the previous two values is taken.
Schedule schedule_for_target(std::span<const double> p_target, double dt);

/// Fitted channels at every knot of the schedule for h(t) = f(t) base.h.
/// Intervals are composed in order; this part is inherently sequential.
std::vector<ChannelFit> evolve_schedule(const PhysicalDilation& base, const Schedule& schedule);

struct KrylovSubspace {
  CMat basis;  // orthonormal columns
  std::size_t dim = 0;

  CMat projector() const { return basis * basis.adjoint(); }
};

/// span{h^k (|phi_j> (x) psi_E)} over the system basis and k = 0, 1, ...
/// until the rank saturates.
KrylovSubspace krylov_subspace(const PhysicalDilation& pd, double tol = kDefaultTol);

/// ||P [sym, h] P||_F with P the projector onto k.
double restricted_commutator_norm(const PhysicalDilation& pd, const CMat& sym,
                                  const KrylovSubspace& k);

/// ||(I - P) h P||_F; zero iff k is invariant under h.
double invariance_defect(const CMat& h, const KrylovSubspace& k);

/// h' = P h P + (I - P). Throws DilationError when k is not h-invariant
/// within 1e-10.
PhysicalDilation symmetrize_full(const PhysicalDilation& pd, const KrylovSubspace& k);

struct RotatingPhaseSample {
  double t = 0.0;
  double max_probability_diff = 0.0;
  /// max_g ||pi_rot(g, t) - W(t) pi_E(g) W(t)^dagger||_F, W = exp(-i hE t).
  /// Absent when V(t) is not minimal (e.g. t = 0), where the rotating
  /// representation reduces to pi_E by definition.
  std::optional<double> rep_diff;
};

struct RotatingPhaseReport {
  std::vector<RotatingPhaseSample> samples;
  double max_probability_diff() const;
  double max_rep_diff() const;
};

/// Compares the dilation driven by h with the one driven by h + I (x) hE.
/// Throws DilationError unless [h, I (x) hE] = 0 within 1e-12.
RotatingPhaseReport rotating_phase_demo(const PhysicalDilation& pd, const CMat& h_env,
                                        std::span<const double> times);

struct AlternateStateReport {
  double max_channel_error = 0.0;    // against p(t) = (cos^2 t, 0, 0, sin^2 t)
  double max_isometry_error = 0.0;   // against the closed-form V~(t)
  double max_rep_error = 0.0;        // against pi~_E: I for I, z and -Z for x, y
  double max_invariance_error = 0.0; // ||pi~_E(g)|0> - |0>||
  std::size_t rep_samples = 0;
};

/// Phase damping Hamiltonian Z (x) X started from |0>_E instead of |1>_E.
AlternateStateReport alternate_initial_state_demo(std::span<const double> times);

}  // namespace pauli_dilate
