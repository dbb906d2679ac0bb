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

#include "pauli_dilate/collision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace pauli_dilate {

namespace {

void check_dts(std::span<const double> dts) {
  if (dts.empty()) throw MatrixError("convergence_report: no dt values");
  for (std::size_t i = 0; i < dts.size(); ++i) {
    if (!(dts[i] > 0.0) || !std::isfinite(dts[i])) {
      throw MatrixError("convergence_report: dt values must be positive");
    }
    if (i > 0 && !(dts[i] < dts[i - 1])) {
      throw MatrixError("convergence_report: dt values must decrease strictly");
    }
  }
}

CollisionConfig row_config(const CollisionConfig& cfg, double dt, double t_final) {
  const double steps = t_final / dt;
  const double rounded = std::round(steps);
  if (rounded < 1.0 || std::abs(steps - rounded) > 1e-9 * std::max(1.0, steps)) {
    throw MatrixError("convergence_report: t_final must be a positive multiple of dt");
  }
  CollisionConfig c = cfg;
  c.dt = dt;
  c.n = static_cast<std::size_t>(rounded);
  c.validate();
  return c;
}

ConvergenceRow run_row(const CollisionConfig& c, const CMat& rho0) {
  const std::vector<CMat> traj = simulate_semigroup(c, rho0);
  ConvergenceRow row;
  row.dt = c.dt;
  row.n = c.n;
  row.times.reserve(traj.size());
  row.errors.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double t = c.dt * static_cast<double>(k);
    const double err = trace_distance(traj[k], exact_semigroup_state(c, rho0, t));
    row.times.push_back(t);
    row.errors.push_back(err);
    row.max_error = std::max(row.max_error, err);
  }
  return row;
}

// Validates everything up front so no exception is raised inside a parallel region.
std::vector<CollisionConfig> row_configs(const CollisionConfig& cfg, std::span<const double> dts,
                                         double t_final, const CMat& rho0) {
  check_dts(dts);
  if (rho0.rows() != 2 || rho0.cols() != 2) {
    throw MatrixError("convergence_report: rho0 must be 2x2");
  }
  require_density_matrix(rho0);
  std::vector<CollisionConfig> out;
  for (double dt : dts) out.push_back(row_config(cfg, dt, t_final));
  return out;
}

void fill_ratios(std::vector<ConvergenceRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].max_error > 0.0) rows[i].ratio = rows[i - 1].max_error / rows[i].max_error;
  }
}

}  // namespace

void CollisionConfig::validate() const {
  for (double x : a) {
    if (!std::isfinite(x)) throw MatrixError("CollisionConfig: a must be finite");
  }
  if (!(zeta >= 0.0) || !std::isfinite(zeta)) throw MatrixError("CollisionConfig: zeta must be >= 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw MatrixError("CollisionConfig: dt must be > 0");
  if (n < 1) throw MatrixError("CollisionConfig: n must be >= 1");
}

double CollisionConfig::nu_int() const { return std::sqrt(zeta / dt); }

Vec3 CollisionConfig::target_rates() const {
  return {zeta * a[0] * a[0], zeta * a[1] * a[1], zeta * a[2] * a[2]};
}

std::array<CMat, 3> bath_operators() {
  using namespace pauli_matrix;
  return {kron(I(), X()), kron(X(), I()), kron(X(), X())};
}

CMat bath_state() { return CMat::basis_vector(4, 0); }

CMat bath_coefficients() {
  const auto b = bath_operators();
  const CMat psi = bath_state();
  CMat c(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = (psi.adjoint() * b[i].adjoint() * b[j] * psi)(0, 0);
  return c;
}

std::array<cplx, 3> bath_means() {
  const auto b = bath_operators();
  const CMat psi = bath_state();
  std::array<cplx, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = (psi.adjoint() * b[i] * psi)(0, 0);
  return out;
}

CMat collision_hamiltonian(const CollisionConfig& cfg) {
  cfg.validate();
  const auto b = bath_operators();
  CMat h(8, 8);
  for (std::size_t i = 0; i < 3; ++i) h += kron(sigma(i + 1), b[i]) * cfg.a[i];
  return h * cfg.nu_int();
}

CMat collision_unitary(const CollisionConfig& cfg) {
  return mat_exp_hermitian(collision_hamiltonian(cfg), cfg.dt);
}

CMat collision_step(const CMat& u, const CMat& rho) {
  const CMat psi = bath_state();
  const CMat env = psi * psi.adjoint();
  return partial_trace_env(u * kron(rho, env) * u.adjoint(), 2, 4);
}

CMat collision_map(const CollisionConfig& cfg, const CMat& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw MatrixError("collision_map: rho must be 2x2");
  require_density_matrix(rho);
  return collision_step(collision_unitary(cfg), rho);
}

CMat expansion_map(const CollisionConfig& cfg, const CMat& rho) {
  cfg.validate();
  if (rho.rows() != 2 || rho.cols() != 2) throw MatrixError("expansion_map: rho must be 2x2");
  const CMat c = bath_coefficients();
  std::array<CMat, 3> l;
  for (std::size_t i = 0; i < 3; ++i) l[i] = sigma(i + 1) * cfg.a[i];
  CMat d(2, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (c(i, j) == 0.0) continue;
      const CMat lil = l[i].adjoint() * l[j];
      d += (l[j] * rho * l[i].adjoint() - anticommutator(lil, rho) * 0.5) * c(i, j);
    }
  const double nu = cfg.nu_int();
  return rho + d * (cfg.dt * cfg.dt * nu * nu);
}

std::vector<CMat> simulate_semigroup(const CollisionConfig& cfg, const CMat& rho0) {
  cfg.validate();
  if (rho0.rows() != 2 || rho0.cols() != 2) {
    throw MatrixError("simulate_semigroup: rho0 must be 2x2");
  }
  require_density_matrix(rho0);
  const CMat u = collision_unitary(cfg);
  std::vector<CMat> out;
  out.reserve(cfg.n + 1);
  out.push_back(rho0);
  for (std::size_t k = 0; k < cfg.n; ++k) out.push_back(collision_step(u, out.back()));
  return out;
}

CMat exact_semigroup_state(const CollisionConfig& cfg, const CMat& rho0, double t) {
  return apply(semigroup_channel(PauliLiouvillian(cfg.target_rates()), t), rho0);
}

CMat default_probe_state() {
  const double r = 1.0 / std::sqrt(3.0);
  return state_from_bloch({r, r, r});
}

std::vector<ConvergenceRow> convergence_report(const CollisionConfig& cfg,
                                               std::span<const double> dts, double t_final,
                                               const CMat& rho0) {
  const auto configs = row_configs(cfg, dts, t_final, rho0);
  std::vector<ConvergenceRow> rows(configs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(configs.size()); ++i) {
    const auto k = static_cast<std::size_t>(i);
    rows[k] = run_row(configs[k], rho0);
  }
  fill_ratios(rows);
  return rows;
}

std::vector<ConvergenceRow> convergence_report_serial(const CollisionConfig& cfg,
                                                      std::span<const double> dts,
                                                      double t_final, const CMat& rho0) {
  std::vector<ConvergenceRow> rows;
  for (const auto& c : row_configs(cfg, dts, t_final, rho0)) rows.push_back(run_row(c, rho0));
  fill_ratios(rows);
  return rows;
}

std::vector<double> halving_sequence(double dt, std::size_t halvings) {
  std::vector<double> out;
  for (std::size_t i = 0; i <= halvings; ++i) out.push_back(dt / std::pow(2.0, static_cast<double>(i)));
  return out;
}

std::array<std::optional<double>, 3> fit_decay_rates(std::span<const CMat> trajectory, double dt) {
  if (trajectory.size() < 2) throw MatrixError("fit_decay_rates: need at least two states");
  if (!(dt > 0.0)) throw MatrixError("fit_decay_rates: dt must be > 0");
  const Vec3 r0 = bloch_vector(trajectory.front());
  std::array<std::optional<double>, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(r0[i]) <= 1e-12) continue;
    double stt = 0.0, sty = 0.0;
    for (std::size_t k = 1; k < trajectory.size(); ++k) {
      const double ratio = bloch_vector(trajectory[k])[i] / r0[i];
      if (ratio <= 1e-12) break;
      const double t = dt * static_cast<double>(k);
      stt += t * t;
      sty += t * -std::log(ratio);
    }
    if (stt > 0.0) out[i] = sty / stt;
  }
  return out;
}

Vec3 rates_from_decay(const Vec3& kappa) {
  const double total = kappa[0] + kappa[1] + kappa[2];
  return {total / 4.0 - kappa[0] / 2.0, total / 4.0 - kappa[1] / 2.0, total / 4.0 - kappa[2] / 2.0};
}

}  // namespace pauli_dilate
