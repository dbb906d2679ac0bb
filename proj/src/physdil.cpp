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

#include "pauli_dilate/physdil.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "pauli_dilate/group_rep.hpp"
#include "pauli_dilate/pauli.hpp"

namespace pauli_dilate {

namespace {

CMat env_state_embedding(const PhysicalDilation& pd) {
  return kron(CMat::identity(pd.dim_s), pd.psi_e);
}

// Minimal dilations have a uniquely solvable environment representation.
bool is_minimal(const Isometry& v) {
  return dilation_span_dim(v, 1e-8) == v.dim_s * v.dim_e;
}

double max_prob_diff(const ChannelFit& a, const ChannelFit& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.p[i] - b.p[i]));
  return d;
}

}  // namespace

PhysicalDilation::PhysicalDilation(CMat hm, CMat psi, std::size_t ds)
    : h(std::move(hm)), psi_e(std::move(psi)), dim_s(ds) {
  if (dim_s == 0 || psi_e.cols() != 1 || psi_e.rows() == 0) {
    throw MatrixError("PhysicalDilation: psi_E must be a non-empty column vector");
  }
  dim_e = psi_e.rows();
  if (h.rows() != dim_s * dim_e || h.cols() != dim_s * dim_e) {
    throw MatrixError("PhysicalDilation: h must act on system (x) environment");
  }
  if (!is_hermitian(h, 1e-12)) throw MatrixError("PhysicalDilation: h is not Hermitian");
  if (std::abs(frob_norm(psi_e) - 1.0) > 1e-12) {
    throw MatrixError("PhysicalDilation: psi_E is not normalised");
  }
}

Isometry isometry_at(const PhysicalDilation& pd, double t) {
  if (!(t >= 0.0)) throw MatrixError("isometry_at: negative time");
  return Isometry(mat_exp_hermitian(pd.h, t) * env_state_embedding(pd), pd.dim_s, pd.dim_e);
}

CMat evolve_state(const PhysicalDilation& pd, double t, const CMat& rho) {
  require_density_matrix(rho);
  return channel_of_isometry(isometry_at(pd, t), rho);
}

PauliChannel ChannelFit::channel(double tol) const {
  if (!is_pauli(tol)) {
    std::ostringstream os;
    os << "non-Pauli dynamics at t = " << t << " (leakage " << leakage << ")";
    throw DilationError(os.str());
  }
  return PauliChannel::from_bloch_scaling(lambda);
}

ChannelFit fit_pauli_channel(const Isometry& v) {
  if (v.dim_s != 2) throw MatrixError("fit_pauli_channel: system must be a qubit");
  ChannelFit fit;
  fit.transfer = CMat(4, 4);
  std::array<CMat, 4> images;
  for (std::size_t b = 0; b < 4; ++b) images[b] = channel_of_isometry(v, sigma(b));
  double leak2 = 0.0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const cplx r = (sigma(a) * images[b]).trace() * 0.5;
      fit.transfer(a, b) = r;
      if (a != b) {
        leak2 += std::norm(r);
      } else {
        leak2 += r.imag() * r.imag();
      }
    }
  leak2 += std::pow(fit.transfer(0, 0).real() - 1.0, 2);
  fit.leakage = std::sqrt(leak2);
  for (std::size_t i = 0; i < 3; ++i) fit.lambda[i] = fit.transfer(i + 1, i + 1).real();
  const Vec3& l = fit.lambda;
  fit.p = {0.25 * (1.0 + l[0] + l[1] + l[2]), 0.25 * (1.0 + l[0] - l[1] - l[2]),
           0.25 * (1.0 - l[0] + l[1] - l[2]), 0.25 * (1.0 - l[0] - l[1] + l[2])};
  return fit;
}

ChannelFit channel_at_time(const PhysicalDilation& pd, double t) {
  ChannelFit fit = fit_pauli_channel(isometry_at(pd, t));
  fit.t = t;
  return fit;
}

std::vector<ChannelFit> channel_series(const PhysicalDilation& pd, std::span<const double> times) {
  for (double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw MatrixError("channel_series: times must be finite and >= 0");
  }
  std::vector<ChannelFit> out(times.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(times.size()); ++i) {
    out[static_cast<std::size_t>(i)] = channel_at_time(pd, times[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<ChannelFit> channel_series_serial(const PhysicalDilation& pd,
                                              std::span<const double> times) {
  std::vector<ChannelFit> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(channel_at_time(pd, t));
  return out;
}

std::vector<double> verification_grid() {
  std::vector<double> g(25);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = 2.0 * std::numbers::pi * i / 24.0;
  return g;
}

PhysicalDilation build_phase_damping_dilation() {
  return PhysicalDilation(kron(pauli_matrix::Z(), pauli_matrix::X()), CMat::basis_vector(2, 0));
}

PhysicalDilation build_depolarizing_dilation() {
  return build_generic_pauli_dilation(1.0, 1.0, 1.0);
}

PhysicalDilation build_generic_pauli_dilation(double a1, double a2, double a3) {
  if (!std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(a3)) {
    throw MatrixError("build_generic_pauli_dilation: coefficients must be finite");
  }
  using namespace pauli_matrix;
  const CMat h = kron({X(), I(), X()}) * a1 + kron({Y(), X(), I()}) * a2 +
                 kron({Z(), X(), X()}) * a3;
  return PhysicalDilation(h, CMat::basis_vector(4, 0));
}

double invariant_state_residual(const PhysicalDilation& pd, double t) {
  const EnvRepSolution sol = solve_env_rep(isometry_at(pd, t), pauli_defining_rep());
  double worst = 0.0;
  for (const auto& m : sol.rep.mats) worst = std::max(worst, frob_dist(m * pd.psi_e, pd.psi_e));
  return worst;
}

Schedule::Schedule(std::vector<double> ts, std::vector<double> fs)
    : times(std::move(ts)), couplings(std::move(fs)) {
  if (times.size() < 2 || couplings.size() + 1 != times.size()) {
    throw MatrixError("Schedule: need N + 1 knots for N couplings, N >= 1");
  }
  if (times.front() != 0.0) throw MatrixError("Schedule: times must start at 0");
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) throw MatrixError("Schedule: times must increase strictly");
  }
  for (double f : couplings) {
    if (!std::isfinite(f)) throw MatrixError("Schedule: couplings must be finite");
  }
}

Schedule schedule_for_target(std::span<const double> p_target, double dt) {
  if (p_target.size() < 2) throw MatrixError("schedule_for_target: need at least two samples");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw MatrixError("schedule_for_target: dt must be > 0");
  for (double p : p_target) {
    if (!(p >= 0.0 && p <= 1.0)) throw MatrixError("schedule_for_target: p_target outside [0, 1]");
  }
  if (std::abs(p_target[0]) > 1e-12) throw MatrixError("schedule_for_target: p_target(0) != 0");

  constexpr double two_pi = 2.0 * std::numbers::pi;
  const std::size_t n = p_target.size() - 1;
  // phase[k] = 2 Theta(t_k).
  std::vector<double> phase(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    const double phi = std::acos(std::clamp(1.0 - 2.0 * p_target[k], -1.0, 1.0));
    const double pred = k >= 2 ? 2.0 * phase[k - 1] - phase[k - 2] : phase[k - 1];
    double best = 0.0, best_dist = std::numeric_limits<double>::infinity();
    for (double sign : {1.0, -1.0}) {
      const double m = std::round((pred - sign * phi) / two_pi);
      const double cand = two_pi * m + sign * phi;
      const double dist = std::abs(cand - pred);
      if (dist < best_dist - 1e-15) {
        best = cand;
        best_dist = dist;
      }
    }
    phase[k] = best;
  }
  std::vector<double> times(n + 1), couplings(n);
  for (std::size_t k = 0; k <= n; ++k) times[k] = dt * static_cast<double>(k);
  for (std::size_t k = 0; k < n; ++k) couplings[k] = 0.5 * (phase[k + 1] - phase[k]) / dt;
  return Schedule(std::move(times), std::move(couplings));
}

std::vector<ChannelFit> evolve_schedule(const PhysicalDilation& base, const Schedule& schedule) {
  const CMat embed = env_state_embedding(base);
  CMat u = CMat::identity(base.h.rows());
  std::vector<ChannelFit> out;
  out.reserve(schedule.times.size());
  for (std::size_t k = 0; k < schedule.times.size(); ++k) {
    if (k > 0) {
      const double step = schedule.times[k] - schedule.times[k - 1];
      u = mat_exp_hermitian(base.h * schedule.couplings[k - 1], step) * u;
    }
    ChannelFit fit = fit_pauli_channel(Isometry(u * embed, base.dim_s, base.dim_e));
    fit.t = schedule.times[k];
    out.push_back(std::move(fit));
  }
  return out;
}

KrylovSubspace krylov_subspace(const PhysicalDilation& pd, double tol) {
  const std::size_t dim = pd.h.rows();
  CMat basis = gram_schmidt_extend(CMat(), env_state_embedding(pd), tol);
  CMat frontier = basis;
  for (std::size_t depth = 0; depth < dim && frontier.cols() > 0; ++depth) {
    const std::size_t before = basis.cols();
    basis = gram_schmidt_extend(basis, pd.h * frontier, tol);
    if (basis.cols() == before) break;
    frontier = basis.block(0, before, dim, basis.cols() - before);
  }
  return KrylovSubspace{basis, basis.cols()};
}

double restricted_commutator_norm(const PhysicalDilation& pd, const CMat& sym,
                                  const KrylovSubspace& k) {
  if (sym.rows() != pd.h.rows() || sym.cols() != pd.h.cols()) {
    throw MatrixError("restricted_commutator_norm: symmetry acts on the wrong space");
  }
  const CMat p = k.projector();
  return frob_norm(p * commutator(sym, pd.h) * p);
}

double invariance_defect(const CMat& h, const KrylovSubspace& k) {
  const CMat p = k.projector();
  return frob_norm((CMat::identity(h.rows()) - p) * h * p);
}

PhysicalDilation symmetrize_full(const PhysicalDilation& pd, const KrylovSubspace& k) {
  const double defect = invariance_defect(pd.h, k);
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "symmetrize_full: subspace is not invariant under h (defect " << defect << ")";
    throw DilationError(os.str());
  }
  const CMat p = k.projector();
  const CMat id = CMat::identity(pd.h.rows());
  const CMat hp = p * pd.h * p + (id - p);
  return PhysicalDilation((hp + hp.adjoint()) * 0.5, pd.psi_e, pd.dim_s);
}

double RotatingPhaseReport::max_probability_diff() const {
  double d = 0.0;
  for (const auto& s : samples) d = std::max(d, s.max_probability_diff);
  return d;
}

double RotatingPhaseReport::max_rep_diff() const {
  double d = 0.0;
  for (const auto& s : samples)
    if (s.rep_diff) d = std::max(d, *s.rep_diff);
  return d;
}

RotatingPhaseReport rotating_phase_demo(const PhysicalDilation& pd, const CMat& h_env,
                                        std::span<const double> times) {
  if (h_env.rows() != pd.dim_e || h_env.cols() != pd.dim_e) {
    throw MatrixError("rotating_phase_demo: hE must act on the environment");
  }
  const CMat lifted = kron(CMat::identity(pd.dim_s), h_env);
  if (frob_norm(commutator(pd.h, lifted)) > 1e-12) {
    throw DilationError("rotating_phase_demo: [h, I (x) hE] != 0");
  }
  const PhysicalDilation rot(pd.h + lifted, pd.psi_e, pd.dim_s);
  const GroupRep sys = pauli_defining_rep();
  RotatingPhaseReport report;
  for (double t : times) {
    RotatingPhaseSample s;
    s.t = t;
    s.max_probability_diff = max_prob_diff(channel_at_time(pd, t), channel_at_time(rot, t));
    const Isometry v = isometry_at(pd, t);
    if (is_minimal(v)) {
      const EnvRepSolution base = solve_env_rep(v, sys);
      const EnvRepSolution moved = solve_env_rep(isometry_at(rot, t), sys);
      const CMat w = mat_exp_hermitian(h_env, t);
      double worst = 0.0;
      for (std::size_t g = 0; g < sys.size(); ++g) {
        const CMat expected = w * base.rep.mats[g] * w.adjoint();
        worst = std::max(worst, frob_dist(moved.rep.mats[g], expected));
      }
      s.rep_diff = worst;
    }
    report.samples.push_back(s);
  }
  return report;
}

AlternateStateReport alternate_initial_state_demo(std::span<const double> times) {
  const PhysicalDilation pd(kron(pauli_matrix::Z(), pauli_matrix::X()), CMat::basis_vector(2, 1));
  const GroupRep sys = pauli_defining_rep();
  const CMat zero_e = pd.psi_e;
  AlternateStateReport report;
  for (double t : times) {
    const double c = std::cos(t), s = std::sin(t);
    const ChannelFit fit = channel_at_time(pd, t);
    const std::array<double, 4> expected_p{c * c, 0.0, 0.0, s * s};
    for (std::size_t i = 0; i < 4; ++i)
      report.max_channel_error =
          std::max(report.max_channel_error, std::abs(fit.p[i] - expected_p[i]));
    report.max_channel_error = std::max(report.max_channel_error, fit.leakage);

    const Isometry v = isometry_at(pd, t);
    const CMat expected_v{{cplx(0.0, -s), 0.0},
                          {c, 0.0},
                          {0.0, cplx(0.0, s)},
                          {0.0, c}};
    report.max_isometry_error = std::max(report.max_isometry_error, frob_dist(v.v, expected_v));

    if (!is_minimal(v)) continue;
    const EnvRepSolution sol = solve_env_rep(v, sys);
    ++report.rep_samples;
    for (std::size_t g = 0; g < sys.size(); ++g) {
      const Pauli f = PauliString::parse(sys.labels[g]).factor(0);
      const CMat expected =
          (f == Pauli::I || f == Pauli::Z) ? CMat::identity(2) : pauli_matrix::Z() * -1.0;
      const CMat& m = sol.rep.mats[g];
      report.max_rep_error = std::max(report.max_rep_error, frob_dist(m, expected));
      report.max_invariance_error =
          std::max(report.max_invariance_error, frob_dist(m * zero_e, zero_e));
    }
  }
  return report;
}

}  // namespace pauli_dilate
