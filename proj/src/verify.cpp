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

#include "pauli_dilate/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <random>

#include "pauli_dilate/channel.hpp"
#include "pauli_dilate/collision.hpp"
#include "pauli_dilate/dilation.hpp"
#include "pauli_dilate/group_rep.hpp"
#include "pauli_dilate/pauli.hpp"
#include "pauli_dilate/physdil.hpp"

namespace pauli_dilate {

namespace {

class Suite {
 public:
  explicit Suite(const VerifyOptions& o) : opts_(o) {}

  // Residual check: passes iff the computed value is <= tol.
  void residual(const std::string& name, double tol, const std::function<double()>& f) {
    const double t = opts_.tol.value_or(tol);
    CheckResult r{name, false, 0.0, t, {}};
    try {
      r.value = f();
      r.passed = r.value <= t;
    } catch (const std::exception& e) {
      r.value = std::numeric_limits<double>::infinity();
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  // Structural check: the callable returns the defect count; passes iff 0.
  void exact(const std::string& name, const std::function<double()>& f) {
    CheckResult r{name, false, 0.0, 0.0, {}};
    try {
      r.value = f();
      r.passed = r.value == 0.0;
    } catch (const std::exception& e) {
      r.value = std::numeric_limits<double>::infinity();
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const VerifyOptions& opts_;
  std::vector<CheckResult> results_;
};

std::vector<PauliString> parse_all(std::initializer_list<const char*> texts) {
  std::vector<PauliString> out;
  for (const char* t : texts) out.push_back(PauliString::parse(t));
  return out;
}

PhysicalDilation depolarizing_under_test(const VerifyOptions& o) {
  PhysicalDilation pd = build_depolarizing_dilation();
  CMat h = pd.h;
  CMat psi = pd.psi_e;
  if (o.perturb_hamiltonian) h += to_matrix(PauliString::parse("XII"));
  if (o.perturb_env_state) psi = CMat::basis_vector(4, 1);
  return PhysicalDilation(h, psi);
}

// Pauli-group pi_E of the minimal Kraus dilation of `ch`.
EnvRepSolution kraus_env_rep(const PauliChannel& ch) {
  return solve_env_rep(dilation_from_kraus(kraus_ops(ch)), pauli_defining_rep());
}

// Number of Pauli terms of h outside the commutant of b.
double commutant_violations(const CMat& h, const std::vector<PauliString>& b) {
  double bad = 0.0;
  for (const auto& [p, c] : pauli_basis_expand(h)) {
    if (std::abs(c) <= 1e-12) continue;
    for (const auto& g : b)
      if (!commutes(p, g)) {
        bad += 1.0;
        break;
      }
  }
  return bad;
}

double max_invariance(const GroupRep& env, const CMat& psi) {
  double worst = 0.0;
  for (const auto& m : env.mats) worst = std::max(worst, frob_dist(m * psi, psi));
  return worst;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  Suite s(opts);
  const auto grid = verification_grid();
  const GroupRep paulis = pauli_defining_rep();

  // pauli
  s.exact("pauli.group_table_closure", [&] {
    const auto g = pauli_group();
    double bad = 0.0;
    for (const auto& a : g)
      for (const auto& b : g) {
        const PauliString ab = a * b;
        if (std::find(g.begin(), g.end(), ab) == g.end()) bad += 1.0;
        if (frob_dist(to_matrix(ab), to_matrix(a) * to_matrix(b)) > 1e-12) bad += 1.0;
      }
    return bad;
  });
  s.exact("pauli.commutes_matches_matrices", [&] {
    const auto all = all_pauli_strings(2);
    double bad = 0.0;
    for (const auto& a : all)
      for (const auto& b : all) {
        const bool m = frob_dist(to_matrix(a) * to_matrix(b), to_matrix(b) * to_matrix(a)) < 1e-12;
        if (m != commutes(a, b)) bad += 1.0;
      }
    return bad;
  });
  s.exact("pauli.commutant_cardinality", [&] {
    double bad = 0.0;
    for (const auto& gens : {parse_all({"ZI", "XZ", "YZ"}), parse_all({"ZZZ", "XZI", "YIZ"})}) {
      const std::size_t n = gens.front().qubits();
      const auto c = pauli_commutant(gens, n);
      const std::size_t expected = (std::size_t{1} << (2 * n)) >> symplectic_rank(gens);
      if (c.size() != expected) bad += 1.0;
      if (c != pauli_commutant_serial(gens, n)) bad += 1.0;
    }
    return bad;
  });

  // channel
  s.residual("channel.cptp_random", 1e-10, [&] {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      std::array<double, 4> p{};
      double sum = 0.0;
      for (double& x : p) sum += (x = u(rng));
      for (double& x : p) x /= sum;
      const PauliChannel ch(p);
      const CMat c = choi(ch);
      worst = std::max(worst, std::max(0.0, -eigvalsh(c).front()));
      worst = std::max(worst, frob_dist(partial_trace_env(c, 2, 2), CMat::identity(2)));
      worst = std::max(worst, to_kraus_map(ch).completeness_defect());
    }
    return worst;
  });
  s.residual("channel.bloch_action", 1e-12, [&] {
    std::mt19937_64 rng(opts.seed + 1);
    const PauliChannel ch({0.4, 0.3, 0.2, 0.1});
    const Vec3 l = bloch_scaling(ch);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const CMat rho = random_density_matrix(2, rng);
      const Vec3 r = bloch_vector(rho), out = bloch_vector(apply(ch, rho));
      for (std::size_t k = 0; k < 3; ++k) worst = std::max(worst, std::abs(out[k] - l[k] * r[k]));
    }
    return worst;
  });
  s.residual("channel.pauli_covariance", 1e-10, [&] {
    return check_covariance(PauliChannel({0.4, 0.3, 0.2, 0.1}), paulis).max_residual;
  });
  s.residual("channel.semigroup_law", 1e-12, [&] {
    const PauliLiouvillian lv({0.3, 0.7, 1.1});
    const PauliChannel a = compose(semigroup_channel(lv, 0.4), semigroup_channel(lv, 0.9));
    const PauliChannel b = semigroup_channel(lv, 1.3);
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.p(i) - b.p(i)));
    return worst;
  });

  // dilation
  s.residual("dilation.reproduces_channel", 1e-12, [&] {
    std::mt19937_64 rng(opts.seed + 2);
    double worst = 0.0;
    for (const auto& ch : {PauliChannel::phase_damping(0.3), PauliChannel::depolarizing(0.3),
                           PauliChannel({0.4, 0.3, 0.2, 0.1})}) {
      const Isometry v = dilation_from_kraus(kraus_ops(ch));
      const CMat rho = random_density_matrix(2, rng);
      worst = std::max(worst, frob_dist(channel_of_isometry(v, rho), apply(ch, rho)));
    }
    return worst;
  });
  s.residual("dilation.env_rep_law", 1e-10, [&] {
    double worst = 0.0;
    for (const auto& ch : {PauliChannel::phase_damping(0.3), PauliChannel::depolarizing(0.3),
                           PauliChannel({0.4, 0.3, 0.2, 0.1})}) {
      const auto sol = kraus_env_rep(ch);
      worst = std::max({worst, sol.max_residual(), sol.max_unitarity_defect(),
                        sol.rep_law_defect.value_or(0.0)});
    }
    return worst;
  });
  s.residual("dilation.env_rep_independent_of_p", 1e-10, [&] {
    const auto a = kraus_env_rep(PauliChannel({0.4, 0.3, 0.2, 0.1}));
    const auto b = kraus_env_rep(PauliChannel({0.1, 0.2, 0.3, 0.4}));
    double worst = 0.0;
    for (std::size_t g = 0; g < a.rep.size(); ++g)
      worst = std::max(worst, frob_dist(a.rep.mats[g], b.rep.mats[g]));
    return worst;
  });
  s.residual("dilation.su2_algebra", 1e-10, [&] {
    return su2_algebra_defect(
        solve_su2_generators(dilation_from_kraus(kraus_ops(PauliChannel::depolarizing(0.3)))));
  });
  s.exact("dilation.strong_conservation_trivial", [&] {
    const auto sol = kraus_env_rep(PauliChannel::phase_damping(0.3));
    const bool trivial = frob_dist(sol.rep.at("Z"), CMat::identity(2)) < 1e-10;
    const bool conserved =
        check_strong_conservation(kraus_ops(PauliChannel::phase_damping(0.3)), pauli_matrix::Z())
            .conserved;
    return (trivial ? 0.0 : 1.0) + (conserved ? 0.0 : 1.0);
  });

  // physdil
  const PhysicalDilation pd_deph = build_phase_damping_dilation();
  const PhysicalDilation pd_dep = depolarizing_under_test(opts);
  const PhysicalDilation pd_gen = build_generic_pauli_dilation(0.6, 0.5, 0.4);
  const auto law = [&](const PhysicalDilation& pd, const std::function<std::array<double, 4>(double)>& p) {
    double worst = 0.0;
    for (const auto& f : channel_series(pd, grid)) {
      const auto e = p(f.t);
      for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(f.p[i] - e[i]));
      worst = std::max(worst, f.leakage);
    }
    return worst;
  };
  s.residual("physdil.phase_damping_law", 1e-10, [&] {
    return law(pd_deph, [](double t) {
      const double p = 0.5 * (1.0 - std::cos(2.0 * t));
      return std::array<double, 4>{1.0 - p, 0.0, 0.0, p};
    });
  });
  s.residual("physdil.depolarizing_law", 1e-10, [&] {
    return law(pd_dep, [](double t) {
      const double p = 0.5 * (1.0 - std::cos(2.0 * std::sqrt(3.0) * t));
      return std::array<double, 4>{1.0 - p, p / 3.0, p / 3.0, p / 3.0};
    });
  });
  s.residual("physdil.generic_law", 1e-10, [&] {
    return law(pd_gen, [](double t) {
      const double xi = 0.36 + 0.25 + 0.16, s2 = std::pow(std::sin(std::sqrt(xi) * t), 2);
      return std::array<double, 4>{1.0 - s2, 0.36 * s2 / xi, 0.25 * s2 / xi, 0.16 * s2 / xi};
    });
  });
  s.exact("physdil.commutant_membership", [&] {
    const auto deph = kraus_env_rep(PauliChannel::phase_damping(0.3));
    const auto dep = kraus_env_rep(PauliChannel::depolarizing(0.3));
    const auto b_deph = symmetry_strings(paulis, deph.rep);
    const auto b_dep = symmetry_strings(paulis, dep.rep);
    return commutant_violations(pd_deph.h, b_deph) + commutant_violations(pd_dep.h, b_dep) +
           commutant_violations(pd_gen.h, b_dep);
  });
  s.residual("physdil.invariant_state", 1e-10, [&] {
    const auto deph = kraus_env_rep(PauliChannel::phase_damping(0.3));
    const auto dep = kraus_env_rep(PauliChannel::depolarizing(0.3));
    return std::max({max_invariance(deph.rep, pd_deph.psi_e), max_invariance(dep.rep, pd_dep.psi_e),
                     max_invariance(dep.rep, pd_gen.psi_e)});
  });
  s.residual("physdil.solved_rep_fixes_psi", 1e-10, [&] {
    return std::max({invariant_state_residual(pd_deph, 0.4), invariant_state_residual(pd_dep, 0.4),
                     invariant_state_residual(pd_gen, 0.7)});
  });
  s.residual("physdil.krylov_invariance", 1e-10, [&] {
    const auto k = krylov_subspace(pd_dep);
    const CMat q = k.basis;
    const double ortho = frob_dist(q.adjoint() * q, CMat::identity(k.dim));
    return std::max({ortho, invariance_defect(pd_dep.h, k),
                     k.dim == 4 ? 0.0 : std::numeric_limits<double>::infinity()});
  });
  s.residual("physdil.restricted_su2_commutators", 1e-10, [&] {
    const auto k = krylov_subspace(pd_dep);
    const auto j = solve_su2_generators(isometry_at(pd_dep, 0.4));
    double worst = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
      const CMat sym = kron(sigma(a + 1), CMat::identity(4)) + kron(CMat::identity(2), j[a]);
      worst = std::max(worst, restricted_commutator_norm(pd_dep, sym, k));
    }
    return worst;
  });
  s.residual("physdil.full_symmetrization", 1e-9, [&] {
    const auto k = krylov_subspace(pd_dep);
    const PhysicalDilation sym = symmetrize_full(pd_dep, k);
    const auto j = solve_su2_generators(isometry_at(pd_dep, 0.4));
    double worst = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
      const CMat op = kron(sigma(a + 1), CMat::identity(4)) + kron(CMat::identity(2), j[a]);
      worst = std::max(worst, frob_norm(commutator(sym.h, op)));
    }
    const auto a = channel_series(pd_dep, grid), b = channel_series(sym, grid);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t m = 0; m < 4; ++m) worst = std::max(worst, std::abs(a[i].p[m] - b[i].p[m]));
    return worst;
  });
  s.residual("physdil.rotating_phase", 1e-9, [&] {
    const auto r = rotating_phase_demo(pd_deph, pauli_matrix::X(), grid);
    return std::max(r.max_probability_diff(), r.max_rep_diff());
  });
  s.residual("physdil.alternate_initial_state", 1e-10, [&] {
    const auto r = alternate_initial_state_demo(grid);
    return std::max({r.max_channel_error, r.max_isometry_error, r.max_rep_error,
                     r.max_invariance_error});
  });
  s.residual("physdil.schedule_round_trip", 1e-6, [&] {
    const double dt = 0.01;
    std::vector<double> target;
    for (int k = 0; k <= 300; ++k) target.push_back(std::pow(std::sin(3.0 * dt * k), 2));
    const auto fits = evolve_schedule(pd_deph, schedule_for_target(target, dt));
    double worst = 0.0;
    for (std::size_t k = 0; k < fits.size(); ++k)
      worst = std::max(worst, std::abs(fits[k].p[3] - target[k]));
    return worst;
  });

  // collision
  s.residual("collision.bath_conditions", 1e-15, [&] {
    double worst = frob_dist(bath_coefficients(), CMat::identity(3));
    for (cplx m : bath_means()) worst = std::max(worst, std::abs(m));
    return worst;
  });
  s.residual("collision.trace_and_positivity", 1e-12, [&] {
    const CollisionConfig cfg{{0.6, 0.5, 0.4}, 1.0, 0.05, 20};
    double worst = 0.0;
    for (const auto& rho : simulate_semigroup(cfg, default_probe_state()))
      worst = std::max(worst, density_matrix_defect(rho));
    return worst;
  });
  s.exact("collision.hamiltonian_in_commutant", [&] {
    const CollisionConfig cfg{{0.6, 0.5, 0.4}, 1.0, 0.05, 1};
    return commutant_violations(collision_hamiltonian(cfg),
                                symmetry_strings(paulis, kraus_env_rep(PauliChannel::depolarizing(0.3)).rep));
  });
  const std::vector<double> dts{0.1, 0.05, 0.025, 0.0125};
  for (const auto& [name, a] : {std::pair<const char*, Vec3>{"dephasing", {0.0, 0.0, 1.0}},
                                std::pair<const char*, Vec3>{"depolarizing", {1.0, 1.0, 1.0}}}) {
    s.exact(std::string("collision.first_order_convergence_") + name, [&, a] {
      const CollisionConfig cfg{a, 1.0, 0.1, 10};
      double bad = 0.0;
      for (const auto& r : convergence_report(cfg, dts, 1.0, default_probe_state()))
        if (r.ratio && !(*r.ratio >= 1.6 && *r.ratio <= 2.4)) bad += 1.0;
      return bad;
    });
    s.residual(std::string("collision.rate_recovery_") + name, 0.02, [&, a] {
      const CollisionConfig cfg{a, 1.0, 0.0125, 80};
      const auto traj = simulate_semigroup(cfg, default_probe_state());
      const auto kappa = fit_decay_rates(traj, cfg.dt);
      const Vec3 g = rates_from_decay({*kappa[0], *kappa[1], *kappa[2]});
      const Vec3 target = cfg.target_rates();
      const double scale = std::max({target[0], target[1], target[2]});
      double worst = 0.0;
      for (std::size_t i = 0; i < 3; ++i)
        worst = std::max(worst, target[i] > 0.0 ? std::abs(g[i] - target[i]) / target[i]
                                                : std::abs(g[i]) / scale);
      return worst;
    });
  }
  return s.take();
}

}  // namespace pauli_dilate
