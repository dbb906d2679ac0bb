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

// Acceptance criteria, one PASS/FAIL line each.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pauli_dilate/channel.hpp"
#include "pauli_dilate/collision.hpp"
#include "pauli_dilate/dilation.hpp"
#include "pauli_dilate/group_rep.hpp"
#include "pauli_dilate/pauli.hpp"
#include "pauli_dilate/physdil.hpp"

using namespace pauli_dilate;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void within(double value, double tol, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s = %.3g (tol %.1g)", what.c_str(), value, tol);
    require(value < tol, buf);
    worst = std::max(worst, value);
  }
  double worst = 0.0;
};

constexpr double kSqrt3 = 1.7320508075688772;

std::vector<double> grid() { return verification_grid(); }

// 1. Dilation isometries against the displayed matrices.
Outcome criterion1() {
  Outcome o;
  for (double p : {0.0, 0.3, 1.0}) {
    const Isometry v = dilation_from_pauli(PauliChannel::phase_damping(p), {0, 3});
    o.within(oracle::max_entry_diff(v.v, oracle::v_phase_damp(p)), 1e-12,
             "phase damping p=" + std::to_string(p));
  }
  for (double p : {0.0, 0.3, 0.75}) {
    const Isometry v = dilation_from_pauli(PauliChannel::depolarizing(p), {0, 1, 2, 3});
    o.within(oracle::max_entry_diff(v.v, oracle::v_depolarizing(p)), 1e-12,
             "depolarizing p=" + std::to_string(p));
  }
  const Isometry g = dilation_from_pauli(PauliChannel({0.4, 0.3, 0.2, 0.1}), {0, 1, 2, 3});
  o.within(oracle::max_entry_diff(g.v, oracle::v_generic(0.3, 0.2, 0.1)), 1e-12, "generic");
  return o;
}

// 2. Environment representations.
Outcome criterion2() {
  Outcome o;
  const GroupRep sys = pauli_defining_rep();
  const auto check_rep = [&](const EnvRepSolution& sol, CMat (*ref)(char), const std::string& n) {
    double worst = 0.0;
    for (std::size_t g = 0; g < sys.size(); ++g)
      worst = std::max(worst, oracle::max_entry_diff(sol.rep.mats[g],
                                                     ref(oracle::factor_of(sys.labels[g]))));
    o.within(worst, 1e-10, n);
    // Phase variants share one matrix.
    double spread = 0.0;
    for (const char* f : {"I", "X", "Y", "Z"})
      for (const char* ph : {"-", "+i", "-i"})
        spread = std::max(spread, oracle::max_entry_diff(sol.rep.at(std::string(ph) + f),
                                                         sol.rep.at(f)));
    o.within(spread, 1e-10, n + " phase variants");
  };
  for (double p : {0.3, 0.5}) {
    check_rep(solve_env_rep(dilation_from_pauli(PauliChannel::phase_damping(p), {0, 3}), sys),
              oracle::rep_phase_damp, "phase damping p=" + std::to_string(p));
    check_rep(solve_env_rep(dilation_from_pauli(PauliChannel::depolarizing(p), {0, 1, 2, 3}), sys),
              oracle::rep_depolarizing, "depolarizing p=" + std::to_string(p));
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<EnvRepSolution> sols;
  for (int k = 0; k < 5; ++k) {
    std::array<double, 4> p{};
    double s = 0.0;
    for (double& x : p) s += (x = u(rng));
    for (double& x : p) x /= s;
    sols.push_back(solve_env_rep(dilation_from_pauli(PauliChannel(p), {0, 1, 2, 3}), sys));
  }
  double pair = 0.0;
  for (std::size_t a = 0; a < sols.size(); ++a)
    for (std::size_t b = a + 1; b < sols.size(); ++b)
      for (std::size_t g = 0; g < sys.size(); ++g)
        pair = std::max(pair, frob_dist(sols[a].rep.mats[g], sols[b].rep.mats[g]));
  o.within(pair, 1e-10, "generic pairwise distance");
  return o;
}

// 3. SU(2) generators and spin content.
Outcome criterion3() {
  Outcome o;
  const auto ref = oracle::su2_generators();
  const SU2Generators j =
      solve_su2_generators(dilation_from_pauli(PauliChannel::depolarizing(0.3), {0, 1, 2, 3}));
  for (std::size_t a = 0; a < 3; ++a)
    o.within(oracle::max_entry_diff(j[a], ref[a]), 1e-10, "J" + std::string(1, "xyz"[a]));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < 5; ++k) {
    std::array<double, 3> r{gauss(rng), gauss(rng), gauss(rng)};
    const double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    CMat rj(4, 4);
    for (std::size_t a = 0; a < 3; ++a) rj += j[a] * (r[a] / n);
    const auto ev = oracle::eigenvalues(rj);
    const double expected[4] = {-2.0, 0.0, 0.0, 2.0};
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(ev(i) - expected[i]));
    o.within(d, 1e-10, "spectrum of r.J");
  }
  return o;
}

// 4. Pauli commutants.
Outcome criterion4() {
  Outcome o;
  const auto parse = [](std::initializer_list<const char*> xs) {
    std::vector<PauliString> v;
    for (const char* x : xs) v.push_back(PauliString::parse(x));
    return v;
  };
  const auto deph = pauli_commutant(parse({"ZI", "XZ", "YZ"}), 2);
  o.require(deph == parse({"II", "IZ", "ZX", "ZY"}), "phase damping commutant mismatch");
  const auto dep = pauli_commutant(parse({"ZZZ", "XZI", "YIZ"}), 3);
  o.require(dep.size() == 16, "depolarizing commutant size " + std::to_string(dep.size()));
  for (const char* s : {"XIX", "YXI", "ZXX"})
    o.require(std::find(dep.begin(), dep.end(), PauliString::parse(s)) != dep.end(),
              std::string("missing ") + s);
  return o;
}

// 5. Time-evolution fits against closed forms.
Outcome criterion5() {
  Outcome o;
  const auto g = grid();
  const auto run = [&](const PhysicalDilation& pd, auto expected, const std::string& name) {
    double err = 0.0, leak = 0.0;
    for (const ChannelFit& f : channel_series(pd, g)) {
      const std::array<double, 4> e = expected(f.t);
      for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(f.p[i] - e[i]));
      leak = std::max(leak, f.leakage);
    }
    o.within(err, 1e-10, name);
    o.within(leak, 1e-10, name + " leakage");
  };
  run(build_phase_damping_dilation(), [](double t) {
    const double p = 0.5 * (1.0 - std::cos(2.0 * t));
    return std::array<double, 4>{1.0 - p, 0.0, 0.0, p};
  }, "phase damping");
  run(build_depolarizing_dilation(), [](double t) {
    const double p = 0.5 * (1.0 - std::cos(2.0 * kSqrt3 * t));
    return std::array<double, 4>{1.0 - p, p / 3.0, p / 3.0, p / 3.0};
  }, "depolarizing");
  for (const std::array<double, 3> a : {std::array<double, 3>{0.6, 0.5, 0.4},
                                        std::array<double, 3>{0.3, 0.2, 0.9},
                                        std::array<double, 3>{0.0, 0.0, 0.7}}) {
    const double xi = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
    run(build_generic_pauli_dilation(a[0], a[1], a[2]), [&](double t) {
      const double s2 = std::pow(std::sin(std::sqrt(xi) * t), 2);
      return std::array<double, 4>{1.0 - s2, a[0] * a[0] * s2 / xi, a[1] * a[1] * s2 / xi,
                                   a[2] * a[2] * s2 / xi};
    }, "generic xi=" + std::to_string(xi));
  }
  return o;
}

// 6. Invariant state, restricted commutators and Krylov dimension.
Outcome criterion6() {
  Outcome o;
  const PhysicalDilation deph = build_phase_damping_dilation();
  const PhysicalDilation dep = build_depolarizing_dilation();
  const PhysicalDilation gen = build_generic_pauli_dilation(0.6, 0.5, 0.4);
  for (double t : {0.4, 1.0, 2.5}) {
    o.within(invariant_state_residual(deph, t), 1e-10, "phase damping invariant state");
    o.within(invariant_state_residual(dep, t), 1e-10, "depolarizing invariant state");
    o.within(invariant_state_residual(gen, t), 1e-10, "generic invariant state");
  }
  // The displayed representations fix the builders' states too.
  double ref = 0.0;
  for (char f : {'I', 'X', 'Y', 'Z'}) {
    ref = std::max(ref, frob_dist(oracle::rep_phase_damp(f) * deph.psi_e, deph.psi_e));
    ref = std::max(ref, frob_dist(oracle::rep_depolarizing(f) * dep.psi_e, dep.psi_e));
  }
  o.within(ref, 1e-10, "reference representation invariance");

  const KrylovSubspace k = krylov_subspace(dep);
  o.require(k.dim == 4, "Krylov dimension " + std::to_string(k.dim));
  // Spanned by |111>, |011> and their images under h.
  CMat seeds(8, 4);
  seeds.set_col(0, CMat::basis_vector(8, 0));
  seeds.set_col(1, CMat::basis_vector(8, 4));
  seeds.set_col(2, dep.h * CMat::basis_vector(8, 0));
  seeds.set_col(3, dep.h * CMat::basis_vector(8, 4));
  const CMat p = k.projector();
  o.within(frob_norm(p * seeds - seeds), 1e-10, "Krylov span contains the displayed vectors");
  const auto j = oracle::su2_generators();
  for (std::size_t a = 0; a < 3; ++a) {
    const CMat s = oracle::ekron(std::array<CMat, 3>{oracle::sx(), oracle::sy(), oracle::sz()}[a],
                                 CMat::identity(4)) +
                   oracle::ekron(oracle::id2(), j[a]);
    o.within(restricted_commutator_norm(dep, s, k), 1e-10, "restricted commutator");
  }
  return o;
}

// 7. Full symmetrization.
Outcome criterion7() {
  Outcome o;
  const PhysicalDilation dep = build_depolarizing_dilation();
  const PhysicalDilation sym = symmetrize_full(dep, krylov_subspace(dep));
  double err = 0.0;
  for (const ChannelFit& f : channel_series(sym, grid())) {
    const double p = 0.5 * (1.0 - std::cos(2.0 * kSqrt3 * f.t));
    const std::array<double, 4> e{1.0 - p, p / 3.0, p / 3.0, p / 3.0};
    for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(f.p[i] - e[i]));
  }
  o.within(err, 1e-9, "symmetrized p(t)");
  const auto j = oracle::su2_generators();
  const std::array<CMat, 3> s{oracle::sx(), oracle::sy(), oracle::sz()};
  for (std::size_t a = 0; a < 3; ++a) {
    const CMat op = oracle::ekron(s[a], CMat::identity(4)) + oracle::ekron(oracle::id2(), j[a]);
    const CMat c = sym.h * op - op * sym.h;
    o.within(frob_norm(c), 1e-9, "full-space commutator");
  }
  return o;
}

// 8. Rotating phase, alternate initial state and unitary freedom.
Outcome criterion8() {
  Outcome o;
  const PhysicalDilation deph = build_phase_damping_dilation();
  const auto g = grid();
  const RotatingPhaseReport rot = rotating_phase_demo(deph, oracle::sx(), g);
  o.within(rot.max_probability_diff(), 1e-10, "rotating phase probabilities");
  o.within(rot.max_rep_diff(), 1e-9, "rotating representation");

  const PhysicalDilation alt(deph.h, CMat::basis_vector(2, 1));
  const GroupRep sys = pauli_defining_rep();
  for (double t : {0.3, 0.7, 1.2}) {
    const double c = std::cos(t), s = std::sin(t);
    const CMat vt{{-oracle::kI * s, 0.0}, {c, 0.0}, {0.0, oracle::kI * s}, {0.0, c}};
    const Isometry v = isometry_at(alt, t);
    o.within(oracle::max_entry_diff(v.v, vt), 1e-12, "tilde isometry");
    const EnvRepSolution sol = solve_env_rep(v, sys);
    double d = 0.0, inv = 0.0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
      d = std::max(d, oracle::max_entry_diff(sol.rep.mats[k],
                                             oracle::rep_phase_damp_tilde(oracle::factor_of(sys.labels[k]))));
      inv = std::max(inv, frob_dist(sol.rep.mats[k] * alt.psi_e, alt.psi_e));
    }
    o.within(d, 1e-10, "tilde representation");
    o.within(inv, 1e-10, "tilde invariance");
  }

  std::mt19937_64 rng(99);
  for (const auto& [ch, alphas] :
       {std::pair{PauliChannel::phase_damping(0.3), std::vector<std::size_t>{0, 3}},
        std::pair{PauliChannel({0.4, 0.3, 0.2, 0.1}), std::vector<std::size_t>{0, 1, 2, 3}}}) {
    const Isometry v = dilation_from_pauli(ch, alphas);
    const EnvRepSolution base = solve_env_rep(v, sys);
    for (int k = 0; k < 5; ++k) {
      const CMat w = random_unitary(v.dim_e, rng);
      const Isometry vw(oracle::ekron(oracle::id2(), w) * v.v, 2, v.dim_e);
      const EnvRepSolution moved = solve_env_rep(vw, sys);
      double d = 0.0;
      for (std::size_t e = 0; e < sys.size(); ++e)
        d = std::max(d, frob_dist(moved.rep.mats[e], w * base.rep.mats[e] * w.adjoint()));
      o.within(d, 1e-9, "W_E conjugation");
    }
  }
  return o;
}

// 9. Semigroup against the superoperator exponential.
Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const std::array<double, 3> gamma{u(rng), u(rng), u(rng)};
    for (double t : {0.1, 1.0, 5.0}) {
      const CMat ref = oracle::choi_of_superop(oracle::semigroup_superop(gamma, t));
      worst = std::max(worst, frob_dist(choi(semigroup_channel(PauliLiouvillian(gamma), t)), ref));
    }
  }
  o.within(worst, 1e-9, "Choi distance");
  return o;
}

// 10. Collision convergence and rate recovery.
Outcome criterion10() {
  Outcome o;
  const std::vector<double> dts{0.1, 0.05, 0.025, 0.0125};
  for (const auto& [name, a] : {std::pair<std::string, Vec3>{"dephasing", {0.0, 0.0, 1.0}},
                                std::pair<std::string, Vec3>{"depolarizing", {1.0, 1.0, 1.0}}}) {
    const CollisionConfig cfg{a, 1.0, 0.1, 10};
    const auto rows = convergence_report(cfg, dts, 1.0, default_probe_state());
    for (std::size_t i = 1; i < rows.size(); ++i) {
      o.require(rows[i].max_error < rows[i - 1].max_error, name + " error not decreasing");
      const double r = rows[i - 1].max_error / rows[i].max_error;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s ratio %.3f outside [1.6, 2.4]", name.c_str(), r);
      o.require(r >= 1.6 && r <= 2.4, buf);
    }
    const CollisionConfig fine{a, 1.0, 0.0125, 80};
    const auto traj = simulate_semigroup(fine, default_probe_state());
    const auto kappa = fit_decay_rates(traj, fine.dt);
    const Vec3 gam = rates_from_decay({*kappa[0], *kappa[1], *kappa[2]});
    const Vec3 target = fine.target_rates();
    const double scale = std::max({target[0], target[1], target[2]});
    double rel = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      // Absent channels are judged against the largest rate.
      const double ref = target[i] > 0.0 ? target[i] : scale;
      rel = std::max(rel, std::abs(gam[i] - target[i]) / ref);
    }
    o.within(rel, 0.02, name + " rate error");
  }
  return o;
}

// 11. Property suite.
Outcome criterion11() {
  Outcome o;
  const auto group = pauli_group();
  std::size_t bad = 0;
  for (const auto& a : group)
    for (const auto& b : group) {
      const PauliString ab = a * b;
      if (std::find(group.begin(), group.end(), ab) == group.end()) ++bad;
      if (oracle::max_entry_diff(to_matrix(ab), to_matrix(a) * to_matrix(b)) != 0.0) ++bad;
    }
  o.require(bad == 0, std::to_string(bad) + " multiplication table defects");

  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double cptp = 0.0;
  for (int k = 0; k < 100; ++k) {
    std::array<double, 4> p{};
    double s = 0.0;
    for (double& x : p) s += (x = u(rng));
    for (double& x : p) x /= s;
    const CMat c = choi(PauliChannel(p));
    cptp = std::max(cptp, std::max(0.0, -oracle::min_eigenvalue(c)));
    // Trace preservation: Tr_out C = I.
    CMat tr(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) tr(i, j) = c(2 * i, 2 * j) + c(2 * i + 1, 2 * j + 1);
    cptp = std::max(cptp, oracle::max_entry_diff(tr, oracle::id2()));
  }
  o.within(cptp, 1e-12, "CPTP defect");

  const EnvRepSolution deph =
      solve_env_rep(dilation_from_pauli(PauliChannel::phase_damping(0.3), {0, 3}), pauli_defining_rep());
  o.within(oracle::max_entry_diff(deph.rep.at("Z"), oracle::id2()), 1e-10, "pi_E(Z) - I");

  const double dt = 0.01;
  std::vector<double> target;
  for (int k = 0; k <= 300; ++k) target.push_back(std::pow(std::sin(3.0 * dt * k), 2));
  const auto fits = evolve_schedule(build_phase_damping_dilation(), schedule_for_target(target, dt));
  double err = 0.0;
  for (std::size_t k = 0; k < fits.size(); ++k) err = std::max(err, std::abs(fits[k].p[3] - target[k]));
  o.within(err, 1e-6, "schedule round trip");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"isometries reproduce the displayed matrices", criterion1},
      {"environment representations", criterion2},
      {"SU(2) generators and spin-0 + spin-1 spectrum", criterion3},
      {"Pauli commutants", criterion4},
      {"time-evolution fits", criterion5},
      {"invariant state, restricted commutators, Krylov dimension", criterion6},
      {"full symmetrization", criterion7},
      {"rotating phase and dilation freedom", criterion8},
      {"semigroup vs superoperator exponential", criterion9},
      {"collision convergence and rate recovery", criterion10},
      {"property suite", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %zu: %s", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    if (o.ok) {
      std::printf(" (worst %.3g)\n", o.worst);
    } else {
      std::printf(" -- %s\n", o.detail.c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
