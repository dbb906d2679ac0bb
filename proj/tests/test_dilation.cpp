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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pauli_dilate/dilation.hpp"

namespace pd = pauli_dilate;
using pd::CMat;
using pd::cplx;
using pd::PauliChannel;

TEST(DilationFromKraus, PhaseDampingMatrix) {
  const double p = 0.3;
  const auto v = pd::dilation_from_kraus(pd::kraus_ops(PauliChannel::phase_damping(p)));
  EXPECT_EQ(v.dim_e, 2u);
  EXPECT_LT(oracle::max_entry_diff(v.v, oracle::v_phase_damp(p)), 1e-15);
}

TEST(DilationFromKraus, PhaseDampingPrimed) {
  const double p = 0.3;
  const auto v = pd::dilation_from_kraus(pd::kraus_ops(PauliChannel::phase_damping(p)),
                                         {cplx(1.0), cplx(0.0, -1.0)});
  EXPECT_LT(oracle::max_entry_diff(v.v, oracle::v_phase_damp_prime(p)), 1e-15);
}

TEST(DilationFromKraus, DepolarizingAndGeneric) {
  const double p = 0.3;
  const auto v = pd::dilation_from_kraus(pd::kraus_ops(PauliChannel::depolarizing(p)));
  EXPECT_EQ(v.dim_e, 4u);
  EXPECT_LT(oracle::max_entry_diff(v.v, oracle::v_depolarizing(p)), 1e-15);
  const auto g = pd::dilation_from_kraus(pd::kraus_ops(PauliChannel({0.4, 0.3, 0.2, 0.1})));
  EXPECT_LT(oracle::max_entry_diff(g.v, oracle::v_generic(0.3, 0.2, 0.1)), 1e-15);
}

TEST(DilationFromKraus, Errors) {
  EXPECT_THROW(pd::dilation_from_kraus({0.5 * CMat::identity(2)}), std::exception);
  EXPECT_THROW(pd::dilation_from_kraus({CMat::identity(2)}, {cplx(2.0)}), std::exception);
  EXPECT_THROW(pd::dilation_from_kraus({}), std::exception);
}

TEST(DilationFromPauli, KeepsFixedShapeAtEndpoints) {
  for (double p : {0.0, 1.0}) {
    const auto v = pd::dilation_from_pauli(PauliChannel::phase_damping(p), {0, 3});
    EXPECT_LT(oracle::max_entry_diff(v.v, oracle::v_phase_damp(p)), 1e-15) << p;
  }
}

TEST(ChannelOfIsometry, MatchesKrausSum) {
  std::mt19937_64 rng(19);
  const PauliChannel ch({0.4, 0.3, 0.2, 0.1});
  const auto v = pd::dilation_from_kraus(pd::kraus_ops(ch));
  for (int k = 0; k < 5; ++k) {
    const CMat rho = pd::random_density_matrix(2, rng);
    EXPECT_LT(pd::frob_dist(pd::channel_of_isometry(v, rho), pd::apply(ch, rho)), 1e-12);
  }
  EXPECT_THROW(pd::channel_of_isometry(v, CMat::identity(3)), std::exception);
}

TEST(ChannelOfIsometry, PhaseDampingDefinition) {
  std::mt19937_64 rng(23);
  const double p = 0.37;
  const pd::Isometry v(oracle::v_phase_damp(p), 2, 2);
  const CMat rho = pd::random_density_matrix(2, rng);
  const CMat expected = (1 - p) * rho + p * oracle::sz() * rho * oracle::sz();
  EXPECT_LT(pd::frob_dist(pd::channel_of_isometry(v, rho), expected), 1e-14);
}

TEST(ChannelOfIsometry, EnvironmentUnitaryFreedom) {
  std::mt19937_64 rng(29);
  const pd::Isometry v(oracle::v_depolarizing(0.4), 2, 4);
  const CMat w = pd::random_unitary(4, rng);
  const pd::Isometry vw(oracle::ekron(oracle::id2(), w) * v.v, 2, 4);
  const CMat rho = pd::random_density_matrix(2, rng);
  EXPECT_LT(pd::frob_dist(pd::channel_of_isometry(vw, rho), pd::channel_of_isometry(v, rho)), 1e-13);
}

TEST(ChannelOfIsometry, IdentityChannel) {
  std::mt19937_64 rng(31);
  const pd::Isometry v(oracle::v_generic(0, 0, 0), 2, 4);
  const CMat rho = pd::random_density_matrix(2, rng);
  EXPECT_LT(pd::frob_dist(pd::channel_of_isometry(v, rho), rho), 1e-15);
}

TEST(Isometry, RejectsNonIsometry) {
  EXPECT_THROW(pd::Isometry(2.0 * oracle::v_phase_damp(0.2), 2, 2), std::exception);
  EXPECT_THROW(pd::Isometry(oracle::v_phase_damp(0.2), 2, 3), std::exception);
}

TEST(SolveEnvRep, PhaseDamping) {
  const auto sol = pd::solve_env_rep(pd::Isometry(oracle::v_phase_damp(0.3), 2, 2),
                                     pd::pauli_defining_rep());
  ASSERT_EQ(sol.rep.size(), 16u);
  for (std::size_t g = 0; g < 16; ++g)
    EXPECT_LT(oracle::max_entry_diff(sol.rep.mats[g], oracle::rep_phase_damp(oracle::factor_of(sol.rep.labels[g]))),
              1e-10)
        << sol.rep.labels[g];
  EXPECT_LT(sol.max_residual(), 1e-10);
  ASSERT_TRUE(sol.rep_law_defect.has_value());
  EXPECT_LT(*sol.rep_law_defect, 1e-10);
}

TEST(SolveEnvRep, DepolarizingAndGenericAgree) {
  for (const CMat& v : {oracle::v_depolarizing(0.3), oracle::v_generic(0.3, 0.2, 0.1),
                        oracle::v_generic(0.05, 0.5, 0.15)}) {
    const auto sol = pd::solve_env_rep(pd::Isometry(v, 2, 4), pd::pauli_defining_rep());
    for (std::size_t g = 0; g < 16; ++g)
      EXPECT_LT(oracle::max_entry_diff(sol.rep.mats[g],
                                       oracle::rep_depolarizing(oracle::factor_of(sol.rep.labels[g]))),
                1e-10)
          << sol.rep.labels[g];
    EXPECT_LT(*sol.rep_law_defect, 1e-10);
  }
}

TEST(SolveEnvRep, CovariesWithEnvironmentUnitary) {
  std::mt19937_64 rng(37);
  const CMat w = pd::random_unitary(4, rng);
  const pd::Isometry v(oracle::v_depolarizing(0.3), 2, 4);
  const pd::Isometry vw(oracle::ekron(oracle::id2(), w) * v.v, 2, 4);
  const auto a = pd::solve_env_rep(v, pd::pauli_defining_rep());
  const auto b = pd::solve_env_rep(vw, pd::pauli_defining_rep());
  for (std::size_t g = 0; g < 16; ++g)
    EXPECT_LT(pd::frob_dist(b.rep.mats[g], w * a.rep.mats[g] * w.adjoint()), 1e-9);
}

TEST(SolveEnvRep, CharactersOfPhaseDamping) {
  // pi_E is diagonal: the (|1>) block is trivial, the (|0>) block is sgn_xy.
  const auto sol = pd::solve_env_rep(pd::Isometry(oracle::v_phase_damp(0.3), 2, 2),
                                     pd::pauli_defining_rep());
  for (std::size_t g = 0; g < 16; ++g) {
    const char f = oracle::factor_of(sol.rep.labels[g]);
    EXPECT_NEAR(sol.rep.mats[g](0, 0).real(), 1.0, 1e-10);
    EXPECT_NEAR(sol.rep.mats[g](1, 1).real(), (f == 'X' || f == 'Y') ? -1.0 : 1.0, 1e-10);
  }
}

TEST(SolveEnvRep, RejectsNonMinimalAndNonCovariant) {
  EXPECT_THROW(pd::solve_env_rep(pd::Isometry(oracle::v_phase_damp(0.0), 2, 2), pd::pauli_defining_rep()),
               pd::DilationError);
  const double g = 0.3;
  const auto ad = pd::dilation_from_kraus(
      {CMat{{std::sqrt(1 - g), 0.0}, {0.0, 1.0}}, CMat{{0.0, 0.0}, {std::sqrt(g), 0.0}}});
  EXPECT_THROW(pd::solve_env_rep(ad, pd::pauli_defining_rep()), pd::DilationError);
}

TEST(SolveEnvRep, StrongConservationGivesIdentity) {
  const auto sc = pd::check_strong_conservation(pd::kraus_ops(PauliChannel::phase_damping(0.3)), oracle::sz());
  ASSERT_TRUE(sc.conserved);
  const auto sol = pd::solve_env_rep(pd::Isometry(oracle::v_phase_damp(0.3), 2, 2),
                                     pd::pauli_defining_rep());
  EXPECT_LT(pd::frob_dist(sol.rep.at("Z"), CMat::identity(2)), 1e-10);
}

TEST(SymmetryStrings, PhaseDampingAndDepolarizing) {
  const auto pdsol = pd::solve_env_rep(pd::Isometry(oracle::v_phase_damp(0.3), 2, 2),
                                       pd::pauli_defining_rep());
  auto s = pd::symmetry_strings(pd::pauli_defining_rep(), pdsol.rep);
  std::vector<std::string> n;
  for (const auto& p : s) n.push_back(p.to_string());
  EXPECT_EQ(n, (std::vector<std::string>{"XZ", "YZ", "ZI"}));

  const auto dsol = pd::solve_env_rep(pd::Isometry(oracle::v_depolarizing(0.3), 2, 4),
                                      pd::pauli_defining_rep());
  s = pd::symmetry_strings(pd::pauli_defining_rep(), dsol.rep);
  n.clear();
  for (const auto& p : s) n.push_back(p.to_string());
  EXPECT_EQ(n, (std::vector<std::string>{"XZI", "YIZ", "ZZZ"}));
}

TEST(Su2Generators, DepolarizingMatchesClosedForm) {
  const auto j = pd::solve_su2_generators(pd::Isometry(oracle::v_depolarizing(0.3), 2, 4));
  const auto ref = oracle::su2_generators();
  for (std::size_t a = 0; a < 3; ++a) {
    EXPECT_LT(oracle::max_entry_diff(j[a], ref[a]), 1e-10) << a;
    EXPECT_LT(j.residuals[a], 1e-10);
  }
  EXPECT_LT(pd::su2_algebra_defect(j), 1e-10);
  const CMat comm = pd::commutator(j.jx, j.jy);
  EXPECT_LT(pd::frob_dist(comm, cplx(0.0, 2.0) * j.jz), 1e-10);
}

TEST(Su2Generators, SpectrumOfUnitAxis) {
  const auto j = pd::solve_su2_generators(pd::Isometry(oracle::v_depolarizing(0.6), 2, 4));
  const double r[3] = {0.36, 0.48, 0.8};
  const CMat rj = r[0] * j.jx + r[1] * j.jy + r[2] * j.jz;
  const auto ev = oracle::eigenvalues(rj);
  EXPECT_NEAR(ev(0), -2.0, 1e-10);
  EXPECT_NEAR(ev(1), 0.0, 1e-10);
  EXPECT_NEAR(ev(2), 0.0, 1e-10);
  EXPECT_NEAR(ev(3), 2.0, 1e-10);
}

TEST(Su2Generators, RejectsNonDepolarizing) {
  EXPECT_THROW(pd::solve_su2_generators(pd::Isometry(oracle::v_generic(0.3, 0.2, 0.1), 2, 4)),
               pd::DilationError);
}

TEST(StrongConservation, Examples) {
  const auto pdk = pd::kraus_ops(PauliChannel::phase_damping(0.3));
  const auto z = pd::check_strong_conservation(pdk, oracle::sz());
  EXPECT_TRUE(z.conserved);
  ASSERT_TRUE(z.isometry_residual.has_value());
  EXPECT_LT(*z.isometry_residual, 1e-12);
  EXPECT_FALSE(pd::check_strong_conservation(pdk, oracle::sx()).conserved);
  EXPECT_FALSE(
      pd::check_strong_conservation(pd::kraus_ops(PauliChannel::depolarizing(0.3)), oracle::sz()).conserved);
}
