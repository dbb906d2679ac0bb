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
#include "pauli_dilate/matcore.hpp"

namespace pd = pauli_dilate;
using pd::CMat;
using pd::cplx;

namespace {

CMat bell_projector() {
  CMat v(4, 1);
  v(0, 0) = 1.0 / std::sqrt(2.0);
  v(3, 0) = 1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

}  // namespace

TEST(CMat, RejectsRaggedInitializer) {
  EXPECT_THROW((CMat{{1.0, 2.0}, {3.0}}), pd::MatrixError);
}

TEST(CMat, RejectsNonFiniteEntries) {
  EXPECT_THROW(CMat(1, 1, {cplx(NAN, 0.0)}), pd::MatrixError);
  EXPECT_THROW(CMat(1, 2, {cplx(1.0, 0.0)}), pd::MatrixError);
}

TEST(CMat, ShapeMismatchThrows) {
  EXPECT_THROW(CMat(2, 2) * CMat(3, 3), pd::MatrixError);
  EXPECT_THROW(CMat(2, 2) + CMat(2, 3), pd::MatrixError);
}

TEST(Kron, IdentityCase) {
  EXPECT_EQ(pd::kron(CMat::identity(2), CMat::identity(2)), CMat::identity(4));
}

TEST(Kron, ZxXBlockStructure) {
  const CMat k = pd::kron(oracle::sz(), oracle::sx());
  const CMat expected{{0.0, 1.0, 0.0, 0.0},
                      {1.0, 0.0, 0.0, 0.0},
                      {0.0, 0.0, 0.0, -1.0},
                      {0.0, 0.0, -1.0, 0.0}};
  EXPECT_EQ(k, expected);
}

TEST(Kron, MatchesEigenOnThreeQubits) {
  const CMat k = pd::kron(oracle::sx(), pd::kron(oracle::sz(), oracle::id2()));
  EXPECT_LT(oracle::max_entry_diff(k, oracle::ekron(oracle::sx(), oracle::ekron(oracle::sz(), oracle::id2()))), 1e-15);
  EXPECT_EQ(pd::kron({oracle::sx(), oracle::sz(), oracle::id2()}), k);
}

TEST(Kron, Associative) {
  std::mt19937_64 rng(7);
  const CMat a = pd::random_hermitian(2, rng), b = pd::random_hermitian(3, rng),
             c = pd::random_hermitian(2, rng);
  EXPECT_LT(pd::frob_dist(pd::kron(pd::kron(a, b), c), pd::kron(a, pd::kron(b, c))), 1e-13);
}

TEST(PartialTrace, Identity) {
  EXPECT_LT(pd::frob_dist(pd::partial_trace_env(CMat::identity(4), 2, 2), 2.0 * CMat::identity(2)),
            1e-15);
}

TEST(PartialTrace, ProductState) {
  std::mt19937_64 rng(3);
  const CMat rho = pd::random_density_matrix(2, rng);
  const CMat e = CMat::basis_vector(2, 0);
  EXPECT_LT(pd::frob_dist(pd::partial_trace_env(pd::kron(rho, e * e.adjoint()), 2, 2), rho), 1e-15);
}

TEST(PartialTrace, BellState) {
  EXPECT_LT(pd::frob_dist(pd::partial_trace_env(bell_projector(), 2, 2), 0.5 * CMat::identity(2)),
            1e-15);
}

TEST(PartialTrace, ProductLaw) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) {
    const CMat a = pd::random_hermitian(2, rng), b = pd::random_hermitian(3, rng);
    EXPECT_LT(pd::frob_dist(pd::partial_trace_env(pd::kron(a, b), 2, 3), b.trace() * a), 1e-12);
    EXPECT_LT(pd::frob_dist(pd::partial_trace_sys(pd::kron(a, b), 2, 3), a.trace() * b), 1e-12);
  }
}

TEST(PartialTrace, DimensionMismatchThrows) {
  EXPECT_THROW(pd::partial_trace_env(CMat::identity(4), 2, 3), pd::MatrixError);
}

TEST(MatExp, ZeroGenerator) {
  EXPECT_LT(pd::frob_dist(pd::mat_exp_hermitian(CMat(4, 4), 1.3), CMat::identity(4)), 1e-15);
}

TEST(MatExp, ZxXClosedForm) {
  const CMat h = pd::kron(oracle::sz(), oracle::sx());
  for (double t : {0.1, 0.7, 2.0, 5.5}) {
    const CMat expected = std::cos(t) * CMat::identity(4) - cplx(0.0, std::sin(t)) * h;
    EXPECT_LT(pd::frob_dist(pd::mat_exp_hermitian(h, t), expected), 1e-12) << t;
  }
}

TEST(MatExp, MatchesEigenAndIsUnitary) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    const CMat h = pd::random_hermitian(8, rng) * 3.0;
    const CMat u = pd::mat_exp_hermitian(h, 1.7);
    const oracle::EMat ref = (oracle::to_eigen(h) * cplx(0.0, -1.7)).exp();
    EXPECT_LT(oracle::max_entry_diff(u, oracle::from_eigen(ref)), 1e-10);
    EXPECT_LT(pd::unitarity_defect(u), 1e-10);
  }
}

TEST(MatExp, GroupLaw) {
  std::mt19937_64 rng(9);
  const CMat h = pd::random_hermitian(4, rng);
  EXPECT_LT(pd::frob_dist(pd::mat_exp_hermitian(h, 0.4) * pd::mat_exp_hermitian(h, 0.9),
                          pd::mat_exp_hermitian(h, 1.3)),
            1e-12);
}

TEST(MatExp, RejectsNonHermitian) {
  EXPECT_THROW(pd::mat_exp_hermitian(CMat{{0.0, 1.0}, {0.0, 0.0}}, 1.0), pd::MatrixError);
}

TEST(Norms, FrobDistExamples) {
  EXPECT_DOUBLE_EQ(pd::frob_dist(CMat::identity(2), CMat::identity(2)), 0.0);
  EXPECT_NEAR(pd::frob_dist(oracle::sx(), -oracle::sx()), 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(pd::frob_dist(oracle::sz(), oracle::id2()), 2.0, 1e-15);
  EXPECT_NEAR(pd::frob_norm(CMat::identity(4)), 2.0, 1e-15);
}

TEST(Eigen, RankExamples) {
  EXPECT_EQ(pd::eig_rank(CMat::identity(4), 1e-10), 4);
  EXPECT_EQ(pd::eig_rank(CMat(3, 3)), 0);
  EXPECT_EQ(pd::eig_rank(bell_projector()), 1);
}

TEST(Eigen, EighMatchesOracle) {
  std::mt19937_64 rng(13);
  const CMat h = pd::random_hermitian(6, rng);
  const auto es = pd::eigh(h);
  const auto ref = oracle::eigenvalues(h);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(es.values[i], ref(i), 1e-12);
  for (std::size_t i = 0; i < 6; ++i) {
    const CMat v = es.vectors.col(i);
    EXPECT_LT(pd::frob_dist(h * v, es.values[i] * v), 1e-11);
  }
}

TEST(LeastSquares, SolvesConsistentSystem) {
  std::mt19937_64 rng(17);
  const CMat a = pd::random_unitary(4, rng).block(0, 0, 4, 2);
  const CMat x{{1.0}, {cplx(0.0, 2.0)}};
  const auto sol = pd::lstsq(a, a * x);
  EXPECT_LT(pd::frob_dist(sol.x, x), 1e-12);
  EXPECT_LT(sol.residual, 1e-12);
  EXPECT_EQ(sol.rank, 2u);
}

TEST(GramSchmidt, ExtendsOrthonormally) {
  const CMat e0 = CMat::basis_vector(3, 0);
  CMat vs(3, 2);
  vs(0, 0) = 1.0;
  vs(1, 0) = 1.0;
  vs(0, 1) = 2.0;
  const CMat q = pd::gram_schmidt_extend(e0, vs);
  EXPECT_EQ(q.cols(), 2u);
  EXPECT_LT(pd::frob_dist(q.adjoint() * q, CMat::identity(2)), 1e-14);
}

TEST(TraceDistance, Examples) {
  const CMat up = CMat::basis_vector(2, 0) * CMat::basis_vector(2, 0).adjoint();
  const CMat down = CMat::basis_vector(2, 1) * CMat::basis_vector(2, 1).adjoint();
  EXPECT_NEAR(pd::trace_distance(up, down), 1.0, 1e-14);
  EXPECT_NEAR(pd::trace_distance(up, up), 0.0, 1e-14);
}

TEST(Random, DeterministicAndValid) {
  std::mt19937_64 a(42), b(42);
  const CMat u = pd::random_unitary(4, a);
  EXPECT_EQ(u, pd::random_unitary(4, b));
  EXPECT_LT(pd::unitarity_defect(u), 1e-12);
  std::mt19937_64 c(1);
  EXPECT_LT(pd::density_matrix_defect(pd::random_density_matrix(3, c)), 1e-12);
}

TEST(DensityMatrix, RejectsInvalid) {
  EXPECT_THROW(pd::require_density_matrix(CMat::identity(2)), pd::MatrixError);
  EXPECT_THROW(pd::require_density_matrix(oracle::sz()), pd::MatrixError);
}
