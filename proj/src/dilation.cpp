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

#include "pauli_dilate/dilation.hpp"

#include "pauli_dilate/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>

namespace pauli_dilate {

namespace {

// Columns of the linear map X -> (left (x) X) V, one per matrix unit E_ab,
// each vectorised by rows.
CMat env_unknown_design(const Isometry& v, const CMat& left) {
  const std::size_t de = v.dim_e;
  const std::size_t rows = v.v.rows() * v.v.cols();
  CMat a(rows, de * de);
  for (std::size_t i = 0; i < de; ++i)
    for (std::size_t j = 0; j < de; ++j) {
      CMat e(de, de);
      e(i, j) = 1.0;
      const CMat col = vec_rows(kron(left, e) * v.v);
      for (std::size_t r = 0; r < rows; ++r) a(r, i * de + j) = col(r, 0);
    }
  return a;
}

CMat unvec_square(const CMat& x, std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x(i * n + j, 0);
  return m;
}

struct EnvSolve {
  CMat x;
  double residual = 0.0;
  std::size_t rank = 0;
};

EnvSolve solve_env_unknown(const Isometry& v, const CMat& left, const CMat& rhs) {
  const LeastSquares ls = lstsq(env_unknown_design(v, left), vec_rows(rhs));
  return {unvec_square(ls.x, v.dim_e), ls.residual, ls.rank};
}

bool all_pauli_labels(const GroupRep& rep) {
  try {
    for (const auto& l : rep.labels) {
      const PauliString p = PauliString::parse(l);
      if (p.qubits() != 1) return false;
    }
  } catch (const MatrixError&) {
    return false;
  }
  return rep.size() == 16;
}

}  // namespace

Isometry::Isometry(CMat m, std::size_t ds, std::size_t de) : v(std::move(m)), dim_s(ds), dim_e(de) {
  if (v.rows() != dim_s * dim_e || v.cols() != dim_s) {
    throw MatrixError("Isometry: shape must be (dimS*dimE) x dimS");
  }
  if (defect() > 1e-10) {
    std::ostringstream os;
    os << "Isometry: V^dagger V deviates from identity by " << defect();
    throw DilationError(os.str());
  }
}

Isometry dilation_from_kraus(const std::vector<CMat>& kraus, const std::vector<cplx>& phases) {
  if (kraus.empty()) throw DilationError("dilation_from_kraus: empty Kraus list");
  if (!phases.empty() && phases.size() != kraus.size()) {
    throw DilationError("dilation_from_kraus: one phase per Kraus operator required");
  }
  const std::size_t ds = kraus.front().cols();
  const std::size_t de = kraus.size();
  CMat completeness(ds, ds);
  for (const auto& k : kraus) {
    if (k.rows() != ds || k.cols() != ds) {
      throw MatrixError("dilation_from_kraus: Kraus operators must share a square shape");
    }
    completeness += k.adjoint() * k;
  }
  if (frob_dist(completeness, CMat::identity(ds)) > 1e-10) {
    throw DilationError("dilation_from_kraus: Kraus set is not trace preserving");
  }
  CMat v(ds * de, ds);
  for (std::size_t j = 0; j < de; ++j) {
    cplx ph = 1.0;
    if (!phases.empty()) {
      ph = phases[j];
      if (std::abs(std::abs(ph) - 1.0) > 1e-12) {
        throw DilationError("dilation_from_kraus: phases must have unit modulus");
      }
    }
    for (std::size_t s = 0; s < ds; ++s)
      for (std::size_t c = 0; c < ds; ++c) v(s * de + j, c) = ph * kraus[j](s, c);
  }
  return Isometry(std::move(v), ds, de);
}

Isometry dilation_from_pauli(const PauliChannel& ch, const std::vector<std::size_t>& alphas) {
  std::vector<CMat> kraus;
  for (std::size_t a : alphas) kraus.push_back(sigma(a) * std::sqrt(ch.p(a)));
  return dilation_from_kraus(kraus);
}

CMat channel_of_isometry(const Isometry& v, const CMat& rho) {
  if (rho.rows() != v.dim_s || rho.cols() != v.dim_s) {
    throw MatrixError("channel_of_isometry: rho has the wrong shape");
  }
  return partial_trace_env(v.v * rho * v.v.adjoint(), v.dim_s, v.dim_e);
}

std::size_t dilation_span_dim(const Isometry& v, double tol) {
  CMat vectors(v.v.rows(), v.dim_s * v.dim_s * v.dim_s);
  std::size_t c = 0;
  for (std::size_t i = 0; i < v.dim_s; ++i)
    for (std::size_t j = 0; j < v.dim_s; ++j) {
      CMat e(v.dim_s, v.dim_s);
      e(i, j) = 1.0;
      const CMat img = kron(e, CMat::identity(v.dim_e)) * v.v;
      for (std::size_t k = 0; k < v.dim_s; ++k) vectors.set_col(c++, img.col(k));
    }
  return gram_schmidt_extend(CMat(), vectors, tol).cols();
}

double EnvRepSolution::max_residual() const {
  return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

double EnvRepSolution::max_unitarity_defect() const {
  return unitarity_defects.empty()
             ? 0.0
             : *std::max_element(unitarity_defects.begin(), unitarity_defects.end());
}

EnvRepSolution solve_env_rep(const Isometry& v, const GroupRep& sys_rep, double tol) {
  if (sys_rep.space_dim != v.dim_s) {
    throw MatrixError("solve_env_rep: representation does not act on the system space");
  }
  const std::size_t n = sys_rep.size();
  std::vector<EnvSolve> solves(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t g = 0; g < static_cast<std::int64_t>(n); ++g) {
    const CMat& u = sys_rep.mats[static_cast<std::size_t>(g)];
    solves[static_cast<std::size_t>(g)] = solve_env_unknown(v, u, v.v * u);
  }

  EnvRepSolution out;
  out.rep.space_dim = v.dim_e;
  out.rep.labels = sys_rep.labels;
  for (std::size_t g = 0; g < n; ++g) {
    const auto& s = solves[g];
    if (s.rank < v.dim_e * v.dim_e) {
      throw DilationError("solve_env_rep: environment representation is not unique for " +
                          sys_rep.labels[g] + " (dilation is not minimal)");
    }
    if (s.residual > tol) {
      std::ostringstream os;
      os << "solve_env_rep: residual " << s.residual << " for " << sys_rep.labels[g]
         << " exceeds tolerance (channel not covariant?)";
      throw DilationError(os.str());
    }
    const double ud = unitarity_defect(s.x);
    if (ud > 1e-9) {
      std::ostringstream os;
      os << "solve_env_rep: solution for " << sys_rep.labels[g] << " is not unitary (" << ud
         << ")";
      throw DilationError(os.str());
    }
    out.rep.mats.push_back(s.x);
    out.residuals.push_back(s.residual);
    out.unitarity_defects.push_back(ud);
  }
  if (all_pauli_labels(sys_rep)) out.rep_law_defect = pauli_rep_law_defect(out.rep);
  return out;
}

std::vector<PauliString> symmetry_strings(const GroupRep& sys_rep, const GroupRep& env_rep) {
  if (sys_rep.size() != env_rep.size()) {
    throw MatrixError("symmetry_strings: representations differ in size");
  }
  std::set<PauliString> out;
  for (std::size_t g = 0; g < sys_rep.size(); ++g) {
    const auto terms = pauli_basis_expand(kron(sys_rep.mats[g], env_rep.mats[g]));
    std::optional<PauliString> single;
    for (const auto& [p, c] : terms) {
      if (std::abs(c) <= 1e-10) continue;
      if (single) {
        throw DilationError("symmetry_strings: element " + sys_rep.labels[g] +
                            " is not a single Pauli string");
      }
      single = p;
    }
    if (!single) throw DilationError("symmetry_strings: zero element");
    if (*single != PauliString::identity(single->qubits())) out.insert(*single);
  }
  return {out.begin(), out.end()};
}

SU2Generators solve_su2_generators(const Isometry& v, double tol) {
  if (v.dim_s != 2) throw MatrixError("solve_su2_generators: system must be a qubit");
  SU2Generators out;
  std::array<CMat, 3> js;
  for (std::size_t a = 0; a < 3; ++a) {
    const CMat s = sigma(a + 1);
    const CMat rhs = v.v * s - kron(s, CMat::identity(v.dim_e)) * v.v;
    const EnvSolve sol = solve_env_unknown(v, CMat::identity(2), rhs);
    if (sol.rank < v.dim_e * v.dim_e) {
      throw DilationError("solve_su2_generators: generator is not uniquely determined");
    }
    if (sol.residual > tol) {
      std::ostringstream os;
      os << "solve_su2_generators: residual " << sol.residual << " on axis " << a
         << " (no SU(2)-covariant structure)";
      throw DilationError(os.str());
    }
    if (hermiticity_defect(sol.x) > tol) {
      std::ostringstream os;
      os << "solve_su2_generators: generator on axis " << a << " is not Hermitian (defect "
         << hermiticity_defect(sol.x) << ")";
      throw DilationError(os.str());
    }
    js[a] = sol.x;
    out.residuals[a] = sol.residual;
  }
  out.jx = js[0];
  out.jy = js[1];
  out.jz = js[2];
  return out;
}

double su2_algebra_defect(const SU2Generators& j) {
  double worst = 0.0;
  for (std::size_t a = 0; a < 3; ++a) {
    const std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
    worst = std::max(worst, frob_dist(commutator(j[a], j[b]), j[c] * cplx(0.0, 2.0)));
  }
  return worst;
}

StrongConservation check_strong_conservation(const std::vector<CMat>& kraus, const CMat& j) {
  StrongConservation out;
  for (const auto& k : kraus)
    out.max_commutator = std::max(out.max_commutator, frob_norm(commutator(j, k)));
  out.conserved = out.max_commutator <= 1e-12;
  if (out.conserved) {
    const Isometry v = dilation_from_kraus(kraus);
    out.isometry_residual = frob_dist(v.v * j, kron(j, CMat::identity(v.dim_e)) * v.v);
  }
  return out;
}

}  // namespace pauli_dilate
