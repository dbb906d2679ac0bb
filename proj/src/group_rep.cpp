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

#include "pauli_dilate/group_rep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pauli_dilate {

const CMat& GroupRep::at(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("GroupRep: unknown label " + label);
  return mats[static_cast<std::size_t>(it - labels.begin())];
}

GroupRep pauli_defining_rep() {
  GroupRep rep;
  rep.space_dim = 2;
  for (const auto& g : pauli_group()) {
    rep.labels.push_back(g.to_string());
    rep.mats.push_back(to_matrix(g));
  }
  return rep;
}

CMat su2_element(double theta, const std::array<double, 3>& axis) {
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (n == 0.0) throw MatrixError("su2_element: zero axis");
  const CMat gen = (pauli_matrix::X() * (axis[0] / n) + pauli_matrix::Y() * (axis[1] / n) +
                    pauli_matrix::Z() * (axis[2] / n));
  // exp(i theta r.sigma) = exp(-i (-r.sigma) theta)
  return mat_exp_hermitian(-gen, theta);
}

GroupRep su2_sample_rep() {
  static const std::array<std::array<double, 3>, 5> kAxes = {{
      {1.0, 0.0, 0.0},
      {0.0, 1.0, 0.0},
      {0.0, 0.0, 1.0},
      {1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)},
      {2.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0},
  }};
  GroupRep rep;
  rep.space_dim = 2;
  for (double theta : {0.3, 1.1, 2.7}) {
    for (std::size_t a = 0; a < kAxes.size(); ++a) {
      std::ostringstream label;
      label << "su2(theta=" << theta << ",axis=" << a << ")";
      rep.labels.push_back(label.str());
      rep.mats.push_back(su2_element(theta, kAxes[a]));
    }
  }
  return rep;
}

double max_unitarity_defect(const GroupRep& rep) {
  double d = 0.0;
  for (const auto& m : rep.mats) d = std::max(d, unitarity_defect(m));
  return d;
}

double pauli_rep_law_defect(const GroupRep& rep, bool up_to_phase) {
  double worst = 0.0;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    const PauliString g = PauliString::parse(rep.labels[i]);
    for (std::size_t j = 0; j < rep.size(); ++j) {
      const PauliString h = PauliString::parse(rep.labels[j]);
      const CMat lhs = rep.mats[i] * rep.mats[j];
      const CMat& rhs = rep.at((g * h).to_string());
      double d = frob_dist(lhs, rhs);
      if (up_to_phase) {
        // Best phase c = <rhs, lhs> / |<rhs, lhs>|.
        cplx overlap = (rhs.adjoint() * lhs).trace();
        if (std::abs(overlap) > 0) d = frob_dist(lhs, rhs * (overlap / std::abs(overlap)));
      }
      worst = std::max(worst, d);
    }
  }
  return worst;
}

}  // namespace pauli_dilate
