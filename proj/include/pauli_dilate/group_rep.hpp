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
#include <string>
#include <vector>

#include "pauli_dilate/matcore.hpp"
#include "pauli_dilate/pauli.hpp"

namespace pauli_dilate {

/// Finite list of group elements with one unitary matrix each.
///
/// Labels of Pauli-group representations are the PauliString text form of
/// the element ("X", "-iZ", ...), which lets the representation law be
/// checked against the group multiplication table.
struct GroupRep {
  std::vector<std::string> labels;
  std::vector<CMat> mats;
  std::size_t space_dim = 0;

  std::size_t size() const { return labels.size(); }
  /// Throws std::out_of_range for unknown labels.
  const CMat& at(const std::string& label) const;
};

/// pi_S(g) = g for the 16 single-qubit Pauli group elements.
GroupRep pauli_defining_rep();

/// exp(i theta r.sigma) on a qubit.
CMat su2_element(double theta, const std::array<double, 3>& axis);

/// Deterministic SU(2) sample: theta in {0.3, 1.1, 2.7} about x, y, z and
/// two oblique unit axes.
GroupRep su2_sample_rep();

/// Largest unitarity defect over the representation's matrices.
double max_unitarity_defect(const GroupRep& rep);

/// Representation law for Pauli-labelled reps: for every pair (g, h),
/// ||mats[g] mats[h] - mats[gh]||_F maximised. With `up_to_phase` the best
/// unit phase c in mats[g] mats[h] = c mats[gh] is allowed.
double pauli_rep_law_defect(const GroupRep& rep, bool up_to_phase = false);

}  // namespace pauli_dilate
