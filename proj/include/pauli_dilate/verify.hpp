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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pauli_dilate {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;  // worst residual, or a count for structural checks
  double tol = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 12345;
  /// Overrides every residual tolerance when set.
  std::optional<double> tol;
  /// Adds X(x)I(x)I to the depolarizing Hamiltonian.
  bool perturb_hamiltonian = false;
  /// Starts the depolarizing environment in |10> instead of |11>.
  bool perturb_env_state = false;
};

/// Runs every module invariant. Deterministic for a given seed.
std::vector<CheckResult> run_verify(const VerifyOptions& opts = {});

}  // namespace pauli_dilate
