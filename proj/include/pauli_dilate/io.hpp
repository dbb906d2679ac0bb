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

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pauli_dilate/channel.hpp"
#include "pauli_dilate/collision.hpp"
#include "pauli_dilate/dilation.hpp"
#include "pauli_dilate/physdil.hpp"

namespace pauli_dilate {

/// Malformed or out-of-range input descriptor.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using json = nlohmann::json;

/// {"type":"pauli","p":[pI,px,py,pz]} | {"type":"phase_damping","p":x}
/// | {"type":"depolarizing","p":x} | {"type":"liouvillian","gamma":[..],"t":x}.
/// A Liouvillian descriptor is evaluated at "t" (default 1).
struct ChannelDescriptor {
  PauliChannel channel = PauliChannel::identity();
  std::optional<PauliLiouvillian> liouvillian;
  double t = 1.0;
};
ChannelDescriptor parse_channel_descriptor(const json& j);

/// {"builder":"phase_damping"|"depolarizing"|"generic","a":[a1,a2,a3]} or
/// {"hamiltonian":[["ZX",1.0],...],"psiE":"1"}. The first tensor slot of
/// every string is the system qubit; psiE is a bit string over the
/// environment qubits.
PhysicalDilation parse_dilation_descriptor(const json& j);

/// Index of a computational basis label under the descending ordering
/// ("11" -> 0, "10" -> 1, ...).
std::size_t basis_index(const std::string& bits);

/// {"a":[..],"zeta":x,"dt":x,"n":k} plus optional "halvings" (default 3).
struct CollisionRequest {
  CollisionConfig config;
  std::size_t halvings = 3;
};
CollisionRequest parse_collision_request(const json& j);

bool is_channel_descriptor(const json& j);
bool is_dilation_descriptor(const json& j);

/// Magnitudes below this are written as 0.
inline constexpr double kOutputFloor = 1e-14;

/// Round to 12 significant digits.
double round12(double x);
json to_json(double x);
json to_json(cplx z);
json to_json(const CMat& m);
json to_json(std::span<const double> v);

json env_rep_report(const EnvRepSolution& sol);

/// "%.12g" after flushing magnitudes below kOutputFloor.
std::string format_real(double x);
/// "%.6g" without flushing; used for residual reports.
std::string format_residual(double x);

/// Columns t,pI,px,py,pz,leakage.
void write_channel_series_csv(std::ostream& os, std::span<const ChannelFit> fits);
/// Columns dt,t,trace_distance.
void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows);

}  // namespace pauli_dilate
