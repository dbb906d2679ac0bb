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

#include "pauli_dilate/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "pauli_dilate/pauli.hpp"

namespace pauli_dilate {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("descriptor is missing \"") + key + "\"");
  }
  return j.at(key);
}

double get_real(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) throw InputError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

template <std::size_t N>
std::array<double, N> get_reals(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_array() || v.size() != N) {
    throw InputError(std::string("\"") + key + "\" must be an array of " + std::to_string(N) +
                     " numbers");
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!v[i].is_number()) throw InputError(std::string("\"") + key + "\" must hold numbers");
    out[i] = v[i].get<double>();
  }
  return out;
}

std::size_t get_count(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

// Library validation errors become input errors at this boundary.
template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const MatrixError& e) {
    throw InputError(e.what());
  }
}

}  // namespace

bool is_channel_descriptor(const json& j) { return j.is_object() && j.contains("type"); }

bool is_dilation_descriptor(const json& j) {
  return j.is_object() && (j.contains("builder") || j.contains("hamiltonian"));
}

ChannelDescriptor parse_channel_descriptor(const json& j) {
  const json& type = require(j, "type");
  if (!type.is_string()) throw InputError("\"type\" must be a string");
  const std::string t = type.get<std::string>();
  return guarded([&] {
    ChannelDescriptor d;
    if (t == "pauli") {
      d.channel = PauliChannel(get_reals<4>(j, "p"));
    } else if (t == "phase_damping") {
      d.channel = PauliChannel::phase_damping(get_real(j, "p"));
    } else if (t == "depolarizing") {
      d.channel = PauliChannel::depolarizing(get_real(j, "p"));
    } else if (t == "liouvillian") {
      d.liouvillian = PauliLiouvillian(get_reals<3>(j, "gamma"));
      if (j.contains("t")) d.t = get_real(j, "t");
      d.channel = semigroup_channel(*d.liouvillian, d.t);
    } else {
      throw InputError("unknown channel type \"" + t + "\"");
    }
    return d;
  });
}

std::size_t basis_index(const std::string& bits) {
  if (bits.empty()) throw InputError("basis label must be non-empty");
  std::size_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InputError("basis label must contain only 0 and 1");
    idx = 2 * idx + (c == '0' ? 1 : 0);
  }
  return idx;
}

PhysicalDilation parse_dilation_descriptor(const json& j) {
  if (j.contains("builder")) {
    const json& b = j.at("builder");
    if (!b.is_string()) throw InputError("\"builder\" must be a string");
    const std::string name = b.get<std::string>();
    return guarded([&] {
      if (name == "phase_damping") return build_phase_damping_dilation();
      if (name == "depolarizing") return build_depolarizing_dilation();
      if (name == "generic") {
        const auto a = get_reals<3>(j, "a");
        return build_generic_pauli_dilation(a[0], a[1], a[2]);
      }
      throw InputError("unknown builder \"" + name + "\"");
    });
  }
  const json& terms = require(j, "hamiltonian");
  const json& psi = require(j, "psiE");
  if (!psi.is_string()) throw InputError("\"psiE\" must be a bit string");
  const std::string bits = psi.get<std::string>();
  const std::size_t env_qubits = bits.size();
  const std::size_t idx = basis_index(bits);
  const std::size_t dim = std::size_t{2} << env_qubits;
  if (!terms.is_array()) throw InputError("\"hamiltonian\" must be an array");
  return guarded([&] {
    CMat h(dim, dim);
    for (const auto& term : terms) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_number()) {
        throw InputError("hamiltonian terms must be [\"pauli string\", coefficient]");
      }
      const PauliString p = PauliString::parse(term[0].get<std::string>());
      if (p.qubits() != env_qubits + 1) {
        throw InputError("hamiltonian string " + p.to_string() +
                         " does not match system + environment size");
      }
      h += to_matrix(p) * term[1].get<double>();
    }
    return PhysicalDilation(h, CMat::basis_vector(std::size_t{1} << env_qubits, idx));
  });
}

CollisionRequest parse_collision_request(const json& j) {
  CollisionRequest r;
  r.config.a = get_reals<3>(j, "a");
  r.config.zeta = get_real(j, "zeta");
  r.config.dt = get_real(j, "dt");
  r.config.n = get_count(j, "n");
  if (j.contains("halvings")) r.halvings = get_count(j, "halvings");
  guarded([&] {
    r.config.validate();
    return 0;
  });
  return r;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < kOutputFloor) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json to_json(double x) { return round12(x); }

json to_json(cplx z) { return json::array({round12(z.real()), round12(z.imag())}); }

json to_json(const CMat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(std::span<const double> v) {
  json out = json::array();
  for (double x : v) out.push_back(round12(x));
  return out;
}

json env_rep_report(const EnvRepSolution& sol) {
  json elements = json::array();
  for (std::size_t g = 0; g < sol.rep.size(); ++g) {
    elements.push_back({{"label", sol.rep.labels[g]},
                        {"matrix", to_json(sol.rep.mats[g])},
                        {"residual", round12(sol.residuals[g])},
                        {"unitarity_defect", round12(sol.unitarity_defects[g])}});
  }
  json out = {{"dim_e", sol.rep.space_dim},
              {"elements", std::move(elements)},
              {"max_residual", round12(sol.max_residual())},
              {"max_unitarity_defect", round12(sol.max_unitarity_defect())}};
  if (sol.rep_law_defect) out["rep_law_defect"] = round12(*sol.rep_law_defect);
  return out;
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", std::abs(x) < kOutputFloor ? 0.0 : x);
  return buf;
}

std::string format_residual(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_channel_series_csv(std::ostream& os, std::span<const ChannelFit> fits) {
  os << "t,pI,px,py,pz,leakage\n";
  for (const auto& f : fits) {
    os << format_real(f.t);
    for (double p : f.p) os << ',' << format_real(p);
    os << ',' << format_real(f.leakage) << '\n';
  }
}

void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows) {
  os << "dt,t,trace_distance\n";
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.times.size(); ++k)
      os << format_real(r.dt) << ',' << format_real(r.times[k]) << ','
         << format_real(r.errors[k]) << '\n';
}

}  // namespace pauli_dilate
