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

#include "pauli_dilate/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "pauli_dilate/io.hpp"
#include "pauli_dilate/verify.hpp"

namespace pauli_dilate {

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  double tmax = 2.0 * std::numbers::pi;
  std::size_t samples = 25;
  bool strict = false;
  std::optional<double> tol;
  std::uint64_t seed = 12345;
  bool perturb_h = false;
  bool perturb_psi = false;
};

// Raised when a computed residual misses its tolerance.
class ToleranceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("command '" + cfg.command + "' requires --in");
  std::string text = cfg.input;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') {
    std::ifstream f(cfg.input);
    if (!f) throw InputError("cannot open input file " + cfg.input);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json probabilities_json(const PauliChannel& ch) {
  const auto& p = ch.probabilities();
  return to_json(std::span<const double>(p.data(), p.size()));
}

json cmd_channel(const RunConfig& cfg) {
  const ChannelDescriptor d = parse_channel_descriptor(load_input(cfg));
  const Vec3 l = bloch_scaling(d.channel);
  const auto eig = eigvalsh(choi(d.channel));
  json out = {{"probabilities", probabilities_json(d.channel)},
              {"bloch_scaling", to_json(std::span<const double>(l.data(), l.size()))},
              {"kraus_rank", kraus_rank(d.channel, cfg.tol.value_or(kDefaultTol))},
              {"choi_eigenvalues", to_json(std::span<const double>(eig))}};
  if (d.liouvillian) out["t"] = round12(d.t);
  return out;
}

json isometry_json(const Isometry& v) {
  return {{"dim_s", v.dim_s},
          {"dim_e", v.dim_e},
          {"isometry", to_json(v.v)},
          {"defect", round12(v.defect())},
          {"span_dim", dilation_span_dim(v)}};
}

json cmd_dilate(const RunConfig& cfg) {
  const json in = load_input(cfg);
  if (is_dilation_descriptor(in)) {
    double t = 1.0;
    if (in.contains("t")) {
      if (!in["t"].is_number()) throw InputError("\"t\" must be a number");
      t = in["t"].get<double>();
    }
    if (!(t >= 0.0)) throw InputError("\"t\" must be >= 0");
    const PhysicalDilation pd = parse_dilation_descriptor(in);
    json out = isometry_json(isometry_at(pd, t));
    out["t"] = round12(t);
    return out;
  }
  const ChannelDescriptor d = parse_channel_descriptor(in);
  json out = isometry_json(dilation_from_kraus(kraus_ops(d.channel)));
  out["probabilities"] = probabilities_json(d.channel);
  return out;
}

json cmd_rep(const RunConfig& cfg) {
  const ChannelDescriptor d = parse_channel_descriptor(load_input(cfg));
  const double tol = cfg.tol.value_or(kDefaultTol);
  const Isometry v = dilation_from_kraus(kraus_ops(d.channel));
  const EnvRepSolution sol = solve_env_rep(v, pauli_defining_rep(), tol);
  json out = {{"probabilities", probabilities_json(d.channel)}, {"pauli", env_rep_report(sol)}};
  if (sol.rep_law_defect && *sol.rep_law_defect > tol) {
    throw ToleranceFailure("environment representation violates the group law");
  }
  const auto& p = d.channel.probabilities();
  const bool su2_family = p[1] == p[2] && p[2] == p[3] &&
                          std::all_of(p.begin(), p.end(), [](double x) { return x > 0.0; });
  if (su2_family) {
    const SU2Generators j = solve_su2_generators(v, tol);
    const double alg = su2_algebra_defect(j);
    out["su2"] = {{"jx", to_json(j.jx)},
                  {"jy", to_json(j.jy)},
                  {"jz", to_json(j.jz)},
                  {"residuals", to_json(std::span<const double>(j.residuals.data(), 3))},
                  {"algebra_defect", round12(alg)}};
    if (alg > tol) throw ToleranceFailure("SU(2) generators violate the algebra");
  }
  return out;
}

std::vector<PauliString> parse_generators(const json& gens) {
  if (!gens.is_array()) throw InputError("\"generators\" must be an array of Pauli strings");
  std::vector<PauliString> out;
  for (const auto& g : gens) {
    if (!g.is_string()) throw InputError("generators must be strings");
    try {
      out.push_back(PauliString::parse(g.get<std::string>()));
    } catch (const MatrixError& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

json cmd_commutant(const RunConfig& cfg) {
  const json in = load_input(cfg);
  std::vector<PauliString> gens;
  std::size_t qubits = 0;
  if (in.contains("generators")) {
    gens = parse_generators(in["generators"]);
    if (in.contains("qubits")) {
      if (!in["qubits"].is_number_integer() || in["qubits"].get<long long>() < 1) {
        throw InputError("\"qubits\" must be a positive integer");
      }
      qubits = in["qubits"].get<std::size_t>();
    } else if (!gens.empty()) {
      qubits = gens.front().qubits();
    } else {
      throw InputError("empty generator list needs \"qubits\"");
    }
    if (qubits > 10) throw InputError("at most 10 qubits are supported");
  } else {
    const ChannelDescriptor d = parse_channel_descriptor(in);
    const Isometry v = dilation_from_kraus(kraus_ops(d.channel));
    const EnvRepSolution sol =
        solve_env_rep(v, pauli_defining_rep(), cfg.tol.value_or(kDefaultTol));
    gens = symmetry_strings(pauli_defining_rep(), sol.rep);
    qubits = gens.empty() ? 1 : gens.front().qubits();
  }
  std::vector<PauliString> comm;
  try {
    comm = pauli_commutant(gens, qubits);
  } catch (const MatrixError& e) {
    throw InputError(e.what());
  }
  json g = json::array(), c = json::array();
  for (const auto& p : gens) g.push_back(p.to_string());
  for (const auto& p : comm) c.push_back(p.to_string());
  return {{"qubits", qubits}, {"generators", g}, {"commutant", c}, {"count", comm.size()}};
}

void write_text(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw InputError("cannot open output file " + cfg.output);
  f << text;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PhysicalDilation pd = parse_dilation_descriptor(load_input(cfg));
  if (pd.dim_s != 2) throw InputError("evolve needs a qubit system");
  if (!(cfg.tmax >= 0.0) || cfg.samples < 1) throw InputError("need --tmax >= 0 and --samples >= 1");
  std::vector<double> times(cfg.samples);
  for (std::size_t i = 0; i < cfg.samples; ++i)
    times[i] = cfg.samples == 1 ? 0.0 : cfg.tmax * static_cast<double>(i) / (cfg.samples - 1);
  const auto fits = channel_series(pd, times);
  std::ostringstream csv;
  write_channel_series_csv(csv, fits);
  write_text(cfg, out, csv.str());
  const double tol = cfg.tol.value_or(kDefaultTol);
  double worst = 0.0;
  for (const auto& f : fits) worst = std::max(worst, f.leakage);
  if (worst > tol) {
    err << "non-Pauli dynamics: max leakage " << format_real(worst) << " exceeds "
        << format_real(tol) << '\n';
    if (cfg.strict) return kExitTolerance;
  }
  return kExitOk;
}

int cmd_collide(const RunConfig& cfg, std::ostream& out) {
  const CollisionRequest req = parse_collision_request(load_input(cfg));
  const double t_final = req.config.dt * static_cast<double>(req.config.n);
  const auto dts = halving_sequence(req.config.dt, req.halvings);
  const auto rows = convergence_report(req.config, dts, t_final, default_probe_state());
  std::ostringstream csv;
  write_convergence_csv(csv, rows);
  if (cfg.output.empty()) {
    out << csv.str();
    return kExitOk;
  }
  write_text(cfg, out, csv.str());
  json summary = json::array();
  for (const auto& r : rows) {
    json row = {{"dt", round12(r.dt)}, {"n", r.n}, {"max_error", round12(r.max_error)}};
    row["ratio"] = r.ratio ? json(round12(*r.ratio)) : json(nullptr);
    summary.push_back(std::move(row));
  }
  const Vec3 g = req.config.target_rates();
  out << json({{"t_final", round12(t_final)},
               {"target_rates", to_json(std::span<const double>(g.data(), 3))},
               {"rows", summary}})
             .dump(2)
      << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.tol = cfg.tol;
  opts.perturb_hamiltonian = cfg.perturb_h;
  opts.perturb_env_state = cfg.perturb_psi;
  const auto results = run_verify(opts);
  std::ostringstream text;
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    text << (r.passed ? "PASS " : "FAIL ") << r.name << " value=" << format_residual(r.value)
         << " tol=" << format_residual(r.tol);
    if (!r.detail.empty()) text << " (" << r.detail << ')';
    text << '\n';
  }
  text << (results.size() - failed) << '/' << results.size() << " checks passed\n";
  write_text(cfg, out, text.str());
  return failed == 0 ? kExitOk : kExitTolerance;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto emit = [&](const json& j) {
    write_text(cfg, out, j.dump(2) + "\n");
    return kExitOk;
  };
  if (cfg.command == "channel") return emit(cmd_channel(cfg));
  if (cfg.command == "dilate") return emit(cmd_dilate(cfg));
  if (cfg.command == "rep") return emit(cmd_rep(cfg));
  if (cfg.command == "commutant") return emit(cmd_commutant(cfg));
  if (cfg.command == "evolve") return cmd_evolve(cfg, out, err);
  if (cfg.command == "collide") return cmd_collide(cfg, out);
  return cmd_verify(cfg, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric dilations of single-qubit Pauli channels and semigroups",
               "pauli-dilate"};
  RunConfig cfg;
  double tol = 0.0;
  app.add_option("command", cfg.command, "channel | dilate | rep | commutant | evolve | collide | verify")
      ->required()
      ->check(CLI::IsMember({"channel", "dilate", "rep", "commutant", "evolve", "collide", "verify"}));
  app.add_option("--in", cfg.input, "JSON descriptor file, or inline JSON");
  app.add_option("--out", cfg.output, "Output file (default: standard output)");
  app.add_option("--tmax", cfg.tmax, "Final time for evolve");
  app.add_option("--samples", cfg.samples, "Number of evolve samples");
  app.add_flag("--strict", cfg.strict, "Exit 2 when evolve leakage exceeds the tolerance");
  auto* tol_opt = app.add_option("--tol", tol, "Override residual tolerances");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_flag("--perturb-h", cfg.perturb_h, "verify: add X(x)I(x)I to the depolarizing Hamiltonian");
  app.add_flag("--perturb-psi", cfg.perturb_psi, "verify: start the depolarizing environment in |10>");

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitValidation;
  }
  if (tol_opt->count() > 0) {
    if (!(tol > 0.0)) {
      err << "error: --tol must be positive\n";
      return kExitValidation;
    }
    cfg.tol = tol;
  }

  try {
    return dispatch(cfg, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const MatrixError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DilationError& e) {
    err << "tolerance failure: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const ToleranceFailure& e) {
    err << "tolerance failure: " << e.what() << '\n';
    return kExitTolerance;
  }
}

}  // namespace pauli_dilate
