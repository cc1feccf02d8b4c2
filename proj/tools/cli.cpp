// Copyright 2026 The inducedmap Authors
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

#include "cli.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "imap/discord.hpp"
#include "imap/error.hpp"
#include "imap/io.hpp"
#include "imap/maps.hpp"
#include "imap/repro.hpp"
#include "imap/search.hpp"
#include "imap/states.hpp"

namespace imap::cli {

namespace {

using io::json;

struct LoadedState {
  ComplexMatrix rho;
  Index dimA = 0;
  Index dimE = 0;
  std::optional<SeparableEnsemble> ensemble;
};

LoadedState load_state(const std::string& path, Index dim_a) {
  const json j = io::read_json(path);
  if (io::is_ensemble_json(j)) {
    SeparableEnsemble e = io::ensemble_from_json(j);
    return {assemble(e), e.dimA(), e.dimE(), std::move(e)};
  }
  LoadedState s;
  s.rho = io::matrix_from_json(j);
  if (dim_a == 0 && j.contains("dimA") && j["dimA"].is_number_integer()) {
    dim_a = j["dimA"].get<Index>();
  }
  if (dim_a < 1) {
    throw Error(ErrorKind::Io, path + ": bare matrix state needs --dim-a or a 'dimA' field");
  }
  if (s.rho.rows() != s.rho.cols() || s.rho.rows() % dim_a != 0) {
    throw Error(ErrorKind::Shape, path + ": state size is not a multiple of dimA");
  }
  s.dimA = dim_a;
  s.dimE = s.rho.rows() / dim_a;
  DensityMatrix::from(s.rho);
  return s;
}

SeparableEnsemble load_ensemble(const std::string& path) {
  const json j = io::read_json(path);
  if (!io::is_ensemble_json(j)) {
    throw Error(ErrorKind::Io, path + ": expected an ensemble file");
  }
  return io::ensemble_from_json(j);
}

json verdict_json(const PositivityVerdict& v) {
  json j{{"status", to_string(v.status)}, {"min_eig", v.min_eig}};
  j["witness"] = v.witness ? io::matrix_to_json(v.witness->mat()) : json(nullptr);
  return j;
}

json condition_json(const ConditionReport& c) {
  json routes = json::array();
  for (Route r : c.routes()) routes.push_back(to_string(r));
  json witnesses = json::array();
  for (const ConditionWitness& w : c.witnesses) witnesses.push_back(w.describe());
  return {{"holds", c.holds},
          {"route", routes},
          {"rescaled_indeterminate", c.rescaled_indeterminate},
          {"rescaled_min_eigs", c.rescaled_min_eigs},
          {"completion_rank", c.completion_rank},
          {"witnesses", witnesses}};
}

json discord_json(const DiscordVerdict& v) {
  return {{"status", to_string(v.status)},
          {"residual", v.residual},
          {"probe_defect", v.probe_defect},
          {"basis", io::matrix_to_json(v.basis)}};
}

json report_json(const CandidateReport& r) {
  return {{"trial", r.trial},
          {"classification", to_string(r.classification)},
          {"choi_min_eig", r.choi_min_eig},
          {"shift_norm", r.shift_norm},
          {"positivity", verdict_json(r.positivity)},
          {"unitary", io::matrix_to_json(r.unitary.mat())}};
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string state;
  std::string unitary;
  std::string input;
  std::string out_path;
  std::string choi_path;
  std::string repro_name;
  Index dim_a = 0;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  Index budget = 500;
  Index trials = 1000;
  std::string family = "haar";
  std::vector<double> params;
  double spread = 0.25;
  double threshold = -1e-6;
  double p1 = 0.5;
};

int cmd_check(const Options& o, std::ostream& out) {
  const SeparableEnsemble e = load_ensemble(o.state);
  const ComplexMatrix rho = assemble(e);
  ConditionTolerances tol;
  tol.psd = o.tol;
  const ConditionReport cond = check_condition(e, tol);
  const SLDecomposition d = decompose_blocks(rho, e.dimA(), e.dimE());
  const DiscordVerdict vqd = has_vqd(rho, e.dimA(), e.dimE(), {}, o.seed);

  print(out, {{"command", "check"},
              {"config", {{"ensemble", o.state}, {"tol", o.tol}, {"seed", o.seed}}},
              {"dimA", e.dimA()},
              {"dimE", e.dimE()},
              {"sl_class", to_string(classify_sl(d))},
              {"condition", condition_json(cond)},
              {"vqd", discord_json(vqd)}});
  if (cond.holds) return kOk;
  return cond.rescaled_indeterminate ? kIndeterminate : kConditionFails;
}

int cmd_induce(const Options& o, std::ostream& out) {
  const LoadedState s = load_state(o.state, o.dim_a);
  const JointUnitary u =
      JointUnitary::from(io::matrix_from_json(io::read_json(o.unitary)), s.dimA, s.dimE);
  const SLDecomposition d = decompose_blocks(s.rho, s.dimA, s.dimE);

  SearchConfig cfg;
  cfg.positivity_budget = o.budget;
  cfg.seed = o.seed;
  cfg.cp_tol = cfg.positivity_tol = cfg.shift_tol = o.tol;
  const CandidateReport rep = classify(d, u, cfg, o.seed);
  const InducedMap m = induce(d, u);

  json j{{"command", "induce"},
         {"config",
          {{"state", o.state},
           {"unitary", o.unitary},
           {"input", o.input.empty() ? json(nullptr) : json(o.input)},
           {"dimA", s.dimA},
           {"dimE", s.dimE},
           {"tol", o.tol},
           {"budget", o.budget},
           {"seed", o.seed}}},
         {"sl_class", to_string(classify_sl(d))},
         {"choi_min_eig", rep.choi_min_eig},
         {"shift_norm", rep.shift_norm},
         {"cp", to_string(is_cp(m, o.tol).status)},
         {"positivity", verdict_json(rep.positivity)},
         {"classification", to_string(rep.classification)}};

  if (!o.input.empty()) {
    const ComplexMatrix raw = io::matrix_from_json(io::read_json(o.input));
    if (raw.rows() != s.dimA || raw.cols() != s.dimA) {
      throw Error(ErrorKind::Shape, o.input + ": input is not dimA x dimA");
    }
    const ComplexMatrix result = imap::apply(m, DensityMatrix::from(raw));
    j["output"] = io::matrix_to_json(result);
    j["output_min_eig"] = hermitian_eigen(result, 1e-8).eigenvalues(0);
    j["output_trace"] = result.trace().real();
    if (!o.out_path.empty()) io::write_json(o.out_path, io::matrix_to_json(result));
  }
  if (!o.choi_path.empty()) io::write_json(o.choi_path, io::matrix_to_json(choi(m).mat));
  print(out, j);
  return kOk;
}

int cmd_discord(const Options& o, std::ostream& out) {
  const LoadedState s = load_state(o.state, o.dim_a);
  DiscordTolerances tol;
  tol.pinching = o.tol;
  const DiscordVerdict v = has_vqd(s.rho, s.dimA, s.dimE, tol, o.seed);
  json j = discord_json(v);
  j["command"] = "discord";
  j["config"] = {{"state", o.state}, {"dimA", s.dimA}, {"dimE", s.dimE},
                 {"tol", o.tol}, {"seed", o.seed}};
  print(out, j);
  return v.status == DiscordStatus::Indeterminate ? kIndeterminate : kOk;
}

int cmd_hunt(const Options& o, std::ostream& out) {
  const SeparableEnsemble e = load_ensemble(o.state);
  SearchConfig cfg;
  if (o.family == "generator") {
    cfg.family = UnitaryFamily::Generator;
    cfg.generator_params = o.params;
    if (cfg.generator_params.empty()) {
      cfg.generator_params.assign(e.dimA() * e.dimE() * e.dimA() * e.dimE(), 0.0);
    }
  }
  cfg.generator_spread = o.spread;
  cfg.trials = o.trials;
  cfg.positivity_budget = o.budget;
  cfg.seed = o.seed;
  cfg.cp_tol = cfg.positivity_tol = cfg.shift_tol = o.tol;
  cfg.candidate_threshold = o.threshold;

  json config{{"ensemble", o.state},    {"family", to_string(cfg.family)},
              {"trials", cfg.trials},   {"budget", cfg.positivity_budget},
              {"seed", cfg.seed},       {"tol", o.tol},
              {"threshold", o.threshold}, {"spread", o.spread},
              {"params", cfg.generator_params}};
  try {
    const std::vector<CandidateReport> hits = hunt(e, cfg);
    json list = json::array();
    for (const CandidateReport& r : hits) list.push_back(report_json(r));
    print(out, {{"command", "hunt"}, {"config", config}, {"candidates", list}});
    return kOk;
  } catch (const Error& ex) {
    if (ex.kind() != ErrorKind::PreconditionTheorem &&
        ex.kind() != ErrorKind::PreconditionVqd) {
      throw;
    }
    print(out, {{"command", "hunt"},
                {"config", config},
                {"error", to_string(ex.kind())},
                {"message", ex.what()}});
    return kConditionFails;
  }
}

int cmd_repro(const Options& o, std::ostream& out, std::ostream& err) {
  ReproResult r;
  if (o.repro_name == "example-4xf") {
    r = repro_example_4xf(o.p1);
  } else if (o.repro_name == "bell-cnot") {
    r = repro_bell_cnot();
  } else {
    err << "repro: unknown fixture '" << o.repro_name
        << "' (expected example-4xf or bell-cnot)\n";
    return kUsage;
  }
  out << std::setprecision(10);
  for (std::size_t i = 0; i < r.matrices.size(); ++i) {
    out << r.labels[i] << ":\n";
    const ComplexMatrix& m = r.matrices[i];
    for (Index a = 0; a < m.rows(); ++a) {
      out << "  ";
      for (Index b = 0; b < m.cols(); ++b) {
        const cplx z = m(a, b) + cplx(0.0, 0.0);
        out << std::setw(14) << z.real();
        if (z.imag() != 0.0) out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
      }
      out << '\n';
    }
  }
  for (const ReproCheck& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  for (const std::string& n : r.notes) out << "INFO " << n << '\n';
  out << (r.pass() ? "PASS" : "FAIL") << '\n';
  return r.pass() ? kOk : kReproFailed;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Shape:
    case ErrorKind::Size:
      return kDimension;
    case ErrorKind::PreconditionTheorem:
    case ErrorKind::PreconditionVqd:
      return kConditionFails;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Induced dynamical maps: positivity condition, CP tests, search"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    sub->add_option("--tol", o.tol, "Numerical tolerance")->capture_default_str();
  };

  CLI::App* check = app.add_subcommand("check", "Evaluate the positivity condition of an ensemble");
  check->add_option("ensemble", o.state, "Ensemble JSON file")->required();
  add_common(check);

  CLI::App* induce_cmd = app.add_subcommand("induce", "Induce, classify and apply the map");
  induce_cmd->add_option("state", o.state, "Ensemble or joint density matrix JSON")->required();
  induce_cmd->add_option("unitary", o.unitary, "Joint unitary matrix JSON")->required();
  induce_cmd->add_option("input", o.input, "Input density matrix JSON");
  induce_cmd->add_option("--dim-a", o.dim_a, "System dimension for bare matrix states");
  induce_cmd->add_option("--out", o.out_path, "Write the output matrix here");
  induce_cmd->add_option("--choi", o.choi_path, "Write the Choi matrix here");
  induce_cmd->add_option("--budget", o.budget, "Positivity probe samples")->capture_default_str();
  add_common(induce_cmd);

  CLI::App* discord = app.add_subcommand("discord", "Zero-discord test on the system side");
  discord->add_option("state", o.state, "Ensemble or joint density matrix JSON")->required();
  discord->add_option("--dim-a", o.dim_a, "System dimension for bare matrix states");
  add_common(discord);

  CLI::App* hunt_cmd = app.add_subcommand("hunt", "Search unitaries for positive but not CP maps");
  hunt_cmd->add_option("ensemble", o.state, "Ensemble JSON file")->required();
  hunt_cmd->add_option("--trials", o.trials, "Number of unitaries")->capture_default_str();
  hunt_cmd->add_option("--budget", o.budget, "Positivity probe samples")->capture_default_str();
  hunt_cmd->add_option("--family", o.family, "haar or generator")
      ->check(CLI::IsMember({"haar", "generator"}))
      ->capture_default_str();
  hunt_cmd->add_option("--params", o.params, "Generator parameters (dim^2 reals)")->delimiter(',');
  hunt_cmd->add_option("--spread", o.spread, "Generator perturbation width")->capture_default_str();
  hunt_cmd->add_option("--threshold", o.threshold, "Choi eigenvalue threshold")->capture_default_str();
  add_common(hunt_cmd);

  CLI::App* repro = app.add_subcommand("repro", "Regenerate the worked examples");
  repro->add_option("name", o.repro_name, "example-4xf or bell-cnot")->required();
  repro->add_option("--p1", o.p1, "Weight of the first component")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*induce_cmd) return cmd_induce(o, out);
    if (*discord) return cmd_discord(o, out);
    if (*hunt_cmd) return cmd_hunt(o, out);
    if (*repro) return cmd_repro(o, out, err);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace imap::cli
