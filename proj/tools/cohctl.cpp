// Copyright 2026 The cohctl Authors
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

// cohctl: reproduce | simulate | validate-t | info | distinguish

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "cohctl/discrimination.hpp"
#include "cohctl/io.hpp"
#include "cohctl/reproduce.hpp"

namespace {

using cohctl::io::Json;

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

// "re" or "re,im".
cohctl::Complex parse_amplitude(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw cohctl::Error(cohctl::Errc::schema, "amplitude '" + text + "' is not re or re,im");
  }
}

cohctl::ControlState control_from(const std::string& a, const std::string& b) {
  return cohctl::ControlState(parse_amplitude(a), parse_amplitude(b));
}

Json diagnostics(const cohctl::ControlledOutput& out) {
  const cohctl::ComplexMatrix& m = out.matrix();
  Json j;
  j["valid"] = out.is_valid();
  j["trace"] = m.trace().real();
  j["hermiticity_error"] = cohctl::max_abs_diff(m, m.adjoint());
  j["min_eigenvalue"] = cohctl::min_eigenvalue(0.5 * (m + m.adjoint()));
  return j;
}

struct ReproduceArgs {
  std::vector<std::string> cases;
  bool all = false;
  cohctl::CaseOptions options;
  std::string format = "pretty";
  bool timing = false;
};

int run_reproduce(const ReproduceArgs& args) {
  std::vector<std::string> ids = args.cases;
  if (args.all) ids.assign(cohctl::registered_cases().begin(), cohctl::registered_cases().end());
  if (ids.empty()) throw cohctl::Error(cohctl::Errc::unknown_case, "give --case or --all");
  const auto format = cohctl::report_format_from_string(args.format);
  std::vector<cohctl::CaseReport> reports;
  for (const auto& id : ids) reports.push_back(cohctl::run_case(id, args.options));
  std::cout << cohctl::format_reports(reports, args.options, format, args.timing);
  for (const auto& r : reports) {
    if (!r.passed) return kExitFailed;
  }
  return 0;
}

struct SimulateArgs {
  std::string ch0, ch1, input;
  std::string a = "0.7071067811865476", b = "0.7071067811865476";
  std::string mode = "coherent";
};

int run_simulate(const SimulateArgs& args) {
  const auto f0 = cohctl::io::channel_from_json(cohctl::io::load_file(args.ch0));
  const auto f1 = cohctl::io::channel_from_json(cohctl::io::load_file(args.ch1));
  const auto rho = cohctl::io::state_from_json(cohctl::io::load_file(args.input));
  const auto c = control_from(args.a, args.b);

  cohctl::ControlledOutput out(cohctl::ComplexMatrix::Zero(2, 2));
  if (args.mode == "coherent") {
    out = cohctl::controlled_output(f0.implementation(), f1.implementation(), c, rho);
  } else if (args.mode == "switch") {
    out = cohctl::switch_output(f0.channel, f1.channel, c, rho);
  } else if (args.mode == "classical") {
    const std::array<double, 2> weights{std::norm(c.a()), std::norm(c.b())};
    const auto map = cohctl::classical_map(f0.channel, f1.channel, weights);
    if (rho.rows() != map.dim_in) {
      throw cohctl::Error(cohctl::Errc::dimension_mismatch, "input state dimension");
    }
    out = cohctl::ControlledOutput(map(rho));
  } else {
    throw cohctl::Error(cohctl::Errc::out_of_range, "unknown mode '" + args.mode + "'");
  }
  Json j;
  j["mode"] = args.mode;
  j["output"] = cohctl::io::matrix_to_json(out.matrix());
  j["blocks"] = {{"00", cohctl::io::matrix_to_json(out.diag0())},
                 {"01", cohctl::io::matrix_to_json(out.offdiag01())},
                 {"10", cohctl::io::matrix_to_json(out.offdiag10())},
                 {"11", cohctl::io::matrix_to_json(out.diag1())}};
  j["diagnostics"] = diagnostics(out);
  std::cout << j.dump(2) << '\n';
  return 0;
}

struct ValidateArgs {
  std::string channel, t;
  bool realize = false;
};

int run_validate(const ValidateArgs& args) {
  const auto file = cohctl::io::channel_from_json(cohctl::io::load_file(args.channel));
  const auto t = cohctl::io::t_from_json(cohctl::io::load_file(args.t));
  const auto verdict = cohctl::admissible(file.channel, t);
  Json j;
  j["admissible"] = verdict.admissible;
  j["range_residual"] = verdict.range_residual;
  j["quadratic_form"] = verdict.quadratic_form;
  if (args.realize && verdict.admissible) {
    const auto impl = cohctl::realize(file.channel, t);
    j["realized"] = cohctl::io::channel_to_json(impl.channel(), impl.env());
    j["roundtrip_error"] =
        cohctl::max_abs_diff(cohctl::transformation_matrix(impl).matrix, t.matrix);
  }
  std::cout << j.dump(2) << '\n';
  return verdict.admissible ? 0 : kExitFailed;
}

struct InfoArgs {
  std::string kind;
  int d = 2;
  double param = 0.0;
};

int run_info(const InfoArgs& args) {
  if (args.kind.empty()) {
    Json j;
    j["cases"] = cohctl::registered_cases();
    Json kinds = Json::array();
    for (auto k : {cohctl::ChannelKind::identity, cohctl::ChannelKind::depolarising,
                   cohctl::ChannelKind::partial_depolarising, cohctl::ChannelKind::phase_flip,
                   cohctl::ChannelKind::bit_flip}) {
      kinds.push_back(cohctl::to_string(k));
    }
    j["channel_kinds"] = std::move(kinds);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  cohctl::ChannelParams params;
  params.d = args.d;
  params.p = args.param;
  const auto ch = cohctl::standard_channel(cohctl::channel_kind_from_string(args.kind), params);
  std::cout << cohctl::io::channel_to_json(ch).dump(2) << '\n';
  return 0;
}

struct DistinguishArgs {
  std::string fixed, cand_a, cand_b, input;
};

int run_distinguish(const DistinguishArgs& args) {
  const auto fixed = cohctl::io::channel_from_json(cohctl::io::load_file(args.fixed));
  const auto a = cohctl::io::channel_from_json(cohctl::io::load_file(args.cand_a));
  const auto b = cohctl::io::channel_from_json(cohctl::io::load_file(args.cand_b));
  const cohctl::DiscriminationInstance inst(fixed.implementation(), a.implementation(),
                                            b.implementation());
  const auto t1 = cohctl::transformation_matrix(inst.candidate_a()).matrix;
  const auto t1p = cohctl::transformation_matrix(inst.candidate_b()).matrix;

  Json j;
  j["diamond_bound"] = cohctl::diamond_bound(t1, t1p);
  if (cohctl::spectral_norm(t1 - t1p) > 0.0) {
    j["optimal_input"] = cohctl::io::vector_to_json(cohctl::optimal_input(t1, t1p));
  }
  if (!args.input.empty()) {
    const auto rho = cohctl::io::state_from_json(cohctl::io::load_file(args.input));
    const auto dist = cohctl::output_distance(inst, cohctl::ControlState::plus(), rho);
    j["trace_distance"] = dist.direct;
    j["closed_form"] = dist.closed_form;
    j["success_probability"] = cohctl::success_probability(dist.direct);
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherently controlled quantum channels: simulation and reproduction"};
  app.require_subcommand(1);

  ReproduceArgs rep;
  auto* reproduce = app.add_subcommand("reproduce", "Run named reproduction cases");
  auto* case_opt = reproduce->add_option("--case", rep.cases, "Case id (repeatable)");
  auto* all_opt = reproduce->add_flag("--all", rep.all, "Run every registered case");
  case_opt->excludes(all_opt);
  reproduce->add_option("--d", rep.options.d, "Dimension (case default if omitted)")
      ->check(CLI::PositiveNumber);
  reproduce->add_option("--trials", rep.options.trials, "Random trials")->check(CLI::PositiveNumber);
  reproduce->add_option("--seed", rep.options.seed, "RNG seed")->capture_default_str();
  reproduce->add_option("--tol", rep.options.tol, "Override the case tolerance")
      ->check(CLI::PositiveNumber);
  reproduce->add_option("--format", rep.format, "json | csv | pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  reproduce->add_flag("--parallel", rep.options.parallel, "Evaluate trials concurrently");
  reproduce->add_flag("--timing", rep.timing, "Include runtime_ms in reports");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Controlled output of two channel files");
  simulate->add_option("--ch0", sim.ch0, "Channel file for control |0>")->required()->check(CLI::ExistingFile);
  simulate->add_option("--ch1", sim.ch1, "Channel file for control |1>")->required()->check(CLI::ExistingFile);
  simulate->add_option("--input", sim.input, "Input state file")->required()->check(CLI::ExistingFile);
  simulate->add_option("--a", sim.a, "Control amplitude on |0> (re or re,im)");
  simulate->add_option("--b", sim.b, "Control amplitude on |1> (re or re,im)");
  simulate->add_option("--mode", sim.mode, "coherent | switch | classical")
      ->check(CLI::IsMember({"coherent", "switch", "classical"}))
      ->capture_default_str();

  ValidateArgs val;
  auto* validate = app.add_subcommand("validate-t", "Check a transformation matrix");
  validate->add_option("--channel", val.channel, "Channel file")->required()->check(CLI::ExistingFile);
  validate->add_option("--t", val.t, "Transformation-matrix file")->required()->check(CLI::ExistingFile);
  validate->add_flag("--realize", val.realize, "Emit an implementation realizing T");

  InfoArgs inf;
  auto* info = app.add_subcommand("info", "List cases and kinds, or emit a standard channel");
  info->add_option("--kind", inf.kind, "Channel kind to emit");
  info->add_option("--d", inf.d, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
  info->add_option("--param", inf.param, "Kind parameter (p or q)")->check(CLI::Range(0.0, 1.0));

  DistinguishArgs dis;
  auto* distinguish = app.add_subcommand("distinguish", "Discriminate two implementations");
  distinguish->add_option("--fixed", dis.fixed, "Fixed implementation file")->required()->check(CLI::ExistingFile);
  distinguish->add_option("--a", dis.cand_a, "First candidate file")->required()->check(CLI::ExistingFile);
  distinguish->add_option("--b", dis.cand_b, "Second candidate file")->required()->check(CLI::ExistingFile);
  distinguish->add_option("--input", dis.input, "Input state file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*reproduce) return run_reproduce(rep);
    if (*simulate) return run_simulate(sim);
    if (*validate) return run_validate(val);
    if (*info) return run_info(inf);
    if (*distinguish) return run_distinguish(dis);
  } catch (const cohctl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
