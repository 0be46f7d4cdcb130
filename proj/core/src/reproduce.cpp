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

#include "cohctl/reproduce.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>
#include <utility>

#include "cohctl/discrimination.hpp"
#include "cohctl/info.hpp"
#include "cohctl/random.hpp"

namespace cohctl {

namespace {

using io::Json;

// Evaluates fn(0..n-1). Instances are generated before this call, so the
// result does not depend on `parallel`.
std::vector<double> evaluate(std::size_t n, bool parallel,
                             const std::function<double(std::size_t)>& fn) {
  std::vector<double> out(n, 0.0);
  const std::size_t workers =
      parallel ? std::min<std::size_t>(n, std::max(2u, std::thread::hardware_concurrency()))
               : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

double max_of(const std::vector<double>& values) {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

double tol_or(const CaseOptions& o, double fallback) { return o.tol > 0.0 ? o.tol : fallback; }
int trials_or(const CaseOptions& o, int fallback) { return o.trials > 0 ? o.trials : fallback; }
int dim_or(const CaseOptions& o, int fallback) { return o.d > 0 ? o.d : fallback; }

void require_qubit(const CaseOptions& o, std::string_view id) {
  if (o.d != 0 && o.d != 2) {
    throw Error(Errc::out_of_range, std::string(id) + " is defined for d = 2 only");
  }
}

void settle(CaseReport& r, double computed, double expected, double tol) {
  r.computed = computed;
  r.expected = expected;
  r.abs_error = std::abs(computed - expected);
  r.tolerance = tol;
  r.passed = *r.abs_error <= tol;
}

ComplexMatrix projector(int d, int k) { return ket_bra(d, k, k); }

ComplexMatrix max_entangled(int d) {
  ComplexVector phi = ComplexVector::Zero(d * d);
  for (int k = 0; k < d; ++k) phi(k * d + k) = 1.0;
  return pure_density(phi);
}

ControlState random_control(Rng& rng) {
  ComplexVector v = random_pure_state(rng, 2);
  return ControlState(v(0), v(1));
}

int random_kraus_count(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

ChannelImplementation random_implementation(Rng& rng, int d) {
  const int k = random_kraus_count(rng, 1, 4);
  Channel ch = random_channel(rng, d, k);
  return ChannelImplementation(std::move(ch), random_subnormalized(rng, k));
}

// ---------------------------------------------------------------------------

CaseReport case_cc_depolarising_holevo(const CaseOptions& o) {
  const int d = dim_or(o, 2);
  const double tol = tol_or(o, 1e-9);
  const ComplexMatrix t = projector(d, 0) / std::sqrt(static_cast<double>(d));
  const ChannelImplementation impl = depolarising_implementation(d, t);
  const LinearMap map = controlled_map(impl, impl, ControlState::plus());
  const Ensemble ensemble({{0.6, projector(d, 0)}, {0.4, projector(d, 1)}});

  CaseReport r;
  settle(r, holevo_lower_bound(map, ensemble), cc_depolarising_holevo(d), tol);
  r.details = {{"d", d}, {"ensemble", "{3/5: |0><0|, 2/5: |1><1|}"}};
  if (d == 2) {
    // Tightness of the bound is open; report the best binary ensemble found.
    const GridSearchResult g = qubit_holevo_grid_search(map, std::numbers::pi / 60.0, 0.05);
    r.details["grid_search_max"] = g.best;
  }
  return r;
}

CaseReport case_switch_holevo_qubit_analytic(const CaseOptions& o) {
  require_qubit(o, "switch-holevo-qubit-analytic");
  const double tol = tol_or(o, 1e-12);
  const Channel dep = depolarising_channel(2);
  const LinearMap map = switch_map(dep, dep, ControlState::plus());
  const Ensemble ensemble({{0.5, projector(2, 0)}, {0.5, projector(2, 1)}});

  CaseReport r;
  settle(r, holevo_lower_bound(map, ensemble), switch_holevo_qubit(), tol);
  r.details = {{"ensemble", "{1/2: |0><0|, 1/2: |1><1|}"}};
  return r;
}

CaseReport case_switch_holevo_qubit_gridsearch(const CaseOptions& o) {
  require_qubit(o, "switch-holevo-qubit-gridsearch");
  const double tol = tol_or(o, 5e-3);
  const Channel dep = depolarising_channel(2);
  const LinearMap map = switch_map(dep, dep, ControlState::plus());
  const GridSearchResult g =
      qubit_holevo_grid_search(map, std::numbers::pi / 60.0, 0.05);
  const double expected = switch_holevo_qubit();

  CaseReport r;
  settle(r, g.best, expected, tol);
  const bool from_below = g.best <= expected + 1e-9;
  r.passed = r.passed && from_below;
  r.details = {{"theta", g.theta},
               {"phi", g.phi},
               {"probability", g.probability},
               {"evaluations", g.evaluations},
               {"from_below", from_below}};
  return r;
}

CaseReport case_dephasing_coherent_info(const CaseOptions& o) {
  require_qubit(o, "dephasing-coherent-info");
  const double tol = tol_or(o, 1e-9);
  const ComplexMatrix phi = max_entangled(2);
  auto direct = [&](double p) {
    const LinearMap map =
        controlled_map(phase_flip_implementation(p, 0.0, 1.0),
                       bit_flip_implementation(p, 0.0, 1.0), ControlState::plus());
    return coherent_info_bound(map, phi);
  };

  const double at_half = direct(0.5);
  const double expected = -0.75 * std::log2(0.75);
  double sweep_error = 0.0;
  double min_value = at_half;
  Json sweep = Json::array();
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const double value = direct(p);
    const double formula = cc_dephasing_bound(p);
    sweep_error = std::max(sweep_error, std::abs(value - formula));
    min_value = std::min(min_value, value);
    sweep.push_back({{"p", p}, {"direct", value}, {"formula", formula}});
  }

  CaseReport r;
  r.computed = at_half;
  r.expected = expected;
  r.abs_error = std::max(std::abs(at_half - expected), sweep_error);
  r.tolerance = tol;
  r.passed = *r.abs_error <= tol && min_value > 0.0;
  r.details = {{"p", 0.5}, {"sweep_max_error", sweep_error},
               {"min_value", min_value}, {"sweep", std::move(sweep)}};
  return r;
}

CaseReport case_depolarising_discrimination(const CaseOptions& o) {
  const int d = dim_or(o, 2);
  const double tol = tol_or(o, 1e-9);
  constexpr double kDistanceTol = 1e-10;
  const ComplexMatrix t = projector(d, 0) / std::sqrt(static_cast<double>(d));
  const DiscriminationInstance inst(identity_implementation(d, 1.0),
                                    depolarising_implementation(d, t),
                                    depolarising_implementation(d, -t));
  const OutputDistance dist =
      output_distance(inst, ControlState::plus(), projector(d, 0));
  const double bound = diamond_bound(t, -t);
  const double target = max_depolarising_distance(d);
  const double distance_error =
      std::max({std::abs(dist.direct - target), std::abs(dist.closed_form - target),
                std::abs(bound - target)});

  CaseReport r;
  settle(r, success_probability(dist.direct), success_probability(target), tol);
  r.passed = r.passed && distance_error <= kDistanceTol;
  r.details = {{"d", d},
               {"trace_distance", dist.direct},
               {"closed_form", dist.closed_form},
               {"diamond_bound", bound},
               {"distance_error", distance_error}};
  return r;
}

CaseReport case_eq5_vs_stinespring(const CaseOptions& o) {
  const double tol = tol_or(o, 1e-10);
  std::vector<std::pair<int, int>> plan;  // (d, trials)
  if (o.d > 0) {
    plan.emplace_back(o.d, trials_or(o, 100));
  } else {
    plan.emplace_back(2, trials_or(o, 100));
    plan.emplace_back(3, trials_or(o, 50));
  }

  struct Instance {
    ChannelImplementation i0, i1;
    ControlState c;
    ComplexMatrix rho;
  };
  Rng rng(o.seed);
  CaseReport r;
  Json per_dim = Json::array();
  double worst = 0.0;
  for (const auto& [d, trials] : plan) {
    std::vector<Instance> instances;
    for (int n = 0; n < trials; ++n) {
      ChannelImplementation i0 = random_implementation(rng, d);
      ChannelImplementation i1 = random_implementation(rng, d);
      ControlState c = random_control(rng);
      instances.push_back({std::move(i0), std::move(i1), c, random_density(rng, d)});
    }
    const std::vector<double> dev = evaluate(instances.size(), o.parallel, [&](std::size_t i) {
      const Instance& x = instances[i];
      return max_abs_diff(controlled_output(x.i0, x.i1, x.c, x.rho).matrix(),
                          stinespring_oracle(x.i0, x.i1, x.c, x.rho).matrix());
    });
    worst = std::max(worst, max_of(dev));
    per_dim.push_back({{"d", d}, {"trials", trials}, {"max_deviation", max_of(dev)}});
  }
  settle(r, worst, 0.0, tol);
  r.details = {{"seed", o.seed}, {"runs", std::move(per_dim)}};
  return r;
}

CaseReport case_switch_remix_invariance(const CaseOptions& o) {
  const int d = dim_or(o, 2);
  const int trials = trials_or(o, 100);
  const double tol = tol_or(o, 1e-10);

  struct Instance {
    Channel ch0, ch1, mixed0, mixed1;
    ControlState c;
    ComplexMatrix rho;
  };
  auto remixed = [](Rng& rng, const Channel& ch) {
    const int k = static_cast<int>(ch.kraus_count());
    const int rows = k + random_kraus_count(rng, 0, 2);
    return remix(ch, random_isometry(rng, rows, k));
  };
  Rng rng(o.seed);
  std::vector<Instance> instances;
  for (int n = 0; n < trials; ++n) {
    // The env vectors are drawn and discarded: switch_output sees channels only.
    ChannelImplementation a = random_implementation(rng, d);
    ChannelImplementation b = random_implementation(rng, d);
    Channel m0 = remixed(rng, a.channel());
    Channel m1 = remixed(rng, b.channel());
    ControlState c = random_control(rng);
    instances.push_back({a.channel(), b.channel(), std::move(m0), std::move(m1), c,
                         random_density(rng, d)});
  }
  const std::vector<double> dev = evaluate(instances.size(), o.parallel, [&](std::size_t i) {
    const Instance& x = instances[i];
    return max_abs_diff(switch_output(x.ch0, x.ch1, x.c, x.rho).matrix(),
                        switch_output(x.mixed0, x.mixed1, x.c, x.rho).matrix());
  });

  CaseReport r;
  settle(r, max_of(dev), 0.0, tol);
  r.details = {{"d", d}, {"trials", trials}, {"seed", o.seed}};
  return r;
}

CaseReport case_cc_remix_sensitivity(const CaseOptions& o) {
  require_qubit(o, "cc-remix-sensitivity");
  const double threshold = tol_or(o, 0.1);
  constexpr double kSwitchTol = 1e-10;

  // Same channel, two implementations: uniform env over the Weyl Kraus set,
  // and the canonical Kraus set with env on the identity direction.
  const ComplexMatrix t_uniform = 0.5 * (ket_bra(2, 0, 0) + ket_bra(2, 1, 0));
  const ChannelImplementation weyl = depolarising_implementation(2, t_uniform);
  const ChannelImplementation canonical =
      realize(depolarising_channel(2), TransformationMatrix{0.5 * identity(2)});
  const ControlState c = ControlState::plus();
  const ComplexMatrix rho = projector(2, 0);

  const double distance = trace_distance(controlled_output(weyl, weyl, c, rho).matrix(),
                                         controlled_output(canonical, canonical, c, rho).matrix());
  const double switch_dev = max_abs_diff(
      switch_output(weyl.channel(), weyl.channel(), c, rho).matrix(),
      switch_output(canonical.channel(), canonical.channel(), c, rho).matrix());

  CaseReport r;
  r.computed = distance;
  r.tolerance = threshold;
  r.passed = distance >= threshold && switch_dev <= kSwitchTol;
  r.details = {{"switch_max_deviation", switch_dev},
               {"weyl_env", io::vector_to_json(weyl.env())},
               {"canonical_env", io::vector_to_json(canonical.env())}};
  return r;
}

CaseReport case_classical_control_null(const CaseOptions& o) {
  const int d = dim_or(o, 2);
  const int trials = trials_or(o, 50);
  const double tol = tol_or(o, 1e-12);
  const ComplexMatrix t = projector(d, 0) / std::sqrt(static_cast<double>(d));
  const ChannelImplementation i0 = depolarising_implementation(d, t);
  const ChannelImplementation i1 = depolarising_implementation(d, -t);
  const std::array<double, 2> weights{0.5, 0.5};
  const ComplexMatrix reference = classical_control(i0, i1, weights, identity(d) / d).matrix();

  Rng rng(o.seed);
  std::vector<ComplexMatrix> inputs;
  for (int n = 0; n < trials; ++n) inputs.push_back(random_density(rng, d));
  const std::vector<double> dev = evaluate(inputs.size(), o.parallel, [&](std::size_t i) {
    return max_abs_diff(classical_control(i0, i1, weights, inputs[i]).matrix(), reference);
  });

  CaseReport r;
  settle(r, max_of(dev), 0.0, tol);
  r.details = {{"d", d}, {"trials", trials}, {"seed", o.seed}};
  return r;
}

CaseReport case_tmat_membership_sweep(const CaseOptions& o) {
  const int d = dim_or(o, 2);
  const int trials = trials_or(o, 100);
  const double roundtrip_tol = tol_or(o, 1e-10);
  Rng rng(o.seed);

  // Forward: every implementation's T is admissible.
  struct Forward { Channel ch; TransformationMatrix t; };
  std::vector<Forward> forward;
  for (int n = 0; n < trials; ++n) {
    ChannelImplementation impl = random_implementation(rng, d);
    forward.push_back({impl.channel(), transformation_matrix(impl)});
  }
  // Converse: |T>> = sqrt(C) x with ||x|| <= 1 realizes and round-trips.
  std::vector<Forward> converse;
  for (int n = 0; n < trials; ++n) {
    Channel ch = random_channel(rng, d, random_kraus_count(rng, 1, 4));
    const HermitianEig eig = hermitian_eig(choi_of(ch).matrix);
    const double floor = kDefaultRankTol * eig.values(0);
    const RealVector roots =
        eig.values.unaryExpr([floor](double v) { return v > floor ? std::sqrt(v) : 0.0; });
    const ComplexMatrix sqrt_c = eig.vectors * roots.cast<Complex>().asDiagonal() *
                                 eig.vectors.adjoint();
    const ComplexVector amps = sqrt_c * random_subnormalized(rng, d * d);
    converse.push_back({std::move(ch), {unvec(ChoiVector{d, d, amps})}});
  }
  // Depolarising: membership iff Tr[T^dagger T] <= 1/d.
  std::vector<std::pair<ComplexMatrix, bool>> membership;
  std::uniform_real_distribution<double> scale(0.5, 1.5);
  while (static_cast<int>(membership.size()) < trials) {
    const double s = scale(rng);
    ComplexMatrix t = random_gaussian(rng, d, d);
    if (std::abs(s - 1.0) < 1e-6) continue;
    t *= std::sqrt(s / d) / hs_norm(t);
    membership.emplace_back(std::move(t), s <= 1.0);
  }

  const std::vector<double> forward_fail = evaluate(forward.size(), o.parallel, [&](std::size_t i) {
    return admissible(forward[i].ch, forward[i].t).admissible ? 0.0 : 1.0;
  });
  const std::vector<double> roundtrip = evaluate(converse.size(), o.parallel, [&](std::size_t i) {
    const ChannelImplementation impl = realize(converse[i].ch, converse[i].t);
    return std::max(max_abs_diff(transformation_matrix(impl).matrix, converse[i].t.matrix),
                    max_abs_diff(choi_of(impl.channel()).matrix,
                                 choi_of(converse[i].ch).matrix));
  });
  const Channel dep = depolarising_channel(d);
  const std::vector<double> member_fail = evaluate(membership.size(), o.parallel, [&](std::size_t i) {
    return admissible(dep, {membership[i].first}).admissible == membership[i].second ? 0.0 : 1.0;
  });

  const auto count = [](const std::vector<double>& v) {
    return static_cast<int>(std::count(v.begin(), v.end(), 1.0));
  };
  const int roundtrip_fail = static_cast<int>(std::count_if(
      roundtrip.begin(), roundtrip.end(), [&](double e) { return e > roundtrip_tol; }));
  const int failures = count(forward_fail) + roundtrip_fail + count(member_fail);

  CaseReport r;
  settle(r, failures, 0.0, 0.0);
  r.details = {{"d", d},
               {"trials", trials},
               {"seed", o.seed},
               {"forward_failures", count(forward_fail)},
               {"roundtrip_failures", roundtrip_fail},
               {"roundtrip_max_error", max_of(roundtrip)},
               {"roundtrip_tolerance", roundtrip_tol},
               {"membership_failures", count(member_fail)}};
  return r;
}

CaseReport case_diamond_saturation(const CaseOptions& o) {
  const int d = dim_or(o, 2);
  const int trials = trials_or(o, 100);
  const double tol = tol_or(o, 1e-10);
  Rng rng(o.seed);

  struct Instance { ComplexMatrix t1, t1p, probe; };
  auto admissible_t = [&] {
    ComplexMatrix t = random_gaussian(rng, d, d);
    return ComplexMatrix(t * (std::uniform_real_distribution<double>(0.1, 1.0)(rng) /
                              (std::sqrt(static_cast<double>(d)) * hs_norm(t))));
  };
  std::vector<Instance> instances;
  for (int n = 0; n < trials; ++n) {
    ComplexMatrix t1 = admissible_t();
    ComplexMatrix t1p = admissible_t();
    instances.push_back({std::move(t1), std::move(t1p), random_density(rng, d)});
  }
  const ChannelImplementation fixed = identity_implementation(d, 1.0);
  std::vector<double> probe_excess(instances.size(), 0.0);
  const std::vector<double> gap = evaluate(instances.size(), o.parallel, [&](std::size_t i) {
    const Instance& x = instances[i];
    const DiscriminationInstance inst(fixed, depolarising_implementation(d, x.t1),
                                      depolarising_implementation(d, x.t1p));
    const double bound = diamond_bound(x.t1, x.t1p);
    const ComplexMatrix best = pure_density(optimal_input(x.t1, x.t1p));
    const double at_best = output_distance(inst, ControlState::plus(), best).direct;
    probe_excess[i] = output_distance(inst, ControlState::plus(), x.probe).direct - bound;
    return std::abs(at_best - bound);
  });
  const double excess = max_of(probe_excess);

  CaseReport r;
  settle(r, max_of(gap), 0.0, tol);
  r.passed = r.passed && excess <= 1e-12;
  r.details = {{"d", d}, {"trials", trials}, {"seed", o.seed},
               {"max_probe_excess", excess}};
  return r;
}

using CaseFn = CaseReport (*)(const CaseOptions&);

const std::vector<std::pair<std::string_view, CaseFn>>& registry() {
  static const std::vector<std::pair<std::string_view, CaseFn>> cases = {
      {"cc-depolarising-holevo", case_cc_depolarising_holevo},
      {"switch-holevo-qubit-analytic", case_switch_holevo_qubit_analytic},
      {"switch-holevo-qubit-gridsearch", case_switch_holevo_qubit_gridsearch},
      {"dephasing-coherent-info", case_dephasing_coherent_info},
      {"depolarising-discrimination", case_depolarising_discrimination},
      {"eq5-vs-stinespring", case_eq5_vs_stinespring},
      {"switch-remix-invariance", case_switch_remix_invariance},
      {"cc-remix-sensitivity", case_cc_remix_sensitivity},
      {"classical-control-null", case_classical_control_null},
      {"tmat-membership-sweep", case_tmat_membership_sweep},
      {"diamond-saturation", case_diamond_saturation},
  };
  return cases;
}

std::string number_text(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string computed_text(const CaseReport& r) {
  if (const double* x = std::get_if<double>(&r.computed)) return number_text(*x);
  return io::matrix_to_json(std::get<ComplexMatrix>(r.computed)).dump();
}

std::string optional_text(const std::optional<double>& x) {
  return x ? number_text(*x) : "n/a";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<std::string_view>& registered_cases() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

CaseReport run_case(std::string_view case_id, const CaseOptions& options) {
  const auto& cases = registry();
  const auto it = std::find_if(cases.begin(), cases.end(),
                               [&](const auto& entry) { return entry.first == case_id; });
  if (it == cases.end()) {
    throw Error(Errc::unknown_case, "unknown case '" + std::string(case_id) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  CaseReport report = it->second(options);
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  report.case_id = std::string(case_id);
  return report;
}

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "pretty") return ReportFormat::pretty;
  throw Error(Errc::out_of_range, "unknown format '" + std::string(name) + "'");
}

Json report_to_json(const CaseReport& r, bool timing) {
  Json j;
  j["case_id"] = r.case_id;
  if (const double* x = std::get_if<double>(&r.computed)) {
    j["computed"] = *x;
  } else {
    j["computed"] = io::matrix_to_json(std::get<ComplexMatrix>(r.computed));
  }
  j["expected"] = r.expected ? Json(*r.expected) : Json("n/a");
  j["abs_error"] = r.abs_error ? Json(*r.abs_error) : Json("n/a");
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  if (timing) j["runtime_ms"] = r.runtime_ms;
  j["details"] = r.details;
  return j;
}

std::string format_reports(const std::vector<CaseReport>& reports,
                           const CaseOptions& options, ReportFormat format,
                           bool timing) {
  const bool all_passed = std::all_of(reports.begin(), reports.end(),
                                      [](const CaseReport& r) { return r.passed; });
  std::ostringstream out;
  switch (format) {
    case ReportFormat::json: {
      Json j;
      j["seed"] = options.seed;
      j["passed"] = all_passed;
      Json cases = Json::array();
      for (const auto& r : reports) cases.push_back(report_to_json(r, timing));
      j["cases"] = std::move(cases);
      out << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::csv: {
      out << "case_id,computed,expected,abs_error,tolerance,passed";
      if (timing) out << ",runtime_ms";
      out << '\n';
      for (const auto& r : reports) {
        out << r.case_id << ',' << csv_field(computed_text(r)) << ','
            << optional_text(r.expected) << ',' << optional_text(r.abs_error) << ','
            << number_text(r.tolerance) << ',' << (r.passed ? "true" : "false");
        if (timing) out << ',' << r.runtime_ms;
        out << '\n';
      }
      break;
    }
    case ReportFormat::pretty: {
      std::size_t width = 0;
      for (const auto& r : reports) width = std::max(width, r.case_id.size());
      for (const auto& r : reports) {
        out << (r.passed ? "PASS  " : "FAIL  ") << std::left
            << std::setw(static_cast<int>(width)) << r.case_id
            << "  computed=" << computed_text(r)
            << "  expected=" << optional_text(r.expected)
            << "  abs_error=" << optional_text(r.abs_error)
            << "  tol=" << number_text(r.tolerance);
        if (timing) out << "  " << r.runtime_ms << " ms";
        out << '\n';
      }
      out << (all_passed ? "all cases passed" : "some cases FAILED") << " (seed "
          << options.seed << ")\n";
      break;
    }
  }
  return out.str();
}

}  // namespace cohctl
