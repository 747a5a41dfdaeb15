// Copyright 2026 The cqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cqkd/cli.h"

namespace cqkd::cli {

namespace {

ScenarioSpec load_spec(const RunOptions& o) {
  if (o.scenario_path && o.preset) throw std::invalid_argument("give either --scenario or --preset, not both");
  if (o.preset) {
    auto p = preset(*o.preset);
    if (!p) throw std::invalid_argument("unknown preset '" + *o.preset + "'");
    return *p;
  }
  if (o.scenario_path) return load_scenario_file(*o.scenario_path);
  throw std::invalid_argument("a scenario is required (--scenario FILE or --preset NAME)");
}

// Writes to --out when given, otherwise to `out`.
bool emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out,
          std::ostream& err) {
  if (!path) {
    out << text;
    return true;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file '" << *path << "'\n";
    return false;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: failed writing '" << *path << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  RunReport report;
  try {
    const ScenarioSpec spec = load_spec(options);
    report.name = spec.name;
    report.scenario = spec.resolve(options.seed, options.rounds);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  report.stats = harness::run_scenario(report.scenario);
  report.exact_qber = harness::exact_round_statistics(report.scenario).qber_exact;
  report.oracle_qber = harness::scenario_oracle_qber(report.scenario);

  std::ostringstream text;
  write_run(text, report, options.format);
  if (!emit(options.out_path, text.str(), out, err)) return 1;
  return report.stats.verdict == protocol::Verdict::pass ? 0 : 2;
}

int cmd_verify(const VerifyOptions& options, const std::optional<std::string>& out_path, std::ostream& out,
               std::ostream& err) {
  const auto results = run_claims(options);
  bool all = true;
  for (const auto& r : results) all = all && r.pass();
  if (!emit(out_path, render_verify(results), out, err)) return 1;
  return all ? 0 : 1;
}

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<harness::SweepRow> rows;
  harness::SweepParameter parameter{};
  try {
    const auto p = harness::parse_sweep_parameter(options.parameter);
    if (!p) {
      throw std::invalid_argument("unknown sweep parameter '" + options.parameter +
                                  "' (expected theta, p1, p2, p3 or epsilon)");
    }
    parameter = *p;
    if (options.steps < 2) throw std::invalid_argument("--steps must be >= 2");
    const double from = parse_angle(options.from);
    const double to = parse_angle(options.to);
    if (!(from < to)) throw std::invalid_argument("sweep range requires --from < --to");
    const ScenarioSpec spec = load_spec(options.base);
    const harness::Scenario s = spec.resolve(options.base.seed, options.base.rounds);
    const auto grid = harness::linspace(from, to, options.steps);
    rows = harness::sweep(parameter, grid, s);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::ostringstream text;
  write_sweep(text, parameter, rows, options.base.format);
  return emit(options.base.out_path, text.str(), out, err) ? 0 : 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cqkd: channel-encrypting quantum key distribution simulator"};
  app.require_subcommand(1);

  std::string scenario, preset_name, out_path, format = "csv";
  std::uint64_t seed = 0;
  int rounds = 0;
  int threads = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", scenario, "Scenario file");
    sub->add_option("--preset", preset_name, "Built-in scenario")
        ->check(CLI::IsMember(preset_names()));
    sub->add_option("--out", out_path, "Output file (default stdout)");
    sub->add_option("--format", format, "csv or json-lines")->check(CLI::IsMember({"csv", "json-lines"}));
    sub->add_option("--seed", seed, "Override the scenario seed");
    sub->add_option("--rounds", rounds, "Override the round count")->check(CLI::PositiveNumber);
  };

  CLI::App* run = app.add_subcommand("run", "Run one scenario and write its statistics");
  add_common(run);

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter over a grid");
  add_common(sweep);
  std::string parameter, from, to;
  int steps = 0;
  sweep->add_option("--param", parameter, "theta, p1, p2, p3 or epsilon")->required();
  sweep->add_option("--from", from, "Start of the range (angles accept pi fractions)")->required();
  sweep->add_option("--to", to, "End of the range")->required();
  sweep->add_option("--steps", steps, "Grid points, at least 2")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance claims");
  verify->add_option("--out", out_path, "Also write the report here");
  verify->add_option("--seed", seed, "Base seed for every claim");
  verify->add_option("--threads", threads, "Estimator workers (0 = hardware)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
  auto run_options = [&](CLI::App* sub) {
    RunOptions o;
    if (given(sub, "--scenario")) o.scenario_path = scenario;
    if (given(sub, "--preset")) o.preset = preset_name;
    if (given(sub, "--out")) o.out_path = out_path;
    o.format = *parse_format(format);
    if (given(sub, "--seed")) o.seed = seed;
    if (given(sub, "--rounds")) o.rounds = rounds;
    return o;
  };

  if (run->parsed()) return cmd_run(run_options(run), out, err);
  if (sweep->parsed()) {
    SweepOptions o;
    o.base = run_options(sweep);
    o.parameter = parameter;
    o.from = from;
    o.to = to;
    o.steps = steps;
    return cmd_sweep(o, out, err);
  }
  VerifyOptions v;
  if (given(verify, "--seed")) v.seed = seed;
  v.threads = threads;
  std::optional<std::string> verify_out;
  if (given(verify, "--out")) verify_out = out_path;
  return cmd_verify(v, verify_out, out, err);
}

}  // namespace cqkd::cli
