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

// Command-line front end: scenario files, presets, output writers, the
// claim suite behind `verify`, and subcommand dispatch.

#ifndef CQKD_CLI_H
#define CQKD_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cqkd/harness.h"

namespace cqkd::cli {

/// Radians ("0.785398"), or a multiple of pi: "pi", "-pi/2", "3pi/8",
/// "3*pi/8", "0.5pi". Throws std::invalid_argument on anything else.
double parse_angle(std::string_view text);

/// A malformed scenario file. what() reads "<source>:<line>: <message>".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, int line, std::string key, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  std::string source_;
  int line_;
  std::string key_;
};

struct ScenarioSpec {
  std::string name = "scenario";
  harness::Scenario scenario;
  /// Fixed bit pattern from bit_source, repeated to fill the round count.
  std::vector<int> bit_pattern;

  /// The scenario with overrides applied and the bit pattern expanded.
  /// Throws std::invalid_argument if the result does not validate.
  harness::Scenario resolve(std::optional<std::uint64_t> seed = std::nullopt,
                            std::optional<int> rounds = std::nullopt) const;
};

/// Parses the flat key = value format. See README for the grammar.
ScenarioSpec parse_scenario(std::string_view text, const std::string& source = "<string>");
/// Throws ConfigError (line 0) if the file cannot be read.
ScenarioSpec load_scenario_file(const std::string& path);

std::optional<ScenarioSpec> preset(std::string_view name);
std::vector<std::string> preset_names();

/// Renders a scenario back to the file format; parse_scenario inverts it.
std::string format_scenario(const ScenarioSpec& spec);

enum class Format { csv, json_lines };
std::optional<Format> parse_format(std::string_view name);

/// Number rendering shared by every writer: "%.12g", with -0 printed as 0.
std::string format_number(double v);
/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

struct RunReport {
  std::string name;
  harness::Scenario scenario;
  harness::RunStats stats;
  double exact_qber = 0.0;
  std::optional<double> oracle_qber;
};

extern const char* const kRunCsvHeader;
extern const char* const kSweepCsvHeader;

void write_run(std::ostream& out, const RunReport& report, Format format);
void write_sweep(std::ostream& out, harness::SweepParameter parameter,
                 const std::vector<harness::SweepRow>& rows, Format format);

// The claim suite.

/// Constants the claims compare against. Tests perturb these to check that
/// the suite notices.
struct Expectations {
  double no_attack_qber = 0.0;
  double carrier_diagonal = 0.5;
  double intercept_qber = 0.5;
  double intercept_eve_accuracy = 0.5;
  double entangle_coefficient = 2.0;
  double entangle_peak = 0.5;
  double eve_accuracy_without_rotation = 0.99;
  double max_eve_information = 0.01;
  double repetition_rate = 0.028;
};

struct VerifyOptions {
  Expectations expect;
  std::uint64_t seed = 20260101;
  /// Per-round estimator workers; results do not depend on it.
  int threads = 0;
};

struct Claim {
  int criterion;
  std::string label;
  std::string expected;
  std::string got;
  bool pass;
};

struct CriterionResult {
  int number;
  std::string title;
  std::vector<Claim> claims;
  bool pass() const;
};

std::vector<CriterionResult> run_claims(const VerifyOptions& options = {});

/// "C4 entangle θ=π/4: expected 0.500 got 0.497 PASS"
std::string format_claim(const Claim& claim);
/// "criterion 4 (entangle error rate): PASS (12/12 claims)"
std::string format_criterion(const CriterionResult& result);
/// Every claim line, then a per-criterion summary, then an overall line.
std::string render_verify(const std::vector<CriterionResult>& results);

// Subcommands. Each returns the process exit code.

struct RunOptions {
  std::optional<std::string> scenario_path;
  std::optional<std::string> preset;
  std::optional<std::string> out_path;
  Format format = Format::csv;
  std::optional<std::uint64_t> seed;
  std::optional<int> rounds;
};

/// 0 on pass, 2 on abort, 1 on a usage or configuration error.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);
/// 0 iff every claim passes.
int cmd_verify(const VerifyOptions& options, const std::optional<std::string>& out_path,
               std::ostream& out, std::ostream& err);

struct SweepOptions {
  RunOptions base;
  std::string parameter;
  std::string from;
  std::string to;
  int steps = 0;
};

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cqkd::cli

#endif  // CQKD_CLI_H
