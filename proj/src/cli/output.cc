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

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "cqkd/cli.h"

namespace cqkd::cli {

const char* const kRunCsvHeader =
    "name,attack,theta,logical_bits,rounds_executed,qber,qber_ci_low,qber_ci_high,observed_qber,"
    "key_fidelity_final,eve_accuracy,eve_accuracy_ci_low,eve_accuracy_ci_high,eve_mutual_info_bits,"
    "verdict,restart_required,delivered_key_length,exact_qber,oracle_qber";

const char* const kSweepCsvHeader = "parameter_value,mc_qber,ci_low,ci_high,exact_qber,oracle_qber";

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json-lines") return Format::json_lines;
  return std::nullopt;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

// JSON numbers go through the same rendering as CSV so both formats agree.
nlohmann::ordered_json number(double v) { return nlohmann::ordered_json::parse(format_number(v)); }

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? number(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

void write_run(std::ostream& out, const RunReport& r, Format format) {
  const harness::RunStats& st = r.stats;
  const std::string attack(adversary::to_string(r.scenario.attack.kind));
  if (format == Format::csv) {
    out << kRunCsvHeader << "\r\n";
    const std::vector<std::string> fields = {
        csv_field(r.name),
        attack,
        format_number(r.scenario.theta),
        std::to_string(st.logical_bits),
        std::to_string(st.rounds_executed),
        format_number(st.qber.value),
        format_number(st.qber.ci_low),
        format_number(st.qber.ci_high),
        format_number(st.observed_qber),
        format_number(st.key_fidelity_final),
        format_number(st.eve_accuracy.value),
        format_number(st.eve_accuracy.ci_low),
        format_number(st.eve_accuracy.ci_high),
        format_number(st.eve_mutual_info_bits),
        protocol::to_string(st.verdict),
        st.restart_required ? "true" : "false",
        std::to_string(st.delivered_key_length),
        format_number(r.exact_qber),
        r.oracle_qber ? format_number(*r.oracle_qber) : "",
    };
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << "\r\n";
    return;
  }
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["record"] = "run";
  j["name"] = r.name;
  j["attack"] = attack;
  j["theta"] = number(r.scenario.theta);
  j["logical_bits"] = st.logical_bits;
  j["rounds_executed"] = st.rounds_executed;
  j["qber"] = number(st.qber.value);
  j["qber_ci_low"] = number(st.qber.ci_low);
  j["qber_ci_high"] = number(st.qber.ci_high);
  j["observed_qber"] = number(st.observed_qber);
  j["key_fidelity_final"] = number(st.key_fidelity_final);
  j["eve_accuracy"] = number(st.eve_accuracy.value);
  j["eve_accuracy_ci_low"] = number(st.eve_accuracy.ci_low);
  j["eve_accuracy_ci_high"] = number(st.eve_accuracy.ci_high);
  j["eve_mutual_info_bits"] = number(st.eve_mutual_info_bits);
  j["verdict"] = protocol::to_string(st.verdict);
  j["restart_required"] = st.restart_required;
  j["delivered_key_length"] = st.delivered_key_length;
  j["exact_qber"] = number(r.exact_qber);
  j["oracle_qber"] = optional_number(r.oracle_qber);
  out << j.dump() << "\n";
}

void write_sweep(std::ostream& out, harness::SweepParameter parameter,
                 const std::vector<harness::SweepRow>& rows, Format format) {
  if (format == Format::csv) {
    out << kSweepCsvHeader << "\r\n";
    for (const auto& row : rows) {
      out << format_number(row.value) << ',' << format_number(row.mc.value) << ','
          << format_number(row.mc.ci_low) << ',' << format_number(row.mc.ci_high) << ','
          << format_number(row.exact) << ',' << (row.oracle ? format_number(*row.oracle) : "") << "\r\n";
    }
    return;
  }
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["record"] = "sweep_row";
    j["parameter"] = std::string(harness::to_string(parameter));
    j["parameter_value"] = number(row.value);
    j["mc_qber"] = number(row.mc.value);
    j["ci_low"] = number(row.mc.ci_low);
    j["ci_high"] = number(row.mc.ci_high);
    j["exact_qber"] = number(row.exact);
    j["oracle_qber"] = optional_number(row.oracle);
    out << j.dump() << "\n";
  }
}

}  // namespace cqkd::cli
