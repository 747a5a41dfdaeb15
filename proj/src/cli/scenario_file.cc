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

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cqkd/cli.h"

namespace cqkd::cli {

ConfigError::ConfigError(std::string source, int line, std::string key, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line),
      key_(std::move(key)) {}

namespace {

using harness::Scenario;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Value parsers throw std::invalid_argument with a short reason; the caller
// adds the location.
double real_value(std::string_view v) {
  double out = 0.0;
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw std::invalid_argument("expected a number");
  }
  return out;
}

double probability_value(std::string_view v) {
  const double p = real_value(v);
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("expected a value in [0, 1]");
  return p;
}

std::uint64_t u64_value(std::string_view v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument("expected a non-negative integer");
  }
  return out;
}

int int_value(std::string_view v, int min) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument("expected an integer");
  }
  if (out < min) throw std::invalid_argument("must be >= " + std::to_string(min));
  return out;
}

bool bool_value(std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument("expected true or false");
}

std::vector<int> bit_source_value(std::string_view v) {
  if (v == "random") return {};
  std::vector<int> bits;
  for (char c : v) {
    if (c != '0' && c != '1') throw std::invalid_argument("expected 'random' or a string of 0 and 1");
    bits.push_back(c - '0');
  }
  if (bits.empty()) throw std::invalid_argument("empty bit sequence");
  return bits;
}

struct Draft {
  ScenarioSpec spec;
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;
  int noise_line = 0;
};

using Handler = std::function<void(Draft&, std::string_view)>;

const std::map<std::string, std::map<std::string, Handler>>& grammar() {
  static const std::map<std::string, std::map<std::string, Handler>> g = {
      {"",
       {
           {"name", [](Draft& d, std::string_view v) {
              if (v.empty()) throw std::invalid_argument("empty name");
              d.spec.name = std::string(v);
            }},
           {"theta", [](Draft& d, std::string_view v) { d.spec.scenario.theta = parse_angle(v); }},
           {"rounds", [](Draft& d, std::string_view v) { d.spec.scenario.rounds = int_value(v, 1); }},
           {"repetition_n", [](Draft& d, std::string_view v) {
              const int n = int_value(v, 1);
              if (n % 2 == 0) throw std::invalid_argument("must be odd");
              d.spec.scenario.repetition_n = n;
            }},
           {"seed", [](Draft& d, std::string_view v) { d.spec.scenario.seed = u64_value(v); }},
           {"bit_source", [](Draft& d, std::string_view v) { d.spec.bit_pattern = bit_source_value(v); }},
           {"threads", [](Draft& d, std::string_view v) { d.spec.scenario.threads = int_value(v, 0); }},
       }},
      {"attack",
       {
           {"kind", [](Draft& d, std::string_view v) {
              const auto k = adversary::parse_attack_kind(v);
              if (!k) {
                throw std::invalid_argument(
                    "expected none, intercept_resend, entangle_cnot or general_unitary");
              }
              d.spec.scenario.attack.kind = *k;
            }},
           {"resend", [](Draft& d, std::string_view v) {
              if (v == "substitute") {
                d.spec.scenario.attack.resend = adversary::ResendMode::substitute;
              } else if (v == "measured") {
                d.spec.scenario.attack.resend = adversary::ResendMode::measured;
              } else {
                throw std::invalid_argument("expected substitute or measured");
              }
            }},
           {"probe_init", [](Draft& d, std::string_view v) {
              const int b = int_value(v, 0);
              if (b > 1) throw std::invalid_argument("expected 0 or 1");
              d.spec.scenario.attack.probe_init = b;
            }},
           {"entangle", [](Draft& d, std::string_view v) {
              if (v == "once") {
                d.spec.scenario.attack.entangle = adversary::EntangleMode::once;
              } else if (v == "every_round") {
                d.spec.scenario.attack.entangle = adversary::EntangleMode::every_round;
              } else {
                throw std::invalid_argument("expected once or every_round");
              }
            }},
           {"unitary_seed", [](Draft& d, std::string_view v) { d.spec.scenario.attack.unitary_seed = u64_value(v); }},
           {"prior_entanglement", [](Draft& d, std::string_view v) {
              d.spec.scenario.attack.prior_entanglement = bool_value(v);
            }},
           {"prior_seed", [](Draft& d, std::string_view v) { d.spec.scenario.attack.prior_seed = u64_value(v); }},
       }},
      {"noise",
       {
           {"p1", [](Draft& d, std::string_view v) { d.p1 = probability_value(v); }},
           {"p2", [](Draft& d, std::string_view v) { d.p2 = probability_value(v); }},
           {"p3", [](Draft& d, std::string_view v) { d.p3 = probability_value(v); }},
       }},
      {"sifting",
       {
           {"fraction", [](Draft& d, std::string_view v) {
              const double f = probability_value(v);
              if (f == 0.0) throw std::invalid_argument("must be > 0");
              d.spec.scenario.sifting.disclose_fraction = f;
            }},
           {"threshold", [](Draft& d, std::string_view v) {
              d.spec.scenario.sifting.qber_abort_threshold = probability_value(v);
            }},
       }},
      {"key",
       {
           {"epsilon", [](Draft& d, std::string_view v) { d.spec.scenario.key.epsilon = probability_value(v); }},
           {"contaminant", [](Draft& d, std::string_view v) {
              using harness::Contaminant;
              if (v == "maximally_mixed") {
                d.spec.scenario.key.contaminant = Contaminant::maximally_mixed;
              } else if (v == "phi_minus") {
                d.spec.scenario.key.contaminant = Contaminant::phi_minus;
              } else if (v == "random") {
                d.spec.scenario.key.contaminant = Contaminant::random;
              } else {
                throw std::invalid_argument("expected maximally_mixed, phi_minus or random");
              }
            }},
           {"contaminant_seed", [](Draft& d, std::string_view v) {
              d.spec.scenario.key.contaminant_seed = u64_value(v);
            }},
       }},
  };
  return g;
}

// Round-trips through parse_scenario.
std::string exact_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string qualified(const std::string& section, std::string_view key) {
  return section.empty() ? std::string(key) : section + "." + std::string(key);
}

}  // namespace

Scenario ScenarioSpec::resolve(std::optional<std::uint64_t> seed_override,
                               std::optional<int> rounds_override) const {
  Scenario s = scenario;
  if (seed_override) s.seed = *seed_override;
  if (rounds_override) s.rounds = *rounds_override;
  if (!bit_pattern.empty()) {
    s.fixed_bits.resize(static_cast<std::size_t>(std::max(s.rounds, 0)));
    for (std::size_t i = 0; i < s.fixed_bits.size(); ++i) s.fixed_bits[i] = bit_pattern[i % bit_pattern.size()];
  }
  s.validate();
  return s;
}

ScenarioSpec parse_scenario(std::string_view text, const std::string& source) {
  Draft d;
  std::string section;
  std::set<std::string> seen;
  std::set<std::string> sections_seen;
  int line_no = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(source, line_no, "", "malformed section header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      const std::string canonical = name == "scenario" ? "" : name;
      if (!grammar().contains(canonical)) {
        throw ConfigError(source, line_no, name, "unknown section [" + name + "]");
      }
      if (!sections_seen.insert(name).second) {
        throw ConfigError(source, line_no, name, "duplicate section [" + name + "]");
      }
      section = canonical;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(source, line_no, "", "expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const std::string full = qualified(section, key);
    if (key.empty()) throw ConfigError(source, line_no, "", "missing key before '='");

    const auto& keys = grammar().at(section);
    const auto it = keys.find(std::string(key));
    if (it == keys.end()) {
      throw ConfigError(source, line_no, full, "unknown key '" + full + "'");
    }
    if (!seen.insert(full).second) {
      throw ConfigError(source, line_no, full, "duplicate key '" + full + "'");
    }
    try {
      it->second(d, value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(source, line_no, full, "bad value for '" + full + "': " + e.what());
    }
    if (section == "noise") d.noise_line = line_no;
  }

  try {
    d.spec.scenario.noise = channels::PauliChannel(d.p1, d.p2, d.p3);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(source, d.noise_line, "noise", std::string("bad [noise] section: ") + e.what());
  }
  try {
    d.spec.resolve();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(source, 0, "", e.what());
  }
  return d.spec;
}

ScenarioSpec load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "", "cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

std::string format_scenario(const ScenarioSpec& spec) {
  const Scenario& s = spec.scenario;
  std::ostringstream o;
  o << "name = " << spec.name << "\n";
  o << "theta = " << exact_number(s.theta) << "\n";
  o << "rounds = " << s.rounds << "\n";
  o << "repetition_n = " << s.repetition_n << "\n";
  o << "seed = " << s.seed << "\n";
  o << "bit_source = ";
  if (spec.bit_pattern.empty()) {
    o << "random";
  } else {
    for (int b : spec.bit_pattern) o << b;
  }
  o << "\n";
  o << "threads = " << s.threads << "\n";
  o << "\n[attack]\n";
  o << "kind = " << adversary::to_string(s.attack.kind) << "\n";
  o << "resend = " << adversary::to_string(s.attack.resend) << "\n";
  o << "probe_init = " << s.attack.probe_init << "\n";
  o << "entangle = " << adversary::to_string(s.attack.entangle) << "\n";
  o << "unitary_seed = " << s.attack.unitary_seed << "\n";
  o << "prior_entanglement = " << (s.attack.prior_entanglement ? "true" : "false") << "\n";
  o << "prior_seed = " << s.attack.prior_seed << "\n";
  o << "\n[noise]\n";
  o << "p1 = " << exact_number(s.noise.p1()) << "\n";
  o << "p2 = " << exact_number(s.noise.p2()) << "\n";
  o << "p3 = " << exact_number(s.noise.p3()) << "\n";
  o << "\n[sifting]\n";
  o << "fraction = " << exact_number(s.sifting.disclose_fraction) << "\n";
  o << "threshold = " << exact_number(s.sifting.qber_abort_threshold) << "\n";
  o << "\n[key]\n";
  o << "epsilon = " << exact_number(s.key.epsilon) << "\n";
  o << "contaminant = " << harness::to_string(s.key.contaminant) << "\n";
  o << "contaminant_seed = " << s.key.contaminant_seed << "\n";
  return o.str();
}

}  // namespace cqkd::cli
