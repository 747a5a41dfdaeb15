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

#include <algorithm>
#include <utility>

#include "cqkd/cli.h"

namespace cqkd::cli {

namespace {

// Each preset is written in the scenario file format and parsed on demand.
const std::vector<std::pair<std::string, std::string>>& table() {
  static const std::vector<std::pair<std::string, std::string>> presets = {
      {"no-attack",
       "name = no-attack\n"
       "rounds = 1000\n"},
      {"intercept-resend",
       "name = intercept-resend\n"
       "rounds = 10000\n"
       "[attack]\n"
       "kind = intercept_resend\n"},
      {"entangle",
       "name = entangle\n"
       "rounds = 10000\n"
       "[attack]\n"
       "kind = entangle_cnot\n"},
      {"entangle-theta0",
       "name = entangle-theta0\n"
       "theta = 0\n"
       "rounds = 10000\n"
       "[attack]\n"
       "kind = entangle_cnot\n"},
      {"general-unitary",
       "name = general-unitary\n"
       "rounds = 10000\n"
       "[attack]\n"
       "kind = general_unitary\n"
       "unitary_seed = 1\n"},
      {"general-unitary-prior",
       "name = general-unitary-prior\n"
       "rounds = 10000\n"
       "[attack]\n"
       "kind = general_unitary\n"
       "unitary_seed = 1\n"
       "prior_entanglement = true\n"
       "prior_seed = 2\n"},
      {"pauli-noise",
       "name = pauli-noise\n"
       "rounds = 10000\n"
       "[noise]\n"
       "p1 = 0.01\n"
       "p2 = 0.005\n"
       "p3 = 0.01\n"},
      {"repetition",
       "name = repetition\n"
       "rounds = 10000\n"
       "repetition_n = 3\n"
       "[noise]\n"
       "p1 = 0.1\n"
       "[sifting]\n"
       "threshold = 0.05\n"},
      {"degraded-key",
       "name = degraded-key\n"
       "rounds = 10000\n"
       "[key]\n"
       "epsilon = 0.04\n"
       "contaminant = maximally_mixed\n"},
  };
  return presets;
}

}  // namespace

std::optional<ScenarioSpec> preset(std::string_view name) {
  for (const auto& [n, text] : table()) {
    if (n == name) return parse_scenario(text, "preset:" + n);
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& entry : table()) names.push_back(entry.first);
  return names;
}

}  // namespace cqkd::cli
