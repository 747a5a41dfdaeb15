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

#include <cmath>
#include <stdexcept>

#include "cqkd/harness.h"

namespace cqkd::harness {

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::theta: return "theta";
    case SweepParameter::p1: return "p1";
    case SweepParameter::p2: return "p2";
    case SweepParameter::p3: return "p3";
    case SweepParameter::epsilon: return "epsilon";
  }
  return "?";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
  for (SweepParameter p : {SweepParameter::theta, SweepParameter::p1, SweepParameter::p2,
                           SweepParameter::p3, SweepParameter::epsilon}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::vector<double> linspace(double from, double to, int steps) {
  if (steps < 2) throw std::invalid_argument("linspace: steps must be >= 2");
  if (!std::isfinite(from) || !std::isfinite(to)) throw std::invalid_argument("linspace: bounds must be finite");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = from + (to - from) * static_cast<double>(i) / (steps - 1);
  }
  out.back() = to;
  return out;
}

std::vector<SweepRow> sweep(SweepParameter parameter, std::span<const double> grid,
                            const Scenario& base) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double v : grid) {
    Scenario s = base;
    switch (parameter) {
      case SweepParameter::theta: s.theta = v; break;
      case SweepParameter::p1: s.noise = channels::PauliChannel(v, s.noise.p2(), s.noise.p3()); break;
      case SweepParameter::p2: s.noise = channels::PauliChannel(s.noise.p1(), v, s.noise.p3()); break;
      case SweepParameter::p3: s.noise = channels::PauliChannel(s.noise.p1(), s.noise.p2(), v); break;
      case SweepParameter::epsilon: s.key.epsilon = v; break;
    }
    rows.push_back(SweepRow{v, estimate_round_qber(s).qber, exact_round_statistics(s).qber_exact,
                            scenario_oracle_qber(s)});
  }
  return rows;
}

}  // namespace cqkd::harness
