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

using adversary::AttackKind;

ExactStats exact_round_statistics(const Scenario& s) {
  s.validate();
  const auto interference = make_interference(s);
  DensityMatrix key = s.key.epsilon > 0.0
                          ? channels::degrade_key(s.key.model())
                          : to_density(epr_phi_plus(protocol::kKeyA, protocol::kKeyB));
  key = interference->prepare_exact(key);
  for (int r = 1; r < round_of_interest(s); ++r) {
    key = protocol::exact_round(key, s.theta, *interference).key_after;
  }
  protocol::ExactRound round = protocol::exact_round(key, s.theta, *interference);
  return ExactStats{round.error_probability,
                    partial_trace(round.key_after, {protocol::kKeyA, protocol::kKeyB})};
}

double oracle_qber(AttackKind kind, double theta) {
  switch (kind) {
    case AttackKind::none:
      return 0.0;
    case AttackKind::intercept_resend:
      return 0.5;
    case AttackKind::entangle_cnot: {
      const double c = std::cos(theta);
      const double sn = std::sin(theta);
      return 2.0 * c * c * sn * sn;
    }
    case AttackKind::general_unitary:
      break;
  }
  throw std::invalid_argument("oracle_qber: no closed form for " + std::string(to_string(kind)));
}

std::optional<double> scenario_oracle_qber(const Scenario& s) {
  if (s.key.epsilon > 0.0) return std::nullopt;
  const double flip = s.noise.p1() + s.noise.p2();
  const bool key_safe_noise = s.noise.p2() == 0.0 && s.noise.p3() == 0.0;
  switch (s.attack.kind) {
    case AttackKind::none:
      if (s.repetition_n == 1) return flip;
      // Only pure bit flips leave the key intact between repeated transmissions.
      if (key_safe_noise) return repetition_failure_probability(flip, s.repetition_n);
      return std::nullopt;
    case AttackKind::intercept_resend:
      if (s.attack.resend == adversary::ResendMode::substitute) return 0.5;
      if (s.repetition_n == 1) return flip;
      return std::nullopt;
    case AttackKind::entangle_cnot:
      if (s.noise.is_noiseless() && s.repetition_n == 1) return oracle_qber(s.attack.kind, s.theta);
      return std::nullopt;
    case AttackKind::general_unitary:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace cqkd::harness
