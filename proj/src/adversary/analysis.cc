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

#include "cqkd/adversary.h"

namespace cqkd::adversary {

namespace {

using protocol::kCarrier;
using protocol::kKeyA;
using protocol::kKeyB;

const WireList& eve_view() {
  static const WireList wires{kCarrier, kEveSystem, kIndicator};
  return wires;
}

// 8x8 matrix of `gate` on `targets` within (carrier, eve_sys, eve_ind).
Unitary embed(const Unitary& gate, const WireList& targets) {
  Matrix m(8, 8);
  for (std::uint64_t col = 0; col < 8; ++col) {
    m.col(static_cast<Eigen::Index>(col)) = apply(gate, make_state(eve_view(), col), targets).amplitudes();
  }
  return Unitary(std::move(m));
}

std::vector<Unitary> structured_family() {
  const Unitary cnot = cnot_gate();
  const Unitary c_to_ind = embed(cnot, {kCarrier, kIndicator});
  const Unitary e_to_ind = embed(cnot, {kEveSystem, kIndicator});
  const Unitary c_to_e = embed(cnot, {kCarrier, kEveSystem});
  return {Unitary::identity(3), c_to_ind, e_to_ind,
          Unitary(e_to_ind.matrix() * c_to_e.matrix()),
          Unitary(c_to_ind.matrix() * embed(cnot, {kEveSystem, kCarrier}).matrix())};
}

}  // namespace

ConditionalStates eve_conditional_states(const EveSetup& setup) {
  PureState key = attach(epr_phi_plus(kKeyA, kKeyB), kEveSystem, 0);
  if (setup.prior) {
    key = apply(prior_entangler(setup.prior->first, setup.prior->second), key, {kKeyA, kEveSystem});
  }
  key = apply_bilateral(rotation_gate(setup.theta), key, kKeyA, kKeyB);
  auto conditional = [&](int bit) {
    PureState sent = apply(cnot_gate(), attach(key, kCarrier, bit), {kKeyA, kCarrier});
    sent = attach(sent, kIndicator, 0);
    return reorder(partial_trace(to_density(sent), eve_view()), eve_view());
  };
  return ConditionalStates{conditional(0), conditional(1)};
}

double exact_guess_accuracy(const ConditionalStates& states, const Unitary& u) {
  const double hit0 = outcome_probability(apply(u, states.given_0, eve_view()), kIndicator, 0);
  const double hit1 = outcome_probability(apply(u, states.given_1, eve_view()), kIndicator, 1);
  return 0.5 * (hit0 + hit1);
}

NoPerfectAttackReport verify_no_perfect_attack(int samples, const EveSetup& setup,
                                               RandomStream& rng, int shots_per_unitary) {
  if (samples < 1) throw std::invalid_argument("verify_no_perfect_attack: samples must be >= 1");
  if (shots_per_unitary < 1) throw std::invalid_argument("verify_no_perfect_attack: shots must be >= 1");
  const ConditionalStates states = eve_conditional_states(setup);

  std::vector<Unitary> unitaries = structured_family();
  for (int i = 0; i < samples; ++i) unitaries.push_back(random_unitary(8, rng));

  NoPerfectAttackReport report;
  report.samples = samples;
  report.unitaries_checked = static_cast<int>(unitaries.size());
  std::int64_t hits = 0;
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    const Unitary& u = unitaries[i];
    const DensityMatrix out0 = apply(u, states.given_0, eve_view());
    const DensityMatrix out1 = apply(u, states.given_1, eve_view());
    const double td = trace_distance(out0, out1);
    const double p_hit0 = outcome_probability(out0, kIndicator, 0);
    const double p_hit1 = outcome_probability(out1, kIndicator, 1);
    const double advantage = std::abs(0.5 * (p_hit0 + p_hit1) - 0.5);
    report.max_trace_distance = std::max(report.max_trace_distance, td);
    report.max_exact_advantage = std::max(report.max_exact_advantage, advantage);
    if ((td >= 1e-9 || advantage >= 1e-9) && !report.first_failure) {
      report.first_failure = static_cast<int>(i);
    }
    for (int s = 0; s < shots_per_unitary; ++s) {
      const int bit = rng.bit();
      const double p_hit = bit == 0 ? p_hit0 : p_hit1;
      if (rng.uniform() < p_hit) ++hits;
    }
  }
  report.shots = static_cast<std::int64_t>(unitaries.size()) * shots_per_unitary;
  report.sampled_accuracy = static_cast<double>(hits) / static_cast<double>(report.shots);
  report.sampled_sigma = std::sqrt(0.25 / static_cast<double>(report.shots));
  report.passed = !report.first_failure &&
                  std::abs(report.sampled_accuracy - 0.5) <= 3.0 * report.sampled_sigma;
  return report;
}

}  // namespace cqkd::adversary
