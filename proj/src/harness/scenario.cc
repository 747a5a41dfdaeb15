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

std::string_view to_string(Contaminant c) {
  switch (c) {
    case Contaminant::maximally_mixed: return "maximally_mixed";
    case Contaminant::phi_minus: return "phi_minus";
    case Contaminant::random: return "random";
  }
  return "?";
}

channels::DegradedKeyModel KeyDegradation::model() const {
  const WireList wires{protocol::kKeyA, protocol::kKeyB};
  channels::DegradedKeyModel m;
  m.epsilon = epsilon;
  switch (contaminant) {
    case Contaminant::maximally_mixed:
      m.contaminant = DensityMatrix::maximally_mixed(wires);
      break;
    case Contaminant::phi_minus:
      m.contaminant = to_density(epr_phi_minus(protocol::kKeyA, protocol::kKeyB));
      break;
    case Contaminant::random: {
      RandomStream rng(contaminant_seed);
      m.contaminant = random_density(wires, rng);
      break;
    }
  }
  m.validate();
  return m;
}

void Scenario::validate() const {
  if (!std::isfinite(theta)) throw std::invalid_argument("scenario: theta must be finite");
  if (rounds < 1) throw std::invalid_argument("scenario: rounds must be >= 1");
  if (repetition_n < 1 || repetition_n % 2 == 0) {
    throw std::invalid_argument("scenario: repetition_n must be odd and >= 1");
  }
  if (static_cast<long long>(rounds) * repetition_n > 10'000'000LL) {
    throw std::invalid_argument("scenario: rounds * repetition_n exceeds 10^7 transmissions");
  }
  if (!fixed_bits.empty()) {
    if (fixed_bits.size() != static_cast<std::size_t>(rounds)) {
      throw std::invalid_argument("scenario: fixed bit sequence length differs from rounds");
    }
    for (int b : fixed_bits) {
      if (b != 0 && b != 1) throw std::invalid_argument("scenario: fixed bits must be 0 or 1");
    }
  }
  if (!(key.epsilon >= 0.0 && key.epsilon <= 1.0)) {
    throw std::invalid_argument("scenario: key epsilon must lie in [0, 1]");
  }
  if (threads < 0) throw std::invalid_argument("scenario: threads must be >= 0");
  attack.validate();
  sifting.validate();
}

std::shared_ptr<const protocol::Interference> make_interference(const Scenario& s) {
  auto attack = adversary::make_attack(s.attack);
  if (s.noise.is_noiseless()) return attack;
  return std::make_shared<protocol::Chain>(std::move(attack),
                                           std::make_shared<channels::PauliNoise>(s.noise));
}

}  // namespace cqkd::harness
