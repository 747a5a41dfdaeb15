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

#include <stdexcept>

#include "cqkd/protocol.h"

namespace cqkd::protocol {

PureState Interference::prepare(const PureState& key_joint, RandomStream&) const {
  return key_joint;
}

DensityMatrix Interference::prepare_exact(const DensityMatrix& key_joint) const {
  return key_joint;
}

Interference::Outcome NoInterference::transit(const PureState& joint, RandomStream&) const {
  return Outcome{joint, std::nullopt};
}

DensityMatrix NoInterference::transit_exact(const DensityMatrix& joint) const { return joint; }

Chain::Chain(std::shared_ptr<const Interference> first, std::shared_ptr<const Interference> second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (!first_ || !second_) throw std::invalid_argument("Chain: null stage");
}

Interference::Outcome Chain::transit(const PureState& joint, RandomStream& rng) const {
  Outcome a = first_->transit(joint, rng);
  Outcome b = second_->transit(a.joint, rng);
  return Outcome{std::move(b.joint), a.eve_guess ? a.eve_guess : b.eve_guess};
}

DensityMatrix Chain::transit_exact(const DensityMatrix& joint) const {
  return second_->transit_exact(first_->transit_exact(joint));
}

PureState Chain::prepare(const PureState& key_joint, RandomStream& rng) const {
  return second_->prepare(first_->prepare(key_joint, rng), rng);
}

DensityMatrix Chain::prepare_exact(const DensityMatrix& key_joint) const {
  return second_->prepare_exact(first_->prepare_exact(key_joint));
}

RoundResult run_round(QuantumKey key, double theta, int bit, const Interference& interference,
                      RandomStream& rng) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("run_round: bit must be 0 or 1");
  KeyWithCarrier sent = alice_encode(bilateral_rotate(std::move(key), theta), bit);
  Interference::Outcome out = interference.transit(sent.key.joint, rng);
  if (!out.joint.has_wire(kCarrier)) {
    throw std::logic_error("run_round: interference removed the carrier");
  }
  sent.key.joint = std::move(out.joint);
  Decoded got = bob_decode(std::move(sent), rng);
  RoundRecord record;
  record.sent_bit = bit;
  record.received_bit = got.bit;
  record.eve_guess = out.eve_guess;
  return RoundResult{record, std::move(got.key)};
}

ExactRound exact_round(const DensityMatrix& key, double theta, const Interference& interference) {
  if (key.has_wire(kCarrier)) throw std::logic_error("exact_round: carrier already attached");
  const DensityMatrix rotated = apply_bilateral(rotation_gate(theta), key, kKeyA, kKeyB);
  std::array<double, 2> err{};
  std::optional<Matrix> accumulated;
  std::optional<WireList> wires;
  for (int bit = 0; bit < 2; ++bit) {
    DensityMatrix rho = apply(cnot_gate(), attach(rotated, kCarrier, bit), {kKeyA, kCarrier});
    rho = interference.transit_exact(rho);
    rho = apply(cnot_gate(), rho, {kKeyB, kCarrier});
    err[bit] = outcome_probability(rho, kCarrier, 1 - bit);
    WireList keep;
    for (const auto& w : rho.wires()) {
      if (w != kCarrier) keep.push_back(w);
    }
    DensityMatrix after = partial_trace(rho, keep);
    if (!wires) {
      wires = after.wires();
      accumulated = after.matrix() * 0.5;
    } else {
      *accumulated += reorder(after, *wires).matrix() * 0.5;
    }
  }
  return ExactRound{0.5 * (err[0] + err[1]), err, DensityMatrix(*wires, *accumulated)};
}

}  // namespace cqkd::protocol
