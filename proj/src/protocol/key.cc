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

QuantumKey init_key(RandomStream& rng) {
  return QuantumKey{epr_phi_plus(kKeyA, kKeyB), rng.next_u64(), 0};
}

QuantumKey make_key(PureState joint, std::uint64_t pair_id) {
  if (!joint.has_wire(kKeyA) || !joint.has_wire(kKeyB)) {
    throw std::invalid_argument("make_key: joint state lacks keyA or keyB");
  }
  if (joint.has_wire(kCarrier)) throw std::invalid_argument("make_key: carrier attached");
  return QuantumKey{std::move(joint), pair_id, 0};
}

QuantumKey bilateral_rotate(QuantumKey key, double theta) {
  key.joint = apply_bilateral(rotation_gate(theta), key.joint, kKeyA, kKeyB);
  return key;
}

KeyWithCarrier alice_encode(QuantumKey key, int bit) {
  if (key.joint.has_wire(kCarrier)) throw std::logic_error("alice_encode: carrier already attached");
  key.joint = apply(cnot_gate(), attach(key.joint, kCarrier, bit), {kKeyA, kCarrier});
  return KeyWithCarrier{std::move(key)};
}

Decoded bob_decode(KeyWithCarrier in_transit, RandomStream& rng) {
  QuantumKey& key = in_transit.key;
  if (!key.joint.has_wire(kCarrier)) throw std::logic_error("bob_decode: no carrier attached");
  const PureState decoded = apply(cnot_gate(), key.joint, {kKeyB, kCarrier});
  Measurement m = measure(decoded, kCarrier, rng);
  key.joint = remove_settled_wire(m.state, kCarrier);
  key.rounds_used += 1;
  return Decoded{m.outcome, std::move(key)};
}

double key_fidelity(const DensityMatrix& joint) {
  const DensityMatrix key = partial_trace(joint, {kKeyA, kKeyB});
  return fidelity(epr_phi_plus(kKeyA, kKeyB), key);
}

double key_fidelity(const PureState& joint) {
  if (joint.num_qubits() == 2) {
    return fidelity(epr_phi_plus(kKeyA, kKeyB), to_density(joint));
  }
  return key_fidelity(to_density(joint));
}

}  // namespace cqkd::protocol
