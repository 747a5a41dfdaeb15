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

#include "cqkd/channels.h"

namespace cqkd::channels {

std::string_view to_string(Pauli p) {
  switch (p) {
    case Pauli::identity: return "I";
    case Pauli::sigma1: return "sigma1";
    case Pauli::sigma2: return "sigma2";
    case Pauli::sigma3: return "sigma3";
  }
  return "?";
}

const Unitary& gate_of(Pauli p) {
  const PauliGates& g = pauli_gates();
  switch (p) {
    case Pauli::sigma1: return g.sigma1;
    case Pauli::sigma2: return g.sigma2;
    case Pauli::sigma3: return g.sigma3;
    case Pauli::identity: break;
  }
  return g.identity;
}

PauliChannel::PauliChannel(double p1, double p2, double p3) : p1_(p1), p2_(p2), p3_(p3) {
  for (double p : {p1, p2, p3}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("PauliChannel: probabilities must lie in [0, 1]");
    }
  }
  if (p1 + p2 + p3 > 1.0 + 1e-12) {
    throw std::invalid_argument("PauliChannel: p1 + p2 + p3 exceeds 1");
  }
}

std::vector<Matrix> PauliChannel::kraus() const {
  const PauliGates& g = pauli_gates();
  return {std::sqrt(std::max(p0(), 0.0)) * g.identity.matrix(), std::sqrt(p1_) * g.sigma1.matrix(),
          std::sqrt(p2_) * g.sigma2.matrix(), std::sqrt(p3_) * g.sigma3.matrix()};
}

PureState apply_pauli(const PureState& state, const Wire& wire, Pauli p) {
  if (p == Pauli::identity) return state;
  return apply(gate_of(p), state, {wire});
}

PauliDraw apply_pauli_channel(const PureState& state, const Wire& wire, const PauliChannel& channel,
                              RandomStream& rng) {
  const double u = rng.uniform();
  Pauli p = Pauli::identity;
  if (u < channel.p1()) {
    p = Pauli::sigma1;
  } else if (u < channel.p1() + channel.p2()) {
    p = Pauli::sigma2;
  } else if (u < channel.p1() + channel.p2() + channel.p3()) {
    p = Pauli::sigma3;
  }
  return PauliDraw{apply_pauli(state, wire, p), p};
}

DensityMatrix channel_as_density_map(const PauliChannel& channel, const DensityMatrix& rho) {
  if (rho.num_qubits() != 1) {
    throw std::invalid_argument("channel_as_density_map: expected a single-qubit state");
  }
  return apply_kraus(channel.kraus(), rho, rho.wires());
}

DensityMatrix apply_channel(const PauliChannel& channel, const DensityMatrix& rho, const Wire& wire) {
  return apply_kraus(channel.kraus(), rho, {wire});
}

protocol::Interference::Outcome PauliNoise::transit(const PureState& joint, RandomStream& rng) const {
  if (channel_.is_noiseless()) return Outcome{joint, std::nullopt};
  return Outcome{apply_pauli_channel(joint, protocol::kCarrier, channel_, rng).state, std::nullopt};
}

DensityMatrix PauliNoise::transit_exact(const DensityMatrix& joint) const {
  if (channel_.is_noiseless()) return joint;
  return apply_channel(channel_, joint, protocol::kCarrier);
}

protocol::Interference::Outcome ForcedPauli::transit(const PureState& joint, RandomStream&) const {
  return Outcome{apply_pauli(joint, protocol::kCarrier, pauli_), std::nullopt};
}

DensityMatrix ForcedPauli::transit_exact(const DensityMatrix& joint) const {
  if (pauli_ == Pauli::identity) return joint;
  return apply(gate_of(pauli_), joint, {protocol::kCarrier});
}

}  // namespace cqkd::channels
