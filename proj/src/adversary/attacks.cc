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
#include <string>

#include "cqkd/adversary.h"

namespace cqkd::adversary {

using protocol::kCarrier;
using protocol::kKeyA;

std::string_view to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::none: return "none";
    case AttackKind::intercept_resend: return "intercept_resend";
    case AttackKind::entangle_cnot: return "entangle_cnot";
    case AttackKind::general_unitary: return "general_unitary";
  }
  return "?";
}

std::optional<AttackKind> parse_attack_kind(std::string_view name) {
  for (AttackKind k : {AttackKind::none, AttackKind::intercept_resend, AttackKind::entangle_cnot,
                       AttackKind::general_unitary}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(ResendMode mode) {
  return mode == ResendMode::substitute ? "substitute" : "measured";
}

std::string_view to_string(EntangleMode mode) {
  return mode == EntangleMode::once ? "once" : "every_round";
}

void AttackStrategy::validate() const {
  if (probe_init != 0 && probe_init != 1) {
    throw std::invalid_argument("attack: probe_init must be 0 or 1");
  }
  if (unitary) {
    if (unitary->rows() != 8 || unitary->cols() != 8) {
      throw std::invalid_argument("attack: explicit unitary must be 8x8 on (carrier, eve_sys, eve_ind)");
    }
    Unitary check(*unitary);
  }
}

AttackOutcome intercept_resend(const PureState& state, ResendMode mode, RandomStream& rng) {
  Measurement m = measure(state, kCarrier, rng);
  if (mode == ResendMode::measured) return AttackOutcome{std::move(m.state), m.outcome};
  PureState kept = remove_settled_wire(m.state, kCarrier);
  return AttackOutcome{attach(kept, kCarrier, rng.bit()), m.outcome};
}

PureState entangle_cnot(const PureState& state, int probe_init) {
  if (state.has_wire(kProbe)) throw std::logic_error("entangle_cnot: probe already attached");
  return apply(cnot_gate(), attach(state, kProbe, probe_init), {kCarrier, kProbe});
}

AttackOutcome read_with_probe(const PureState& state, RandomStream& rng) {
  const PureState decoded = apply(cnot_gate(), state, {kProbe, kCarrier});
  Measurement m = measure(decoded, kCarrier, rng);
  return AttackOutcome{apply(cnot_gate(), m.state, {kProbe, kCarrier}), m.outcome};
}

AttackOutcome general_unitary_attack(const PureState& state, const Unitary& u, RandomStream& rng) {
  if (u.arity() != 3) {
    throw std::invalid_argument("general_unitary_attack: unitary must act on 3 qubits "
                                "(carrier, eve_sys, eve_ind), got " + std::to_string(u.arity()));
  }
  PureState s = state.has_wire(kEveSystem) ? state : attach(state, kEveSystem, 0);
  s = apply(u, attach(s, kIndicator, 0), {kCarrier, kEveSystem, kIndicator});
  Measurement m = measure(s, kIndicator, rng);
  return AttackOutcome{remove_settled_wire(m.state, kIndicator), m.outcome};
}

Unitary prior_entangler(const Vector& psi0, const Vector& psi1) {
  auto completion = [](const Vector& psi) {
    if (psi.size() != 2) throw std::invalid_argument("prior_entangler: states must be single-qubit");
    const Vector v = psi / psi.norm();
    Matrix u(2, 2);
    u(0, 0) = v[0];
    u(1, 0) = v[1];
    u(0, 1) = -std::conj(v[1]);
    u(1, 1) = std::conj(v[0]);
    return u;
  };
  Matrix m = Matrix::Zero(4, 4);
  m.block(0, 0, 2, 2) = completion(psi0);
  m.block(2, 2, 2, 2) = completion(psi1);
  return Unitary(std::move(m));
}

std::pair<Vector, Vector> random_prior_states(std::uint64_t seed) {
  RandomStream rng(seed);
  Vector a = random_pure_state({"e"}, rng).amplitudes();
  Vector b = random_pure_state({"e"}, rng).amplitudes();
  return {std::move(a), std::move(b)};
}

Unitary strategy_unitary(const AttackStrategy& strategy) {
  if (strategy.unitary) return Unitary(*strategy.unitary);
  RandomStream rng(strategy.unitary_seed);
  return random_unitary(8, rng);
}

namespace {

WireList all_but(const WireList& wires, const Wire& drop) {
  WireList out;
  for (const auto& w : wires) {
    if (w != drop) out.push_back(w);
  }
  return out;
}

class InterceptResendAttack final : public protocol::Interference {
 public:
  explicit InterceptResendAttack(ResendMode mode) : mode_(mode) {}

  Outcome transit(const PureState& joint, RandomStream& rng) const override {
    AttackOutcome out = intercept_resend(joint, mode_, rng);
    return Outcome{std::move(out.state), out.eve_guess};
  }

  DensityMatrix transit_exact(const DensityMatrix& joint) const override {
    if (mode_ == ResendMode::measured) return dephase(joint, kCarrier);
    const DensityMatrix kept = partial_trace(joint, all_but(joint.wires(), kCarrier));
    return kept.tensor(DensityMatrix::maximally_mixed({kCarrier}));
  }

 private:
  ResendMode mode_;
};

class EntangleAttack final : public protocol::Interference {
 public:
  EntangleAttack(int probe_init, EntangleMode mode) : probe_init_(probe_init), mode_(mode) {}

  Outcome transit(const PureState& joint, RandomStream& rng) const override {
    if (!joint.has_wire(kProbe)) return Outcome{entangle_cnot(joint, probe_init_), std::nullopt};
    AttackOutcome read = read_with_probe(joint, rng);
    if (mode_ == EntangleMode::once) return Outcome{std::move(read.state), read.eve_guess};
    const Measurement old = measure(read.state, kProbe, rng);
    PureState fresh = entangle_cnot(remove_settled_wire(old.state, kProbe), probe_init_);
    return Outcome{std::move(fresh), read.eve_guess};
  }

  DensityMatrix transit_exact(const DensityMatrix& joint) const override {
    if (!joint.has_wire(kProbe)) return entangle_exact(joint);
    DensityMatrix rho = apply(cnot_gate(), joint, {kProbe, kCarrier});
    rho = apply(cnot_gate(), dephase(rho, kCarrier), {kProbe, kCarrier});
    if (mode_ == EntangleMode::once) return rho;
    return entangle_exact(partial_trace(rho, all_but(rho.wires(), kProbe)));
  }

 private:
  DensityMatrix entangle_exact(const DensityMatrix& rho) const {
    return apply(cnot_gate(), attach(rho, kProbe, probe_init_), {kCarrier, kProbe});
  }

  int probe_init_;
  EntangleMode mode_;
};

class GeneralUnitaryAttack final : public protocol::Interference {
 public:
  GeneralUnitaryAttack(Unitary u, std::optional<std::pair<Vector, Vector>> prior)
      : u_(std::move(u)), prior_(std::move(prior)) {
    if (u_.arity() != 3) throw std::invalid_argument("general_unitary: unitary must be 8x8");
  }

  PureState prepare(const PureState& key_joint, RandomStream&) const override {
    PureState s = attach(key_joint, kEveSystem, 0);
    if (prior_) s = apply(prior_entangler(prior_->first, prior_->second), s, {kKeyA, kEveSystem});
    return s;
  }

  DensityMatrix prepare_exact(const DensityMatrix& key_joint) const override {
    DensityMatrix rho = attach(key_joint, kEveSystem, 0);
    if (prior_) rho = apply(prior_entangler(prior_->first, prior_->second), rho, {kKeyA, kEveSystem});
    return rho;
  }

  Outcome transit(const PureState& joint, RandomStream& rng) const override {
    AttackOutcome out = general_unitary_attack(joint, u_, rng);
    return Outcome{std::move(out.state), out.eve_guess};
  }

  DensityMatrix transit_exact(const DensityMatrix& joint) const override {
    DensityMatrix rho = joint.has_wire(kEveSystem) ? joint : attach(joint, kEveSystem, 0);
    rho = apply(u_, attach(rho, kIndicator, 0), {kCarrier, kEveSystem, kIndicator});
    return partial_trace(rho, all_but(rho.wires(), kIndicator));
  }

 private:
  Unitary u_;
  std::optional<std::pair<Vector, Vector>> prior_;
};

}  // namespace

std::shared_ptr<const protocol::Interference> make_attack(const AttackStrategy& strategy) {
  strategy.validate();
  switch (strategy.kind) {
    case AttackKind::none:
      return std::make_shared<protocol::NoInterference>();
    case AttackKind::intercept_resend:
      return std::make_shared<InterceptResendAttack>(strategy.resend);
    case AttackKind::entangle_cnot:
      return std::make_shared<EntangleAttack>(strategy.probe_init, strategy.entangle);
    case AttackKind::general_unitary: {
      std::optional<std::pair<Vector, Vector>> prior;
      if (strategy.prior_entanglement) prior = random_prior_states(strategy.prior_seed);
      return std::make_shared<GeneralUnitaryAttack>(strategy_unitary(strategy), std::move(prior));
    }
  }
  throw std::invalid_argument("make_attack: unknown attack kind");
}

}  // namespace cqkd::adversary
