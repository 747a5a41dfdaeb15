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

// Eavesdropper strategies against the carrier, and exact analysis of what the
// eavesdropper can learn.

#ifndef CQKD_ADVERSARY_H
#define CQKD_ADVERSARY_H

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cqkd/protocol.h"
#include "cqkd/qcore.h"

namespace cqkd::adversary {

/// Eavesdropper-owned wires.
inline const Wire kProbe = "eve_probe";
inline const Wire kEveSystem = "eve_sys";
inline const Wire kIndicator = "eve_ind";

enum class AttackKind { none, intercept_resend, entangle_cnot, general_unitary };
std::string_view to_string(AttackKind kind);
std::optional<AttackKind> parse_attack_kind(std::string_view name);

/// What Eve sends on to Bob after intercept-resend.
enum class ResendMode {
  /// Keeps the intercepted carrier and forwards a freshly prepared particle
  /// in a uniformly random basis state.
  substitute,
  /// Forwards the intercepted carrier after measuring it.
  measured,
};
std::string_view to_string(ResendMode mode);

/// When Eve's probe is (re)attached for entangle_cnot.
enum class EntangleMode {
  /// Entangle once, then read every later carrier through the same probe.
  once,
  /// Read with the old probe, discard it, entangle a fresh one each round.
  every_round,
};
std::string_view to_string(EntangleMode mode);

struct AttackStrategy {
  AttackKind kind = AttackKind::none;

  ResendMode resend = ResendMode::substitute;

  int probe_init = 0;
  EntangleMode entangle = EntangleMode::once;

  /// general_unitary: explicit 8x8 matrix on (carrier, eve_sys, eve_ind), or
  /// a Haar draw from `unitary_seed` when absent.
  std::optional<Matrix> unitary;
  std::uint64_t unitary_seed = 0;
  /// general_unitary: start with Eve's system entangled with the key as
  /// (|00>|psi0> + |11>|psi1>)/sqrt(2), psi0 and psi1 random from `prior_seed`.
  bool prior_entanglement = false;
  std::uint64_t prior_seed = 0;

  void validate() const;
};

// Single-step operations on a joint state whose carrier is in transit.

struct AttackOutcome {
  PureState state;
  std::optional<int> eve_guess;
};

/// Eve measures the carrier in the computational basis and keeps the outcome
/// as her guess; see ResendMode for what reaches Bob.
AttackOutcome intercept_resend(const PureState& state, ResendMode mode, RandomStream& rng);

/// Attaches kProbe in |probe_init> and applies CNOT(carrier -> probe).
PureState entangle_cnot(const PureState& state, int probe_init);

/// Decodes the carrier with a probe from an earlier round, the way Bob does
/// with keyB: CNOT(probe -> carrier), measure, CNOT(probe -> carrier).
AttackOutcome read_with_probe(const PureState& state, RandomStream& rng);

/// Attaches the indicator in |0> (and eve_sys in |0> if absent), applies u to
/// (carrier, eve_sys, eve_ind), measures the indicator as the guess and drops it.
AttackOutcome general_unitary_attack(const PureState& state, const Unitary& u, RandomStream& rng);

/// Controlled preparation keyA -> eve_sys taking |k>|0> to |k>|psi_k>.
/// Applied to |Phi+> it gives (|00>|psi0> + |11>|psi1>)/sqrt(2).
Unitary prior_entangler(const Vector& psi0, const Vector& psi1);
std::pair<Vector, Vector> random_prior_states(std::uint64_t seed);

/// Builds the transit hook for a strategy.
std::shared_ptr<const protocol::Interference> make_attack(const AttackStrategy& strategy);

/// Resolves the unitary a general_unitary strategy will use.
Unitary strategy_unitary(const AttackStrategy& strategy);

// Information analysis.

struct EveSetup {
  double theta = protocol::kDefaultTheta;
  /// Prior entanglement (psi0, psi1) of Eve's system with the key.
  std::optional<std::pair<Vector, Vector>> prior;
};

struct ConditionalStates {
  DensityMatrix given_0;
  DensityMatrix given_1;
};

/// Exact reduced state of (carrier, eve_sys, eve_ind) at interception,
/// conditioned on Alice's bit, after the bilateral rotation and encoding.
ConditionalStates eve_conditional_states(const EveSetup& setup);

/// Exact probability that the indicator readout after u equals Alice's bit,
/// for a uniformly random bit.
double exact_guess_accuracy(const ConditionalStates& states, const Unitary& u);

struct NoPerfectAttackReport {
  int samples = 0;
  /// Haar draws plus the structured family (identity, CNOT variants).
  int unitaries_checked = 0;
  double max_trace_distance = 0.0;
  double max_exact_advantage = 0.0;
  /// Pooled sampled accuracy over every unitary and shot.
  double sampled_accuracy = 0.0;
  double sampled_sigma = 0.0;
  std::int64_t shots = 0;
  /// Index of the first unitary whose conditional states or exact accuracy
  /// revealed anything, if any.
  std::optional<int> first_failure;
  bool passed = false;
};

/// Samples Haar unitaries (and the structured CNOT family) on Eve's side and
/// checks that none separates the two conditional states.
NoPerfectAttackReport verify_no_perfect_attack(int samples, const EveSetup& setup,
                                               RandomStream& rng, int shots_per_unitary = 50);

// Completely positive maps and their unitary dilation.

/// Unitary V on (system, ancilla) with V|psi>|0> = sum_k K_k|psi>|k>. The
/// ancilla has ceil(log2(#Kraus)) qubits (at least one). Throws if the Kraus
/// set is not trace preserving.
Unitary stinespring_dilation(const std::vector<Matrix>& kraus);

/// Kraus map on `wire` run as: attach zeroed ancillas, apply the dilation,
/// trace the ancillas out.
DensityMatrix apply_via_dilation(const std::vector<Matrix>& kraus, const DensityMatrix& rho,
                                 const Wire& wire);

}  // namespace cqkd::adversary

#endif  // CQKD_ADVERSARY_H
