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

// Honest-party side of the channel-encrypting protocol.
//
// Alice and Bob share one EPR pair (keyA, keyB) that is reused every round:
//
//   1. both rotate their half by R(theta),
//   2. Alice prepares the carrier in |bit> and applies CNOT(keyA -> carrier),
//   3. the carrier travels through the channel (noise, eavesdropper),
//   4. Bob applies CNOT(keyB -> carrier) and measures the carrier.
//
// After many rounds a random subset of bits is compared publicly. On pass the
// pair is kept for the next session; on abort it is discarded.

#ifndef CQKD_PROTOCOL_H
#define CQKD_PROTOCOL_H

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cqkd/qcore.h"

namespace cqkd::protocol {

inline const Wire kKeyA = "keyA";
inline const Wire kKeyB = "keyB";
inline const Wire kCarrier = "carrier";

inline constexpr double kDefaultTheta = kPi / 4;

/// The reusable EPR pair. `joint` may also carry wires owned by an
/// eavesdropper who entangled with the key in earlier rounds.
struct QuantumKey {
  PureState joint;
  std::uint64_t pair_id = 0;
  int rounds_used = 0;
};

QuantumKey init_key(RandomStream& rng);
/// Wraps an arbitrary starting state; it must contain keyA and keyB.
QuantumKey make_key(PureState joint, std::uint64_t pair_id = 0);

/// R(theta) on keyA and on keyB. Leaves |Phi+> unchanged.
QuantumKey bilateral_rotate(QuantumKey key, double theta);

/// Key plus an attached carrier wire, between Alice's and Bob's CNOTs.
struct KeyWithCarrier {
  QuantumKey key;
};

/// Throws std::logic_error if a carrier is already attached.
KeyWithCarrier alice_encode(QuantumKey key, int bit);

struct Decoded {
  int bit;
  QuantumKey key;
};
/// CNOT(keyB -> carrier), measure the carrier, drop the carrier wire.
/// Throws std::logic_error if no carrier is attached.
Decoded bob_decode(KeyWithCarrier in_transit, RandomStream& rng);

/// <Phi+| rho_AB |Phi+> for the reduced key state.
double key_fidelity(const PureState& joint);
double key_fidelity(const DensityMatrix& joint);

/// Anything that touches the carrier in transit. Implementations act only on
/// the carrier and wires they own, never on keyA or keyB.
///
/// Implementations are immutable; whatever an eavesdropper remembers between
/// rounds lives as extra wires in the joint state.
class Interference {
 public:
  struct Outcome {
    PureState joint;
    std::optional<int> eve_guess;
  };

  virtual ~Interference() = default;

  /// Sampled action on a pure joint state.
  virtual Outcome transit(const PureState& joint, RandomStream& rng) const = 0;
  /// Outcome-averaged action on a density matrix.
  virtual DensityMatrix transit_exact(const DensityMatrix& joint) const = 0;

  /// Hook run once on a fresh key before the first round.
  virtual PureState prepare(const PureState& key_joint, RandomStream& rng) const;
  virtual DensityMatrix prepare_exact(const DensityMatrix& key_joint) const;
};

class NoInterference final : public Interference {
 public:
  Outcome transit(const PureState& joint, RandomStream& rng) const override;
  DensityMatrix transit_exact(const DensityMatrix& joint) const override;
};

/// Applies `first`, then `second`. The eavesdropper guess is taken from
/// whichever stage reports one (first wins).
class Chain final : public Interference {
 public:
  Chain(std::shared_ptr<const Interference> first, std::shared_ptr<const Interference> second);

  Outcome transit(const PureState& joint, RandomStream& rng) const override;
  DensityMatrix transit_exact(const DensityMatrix& joint) const override;
  PureState prepare(const PureState& key_joint, RandomStream& rng) const override;
  DensityMatrix prepare_exact(const DensityMatrix& key_joint) const override;

 private:
  std::shared_ptr<const Interference> first_;
  std::shared_ptr<const Interference> second_;
};

struct RoundRecord {
  int sent_bit = 0;
  int received_bit = 0;
  std::optional<int> eve_guess;
  bool disclosed = false;
};

struct RoundResult {
  RoundRecord record;
  QuantumKey key;
};

/// rotate -> encode -> interference -> decode.
RoundResult run_round(QuantumKey key, double theta, int bit, const Interference& interference,
                      RandomStream& rng);

struct ExactRound {
  /// Probability that Bob's bit differs from Alice's, averaged over a uniform bit.
  double error_probability;
  std::array<double, 2> error_given_bit;
  /// Key (plus eavesdropper wires) after the round, averaged over the bit and
  /// every measurement outcome.
  DensityMatrix key_after;
};

/// One round evolved as a density matrix with no sampling.
ExactRound exact_round(const DensityMatrix& key, double theta, const Interference& interference);

struct SiftingPolicy {
  double disclose_fraction = 0.2;
  double qber_abort_threshold = 0.05;

  void validate() const;
};

enum class Verdict { pass, abort };
const char* to_string(Verdict v);

struct SiftResult {
  Verdict verdict;
  double observed_qber;
  /// Received bits of the undisclosed records, in round order.
  std::vector<int> delivered_key;
  /// Sorted indices of the disclosed records.
  std::vector<std::size_t> disclosed;
  /// Input records with `disclosed` set.
  std::vector<RoundRecord> records;
};

/// Discloses ceil(fraction * N) uniformly chosen records and aborts iff their
/// mismatch rate exceeds the threshold. Throws on an empty record list.
SiftResult sift(std::vector<RoundRecord> records, const SiftingPolicy& policy, RandomStream& rng);

/// Sequential state machine over one reused key.
class Session {
 public:
  /// `interference` must outlive the session.
  Session(double theta, std::uint64_t seed, const Interference& interference);
  Session(double theta, std::uint64_t seed, const Interference& interference,
          QuantumKey initial_key);

  /// One protocol round carrying `bit`.
  RoundRecord transmit(int bit);

  const QuantumKey& key() const { return key_; }
  int transmissions() const { return transmissions_; }
  double theta() const { return theta_; }
  std::uint64_t seed() const { return seed_; }

 private:
  double theta_;
  std::uint64_t seed_;
  const Interference* interference_;
  QuantumKey key_;
  int transmissions_ = 0;
};

struct SessionConfig {
  double theta = kDefaultTheta;
  int rounds = 100;
  SiftingPolicy sifting;
  std::uint64_t seed = 1;
  /// Alice's bits; random when empty, otherwise must have `rounds` entries.
  std::vector<int> fixed_bits;
};

struct SessionResult {
  std::vector<RoundRecord> records;
  Verdict verdict;
  double observed_qber;
  std::vector<int> delivered_key;
  /// Present only on pass: the pair that may be reused.
  std::optional<QuantumKey> retained_key;
  bool restart_required;
  /// Diagnostics: the key as it stood after the last round, kept on abort too.
  QuantumKey final_key;
  double key_fidelity;
};

/// Sifts `records` and applies the retain/discard rule to `key`.
SessionResult conclude(std::vector<RoundRecord> records, QuantumKey key,
                       const SiftingPolicy& policy, RandomStream& sift_rng);

SessionResult run_session(const SessionConfig& config, const Interference& interference);

// Substream tags shared by every component that derives from a scenario seed.
namespace streams {
inline constexpr std::uint64_t kAliceBits = 1;
inline constexpr std::uint64_t kRound = 2;
inline constexpr std::uint64_t kSifting = 3;
inline constexpr std::uint64_t kPrepare = 4;
inline constexpr std::uint64_t kTrial = 5;
}  // namespace streams

}  // namespace cqkd::protocol

#endif  // CQKD_PROTOCOL_H
