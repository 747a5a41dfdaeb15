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

// Transit noise and key degradation.
//
// The transit channel applies sigma_i with probability p_i to the carrier.
// After decoding, the three errors act differently:
//
//   sigma1   carrier bit flipped, key untouched
//   sigma3   carrier bit intact, key moved from |Phi+> to |Phi->
//   sigma2   carrier bit flipped and key moved to |Phi->

#ifndef CQKD_CHANNELS_H
#define CQKD_CHANNELS_H

#include <array>
#include <string_view>
#include <vector>

#include "cqkd/protocol.h"
#include "cqkd/qcore.h"

namespace cqkd::channels {

enum class Pauli { identity, sigma1, sigma2, sigma3 };
std::string_view to_string(Pauli p);
const Unitary& gate_of(Pauli p);

class PauliChannel {
 public:
  /// Throws std::invalid_argument unless each p >= 0 and p1 + p2 + p3 <= 1.
  PauliChannel(double p1 = 0.0, double p2 = 0.0, double p3 = 0.0);

  double p0() const { return 1.0 - p1_ - p2_ - p3_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }
  double p3() const { return p3_; }
  bool is_noiseless() const { return p1_ == 0.0 && p2_ == 0.0 && p3_ == 0.0; }

  /// M0 = sqrt(p0) I, M1 = sqrt(p1) sigma1, M2 = sqrt(p2) sigma2, M3 = sqrt(p3) sigma3.
  std::vector<Matrix> kraus() const;

 private:
  double p1_, p2_, p3_;
};

struct PauliDraw {
  PureState state;
  Pauli applied;
};

PureState apply_pauli(const PureState& state, const Wire& wire, Pauli p);
/// Draws one Pauli with probabilities (p0, p1, p2, p3) and applies it to `wire`.
PauliDraw apply_pauli_channel(const PureState& state, const Wire& wire, const PauliChannel& channel,
                              RandomStream& rng);

/// Kraus sum on a single-qubit state.
DensityMatrix channel_as_density_map(const PauliChannel& channel, const DensityMatrix& rho);
/// Kraus sum on one wire of a larger state.
DensityMatrix apply_channel(const PauliChannel& channel, const DensityMatrix& rho, const Wire& wire);

/// Transit noise on the carrier, sampled in sessions and exact in analyses.
class PauliNoise final : public protocol::Interference {
 public:
  explicit PauliNoise(PauliChannel channel) : channel_(channel) {}

  Outcome transit(const PureState& joint, RandomStream& rng) const override;
  DensityMatrix transit_exact(const DensityMatrix& joint) const override;

  const PauliChannel& channel() const { return channel_; }

 private:
  PauliChannel channel_;
};

/// Applies the same Pauli on every transit. Test instrumentation.
class ForcedPauli final : public protocol::Interference {
 public:
  explicit ForcedPauli(Pauli p) : pauli_(p) {}

  Outcome transit(const PureState& joint, RandomStream& rng) const override;
  DensityMatrix transit_exact(const DensityMatrix& joint) const override;

 private:
  Pauli pauli_;
};

/// rho = (1 - epsilon) |Phi+><Phi+| + epsilon rho1 on (keyA, keyB).
struct DegradedKeyModel {
  double epsilon = 0.0;
  DensityMatrix contaminant = DensityMatrix::maximally_mixed({protocol::kKeyA, protocol::kKeyB});

  void validate() const;
};

DensityMatrix degrade_key(const DegradedKeyModel& model);
/// Upper bound on the per-round failure probability of a degraded key: epsilon.
double failure_probability_bound(const DegradedKeyModel& model);

/// Samples a pure key state whose ensemble average is degrade_key(model):
/// |Phi+> with probability 1 - epsilon, otherwise an eigenvector of rho1
/// drawn with its eigenvalue as weight.
PureState sample_degraded_key(const DegradedKeyModel& model, RandomStream& rng);

}  // namespace cqkd::channels

#endif  // CQKD_CHANNELS_H
