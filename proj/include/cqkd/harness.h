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

// Experiment runner: scenarios in, statistics out.
//
// Three independent routes to a bit error rate are provided and are expected
// to agree wherever they overlap:
//
//   run_scenario            one full session on one reused key (what Alice
//                           and Bob would see, including sifting)
//   estimate_round_qber     Monte Carlo over independent fresh keys, for the
//                           round of interest only
//   exact_round_statistics  the same round as a density-matrix evolution
//
// plus closed-form values from oracle_qber where they exist.

#ifndef CQKD_HARNESS_H
#define CQKD_HARNESS_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqkd/adversary.h"
#include "cqkd/channels.h"
#include "cqkd/protocol.h"

namespace cqkd::harness {

// ---------------------------------------------------------------------------
// Statistics

/// Binomial rate with a 95% Wilson score interval.
struct Rate {
  double value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::int64_t successes = 0;
  std::int64_t trials = 0;

  /// sqrt(p (1 - p) / n) at the point estimate.
  double standard_error() const;
};

inline constexpr double kZ95 = 1.959963984540054;

Rate wilson_rate(std::int64_t successes, std::int64_t trials, double z = kZ95);

/// Plug-in mutual information in bits between two binary sequences.
double mutual_information_bits(std::span<const int> x, std::span<const int> y);

// ---------------------------------------------------------------------------
// Repetition code

std::vector<int> repetition_encode(int bit, int n);
/// Majority vote; throws std::invalid_argument on even or empty input.
int repetition_decode(std::span<const int> bits);
/// P(majority wrong) = sum_{k > n/2} C(n,k) p^k (1-p)^(n-k).
double repetition_failure_probability(double p, int n);

// ---------------------------------------------------------------------------
// Scenario

enum class Contaminant { maximally_mixed, phi_minus, random };
std::string_view to_string(Contaminant c);

/// Optional starting-key degradation rho = (1 - epsilon) Phi+ + epsilon rho1.
struct KeyDegradation {
  double epsilon = 0.0;
  Contaminant contaminant = Contaminant::maximally_mixed;
  std::uint64_t contaminant_seed = 0;

  channels::DegradedKeyModel model() const;
};

struct Scenario {
  double theta = protocol::kDefaultTheta;
  /// Logical key bits; each is sent repetition_n times.
  int rounds = 10000;
  adversary::AttackStrategy attack;
  channels::PauliChannel noise;
  protocol::SiftingPolicy sifting;
  int repetition_n = 1;
  std::uint64_t seed = 1;
  /// Alice's logical bits; random when empty.
  std::vector<int> fixed_bits;
  KeyDegradation key;
  /// Worker threads for the per-round estimator; 0 picks the hardware count.
  /// Results never depend on this value.
  int threads = 0;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Attack followed by transit noise.
std::shared_ptr<const protocol::Interference> make_interference(const Scenario& s);

// ---------------------------------------------------------------------------
// Session statistics

struct RunStats {
  /// Mismatch rate over all logical bits.
  Rate qber;
  /// Mismatch rate over the publicly disclosed subset (the abort statistic).
  double observed_qber = 0.0;
  double key_fidelity_final = 0.0;
  /// Fraction of undisclosed bits Eve guessed right. Eve fixes the polarity
  /// of her readout by majority agreement with the disclosed bits, which are
  /// public.
  Rate eve_accuracy;
  /// Between Eve's raw guesses and Alice's bits, over bits where Eve guessed.
  double eve_mutual_info_bits = 0.0;
  protocol::Verdict verdict = protocol::Verdict::pass;
  bool restart_required = false;
  /// Physical transmissions.
  int rounds_executed = 0;
  int logical_bits = 0;
  int delivered_key_length = 0;
};

RunStats run_scenario(const Scenario& s);

/// Per logical bit, after repetition decoding and sifting.
std::vector<protocol::RoundRecord> run_scenario_records(const Scenario& s, RunStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Per-round estimators and oracles

/// The round whose error rate the estimators target: the second one for
/// entangle_cnot (the first only plants the probe), otherwise the first.
int round_of_interest(const Scenario& s);

struct RoundEstimate {
  Rate qber;
  /// Raw guess accuracy (no polarity correction) over trials with a guess.
  Rate eve_accuracy;
  double eve_mutual_info_bits = 0.0;
};

/// Monte Carlo over `s.rounds` independent trials, each on a fresh (or
/// freshly degraded) key. Trials run in parallel on per-trial substreams.
RoundEstimate estimate_round_qber(const Scenario& s);

struct ExactStats {
  double qber_exact;
  DensityMatrix key_state_after;
};

/// The round of interest evolved exactly, with no sampling. Repetition is
/// not applied: this is the physical per-transmission error probability.
ExactStats exact_round_statistics(const Scenario& s);

/// 1/2 for intercept_resend, 2 cos^2 sin^2 for entangle_cnot (second round),
/// 0 for none. Throws std::invalid_argument for general_unitary.
double oracle_qber(adversary::AttackKind kind, double theta);

/// Closed form for a whole scenario's round of interest where one exists:
/// attack-only, noise-only (p1 + p2), or intercept_resend with any noise.
/// Accounts for repetition when repetition_n > 1.
std::optional<double> scenario_oracle_qber(const Scenario& s);

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepParameter { theta, p1, p2, p3, epsilon };
std::string_view to_string(SweepParameter p);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);

struct SweepRow {
  double value;
  Rate mc;
  double exact;
  std::optional<double> oracle;
};

/// Sets the parameter on a copy of `base` at each grid value and runs both
/// estimators plus the oracle.
std::vector<SweepRow> sweep(SweepParameter parameter, std::span<const double> grid,
                            const Scenario& base);

/// `steps` evenly spaced values from `from` to `to` inclusive (steps >= 2).
std::vector<double> linspace(double from, double to, int steps);

}  // namespace cqkd::harness

#endif  // CQKD_HARNESS_H
