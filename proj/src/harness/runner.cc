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

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "cqkd/harness.h"

namespace cqkd::harness {

namespace {

using protocol::RoundRecord;
using protocol::streams::kAliceBits;
using protocol::streams::kPrepare;
using protocol::streams::kSifting;
using protocol::streams::kTrial;

protocol::QuantumKey initial_key(const std::optional<channels::DegradedKeyModel>& degradation,
                                 std::uint64_t seed) {
  if (degradation) {
    RandomStream rng = RandomStream::derive(seed, kPrepare, 2);
    return protocol::make_key(channels::sample_degraded_key(*degradation, rng), rng.next_u64());
  }
  RandomStream rng = RandomStream::derive(seed, kPrepare, 0);
  return protocol::init_key(rng);
}

std::optional<channels::DegradedKeyModel> degradation_of(const Scenario& s) {
  if (s.key.epsilon <= 0.0) return std::nullopt;
  return s.key.model();
}

int alice_bit(std::uint64_t seed, std::uint64_t index) {
  return RandomStream::derive(seed, kAliceBits, index).bit();
}

// Sends one logical bit as `n` transmissions and majority-decodes both
// Bob's and Eve's readouts.
RoundRecord send_logical(protocol::Session& session, int bit, int n) {
  std::vector<int> received;
  std::vector<int> guesses;
  received.reserve(static_cast<std::size_t>(n));
  bool eve_every_time = true;
  for (int b : repetition_encode(bit, n)) {
    const RoundRecord r = session.transmit(b);
    received.push_back(r.received_bit);
    if (r.eve_guess) {
      guesses.push_back(*r.eve_guess);
    } else {
      eve_every_time = false;
    }
  }
  RoundRecord out;
  out.sent_bit = bit;
  out.received_bit = repetition_decode(received);
  if (eve_every_time) out.eve_guess = repetition_decode(guesses);
  return out;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::vector<RoundRecord> run_scenario_records(const Scenario& s, RunStats* stats) {
  s.validate();
  const auto interference = make_interference(s);
  protocol::Session session(s.theta, s.seed, *interference, initial_key(degradation_of(s), s.seed));

  std::vector<RoundRecord> records;
  records.reserve(static_cast<std::size_t>(s.rounds));
  for (int j = 0; j < s.rounds; ++j) {
    const int bit = s.fixed_bits.empty() ? alice_bit(s.seed, static_cast<std::uint64_t>(j))
                                         : s.fixed_bits[static_cast<std::size_t>(j)];
    records.push_back(send_logical(session, bit, s.repetition_n));
  }

  RandomStream sift_rng = RandomStream::derive(s.seed, kSifting, 0);
  protocol::SessionResult result =
      protocol::conclude(std::move(records), session.key(), s.sifting, sift_rng);

  if (stats) {
    RunStats& st = *stats;
    std::int64_t errors = 0;
    for (const auto& r : result.records) errors += r.sent_bit != r.received_bit;
    st.qber = wilson_rate(errors, static_cast<std::int64_t>(result.records.size()));
    st.observed_qber = result.observed_qber;
    st.key_fidelity_final = result.key_fidelity;
    st.verdict = result.verdict;
    st.restart_required = result.restart_required;
    st.rounds_executed = session.transmissions();
    st.logical_bits = s.rounds;
    st.delivered_key_length = static_cast<int>(result.delivered_key.size());

    // Polarity from the public disclosure, accuracy on the private remainder.
    std::int64_t agree = 0, disagree = 0;
    std::vector<int> guesses, sent;
    for (const auto& r : result.records) {
      if (!r.eve_guess) continue;
      guesses.push_back(*r.eve_guess);
      sent.push_back(r.sent_bit);
      if (r.disclosed) (*r.eve_guess == r.sent_bit ? agree : disagree) += 1;
    }
    const int flip = disagree > agree ? 1 : 0;
    std::int64_t hits = 0, scored = 0;
    for (const auto& r : result.records) {
      if (!r.eve_guess || r.disclosed) continue;
      ++scored;
      hits += ((*r.eve_guess ^ flip) == r.sent_bit);
    }
    st.eve_accuracy = wilson_rate(hits, scored);
    st.eve_mutual_info_bits = mutual_information_bits(guesses, sent);
  }
  return std::move(result.records);
}

RunStats run_scenario(const Scenario& s) {
  RunStats stats;
  run_scenario_records(s, &stats);
  return stats;
}

int round_of_interest(const Scenario& s) {
  return s.attack.kind == adversary::AttackKind::entangle_cnot ? 2 : 1;
}

RoundEstimate estimate_round_qber(const Scenario& s) {
  s.validate();
  const auto interference = make_interference(s);
  const auto degradation = degradation_of(s);
  const int warmup = round_of_interest(s) - 1;
  const auto trials = static_cast<std::size_t>(s.rounds);

  struct Trial {
    int error = 0;
    int sent = 0;
    int guess = -1;
  };
  std::vector<Trial> out(trials);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const std::uint64_t trial_seed = RandomStream::derive(s.seed, kTrial, t).next_u64();
      protocol::Session session(s.theta, trial_seed, *interference,
                                initial_key(degradation, trial_seed));
      for (int w = 0; w < warmup; ++w) session.transmit(alice_bit(trial_seed, static_cast<std::uint64_t>(w)));
      const int bit = s.fixed_bits.empty() ? alice_bit(trial_seed, static_cast<std::uint64_t>(warmup))
                                           : s.fixed_bits[t % s.fixed_bits.size()];
      const RoundRecord r = send_logical(session, bit, s.repetition_n);
      out[t] = Trial{r.sent_bit != r.received_bit ? 1 : 0, r.sent_bit, r.eve_guess ? *r.eve_guess : -1};
    }
  };

  const int workers = std::min<int>(worker_count(s.threads), static_cast<int>(std::max<std::size_t>(trials / 256, 1)));
  if (workers <= 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (trials + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(trials, chunk * static_cast<std::size_t>(w));
      const std::size_t end = std::min(trials, begin + chunk);
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::int64_t errors = 0, hits = 0, guessed = 0;
  std::vector<int> guesses, sent;
  for (const Trial& t : out) {
    errors += t.error;
    if (t.guess >= 0) {
      ++guessed;
      hits += t.guess == t.sent;
      guesses.push_back(t.guess);
      sent.push_back(t.sent);
    }
  }
  return RoundEstimate{wilson_rate(errors, static_cast<std::int64_t>(trials)), wilson_rate(hits, guessed),
                       mutual_information_bits(guesses, sent)};
}

}  // namespace cqkd::harness
