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

#include "cqkd/protocol.h"

namespace cqkd::protocol {

Session::Session(double theta, std::uint64_t seed, const Interference& interference)
    : Session(theta, seed, interference, [&] {
        RandomStream rng = RandomStream::derive(seed, streams::kPrepare, 0);
        return init_key(rng);
      }()) {}

Session::Session(double theta, std::uint64_t seed, const Interference& interference,
                 QuantumKey initial_key)
    : theta_(theta), seed_(seed), interference_(&interference), key_(std::move(initial_key)) {
  if (!std::isfinite(theta_)) throw std::invalid_argument("Session: theta must be finite");
  RandomStream rng = RandomStream::derive(seed, streams::kPrepare, 1);
  key_.joint = interference_->prepare(key_.joint, rng);
}

RoundRecord Session::transmit(int bit) {
  RandomStream rng =
      RandomStream::derive(seed_, streams::kRound, static_cast<std::uint64_t>(transmissions_));
  RoundResult r = run_round(std::move(key_), theta_, bit, *interference_, rng);
  key_ = std::move(r.key);
  ++transmissions_;
  return r.record;
}

SessionResult conclude(std::vector<RoundRecord> records, QuantumKey key,
                       const SiftingPolicy& policy, RandomStream& sift_rng) {
  SiftResult s = sift(std::move(records), policy, sift_rng);
  const double fid = key_fidelity(key.joint);
  SessionResult out{std::move(s.records), s.verdict, s.observed_qber, std::move(s.delivered_key),
                    std::nullopt,          s.verdict == Verdict::abort, key, fid};
  if (s.verdict == Verdict::pass) out.retained_key = std::move(key);
  return out;
}

SessionResult run_session(const SessionConfig& config, const Interference& interference) {
  if (config.rounds < 1) throw std::invalid_argument("run_session: rounds must be >= 1");
  if (!config.fixed_bits.empty() &&
      config.fixed_bits.size() != static_cast<std::size_t>(config.rounds)) {
    throw std::invalid_argument("run_session: fixed bit sequence length differs from rounds");
  }
  config.sifting.validate();
  Session session(config.theta, config.seed, interference);
  std::vector<RoundRecord> records;
  records.reserve(static_cast<std::size_t>(config.rounds));
  for (int i = 0; i < config.rounds; ++i) {
    int bit;
    if (config.fixed_bits.empty()) {
      bit = RandomStream::derive(config.seed, streams::kAliceBits, static_cast<std::uint64_t>(i)).bit();
    } else {
      bit = config.fixed_bits[static_cast<std::size_t>(i)];
    }
    records.push_back(session.transmit(bit));
  }
  RandomStream sift_rng = RandomStream::derive(config.seed, streams::kSifting, 0);
  return conclude(std::move(records), session.key(), config.sifting, sift_rng);
}

}  // namespace cqkd::protocol
