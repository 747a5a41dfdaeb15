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
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cqkd/protocol.h"

namespace cqkd::protocol {

void SiftingPolicy::validate() const {
  if (!(disclose_fraction > 0.0 && disclose_fraction < 1.0)) {
    throw std::invalid_argument("sifting: disclose fraction must lie in (0, 1)");
  }
  if (!(qber_abort_threshold >= 0.0 && qber_abort_threshold <= 1.0)) {
    throw std::invalid_argument("sifting: abort threshold must lie in [0, 1]");
  }
}

const char* to_string(Verdict v) { return v == Verdict::pass ? "pass" : "abort"; }

SiftResult sift(std::vector<RoundRecord> records, const SiftingPolicy& policy, RandomStream& rng) {
  policy.validate();
  if (records.empty()) throw std::invalid_argument("sift: no records");
  const std::size_t n = records.size();
  // The small offset absorbs representation error, e.g. 0.2 * 1000.
  auto count = static_cast<std::size_t>(
      std::ceil(policy.disclose_fraction * static_cast<double>(n) - 1e-9));
  count = std::clamp<std::size_t>(count, 1, n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(order[i], order[j]);
  }
  std::vector<std::size_t> disclosed(order.begin(), order.begin() + static_cast<long>(count));
  std::sort(disclosed.begin(), disclosed.end());

  std::size_t mismatches = 0;
  for (std::size_t idx : disclosed) {
    records[idx].disclosed = true;
    if (records[idx].sent_bit != records[idx].received_bit) ++mismatches;
  }
  const double qber = static_cast<double>(mismatches) / static_cast<double>(count);

  std::vector<int> delivered;
  delivered.reserve(n - count);
  for (const auto& r : records) {
    if (!r.disclosed) delivered.push_back(r.received_bit);
  }
  const Verdict verdict = qber > policy.qber_abort_threshold ? Verdict::abort : Verdict::pass;
  return SiftResult{verdict, qber, std::move(delivered), std::move(disclosed), std::move(records)};
}

}  // namespace cqkd::protocol
