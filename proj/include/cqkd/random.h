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

#ifndef CQKD_RANDOM_H
#define CQKD_RANDOM_H

#include <cstdint>
#include <optional>
#include <random>

namespace cqkd {

/// Seeded source of randomness passed explicitly to every operation that
/// samples. There is no global generator anywhere in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Conversions to doubles and normals are done here rather than
/// through <random> distributions so results do not depend on the standard
/// library implementation.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Counter-based substream: the stream for (seed, stream, index) is a pure
  /// function of its arguments, so work items can run in any order.
  static RandomStream derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  int bit();
  bool bernoulli(double p);
  /// Unbiased integer in [0, n). n must be nonzero.
  std::uint64_t below(std::uint64_t n);
  double normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cqkd

#endif  // CQKD_RANDOM_H
