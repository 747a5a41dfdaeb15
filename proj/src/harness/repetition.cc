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

#include "cqkd/harness.h"

namespace cqkd::harness {

std::vector<int> repetition_encode(int bit, int n) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("repetition_encode: bit must be 0 or 1");
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("repetition_encode: n must be odd and >= 1");
  return std::vector<int>(static_cast<std::size_t>(n), bit);
}

int repetition_decode(std::span<const int> bits) {
  if (bits.empty() || bits.size() % 2 == 0) {
    throw std::invalid_argument("repetition_decode: input length must be odd");
  }
  std::size_t ones = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("repetition_decode: values must be 0 or 1");
    ones += static_cast<std::size_t>(b);
  }
  return 2 * ones > bits.size() ? 1 : 0;
}

double repetition_failure_probability(double p, int n) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("repetition_failure_probability: p out of range");
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("repetition_failure_probability: n must be odd");
  double total = 0.0;
  double binom = 1.0;  // C(n, k)
  for (int k = 0; k <= n; ++k) {
    if (2 * k > n) total += binom * std::pow(p, k) * std::pow(1.0 - p, n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return total;
}

}  // namespace cqkd::harness
