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
#include <array>
#include <cmath>
#include <stdexcept>

#include "cqkd/harness.h"

namespace cqkd::harness {

double Rate::standard_error() const {
  if (trials <= 0) return 0.0;
  return std::sqrt(value * (1.0 - value) / static_cast<double>(trials));
}

Rate wilson_rate(std::int64_t successes, std::int64_t trials, double z) {
  if (trials < 0 || successes < 0 || successes > trials) {
    throw std::invalid_argument("wilson_rate: need 0 <= successes <= trials");
  }
  if (trials == 0) return Rate{0.0, 0.0, 1.0, 0, 0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  const double lo = std::clamp(std::min(center - half, p), 0.0, 1.0);
  const double hi = std::clamp(std::max(center + half, p), 0.0, 1.0);
  return Rate{p, lo, hi, successes, trials};
}

double mutual_information_bits(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw std::invalid_argument("mutual_information_bits: length mismatch");
  if (x.empty()) return 0.0;
  std::array<std::array<double, 2>, 2> joint{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] != 0 && x[i] != 1) || (y[i] != 0 && y[i] != 1)) {
      throw std::invalid_argument("mutual_information_bits: values must be 0 or 1");
    }
    joint[static_cast<std::size_t>(x[i])][static_cast<std::size_t>(y[i])] += 1.0;
  }
  const double n = static_cast<double>(x.size());
  double mi = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double pab = joint[a][b] / n;
      if (pab <= 0.0) continue;
      const double pa = (joint[a][0] + joint[a][1]) / n;
      const double pb = (joint[0][b] + joint[1][b]) / n;
      mi += pab * std::log2(pab / (pa * pb));
    }
  }
  return std::max(mi, 0.0);
}

}  // namespace cqkd::harness
