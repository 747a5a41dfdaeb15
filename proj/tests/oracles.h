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

// Brute-force reference computations for the tests. Everything here is
// written from index arithmetic directly and shares no code with the library.

#ifndef CQKD_TESTS_ORACLES_H
#define CQKD_TESTS_ORACLES_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cqkd/random.h"

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

/// Bit of wire `w` (0 = most significant) in basis index `i` of an n-qubit register.
inline int bit(std::size_t i, int w, int n) { return static_cast<int>((i >> (n - 1 - w)) & 1U); }

/// Full 2^n operator for a k-qubit gate `g` acting on `targets` (targets[0]
/// is g's most significant qubit). Built entry by entry.
inline M embed(const M& g, const std::vector<int>& targets, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const int k = static_cast<int>(targets.size());
  M out = M::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool others_equal = true;
      for (int w = 0; w < n && others_equal; ++w) {
        bool is_target = false;
        for (int t : targets) is_target = is_target || t == w;
        if (!is_target && bit(r, w, n) != bit(c, w, n)) others_equal = false;
      }
      if (!others_equal) continue;
      std::size_t gr = 0, gc = 0;
      for (int j = 0; j < k; ++j) {
        gr = (gr << 1) | static_cast<std::size_t>(bit(r, targets[j], n));
        gc = (gc << 1) | static_cast<std::size_t>(bit(c, targets[j], n));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          g(static_cast<Eigen::Index>(gr), static_cast<Eigen::Index>(gc));
    }
  }
  return out;
}

/// Reduced matrix on `keep` (in the given order) by summing over the rest.
inline M partial_trace(const M& rho, const std::vector<int>& keep, int n) {
  const int k = static_cast<int>(keep.size());
  const std::size_t kd = std::size_t{1} << k;
  const std::size_t dim = std::size_t{1} << n;
  M out = M::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool traced_equal = true;
      for (int w = 0; w < n; ++w) {
        bool kept = false;
        for (int t : keep) kept = kept || t == w;
        if (!kept && bit(r, w, n) != bit(c, w, n)) traced_equal = false;
      }
      if (!traced_equal) continue;
      std::size_t kr = 0, kc = 0;
      for (int j = 0; j < k; ++j) {
        kr = (kr << 1) | static_cast<std::size_t>(bit(r, keep[j], n));
        kc = (kc << 1) | static_cast<std::size_t>(bit(c, keep[j], n));
      }
      out(static_cast<Eigen::Index>(kr), static_cast<Eigen::Index>(kc)) +=
          rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

inline M mat2(C a, C b, C c, C d) {
  M m(2, 2);
  m << a, b, c, d;
  return m;
}

inline M rotation(double t) { return mat2(std::cos(t), std::sin(t), -std::sin(t), std::cos(t)); }
inline M x() { return mat2(0, 1, 1, 0); }
inline M y_standard() { return mat2(0, C(0, -1), C(0, 1), 0); }
inline M z() { return mat2(1, 0, 0, -1); }

inline M cnot() {
  M m = M::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

/// Gaussian-entry vector, normalized.
inline V random_vector(std::size_t dim, cqkd::RandomStream& rng) {
  V v(static_cast<Eigen::Index>(dim));
  for (auto& e : v) e = C(rng.normal(), rng.normal());
  return v / v.norm();
}

/// Mixture of a few random pure states.
inline M random_mixed(std::size_t dim, cqkd::RandomStream& rng, int terms = 3) {
  M out = M::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    const double w = rng.uniform() + 0.05;
    const V v = random_vector(dim, rng);
    out += w * v * v.adjoint();
    total += w;
  }
  return out / total;
}

/// Sum of |eigenvalues| of a Hermitian matrix.
inline double trace_norm(const M& h) {
  Eigen::SelfAdjointEigenSolver<M> s(h);
  return s.eigenvalues().cwiseAbs().sum();
}

/// Sum_{k > n/2} C(n,k) p^k (1-p)^(n-k) by enumerating all 2^n flip patterns.
inline double majority_failure(double p, int n) {
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    int flips = 0;
    double prob = 1.0;
    for (int i = 0; i < n; ++i) {
      const bool f = (mask >> i) & 1U;
      flips += f;
      prob *= f ? p : 1.0 - p;
    }
    if (2 * flips > n) total += prob;
  }
  return total;
}

/// 2 cos^2 t sin^2 t, written as sin^2(2t) / 2.
inline double entangle_rate(double t) {
  const double s = std::sin(2 * t);
  return 0.5 * s * s;
}

inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

}  // namespace oracle

#endif  // CQKD_TESTS_ORACLES_H
