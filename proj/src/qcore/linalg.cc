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

#include "linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cqkd::detail {

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  return solver.eigenvalues();
}

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(m));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  Eigen::VectorXd values = solver.eigenvalues();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] < -kPsdTolerance) {
      throw std::domain_error("psd_sqrt: eigenvalue " + std::to_string(values[i]) +
                              " is not positive semidefinite");
    }
    values[i] = std::sqrt(std::max(values[i], 0.0));
  }
  const Matrix& vecs = solver.eigenvectors();
  return vecs * values.cast<Complex>().asDiagonal() * vecs.adjoint();
}

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) * 0.5; }

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("dimension is not a power of two");
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

void left_multiply(const Matrix& op, const std::vector<int>& positions, int n, Matrix& m) {
  const int k = static_cast<int>(positions.size());
  const std::size_t sub = std::size_t{1} << k;
  const std::size_t dim = std::size_t{1} << n;
  std::size_t target_mask = 0;
  for (int p : positions) target_mask |= mask_of(p, n);

  std::vector<std::size_t> offsets(sub);
  for (std::size_t s = 0; s < sub; ++s) {
    std::size_t off = 0;
    for (int i = 0; i < k; ++i) {
      if ((s >> (k - 1 - i)) & 1U) off |= mask_of(positions[i], n);
    }
    offsets[s] = off;
  }

  Vector in(static_cast<Eigen::Index>(sub));
  Vector out(static_cast<Eigen::Index>(sub));
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & target_mask) continue;
      for (std::size_t s = 0; s < sub; ++s) in[s] = m(base | offsets[s], col);
      out.noalias() = op * in;
      for (std::size_t s = 0; s < sub; ++s) m(base | offsets[s], col) = out[s];
    }
  }
}

std::vector<int> positions_of(const WireList& all, const WireList& targets) {
  std::vector<int> out;
  out.reserve(targets.size());
  for (const auto& t : targets) {
    auto it = std::find(all.begin(), all.end(), t);
    if (it == all.end()) throw std::out_of_range("unknown wire '" + t + "'");
    const int pos = static_cast<int>(it - all.begin());
    if (std::find(out.begin(), out.end(), pos) != out.end()) {
      throw std::invalid_argument("wire '" + t + "' listed twice");
    }
    out.push_back(pos);
  }
  return out;
}

void check_distinct(const WireList& wires, const char* what) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    for (std::size_t j = i + 1; j < wires.size(); ++j) {
      if (wires[i] == wires[j]) {
        throw std::invalid_argument(std::string(what) + ": duplicate wire '" + wires[i] + "'");
      }
    }
  }
}

}  // namespace cqkd::detail
