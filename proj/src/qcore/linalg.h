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

#ifndef CQKD_SRC_QCORE_LINALG_H
#define CQKD_SRC_QCORE_LINALG_H

#include "cqkd/qcore.h"

namespace cqkd::detail {

/// Eigenvalues of a Hermitian matrix (the lower triangle is read).
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are
/// clamped to 0; anything more negative throws std::domain_error.
Matrix psd_sqrt(const Matrix& m);

/// (m + m^dagger) / 2.
Matrix hermitian_part(const Matrix& m);

bool is_power_of_two(std::size_t n);
int log2_exact(std::size_t n);

/// Bit of qubit `position` in `index` for an n-qubit register (position 0 is
/// the most significant bit).
inline std::size_t bit_of(std::size_t index, int position, int n) {
  return (index >> (n - 1 - position)) & 1U;
}

inline std::size_t mask_of(int position, int n) {
  return std::size_t{1} << (n - 1 - position);
}

/// Replaces column j of `m` by op acting on the qubits at `positions`,
/// for every column. This is left multiplication by op (x) I.
void left_multiply(const Matrix& op, const std::vector<int>& positions, int n, Matrix& m);

std::vector<int> positions_of(const WireList& all, const WireList& targets);

void check_distinct(const WireList& wires, const char* what);

}  // namespace cqkd::detail

#endif  // CQKD_SRC_QCORE_LINALG_H
