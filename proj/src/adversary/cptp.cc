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

#include <stdexcept>
#include <string>

#include "cqkd/adversary.h"

namespace cqkd::adversary {

namespace {

int ancilla_qubits(std::size_t kraus_count) {
  int a = 1;
  while ((std::size_t{1} << a) < kraus_count) ++a;
  return a;
}

}  // namespace

Unitary stinespring_dilation(const std::vector<Matrix>& kraus) {
  if (!is_trace_preserving(kraus)) {
    throw std::invalid_argument("stinespring_dilation: Kraus set is not trace preserving");
  }
  const Eigen::Index d = kraus.front().rows();
  const int a = ancilla_qubits(kraus.size());
  const Eigen::Index na = Eigen::Index{1} << a;
  const Eigen::Index dim = d * na;

  // Isometry columns: column j is V|j>|0>.
  Matrix iso = Matrix::Zero(dim, d);
  for (std::size_t k = 0; k < kraus.size(); ++k) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) iso(i * na + static_cast<Eigen::Index>(k), j) = kraus[k](i, j);
    }
  }
  // Orthonormal complement of the isometry's range from a full QR.
  Eigen::HouseholderQR<Matrix> qr(iso);
  const Matrix q = qr.householderQ();

  Matrix v(dim, dim);
  Eigen::Index next_free = d;
  for (Eigen::Index row_sys = 0; row_sys < d; ++row_sys) {
    for (Eigen::Index anc = 0; anc < na; ++anc) {
      const Eigen::Index col = row_sys * na + anc;
      v.col(col) = anc == 0 ? Vector(iso.col(row_sys)) : Vector(q.col(next_free++));
    }
  }
  return Unitary(std::move(v));
}

DensityMatrix apply_via_dilation(const std::vector<Matrix>& kraus, const DensityMatrix& rho,
                                 const Wire& wire) {
  const Unitary v = stinespring_dilation(kraus);
  if (kraus.front().rows() != 2) throw std::invalid_argument("apply_via_dilation: single-qubit maps only");
  const int a = v.arity() - 1;
  DensityMatrix joint = rho;
  WireList targets{wire};
  for (int i = 0; i < a; ++i) {
    const Wire anc = "dilation_anc" + std::to_string(i);
    joint = attach(joint, anc, 0);
    targets.push_back(anc);
  }
  joint = apply(v, joint, targets);
  return reorder(partial_trace(joint, rho.wires()), rho.wires());
}

}  // namespace cqkd::adversary
