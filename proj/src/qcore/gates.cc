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

#include "cqkd/qcore.h"
#include "linalg.h"

namespace cqkd {

PureState make_state(WireList wires, std::uint64_t basis_index) {
  if (wires.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("make_state: too many wires");
  }
  const std::uint64_t dim = std::uint64_t{1} << wires.size();
  if (basis_index >= dim) {
    throw std::out_of_range("make_state: basis index " + std::to_string(basis_index) +
                            " out of range for " + std::to_string(wires.size()) + " wires");
  }
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim));
  amps[static_cast<Eigen::Index>(basis_index)] = 1.0;
  return PureState(std::move(wires), std::move(amps));
}

PureState epr_phi_plus(const Wire& wire_a, const Wire& wire_b) {
  if (wire_a == wire_b) throw std::invalid_argument("epr_phi_plus: wires must be distinct");
  Vector amps = Vector::Zero(4);
  amps[0] = amps[3] = 1.0 / std::sqrt(2.0);
  return PureState({wire_a, wire_b}, std::move(amps));
}

PureState epr_phi_minus(const Wire& wire_a, const Wire& wire_b) {
  if (wire_a == wire_b) throw std::invalid_argument("epr_phi_minus: wires must be distinct");
  Vector amps = Vector::Zero(4);
  amps[0] = 1.0 / std::sqrt(2.0);
  amps[3] = -1.0 / std::sqrt(2.0);
  return PureState({wire_a, wire_b}, std::move(amps));
}

Unitary rotation_gate(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("rotation_gate: theta must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix m(2, 2);
  m << c, s, -s, c;
  return Unitary(std::move(m));
}

Unitary cnot_gate() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 3) = m(3, 2) = 1.0;
  return Unitary(std::move(m));
}

const PauliGates& pauli_gates() {
  static const PauliGates gates = [] {
    Matrix i(2, 2), x(2, 2), y(2, 2), z(2, 2);
    i << 1, 0, 0, 1;
    x << 0, 1, 1, 0;
    y << 0, -1, 1, 0;
    z << 1, 0, 0, -1;
    return PauliGates{Unitary(i), Unitary(x), Unitary(y), Unitary(z)};
  }();
  return gates;
}

Unitary random_unitary(std::size_t dim, RandomStream& rng) {
  if (!detail::is_power_of_two(dim) || dim > (std::size_t{1} << kMaxQubits)) {
    throw std::invalid_argument("random_unitary: dimension must be a power of two up to 2^8");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix g(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR so the distribution is Haar.
  for (Eigen::Index c = 0; c < n; ++c) {
    const Complex d = r(c, c);
    const double mag = std::abs(d);
    q.col(c) *= (mag > 0.0) ? d / mag : Complex(1.0);
  }
  return Unitary(std::move(q));
}

PureState random_pure_state(WireList wires, RandomStream& rng) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << wires.size());
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v[i] = Complex(re, im);
  }
  v /= v.norm();
  return PureState(std::move(wires), std::move(v));
}

DensityMatrix random_density(WireList wires, RandomStream& rng) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << wires.size());
  Matrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = Complex(re, im);
    }
  }
  Matrix rho = detail::hermitian_part(g * g.adjoint());
  rho /= rho.trace().real();
  return DensityMatrix(std::move(wires), std::move(rho));
}

}  // namespace cqkd
