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
#include <stdexcept>
#include <string>

#include "cqkd/qcore.h"
#include "linalg.h"

namespace cqkd {

namespace {

void check_arity(const Unitary& u, const WireList& targets) {
  if (static_cast<std::size_t>(u.arity()) != targets.size()) {
    throw std::invalid_argument("apply: gate arity " + std::to_string(u.arity()) + " but " +
                                std::to_string(targets.size()) + " target wires");
  }
}

// U rho U^dagger for an operator given on the listed qubit positions.
Matrix conjugate(const Matrix& op, const std::vector<int>& positions, int n, const Matrix& rho) {
  Matrix x = rho;
  detail::left_multiply(op, positions, n, x);
  Matrix y = x.adjoint();
  detail::left_multiply(op, positions, n, y);
  return y.adjoint();
}

}  // namespace

PureState apply(const Unitary& u, const PureState& state, const WireList& targets) {
  check_arity(u, targets);
  const auto positions = detail::positions_of(state.wires(), targets);
  Matrix column = state.amplitudes();
  detail::left_multiply(u.matrix(), positions, state.num_qubits(), column);
  Vector amps = column.col(0);
  // Rounding drift only; a unitary cannot change the norm.
  amps /= amps.norm();
  return PureState(state.wires(), std::move(amps));
}

DensityMatrix apply(const Unitary& u, const DensityMatrix& rho, const WireList& targets) {
  check_arity(u, targets);
  const auto positions = detail::positions_of(rho.wires(), targets);
  Matrix out = conjugate(u.matrix(), positions, rho.num_qubits(), rho.matrix());
  return DensityMatrix(rho.wires(), detail::hermitian_part(out));
}

PureState apply_bilateral(const Unitary& u, const PureState& state, const Wire& wire_a,
                          const Wire& wire_b) {
  return apply(u, apply(u, state, {wire_a}), {wire_b});
}

DensityMatrix apply_bilateral(const Unitary& u, const DensityMatrix& rho, const Wire& wire_a,
                              const Wire& wire_b) {
  return apply(u, apply(u, rho, {wire_a}), {wire_b});
}

bool is_trace_preserving(const std::vector<Matrix>& kraus, double tolerance) {
  if (kraus.empty()) return false;
  const Eigen::Index d = kraus.front().cols();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) return false;
    sum += k.adjoint() * k;
  }
  return (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <= tolerance;
}

DensityMatrix apply_kraus(const std::vector<Matrix>& kraus, const DensityMatrix& rho,
                          const WireList& targets) {
  if (!is_trace_preserving(kraus)) {
    throw std::invalid_argument("apply_kraus: Kraus operators do not satisfy sum K^dagger K = I");
  }
  if (static_cast<std::size_t>(kraus.front().rows()) != (std::size_t{1} << targets.size())) {
    throw std::invalid_argument("apply_kraus: Kraus dimension does not match target wires");
  }
  const auto positions = detail::positions_of(rho.wires(), targets);
  Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const auto& k : kraus) out += conjugate(k, positions, rho.num_qubits(), rho.matrix());
  return DensityMatrix(rho.wires(), detail::hermitian_part(out));
}

PureState attach(const PureState& state, const Wire& wire, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("attach: bit must be 0 or 1");
  return state.tensor(make_state({wire}, static_cast<std::uint64_t>(bit)));
}

DensityMatrix attach(const DensityMatrix& rho, const Wire& wire, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("attach: bit must be 0 or 1");
  return rho.tensor(to_density(make_state({wire}, static_cast<std::uint64_t>(bit))));
}

double outcome_probability(const PureState& state, const Wire& wire, int bit) {
  const int n = state.num_qubits();
  const int pos = state.position(wire);
  double p = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (static_cast<int>(detail::bit_of(i, pos, n)) == bit) p += std::norm(state.amplitudes()[i]);
  }
  return p;
}

double outcome_probability(const DensityMatrix& rho, const Wire& wire, int bit) {
  const int n = rho.num_qubits();
  const int pos = rho.position(wire);
  double p = 0.0;
  for (std::size_t i = 0; i < rho.dimension(); ++i) {
    if (static_cast<int>(detail::bit_of(i, pos, n)) == bit) p += rho.matrix()(i, i).real();
  }
  return p;
}

Measurement measure(const PureState& state, const Wire& wire, RandomStream& rng) {
  const int n = state.num_qubits();
  const int pos = state.position(wire);
  const double p1 = outcome_probability(state, wire, 1);
  const int outcome = rng.uniform() < p1 ? 1 : 0;
  const double p = outcome == 1 ? p1 : 1.0 - p1;
  if (p < 1e-14) throw std::logic_error("measure: selected branch has vanishing probability");
  Vector amps = state.amplitudes();
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (static_cast<int>(detail::bit_of(i, pos, n)) != outcome) amps[i] = 0.0;
  }
  amps /= std::sqrt(p);
  amps /= amps.norm();
  return Measurement{outcome, PureState(state.wires(), std::move(amps))};
}

PureState remove_settled_wire(const PureState& state, const Wire& wire) {
  const double p1 = outcome_probability(state, wire, 1);
  int value;
  if (p1 < kStateTolerance) {
    value = 0;
  } else if (1.0 - p1 < kStateTolerance) {
    value = 1;
  } else {
    throw std::logic_error("remove_settled_wire: wire '" + wire + "' is not in a basis state");
  }
  const int n = state.num_qubits();
  const int pos = state.position(wire);
  Vector amps(static_cast<Eigen::Index>(state.dimension() / 2));
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (static_cast<int>(detail::bit_of(i, pos, n)) == value) amps[k++] = state.amplitudes()[i];
  }
  amps /= amps.norm();
  WireList wires = state.wires();
  wires.erase(wires.begin() + pos);
  return PureState(std::move(wires), std::move(amps));
}

DensityMatrix dephase(const DensityMatrix& rho, const Wire& wire) {
  const int n = rho.num_qubits();
  const int pos = rho.position(wire);
  Matrix m = rho.matrix();
  for (std::size_t r = 0; r < rho.dimension(); ++r) {
    for (std::size_t c = 0; c < rho.dimension(); ++c) {
      if (detail::bit_of(r, pos, n) != detail::bit_of(c, pos, n)) m(r, c) = 0.0;
    }
  }
  return DensityMatrix(rho.wires(), std::move(m));
}

DensityMatrix to_density(const PureState& state) {
  const Vector& a = state.amplitudes();
  return DensityMatrix(state.wires(), detail::hermitian_part(a * a.adjoint()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const WireList& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  auto keep_pos = detail::positions_of(rho.wires(), keep);
  std::sort(keep_pos.begin(), keep_pos.end());
  const int n = rho.num_qubits();
  std::vector<int> traced;
  for (int p = 0; p < n; ++p) {
    if (!std::binary_search(keep_pos.begin(), keep_pos.end(), p)) traced.push_back(p);
  }
  const int k = static_cast<int>(keep_pos.size());
  const std::size_t kdim = std::size_t{1} << k;
  const std::size_t tdim = std::size_t{1} << traced.size();

  auto expand = [&](std::size_t kept, std::size_t env) {
    std::size_t idx = 0;
    for (int i = 0; i < k; ++i) {
      if ((kept >> (k - 1 - i)) & 1U) idx |= detail::mask_of(keep_pos[i], n);
    }
    const int t = static_cast<int>(traced.size());
    for (int i = 0; i < t; ++i) {
      if ((env >> (t - 1 - i)) & 1U) idx |= detail::mask_of(traced[i], n);
    }
    return idx;
  };

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kdim), static_cast<Eigen::Index>(kdim));
  for (std::size_t r = 0; r < kdim; ++r) {
    for (std::size_t c = 0; c < kdim; ++c) {
      Complex acc = 0.0;
      for (std::size_t e = 0; e < tdim; ++e) acc += rho.matrix()(expand(r, e), expand(c, e));
      out(r, c) = acc;
    }
  }
  WireList wires;
  for (int p : keep_pos) wires.push_back(rho.wires()[p]);
  return DensityMatrix(std::move(wires), detail::hermitian_part(out));
}

DensityMatrix reorder(const DensityMatrix& rho, const WireList& wires) {
  if (wires.size() != rho.wires().size()) {
    throw std::invalid_argument("reorder: wire lists have different sizes");
  }
  const auto source = detail::positions_of(rho.wires(), wires);
  const int n = rho.num_qubits();
  // perm[new_index] = old_index
  std::vector<std::size_t> perm(rho.dimension());
  for (std::size_t idx = 0; idx < rho.dimension(); ++idx) {
    std::size_t old = 0;
    for (int i = 0; i < n; ++i) {
      if (detail::bit_of(idx, i, n)) old |= detail::mask_of(source[i], n);
    }
    perm[idx] = old;
  }
  Matrix m(rho.matrix().rows(), rho.matrix().cols());
  for (std::size_t r = 0; r < rho.dimension(); ++r) {
    for (std::size_t c = 0; c < rho.dimension(); ++c) m(r, c) = rho.matrix()(perm[r], perm[c]);
  }
  return DensityMatrix(wires, std::move(m));
}

namespace {

const Matrix& aligned(const DensityMatrix& a, const DensityMatrix& b, Matrix& storage) {
  if (a.wires() == b.wires()) return b.matrix();
  if (a.wires().size() != b.wires().size()) {
    throw std::invalid_argument("density matrices act on different numbers of wires");
  }
  storage = reorder(b, a.wires()).matrix();
  return storage;
}

}  // namespace

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  Matrix storage;
  const Matrix& bm = aligned(a, b, storage);
  const Eigen::VectorXd eig = detail::hermitian_eigenvalues(detail::hermitian_part(a.matrix() - bm));
  return eig.cwiseAbs().sum();
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  Matrix storage;
  const Matrix& bm = aligned(a, b, storage);
  const Matrix sa = detail::psd_sqrt(a.matrix());
  // Tr sqrt(M) from the eigenvalues of M. Rounding noise on a null space
  // would otherwise enter as its square root, so it is cut off first.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(detail::hermitian_part(sa * bm * sa), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const Eigen::VectorXd& mu = solver.eigenvalues();
  const double cutoff = 1e-13 * std::max(1.0, mu.maxCoeff());
  double root = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    if (mu[i] > cutoff) root += std::sqrt(mu[i]);
  }
  return std::clamp(root * root, 0.0, 1.0);
}

double fidelity(const PureState& psi, const DensityMatrix& rho) {
  Matrix storage;
  const Matrix& m = psi.wires() == rho.wires()
                        ? rho.matrix()
                        : (storage = reorder(rho, psi.wires()).matrix());
  const Vector& v = psi.amplitudes();
  return std::clamp((v.adjoint() * m * v)(0, 0).real(), 0.0, 1.0);
}

}  // namespace cqkd
