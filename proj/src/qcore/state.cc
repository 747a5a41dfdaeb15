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

int position_in(const WireList& wires, std::string_view wire) {
  auto it = std::find(wires.begin(), wires.end(), wire);
  if (it == wires.end()) throw std::out_of_range("unknown wire '" + std::string(wire) + "'");
  return static_cast<int>(it - wires.begin());
}

WireList concat(const WireList& a, const WireList& b) {
  WireList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

PureState::PureState(WireList wires, Vector amplitudes)
    : wires_(std::move(wires)), amplitudes_(std::move(amplitudes)) {
  detail::check_distinct(wires_, "PureState");
  if (wires_.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("PureState: more than " + std::to_string(kMaxQubits) + " qubits");
  }
  if (static_cast<std::size_t>(amplitudes_.size()) != (std::size_t{1} << wires_.size())) {
    throw std::invalid_argument("PureState: amplitude count is not 2^(number of wires)");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kStateTolerance) {
    throw std::invalid_argument("PureState: amplitudes are not normalized");
  }
}

bool PureState::has_wire(std::string_view wire) const {
  return std::find(wires_.begin(), wires_.end(), wire) != wires_.end();
}

int PureState::position(std::string_view wire) const { return position_in(wires_, wire); }

PureState PureState::tensor(const PureState& other) const {
  Vector out(amplitudes_.size() * other.amplitudes_.size());
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    out.segment(i * other.amplitudes_.size(), other.amplitudes_.size()) =
        amplitudes_[i] * other.amplitudes_;
  }
  return PureState(concat(wires_, other.wires_), std::move(out));
}

DensityMatrix::DensityMatrix(WireList wires, Matrix matrix)
    : wires_(std::move(wires)), matrix_(std::move(matrix)) {
  detail::check_distinct(wires_, "DensityMatrix");
  if (wires_.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("DensityMatrix: more than " + std::to_string(kMaxQubits) +
                                " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << wires_.size());
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("DensityMatrix: matrix is not 2^n square");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > kStateTolerance) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  if (detail::hermitian_eigenvalues(matrix_).minCoeff() < -kPsdTolerance) {
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  }
}

bool DensityMatrix::has_wire(std::string_view wire) const {
  return std::find(wires_.begin(), wires_.end(), wire) != wires_.end();
}

int DensityMatrix::position(std::string_view wire) const { return position_in(wires_, wire); }

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
  const Eigen::Index d = other.matrix_.rows();
  Matrix out(matrix_.rows() * d, matrix_.cols() * d);
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
      out.block(i * d, j * d, d, d) = matrix_(i, j) * other.matrix_;
    }
  }
  return DensityMatrix(concat(wires_, other.wires_), std::move(out));
}

DensityMatrix DensityMatrix::maximally_mixed(WireList wires) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << wires.size());
  Matrix m = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(std::move(wires), std::move(m));
}

Unitary::Unitary(Matrix matrix) : arity_(0), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("Unitary: matrix not square");
  if (!detail::is_power_of_two(static_cast<std::size_t>(matrix_.rows()))) {
    throw std::invalid_argument("Unitary: dimension is not a power of two");
  }
  arity_ = detail::log2_exact(static_cast<std::size_t>(matrix_.rows()));
  const Matrix defect = matrix_ * matrix_.adjoint() - Matrix::Identity(matrix_.rows(), matrix_.rows());
  if (defect.cwiseAbs().maxCoeff() > kUnitaryTolerance) {
    throw std::invalid_argument("Unitary: U U^dagger differs from identity");
  }
}

Unitary Unitary::adjoint() const { return Unitary(matrix_.adjoint()); }

Unitary Unitary::identity(int arity) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << arity);
  return Unitary(Matrix::Identity(dim, dim));
}

}  // namespace cqkd
