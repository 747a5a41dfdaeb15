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

// Exact small-system quantum mechanics: pure states and density matrices over
// named wires, gates, measurement, reductions and distance measures.
//
// Index convention: the first wire in a wire list is the most significant bit
// of the amplitude index, so |a b c> has index 4a + 2b + c.

#ifndef CQKD_QCORE_H
#define CQKD_QCORE_H

#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cqkd/random.h"

namespace cqkd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Wire = std::string;
using WireList = std::vector<Wire>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr int kMaxQubits = 8;

inline constexpr double kStateTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;

/// Normalized amplitude vector over an ordered list of distinct wires.
class PureState {
 public:
  /// Throws std::invalid_argument unless amplitudes has length 2^|wires| and
  /// unit norm, and wire labels are distinct.
  PureState(WireList wires, Vector amplitudes);

  const WireList& wires() const { return wires_; }
  const Vector& amplitudes() const { return amplitudes_; }
  int num_qubits() const { return static_cast<int>(wires_.size()); }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }

  bool has_wire(std::string_view wire) const;
  /// Position of `wire` in the wire list; throws std::out_of_range if absent.
  int position(std::string_view wire) const;
  double norm() const { return amplitudes_.norm(); }

  /// Kronecker product, this state's wires first.
  PureState tensor(const PureState& other) const;

 private:
  WireList wires_;
  Vector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite operator over named wires.
class DensityMatrix {
 public:
  /// Validates Hermiticity and trace to 1e-12 and eigenvalues >= -1e-10.
  DensityMatrix(WireList wires, Matrix matrix);

  const WireList& wires() const { return wires_; }
  const Matrix& matrix() const { return matrix_; }
  int num_qubits() const { return static_cast<int>(wires_.size()); }
  std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }

  bool has_wire(std::string_view wire) const;
  int position(std::string_view wire) const;
  double purity() const;

  DensityMatrix tensor(const DensityMatrix& other) const;

  static DensityMatrix maximally_mixed(WireList wires);

 private:
  WireList wires_;
  Matrix matrix_;
};

/// Unitary acting on `arity` target wires.
class Unitary {
 public:
  /// Throws std::invalid_argument unless the matrix is 2^k square and
  /// U U^dagger = I entrywise within 1e-10.
  explicit Unitary(Matrix matrix);

  int arity() const { return arity_; }
  const Matrix& matrix() const { return matrix_; }
  Unitary adjoint() const;

  static Unitary identity(int arity);

 private:
  int arity_;
  Matrix matrix_;
};

/// Basis state with amplitude 1 at `basis_index` (wire 0 is the MSB).
PureState make_state(WireList wires, std::uint64_t basis_index);
/// (|00> + |11>)/sqrt(2) on two distinct wires.
PureState epr_phi_plus(const Wire& wire_a, const Wire& wire_b);
/// (|00> - |11>)/sqrt(2).
PureState epr_phi_minus(const Wire& wire_a, const Wire& wire_b);

/// [[cos t, sin t], [-sin t, cos t]].
Unitary rotation_gate(double theta);
/// First target wire is the control.
Unitary cnot_gate();

struct PauliGates {
  Unitary identity;
  Unitary sigma1;
  /// Real antisymmetric form [[0, -1], [1, 0]]. It equals -i times the usual
  /// sigma_y, so the two agree as Kraus operators and as conjugations.
  Unitary sigma2;
  Unitary sigma3;
};
const PauliGates& pauli_gates();

/// Applies u to `targets` (in order: targets[0] is u's most significant
/// qubit), identity on every other wire.
PureState apply(const Unitary& u, const PureState& state, const WireList& targets);
DensityMatrix apply(const Unitary& u, const DensityMatrix& rho, const WireList& targets);
/// u on wire_a followed by u on wire_b.
PureState apply_bilateral(const Unitary& u, const PureState& state, const Wire& wire_a,
                          const Wire& wire_b);
DensityMatrix apply_bilateral(const Unitary& u, const DensityMatrix& rho, const Wire& wire_a,
                              const Wire& wire_b);

/// Sum_k K rho K^dagger on `targets`. The Kraus set must satisfy
/// Sum_k K^dagger K = I within 1e-10.
DensityMatrix apply_kraus(const std::vector<Matrix>& kraus, const DensityMatrix& rho,
                          const WireList& targets);
bool is_trace_preserving(const std::vector<Matrix>& kraus, double tolerance = kUnitaryTolerance);

/// Adds `wire` in |bit> as the last wire.
PureState attach(const PureState& state, const Wire& wire, int bit);
DensityMatrix attach(const DensityMatrix& rho, const Wire& wire, int bit);

double outcome_probability(const PureState& state, const Wire& wire, int bit);
double outcome_probability(const DensityMatrix& rho, const Wire& wire, int bit);

struct Measurement {
  int outcome;
  /// Renormalized collapse; the measured wire stays in the state.
  PureState state;
};
Measurement measure(const PureState& state, const Wire& wire, RandomStream& rng);

/// Removes a wire that is in a definite computational basis state. Throws
/// std::logic_error if the wire is still in superposition or entangled.
PureState remove_settled_wire(const PureState& state, const Wire& wire);

/// Computational-basis measurement with the outcome discarded.
DensityMatrix dephase(const DensityMatrix& rho, const Wire& wire);

DensityMatrix to_density(const PureState& state);
/// Reduced state on `keep`. Kept wires retain their order in rho.
DensityMatrix partial_trace(const DensityMatrix& rho, const WireList& keep);
/// Same operator expressed with wires in the order `wires` (a permutation).
DensityMatrix reorder(const DensityMatrix& rho, const WireList& wires);

/// Tr|A - B|, the unhalved convention: orthogonal pure states are at
/// distance 2. Wire sets must match; order may differ.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
/// (Tr sqrt(sqrt(a) b sqrt(a)))^2, in [0, 1].
double fidelity(const DensityMatrix& a, const DensityMatrix& b);
/// <psi| rho |psi>.
double fidelity(const PureState& psi, const DensityMatrix& rho);

/// Haar-random unitary of dimension `dim` (a power of two).
Unitary random_unitary(std::size_t dim, RandomStream& rng);
/// Haar-random pure state.
PureState random_pure_state(WireList wires, RandomStream& rng);
/// Random full-rank state from the Ginibre ensemble, G G^dagger / Tr.
DensityMatrix random_density(WireList wires, RandomStream& rng);

}  // namespace cqkd

#endif  // CQKD_QCORE_H
