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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cqkd/qcore.h"
#include "oracles.h"

namespace cqkd {
namespace {

Matrix ket_bra(const PureState& s) { return s.amplitudes() * s.amplitudes().adjoint(); }

TEST(RandomStreamTest, SameSeedSameSequence) {
  RandomStream a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(RandomStreamTest, DerivedStreamsArePureFunctions) {
  RandomStream a = RandomStream::derive(7, 2, 11);
  RandomStream b = RandomStream::derive(7, 2, 11);
  RandomStream c = RandomStream::derive(7, 2, 12);
  RandomStream d = RandomStream::derive(7, 3, 11);
  const auto va = a.next_u64();
  EXPECT_EQ(va, b.next_u64());
  EXPECT_NE(va, c.next_u64());
  EXPECT_NE(va, d.next_u64());
}

TEST(RandomStreamTest, UniformAndBelowStayInRange) {
  RandomStream rng(3);
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    ASSERT_LT(rng.below(7), 7U);
  }
  EXPECT_NEAR(sum / 20000, 0.5, 0.01);
}

TEST(RandomStreamTest, NormalHasUnitVariance) {
  RandomStream rng(5);
  double s = 0, s2 = 0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    s += x;
    s2 += x * x;
  }
  EXPECT_NEAR(s / n, 0.0, 0.02);
  EXPECT_NEAR(s2 / n, 1.0, 0.03);
}

TEST(PureStateTest, RejectsBadInput) {
  EXPECT_THROW(PureState({"a"}, Vector::Zero(2)), std::invalid_argument);
  Vector three(3);
  three << 1, 0, 0;
  EXPECT_THROW(PureState({"a"}, three), std::invalid_argument);
  Vector v(4);
  v << 1, 0, 0, 0;
  EXPECT_THROW(PureState({"a", "a"}, v), std::invalid_argument);
  EXPECT_NO_THROW(PureState({"a", "b"}, v));
}

TEST(PureStateTest, FirstWireIsMostSignificant) {
  const PureState s = make_state({"a", "b", "c"}, 0b100);
  EXPECT_DOUBLE_EQ(outcome_probability(s, "a", 1), 1.0);
  EXPECT_DOUBLE_EQ(outcome_probability(s, "b", 0), 1.0);
  EXPECT_DOUBLE_EQ(outcome_probability(s, "c", 0), 1.0);
}

TEST(PureStateTest, TensorConcatenatesWires) {
  const PureState s = make_state({"a"}, 1).tensor(make_state({"b"}, 0));
  ASSERT_EQ(s.wires(), (WireList{"a", "b"}));
  EXPECT_DOUBLE_EQ(std::norm(s.amplitudes()[2]), 1.0);
  EXPECT_THROW(make_state({"a"}, 0).tensor(make_state({"a"}, 0)), std::invalid_argument);
}

TEST(PureStateTest, EprPairs) {
  const PureState plus = epr_phi_plus("a", "b");
  const PureState minus = epr_phi_minus("a", "b");
  EXPECT_NEAR(plus.amplitudes()[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(plus.amplitudes()[3].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(minus.amplitudes()[3].real(), -1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(plus.amplitudes().dot(minus.amplitudes())), 0.0, 1e-15);
}

TEST(DensityMatrixTest, Validation) {
  Matrix m = Matrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix({"a"}, m), std::invalid_argument);  // trace 2
  Matrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  EXPECT_THROW(DensityMatrix({"a"}, neg), std::invalid_argument);
  Matrix nonh(2, 2);
  nonh << 0.5, 0.3, 0.1, 0.5;
  EXPECT_THROW(DensityMatrix({"a"}, nonh), std::invalid_argument);
  EXPECT_NO_THROW(DensityMatrix::maximally_mixed({"a", "b"}));
  EXPECT_NEAR(DensityMatrix::maximally_mixed({"a", "b"}).purity(), 0.25, 1e-15);
}

TEST(UnitaryTest, Validation) {
  EXPECT_THROW(Unitary(Matrix::Identity(3, 3)), std::invalid_argument);
  EXPECT_THROW(Unitary(2.0 * Matrix::Identity(2, 2)), std::invalid_argument);
  EXPECT_EQ(cnot_gate().arity(), 2);
  EXPECT_EQ(Unitary::identity(3).arity(), 3);
}

TEST(GatesTest, MatchClosedForms) {
  for (double t : {0.0, 0.3, kPi / 4, 2.0}) {
    EXPECT_LT((rotation_gate(t).matrix() - oracle::rotation(t)).norm(), 1e-15);
  }
  EXPECT_LT((cnot_gate().matrix() - oracle::cnot()).norm(), 1e-15);
  const auto& p = pauli_gates();
  EXPECT_LT((p.sigma1.matrix() - oracle::x()).norm(), 1e-15);
  EXPECT_LT((p.sigma3.matrix() - oracle::z()).norm(), 1e-15);
  EXPECT_LT((p.sigma2.matrix() - oracle::mat2(0, -1, 1, 0)).norm(), 1e-15);
}

// The real sigma2 differs from the standard one by a global phase, so both
// conjugations agree on every state.
TEST(GatesTest, RealSigma2ConjugationMatchesStandard) {
  RandomStream rng(11);
  const Matrix y = oracle::y_standard();
  const Matrix& s2 = pauli_gates().sigma2.matrix();
  for (int i = 0; i < 50; ++i) {
    const Matrix rho = oracle::random_mixed(2, rng);
    EXPECT_LT((s2 * rho * s2.adjoint() - y * rho * y.adjoint()).norm(), 1e-14);
    EXPECT_LT((s2.adjoint() * rho * s2 - s2 * rho * s2.adjoint()).norm(), 1e-14);
  }
}

TEST(GatesTest, CnotTruthTable) {
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const PureState out = apply(cnot_gate(), make_state({"c", "t"}, idx), {"c", "t"});
    const int c = static_cast<int>(idx >> 1), t = static_cast<int>(idx & 1);
    EXPECT_DOUBLE_EQ(outcome_probability(out, "c", c), 1.0);
    EXPECT_DOUBLE_EQ(outcome_probability(out, "t", t ^ c), 1.0);
  }
}

// Property: apply on any targets equals the explicitly embedded operator.
TEST(ApplyTest, MatchesEmbeddedOperatorOnRandomStates) {
  RandomStream rng(21);
  const WireList wires{"w0", "w1", "w2", "w3"};
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + static_cast<int>(rng.below(3));
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < k) {
      const int w = static_cast<int>(rng.below(4));
      if (std::find(targets.begin(), targets.end(), w) == targets.end()) targets.push_back(w);
    }
    WireList target_names;
    for (int t : targets) target_names.push_back(wires[static_cast<std::size_t>(t)]);
    const Unitary u = random_unitary(std::size_t{1} << k, rng);
    const oracle::V psi = oracle::random_vector(16, rng);
    const PureState out = apply(u, PureState(wires, psi), target_names);
    const oracle::V want = oracle::embed(u.matrix(), targets, 4) * psi;
    ASSERT_LT((out.amplitudes() - want).norm(), 1e-12) << "trial " << trial;

    const oracle::M rho = oracle::random_mixed(16, rng);
    const DensityMatrix rout = apply(u, DensityMatrix(wires, rho), target_names);
    const oracle::M E = oracle::embed(u.matrix(), targets, 4);
    ASSERT_LT((rout.matrix() - E * rho * E.adjoint()).norm(), 1e-12);
  }
}

TEST(ApplyTest, RejectsBadTargets) {
  const PureState s = make_state({"a", "b"}, 0);
  EXPECT_THROW(apply(cnot_gate(), s, {"a"}), std::invalid_argument);
  EXPECT_THROW(apply(cnot_gate(), s, {"a", "a"}), std::invalid_argument);
  EXPECT_THROW(apply(rotation_gate(0.1), s, {"zz"}), std::out_of_range);
}

TEST(ApplyTest, BilateralRotationFixesPhiPlus) {
  RandomStream rng(4);
  for (int i = 0; i < 30; ++i) {
    const double t = (rng.uniform() * 2 - 1) * kPi;
    const PureState out = apply_bilateral(rotation_gate(t), epr_phi_plus("a", "b"), "a", "b");
    EXPECT_NEAR(std::abs(out.amplitudes().dot(epr_phi_plus("a", "b").amplitudes())), 1.0, 1e-12);
  }
}

TEST(KrausTest, TracePreservationIsChecked) {
  std::vector<Matrix> bad{0.5 * Matrix::Identity(2, 2)};
  EXPECT_FALSE(is_trace_preserving(bad));
  EXPECT_THROW(apply_kraus(bad, DensityMatrix::maximally_mixed({"a"}), {"a"}), std::invalid_argument);
  const double p = 0.3;
  std::vector<Matrix> flip{std::sqrt(1 - p) * Matrix::Identity(2, 2), std::sqrt(p) * oracle::x()};
  EXPECT_TRUE(is_trace_preserving(flip));
  const DensityMatrix out = apply_kraus(flip, to_density(make_state({"a"}, 0)), {"a"});
  EXPECT_NEAR(out.matrix()(1, 1).real(), p, 1e-15);
}

TEST(MeasureTest, CollapsesAndFollowsBornRule) {
  RandomStream rng(8);
  const double t = 0.4;
  const PureState s = apply(rotation_gate(t), make_state({"a", "b"}, 0), {"a"});
  int ones = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const Measurement m = measure(s, "a", rng);
    ASSERT_DOUBLE_EQ(outcome_probability(m.state, "a", m.outcome), 1.0);
    ones += m.outcome;
  }
  const double p1 = std::sin(t) * std::sin(t);
  EXPECT_NEAR(static_cast<double>(ones) / n, p1, 4 * std::sqrt(p1 * (1 - p1) / n));
}

TEST(MeasureTest, RemoveSettledWire) {
  const PureState s = make_state({"a", "b"}, 0b01);
  const PureState r = remove_settled_wire(s, "b");
  EXPECT_EQ(r.wires(), WireList{"a"});
  EXPECT_DOUBLE_EQ(std::norm(r.amplitudes()[0]), 1.0);
  EXPECT_THROW(remove_settled_wire(epr_phi_plus("a", "b"), "a"), std::logic_error);
}

TEST(DephaseTest, KillsCoherencesOnOneWire) {
  const DensityMatrix rho = to_density(epr_phi_plus("a", "b"));
  const DensityMatrix d = dephase(rho, "a");
  EXPECT_NEAR(std::abs(d.matrix()(0, 3)), 0.0, 1e-15);
  EXPECT_NEAR(d.matrix()(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(d.matrix()(3, 3).real(), 0.5, 1e-15);
}

TEST(PartialTraceTest, MatchesIndexSumOracle) {
  RandomStream rng(31);
  const WireList wires{"a", "b", "c"};
  const oracle::M rho = oracle::random_mixed(8, rng);
  const DensityMatrix d(wires, rho);
  EXPECT_LT((partial_trace(d, {"a", "c"}).matrix() - oracle::partial_trace(rho, {0, 2}, 3)).norm(), 1e-13);
  EXPECT_LT((partial_trace(d, {"b"}).matrix() - oracle::partial_trace(rho, {1}, 3)).norm(), 1e-13);
  // Kept wires keep rho's order whatever order they are listed in.
  EXPECT_EQ(partial_trace(d, {"c", "a"}).wires(), (WireList{"a", "c"}));
}

TEST(PartialTraceTest, ProductStateReducesToFactor) {
  RandomStream rng(2);
  const PureState a = random_pure_state({"a"}, rng);
  const PureState b = random_pure_state({"b", "c"}, rng);
  const DensityMatrix red = partial_trace(to_density(a.tensor(b)), {"b", "c"});
  EXPECT_LT((red.matrix() - ket_bra(b)).norm(), 1e-13);
}

TEST(PartialTraceTest, EprHalfIsMaximallyMixed) {
  const DensityMatrix half = partial_trace(to_density(epr_phi_plus("a", "b")), {"b"});
  EXPECT_LT((half.matrix() - 0.5 * Matrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(ReorderTest, PermutesWires) {
  const DensityMatrix rho = to_density(make_state({"a", "b"}, 0b10));
  const DensityMatrix r = reorder(rho, {"b", "a"});
  EXPECT_NEAR(r.matrix()(1, 1).real(), 1.0, 1e-15);
  EXPECT_THROW(reorder(rho, {"a", "c"}), std::out_of_range);
  EXPECT_THROW(reorder(rho, {"a"}), std::invalid_argument);
}

TEST(MetricsTest, TraceDistanceConvention) {
  const DensityMatrix zero = to_density(make_state({"a"}, 0));
  const DensityMatrix one = to_density(make_state({"a"}, 1));
  EXPECT_NEAR(trace_distance(zero, one), 2.0, 1e-12);
  EXPECT_NEAR(trace_distance(zero, zero), 0.0, 1e-12);
  EXPECT_NEAR(trace_distance(zero, DensityMatrix::maximally_mixed({"a"})), 1.0, 1e-12);
}

TEST(MetricsTest, FidelityForPureStatesIsOverlap) {
  RandomStream rng(13);
  for (int i = 0; i < 20; ++i) {
    const PureState psi = random_pure_state({"a", "b"}, rng);
    const DensityMatrix sigma(WireList{"a", "b"}, oracle::random_mixed(4, rng));
    const double overlap = (psi.amplitudes().adjoint() * sigma.matrix() * psi.amplitudes())(0, 0).real();
    EXPECT_NEAR(fidelity(to_density(psi), sigma), overlap, 1e-9);
    EXPECT_NEAR(fidelity(psi, sigma), overlap, 1e-12);
  }
}

// Properties over random pairs: symmetry, range, and the Fuchs-van de Graaf
// inequalities in the unhalved convention, 1 - sqrt(F) <= T/2 <= sqrt(1 - F).
TEST(MetricsTest, RandomPairProperties) {
  RandomStream rng(17);
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = (i % 2) ? 2 : 4;
    const WireList w = dim == 2 ? WireList{"a"} : WireList{"a", "b"};
    const DensityMatrix a(w, oracle::random_mixed(dim, rng));
    const DensityMatrix b(w, oracle::random_mixed(dim, rng));
    const double t = trace_distance(a, b);
    const double f = fidelity(a, b);
    EXPECT_NEAR(t, oracle::trace_norm(a.matrix() - b.matrix()), 1e-12);
    EXPECT_NEAR(trace_distance(b, a), t, 1e-12);
    EXPECT_NEAR(fidelity(b, a), f, 1e-9);
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, 2.0 + 1e-12);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0 + 1e-12);
    EXPECT_LE(1 - std::sqrt(f), t / 2 + 1e-9);
    EXPECT_LE(t / 2, std::sqrt(1 - f) + 1e-9);
  }
}

TEST(MetricsTest, AlignsWireOrder) {
  const DensityMatrix a = to_density(make_state({"a", "b"}, 0b10));
  const DensityMatrix b = to_density(make_state({"b", "a"}, 0b01));
  EXPECT_NEAR(trace_distance(a, b), 0.0, 1e-12);
  EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
}

// Contraction: no channel increases trace distance.
TEST(MetricsTest, TraceDistanceContractsUnderKrausMaps) {
  RandomStream rng(19);
  for (int i = 0; i < 40; ++i) {
    const double p = rng.uniform();
    const double q = rng.uniform() * (1 - p);
    std::vector<Matrix> kraus{std::sqrt(1 - p - q) * Matrix::Identity(2, 2), std::sqrt(p) * oracle::x(),
                              std::sqrt(q) * oracle::z()};
    const DensityMatrix a(WireList{"a", "b"}, oracle::random_mixed(4, rng));
    const DensityMatrix b(WireList{"a", "b"}, oracle::random_mixed(4, rng));
    const double before = trace_distance(a, b);
    const double after = trace_distance(apply_kraus(kraus, a, {"b"}), apply_kraus(kraus, b, {"b"}));
    EXPECT_LE(after, before + 1e-12);
  }
}

TEST(RandomGeneratorsTest, ProduceValidObjects) {
  RandomStream rng(23);
  for (int i = 0; i < 20; ++i) {
    const Unitary u = random_unitary(8, rng);
    EXPECT_LT((u.matrix() * u.matrix().adjoint() - Matrix::Identity(8, 8)).norm(), 1e-12);
    EXPECT_NEAR(random_pure_state({"a", "b"}, rng).norm(), 1.0, 1e-12);
    const DensityMatrix d = random_density({"a", "b"}, rng);
    EXPECT_NEAR(d.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_LE(d.purity(), 1.0 + 1e-12);
  }
}

// Haar check: E|U_00|^2 = 1/d.
TEST(RandomGeneratorsTest, HaarFirstMomentMatches) {
  RandomStream rng(29);
  double s = 0.0;
  const int n = 4000;
  for (int i = 0; i < n; ++i) s += std::norm(random_unitary(4, rng).matrix()(0, 0));
  EXPECT_NEAR(s / n, 0.25, 0.01);
}

}  // namespace
}  // namespace cqkd
