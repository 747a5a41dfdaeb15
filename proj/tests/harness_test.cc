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

#include <cmath>
#include <stdexcept>

#include "cqkd/harness.h"
#include "oracles.h"

namespace cqkd::harness {
namespace {

using adversary::AttackKind;

double se(double p, std::int64_t n) { return std::sqrt(p * (1 - p) / static_cast<double>(n)); }

Scenario with_attack(AttackKind kind, int rounds = 10000, std::uint64_t seed = 1) {
  Scenario s;
  s.attack.kind = kind;
  s.rounds = rounds;
  s.seed = seed;
  return s;
}

TEST(WilsonTest, EdgeCases) {
  const Rate none = wilson_rate(0, 0);
  EXPECT_EQ(none.value, 0.0);
  EXPECT_EQ(none.ci_low, 0.0);
  EXPECT_EQ(none.ci_high, 1.0);
  const Rate zero = wilson_rate(0, 100);
  EXPECT_EQ(zero.ci_low, 0.0);
  EXPECT_GT(zero.ci_high, 0.0);
  const Rate all = wilson_rate(100, 100);
  EXPECT_EQ(all.ci_high, 1.0);
  EXPECT_LT(all.ci_low, 1.0);
  EXPECT_THROW(wilson_rate(5, 3), std::invalid_argument);
}

// Closed-form Wilson interval against a direct evaluation, and bracketing.
TEST(WilsonTest, MatchesFormulaAndBrackets) {
  RandomStream rng(1);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(5000));
    const std::int64_t k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n + 1)));
    const Rate r = wilson_rate(k, n);
    const double p = double(k) / n, z = kZ95;
    const double denom = 1 + z * z / n;
    const double centre = (p + z * z / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4.0 * n * n)) / denom;
    ASSERT_NEAR(r.value, p, 1e-15);
    ASSERT_LE(r.ci_low, r.value);
    ASSERT_GE(r.ci_high, r.value);
    ASSERT_GE(r.ci_low, 0.0);
    ASSERT_LE(r.ci_high, 1.0);
    if (k > 0 && k < n) {
      ASSERT_NEAR(r.ci_low, centre - half, 1e-12);
      ASSERT_NEAR(r.ci_high, centre + half, 1e-12);
    }
  }
}

TEST(MutualInformationTest, KnownValues) {
  std::vector<int> x, y, z;
  RandomStream rng(2);
  for (int i = 0; i < 4000; ++i) {
    x.push_back(rng.bit());
    z.push_back(rng.bit());
  }
  EXPECT_NEAR(mutual_information_bits(x, x), 1.0, 1e-3);
  EXPECT_LT(mutual_information_bits(x, z), 0.005);
  // Binary symmetric channel with crossover 0.1: I = 1 - h(0.1).
  for (int b : x) y.push_back(b ^ (rng.bernoulli(0.1) ? 1 : 0));
  EXPECT_NEAR(mutual_information_bits(x, y), 1 - oracle::binary_entropy(0.1), 0.02);
  EXPECT_EQ(mutual_information_bits(std::vector<int>{}, std::vector<int>{}), 0.0);
  EXPECT_THROW(mutual_information_bits(std::vector<int>{1}, std::vector<int>{}), std::invalid_argument);
}

TEST(RepetitionTest, EncodeDecode) {
  EXPECT_EQ(repetition_encode(1, 3), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(repetition_decode(std::vector<int>{1, 0, 1}), 1);
  EXPECT_EQ(repetition_decode(std::vector<int>{0}), 0);
  EXPECT_THROW(repetition_decode(std::vector<int>{1, 0}), std::invalid_argument);
  EXPECT_THROW(repetition_decode(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(repetition_encode(1, 2), std::invalid_argument);
}

// Property: decoding recovers the bit whenever fewer than half the copies flip.
TEST(RepetitionTest, MajorityCorrectsMinorityFlips) {
  RandomStream rng(3);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + 2 * static_cast<int>(rng.below(6));
    const int bit = rng.bit();
    std::vector<int> word = repetition_encode(bit, n);
    int flips = 0;
    for (int& b : word) {
      if (rng.bernoulli(0.3)) {
        b ^= 1;
        ++flips;
      }
    }
    ASSERT_EQ(repetition_decode(word), 2 * flips > n ? 1 - bit : bit);
  }
}

TEST(RepetitionTest, FailureProbabilityMatchesEnumeration) {
  EXPECT_NEAR(repetition_failure_probability(0.1, 3), 0.028, 1e-15);
  for (int n : {1, 3, 5, 7, 9}) {
    for (double p : {0.0, 0.05, 0.1, 0.2, 0.5, 0.9}) {
      EXPECT_NEAR(repetition_failure_probability(p, n), oracle::majority_failure(p, n), 1e-13);
    }
  }
}

// Measured logical error rate under bit-flip noise, for n in {1, 3, 5}.
TEST(RepetitionTest, SessionRateMatchesFormula) {
  for (int n : {1, 3, 5}) {
    for (double p : {0.05, 0.1, 0.2}) {
      Scenario s;
      s.rounds = 10000;
      s.repetition_n = n;
      s.noise = channels::PauliChannel(p, 0, 0);
      s.seed = 100 + static_cast<std::uint64_t>(n * 10) + static_cast<std::uint64_t>(p * 100);
      const RunStats st = run_scenario(s);
      const double want = oracle::majority_failure(p, n);
      EXPECT_NEAR(st.qber.value, want, 3 * se(want, st.qber.trials)) << "n=" << n << " p=" << p;
      EXPECT_EQ(st.rounds_executed, n * 10000);
      EXPECT_EQ(st.logical_bits, 10000);
    }
  }
}

TEST(ScenarioTest, Validation) {
  Scenario s;
  s.repetition_n = 2;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = Scenario{};
  s.rounds = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = Scenario{};
  s.theta = std::nan("");
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = Scenario{};
  s.fixed_bits = {0, 1};
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.rounds = 2;
  EXPECT_NO_THROW(s.validate());
  s.fixed_bits = {0, 2};
  EXPECT_THROW(s.validate(), std::invalid_argument);
}

TEST(RunScenarioTest, NoAttackIsPerfect) {
  Scenario s;
  s.rounds = 1000;
  const RunStats st = run_scenario(s);
  EXPECT_EQ(st.qber.value, 0.0);
  EXPECT_NEAR(st.key_fidelity_final, 1.0, 1e-10);
  EXPECT_EQ(st.verdict, protocol::Verdict::pass);
  EXPECT_EQ(st.rounds_executed, 1000);
  EXPECT_EQ(st.delivered_key_length, 800);
  EXPECT_EQ(st.eve_accuracy.trials, 0);
}

TEST(RunScenarioTest, InterceptResendAborts) {
  const RunStats st = run_scenario(with_attack(AttackKind::intercept_resend));
  EXPECT_NEAR(st.qber.value, 0.5, 0.02);
  EXPECT_NEAR(st.eve_accuracy.value, 0.5, 0.02);
  EXPECT_EQ(st.verdict, protocol::Verdict::abort);
  EXPECT_TRUE(st.restart_required);
}

TEST(RunScenarioTest, EntangleAtQuarterPiReachesHalf) {
  const RunStats st = run_scenario(with_attack(AttackKind::entangle_cnot));
  EXPECT_NEAR(st.qber.value, 0.5, 0.02);
  EXPECT_EQ(st.verdict, protocol::Verdict::abort);
}

TEST(RunScenarioTest, NoRotationLetsEveReadEverything) {
  Scenario s = with_attack(AttackKind::entangle_cnot);
  s.theta = 0.0;
  const RunStats st = run_scenario(s);
  EXPECT_EQ(st.qber.value, 0.0);
  EXPECT_GE(st.eve_accuracy.value, 0.99);
  EXPECT_GT(st.eve_mutual_info_bits, 0.9);
  EXPECT_EQ(st.verdict, protocol::Verdict::pass);
}

TEST(RunScenarioTest, HaarAttackLearnsNothing) {
  for (bool prior : {false, true}) {
    Scenario s = with_attack(AttackKind::general_unitary);
    s.attack.unitary_seed = 77;
    s.attack.prior_entanglement = prior;
    s.attack.prior_seed = 78;
    const RunStats st = run_scenario(s);
    EXPECT_LT(st.eve_mutual_info_bits, 0.01);
    EXPECT_NEAR(st.eve_accuracy.value, 0.5, 0.03);
  }
}

TEST(RunScenarioTest, RatesAndIntervalsAreWellFormed) {
  for (AttackKind k : {AttackKind::none, AttackKind::intercept_resend, AttackKind::entangle_cnot,
                       AttackKind::general_unitary}) {
    const RunStats st = run_scenario(with_attack(k, 500, 9));
    for (const Rate& r : {st.qber, st.eve_accuracy}) {
      EXPECT_GE(r.value, 0.0);
      EXPECT_LE(r.value, 1.0);
      EXPECT_LE(r.ci_low, r.value);
      EXPECT_GE(r.ci_high, r.value);
    }
    EXPECT_GE(st.eve_mutual_info_bits, 0.0);
    EXPECT_LE(st.eve_mutual_info_bits, 1.0);
    EXPECT_GE(st.observed_qber, 0.0);
    EXPECT_LE(st.observed_qber, 1.0);
  }
}

bool same_stats(const RunStats& a, const RunStats& b) {
  return a.qber.successes == b.qber.successes && a.observed_qber == b.observed_qber &&
         a.key_fidelity_final == b.key_fidelity_final && a.eve_accuracy.successes == b.eve_accuracy.successes &&
         a.eve_accuracy.trials == b.eve_accuracy.trials && a.eve_mutual_info_bits == b.eve_mutual_info_bits &&
         a.verdict == b.verdict && a.delivered_key_length == b.delivered_key_length;
}

TEST(DeterminismTest, RunScenarioRepeatsExactly) {
  Scenario s = with_attack(AttackKind::general_unitary, 2000, 5);
  s.noise = channels::PauliChannel(0.02, 0.01, 0.03);
  EXPECT_TRUE(same_stats(run_scenario(s), run_scenario(s)));
  Scenario t = s;
  t.threads = 3;
  EXPECT_TRUE(same_stats(run_scenario(s), run_scenario(t)));
  t = s;
  t.seed = 6;
  EXPECT_FALSE(same_stats(run_scenario(s), run_scenario(t)));
}

TEST(DeterminismTest, RoundEstimateIndependentOfThreadCount) {
  Scenario s = with_attack(AttackKind::entangle_cnot, 3000, 8);
  s.theta = kPi / 8;
  s.threads = 1;
  const RoundEstimate a = estimate_round_qber(s);
  for (int threads : {2, 3, 7}) {
    s.threads = threads;
    const RoundEstimate b = estimate_round_qber(s);
    EXPECT_EQ(a.qber.successes, b.qber.successes);
    EXPECT_EQ(a.eve_accuracy.successes, b.eve_accuracy.successes);
    EXPECT_EQ(a.eve_mutual_info_bits, b.eve_mutual_info_bits);
  }
}

TEST(RoundOfInterestTest, SecondRoundOnlyForEntangle) {
  EXPECT_EQ(round_of_interest(with_attack(AttackKind::entangle_cnot)), 2);
  EXPECT_EQ(round_of_interest(with_attack(AttackKind::intercept_resend)), 1);
  EXPECT_EQ(round_of_interest(with_attack(AttackKind::none)), 1);
}

TEST(OracleTest, ClosedForms) {
  EXPECT_EQ(oracle_qber(AttackKind::intercept_resend, 0.3), 0.5);
  EXPECT_EQ(oracle_qber(AttackKind::none, 0.3), 0.0);
  EXPECT_NEAR(oracle_qber(AttackKind::entangle_cnot, kPi / 4), 0.5, 1e-15);
  EXPECT_NEAR(oracle_qber(AttackKind::entangle_cnot, kPi / 6), 0.375, 1e-15);
  EXPECT_THROW(oracle_qber(AttackKind::general_unitary, 0.1), std::invalid_argument);
}

// Exactness anchor: the density-matrix route agrees with every closed form.
TEST(OracleTest, ExactAgreesWithOracleWhereverBothExist) {
  RandomStream rng(10);
  for (int i = 0; i < 60; ++i) {
    Scenario s;
    s.theta = rng.uniform() * kPi;
    s.attack.kind = static_cast<AttackKind>(rng.below(3));
    if (rng.bit()) {
      const double p1 = 0.2 * rng.uniform(), p2 = 0.2 * rng.uniform(), p3 = 0.2 * rng.uniform();
      s.noise = channels::PauliChannel(p1, p2, p3);
    }
    const auto oracle = scenario_oracle_qber(s);
    if (!oracle) continue;
    ASSERT_NEAR(exact_round_statistics(s).qber_exact, *oracle, 1e-10) << i;
  }
}

TEST(OracleTest, EntangleGridFromFormula) {
  for (double theta : {0.0, kPi / 8, kPi / 6, kPi / 4}) {
    Scenario s = with_attack(AttackKind::entangle_cnot);
    s.theta = theta;
    EXPECT_NEAR(exact_round_statistics(s).qber_exact, oracle::entangle_rate(theta), 1e-12);
  }
}

// Oracle agreement: Monte Carlo within 3 SE of the closed form.
TEST(OracleTest, MonteCarloWithinThreeStandardErrors) {
  struct Case {
    AttackKind kind;
    double theta;
    double p1, p2, p3;
  };
  const Case cases[] = {
      {AttackKind::entangle_cnot, 0.0, 0, 0, 0},     {AttackKind::entangle_cnot, kPi / 8, 0, 0, 0},
      {AttackKind::entangle_cnot, kPi / 6, 0, 0, 0}, {AttackKind::entangle_cnot, kPi / 4, 0, 0, 0},
      {AttackKind::intercept_resend, 0.4, 0, 0, 0},  {AttackKind::intercept_resend, kPi / 4, 0.1, 0.1, 0.1},
      {AttackKind::none, kPi / 4, 0.1, 0.05, 0.2},   {AttackKind::none, 0.2, 0.3, 0, 0},
  };
  std::uint64_t seed = 40;
  for (const Case& c : cases) {
    Scenario s = with_attack(c.kind, 10000, ++seed);
    s.theta = c.theta;
    s.noise = channels::PauliChannel(c.p1, c.p2, c.p3);
    const double want = *scenario_oracle_qber(s);
    const RoundEstimate mc = estimate_round_qber(s);
    EXPECT_NEAR(mc.qber.value, want, 3 * se(want, mc.qber.trials) + 1e-15) << to_string(c.kind) << " " << c.theta;
    EXPECT_NEAR(mc.qber.value, exact_round_statistics(s).qber_exact, 3 * se(want, mc.qber.trials) + 1e-15);
  }
}

TEST(OracleTest, NoClosedFormCases) {
  EXPECT_FALSE(scenario_oracle_qber(with_attack(AttackKind::general_unitary)).has_value());
  Scenario s;
  s.key.epsilon = 0.1;
  EXPECT_FALSE(scenario_oracle_qber(s).has_value());
  s = with_attack(AttackKind::entangle_cnot);
  s.noise = channels::PauliChannel(0.1, 0, 0);
  EXPECT_FALSE(scenario_oracle_qber(s).has_value());
}

TEST(ExactStatsTest, PristineAndKeyState) {
  const ExactStats st = exact_round_statistics(Scenario{});
  EXPECT_EQ(st.qber_exact, 0.0);
  EXPECT_EQ(st.key_state_after.wires(), (WireList{protocol::kKeyA, protocol::kKeyB}));
  EXPECT_NEAR(protocol::key_fidelity(st.key_state_after), 1.0, 1e-12);
  Scenario s;
  s.noise = channels::PauliChannel(0.1, 0.2, 0.3);
  EXPECT_NEAR(exact_round_statistics(s).qber_exact, 0.3, 1e-12);
}

TEST(ExactStatsTest, GeneralUnitaryMatchesMonteCarlo) {
  Scenario s = with_attack(AttackKind::general_unitary, 20000, 50);
  s.attack.unitary_seed = 3;
  const double exact = exact_round_statistics(s).qber_exact;
  const RoundEstimate mc = estimate_round_qber(s);
  EXPECT_NEAR(mc.qber.value, exact, 3 * se(exact, mc.qber.trials));
}

TEST(ExactStatsTest, DegradedKeyMonteCarloMatchesExact) {
  Scenario s;
  s.rounds = 20000;
  s.key.epsilon = 0.2;
  s.key.contaminant = Contaminant::random;
  s.key.contaminant_seed = 4;
  const double exact = exact_round_statistics(s).qber_exact;
  EXPECT_LE(exact, 0.2 + 1e-10);
  const RoundEstimate mc = estimate_round_qber(s);
  EXPECT_NEAR(mc.qber.value, exact, 3 * se(exact, mc.qber.trials));
}

TEST(SweepTest, EmptyGridGivesEmptyTable) {
  EXPECT_TRUE(sweep(SweepParameter::theta, std::vector<double>{}, Scenario{}).empty());
}

TEST(SweepTest, ThetaCurvePeaksAtQuarterPi) {
  Scenario base = with_attack(AttackKind::entangle_cnot, 2000, 60);
  const auto grid = linspace(0, kPi / 2, 9);
  const auto rows = sweep(SweepParameter::theta, grid, base);
  ASSERT_EQ(rows.size(), 9U);
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(rows[i].exact, oracle::entangle_rate(grid[i]), 1e-12);
    ASSERT_TRUE(rows[i].oracle.has_value());
    if (rows[i].exact > rows[argmax].exact) argmax = i;
  }
  EXPECT_EQ(argmax, 4U);
  EXPECT_NEAR(rows[4].exact, 0.5, 1e-12);
}

TEST(SweepTest, BitFlipSweepTracksParameter) {
  Scenario base;
  base.rounds = 2000;
  const auto grid = linspace(0, 0.3, 4);
  const auto rows = sweep(SweepParameter::p1, grid, base);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.exact, r.value, 1e-12);
    EXPECT_NEAR(*r.oracle, r.value, 1e-12);
    EXPECT_LE(r.mc.ci_low, r.mc.value);
  }
}

TEST(SweepTest, ParameterNames) {
  for (SweepParameter p : {SweepParameter::theta, SweepParameter::p1, SweepParameter::p2, SweepParameter::p3,
                           SweepParameter::epsilon}) {
    EXPECT_EQ(parse_sweep_parameter(to_string(p)), p);
  }
  EXPECT_FALSE(parse_sweep_parameter("rounds").has_value());
}

TEST(LinspaceTest, EndpointsAndValidation) {
  const auto g = linspace(0.0, 1.0, 5);
  ASSERT_EQ(g.size(), 5U);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_NEAR(g[1], 0.25, 1e-15);
  EXPECT_THROW(linspace(0, 1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace cqkd::harness
