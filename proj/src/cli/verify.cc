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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "cqkd/cli.h"

namespace cqkd::cli {

namespace {

using adversary::AttackKind;
using harness::Scenario;

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v == 0.0 ? 0.0 : v);
  return buf;
}

// k pi / 16 as a reduced fraction: "0", "π/16", "3π/8", "π/2".
std::string angle_label(int k, int denom) {
  if (k == 0) return "0";
  const int g = std::gcd(k, denom);
  const int num = k / g;
  const int den = denom / g;
  std::string out = num == 1 ? "π" : std::to_string(num) + "π";
  if (den != 1) out += "/" + std::to_string(den);
  return out;
}

double binomial_se(double p, std::int64_t n) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

class Collector {
 public:
  Collector(int number, std::string title) : result_{number, std::move(title), {}} {}

  void add(std::string label, std::string expected, std::string got, bool pass) {
    result_.claims.push_back(Claim{result_.number, std::move(label), std::move(expected), std::move(got), pass});
  }

  /// |got - want| <= tol.
  void near(std::string label, double want, double got, double tol, bool three_decimals = true) {
    const std::string g = three_decimals ? fixed3(got) : sci(got);
    const std::string w = three_decimals ? fixed3(want) : sci(want);
    add(std::move(label), w + " ± " + sci(tol), g, std::abs(got - want) <= tol);
  }

  void at_most(std::string label, double bound, double got) {
    add(std::move(label), "<= " + sci(bound), sci(got), got <= bound);
  }

  void below(std::string label, double bound, double got) {
    add(std::move(label), "< " + sci(bound), sci(got), got < bound);
  }

  void at_least(std::string label, double bound, double got) {
    add(std::move(label), ">= " + sci(bound), sci(got), got >= bound);
  }

  CriterionResult take() { return std::move(result_); }

 private:
  CriterionResult result_;
};

Scenario base(const VerifyOptions& o, int criterion, int rounds) {
  Scenario s;
  s.rounds = rounds;
  s.seed = o.seed + static_cast<std::uint64_t>(criterion) * 1000;
  s.threads = o.threads;
  return s;
}

DensityMatrix key_pair(const protocol::QuantumKey& key) {
  return partial_trace(to_density(key.joint), {protocol::kKeyA, protocol::kKeyB});
}

CriterionResult check_correctness(const VerifyOptions& o) {
  Collector c(1, "correctness without interference");
  Scenario s = base(o, 1, 1000);
  const auto start = std::chrono::steady_clock::now();
  const harness::RunStats st = harness::run_scenario(s);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.add("no attack, 1000 rounds, θ=π/4: qber", fixed3(o.expect.no_attack_qber) + " exactly",
        fixed3(st.qber.value), st.qber.value == o.expect.no_attack_qber);
  c.at_least("no attack: key fidelity with Φ+", 1.0 - 1e-10, st.key_fidelity_final);
  c.add("no attack: verdict", "pass", protocol::to_string(st.verdict), st.verdict == protocol::Verdict::pass);
  c.add("no attack: runtime", "under 1 s", seconds < 1.0 ? "under 1 s" : "over 1 s", seconds < 1.0);
  return c.take();
}

CriterionResult check_carrier_secrecy(const VerifyOptions& o) {
  Collector c(2, "carrier secrecy");
  const Matrix target = o.expect.carrier_diagonal * Matrix::Identity(2, 2);
  RandomStream rng(o.seed + 2000);
  for (int k : {0, 2, 4}) {
    const double theta = k * kPi / 16;
    for (int bit : {0, 1}) {
      protocol::QuantumKey key = protocol::bilateral_rotate(protocol::init_key(rng), theta);
      const auto encoded = protocol::alice_encode(std::move(key), bit);
      const DensityMatrix carrier = partial_trace(to_density(encoded.key.joint), {protocol::kCarrier});
      const double dev = (carrier.matrix() - target).cwiseAbs().maxCoeff();
      char label[96];
      std::snprintf(label, sizeof label, "carrier state θ=%s bit=%d: max deviation from I/2",
                    angle_label(k, 16).c_str(), bit);
      c.at_most(label, 1e-12, dev);
    }
  }
  return c.take();
}

CriterionResult check_intercept(const VerifyOptions& o) {
  Collector c(3, "intercept-resend");
  Scenario s = base(o, 3, 10000);
  s.attack.kind = AttackKind::intercept_resend;
  const harness::RunStats st = harness::run_scenario(s);
  c.near("intercept-resend 10^4 rounds: qber", o.expect.intercept_qber, st.qber.value, 0.02);
  c.near("intercept-resend: Eve accuracy", o.expect.intercept_eve_accuracy, st.eve_accuracy.value, 0.02);
  c.add("intercept-resend: verdict", "abort", protocol::to_string(st.verdict),
        st.verdict == protocol::Verdict::abort);
  c.near("intercept-resend: exact qber", o.expect.intercept_qber, harness::exact_round_statistics(s).qber_exact,
         1e-10);
  return c.take();
}

CriterionResult check_entangle(const VerifyOptions& o) {
  Collector c(4, "entangle error rate");
  Scenario s = base(o, 4, 10000);
  s.attack.kind = AttackKind::entangle_cnot;
  for (int k = 0; k <= 8; ++k) {
    const double theta = k * kPi / 16;
    s.theta = theta;
    const double cs = std::cos(theta) * std::sin(theta);
    const double want = o.expect.entangle_coefficient * cs * cs;
    const std::string at = "entangle θ=" + angle_label(k, 16);
    c.near(at + ": exact", want, harness::exact_round_statistics(s).qber_exact, 1e-10);
    c.near(at + ": oracle", want, harness::oracle_qber(AttackKind::entangle_cnot, theta), 1e-10);
    const harness::RoundEstimate mc = harness::estimate_round_qber(s);
    const double se = binomial_se(want, mc.qber.trials);
    c.near(at + ": Monte Carlo (3 SE)", want, mc.qber.value, 3 * se);
  }
  s.theta = kPi / 4;
  c.near("entangle θ=π/4", o.expect.entangle_peak, harness::exact_round_statistics(s).qber_exact, 1e-10);
  const harness::RunStats st = harness::run_scenario(s);
  c.near("entangle θ=π/4 session, rounds >= 2: qber", o.expect.entangle_peak, st.qber.value, 0.02);
  return c.take();
}

CriterionResult check_rotation_necessity(const VerifyOptions& o) {
  Collector c(5, "rotation necessity");
  Scenario s = base(o, 5, 10000);
  s.theta = 0.0;
  s.attack.kind = AttackKind::entangle_cnot;
  const harness::RunStats st = harness::run_scenario(s);
  c.add("entangle θ=0: Bob qber", "0.000 exactly", fixed3(st.qber.value), st.qber.value == 0.0);
  c.at_least("entangle θ=0: Eve accuracy, rounds >= 2", o.expect.eve_accuracy_without_rotation,
             st.eve_accuracy.value);
  c.add("entangle θ=0: verdict", "pass", protocol::to_string(st.verdict), st.verdict == protocol::Verdict::pass);
  return c.take();
}

CriterionResult check_general_attack(const VerifyOptions& o) {
  Collector c(6, "general-attack indistinguishability");
  const std::uint64_t seed = o.seed + 6000;
  {
    RandomStream rng = RandomStream::derive(seed, 1, 0);
    const auto report = adversary::verify_no_perfect_attack(200, adversary::EveSetup{kPi / 4, std::nullopt}, rng);
    c.below("200 Haar unitaries θ=π/4: max conditional trace distance", 1e-9, report.max_trace_distance);
    c.below("200 Haar unitaries θ=π/4: max exact guess advantage", 1e-9, report.max_exact_advantage);
  }
  {
    RandomStream rng = RandomStream::derive(seed, 1, 1);
    const auto report = adversary::verify_no_perfect_attack(
        200, adversary::EveSetup{kPi / 4, adversary::random_prior_states(seed + 1)}, rng);
    c.below("200 Haar unitaries, prior entanglement: max conditional trace distance", 1e-9,
            report.max_trace_distance);
  }
  for (bool prior : {false, true}) {
    Scenario s = base(o, 6, 10000);
    s.attack.kind = AttackKind::general_unitary;
    s.attack.unitary_seed = seed + 2;
    s.attack.prior_entanglement = prior;
    s.attack.prior_seed = seed + 3;
    const harness::RunStats st = harness::run_scenario(s);
    c.below(std::string(prior ? "general unitary with prior entanglement" : "general unitary") +
                " 10^4 rounds: Eve mutual information (bits)",
            o.expect.max_eve_information, st.eve_mutual_info_bits);
  }
  return c.take();
}

CriterionResult check_noise(const VerifyOptions& o) {
  Collector c(7, "noise classification");
  using channels::Pauli;
  const DensityMatrix phi_plus = to_density(epr_phi_plus(protocol::kKeyA, protocol::kKeyB));
  const DensityMatrix phi_minus = to_density(epr_phi_minus(protocol::kKeyA, protocol::kKeyB));
  struct Row {
    Pauli p;
    bool flips;
    bool to_phi_minus;
  };
  for (const Row row : {Row{Pauli::sigma1, true, false}, Row{Pauli::sigma2, true, true},
                        Row{Pauli::sigma3, false, true}}) {
    const channels::ForcedPauli forced(row.p);
    const std::string name(channels::to_string(row.p));
    const std::string want = std::string(row.flips ? "flip" : "no flip") + ", key " +
                             (row.to_phi_minus ? "Φ-" : "Φ+");
    bool ok = true;
    std::string got;
    for (int bit : {0, 1}) {
      protocol::Session session(kPi / 4, o.seed + 7000 + static_cast<std::uint64_t>(bit), forced);
      const auto r = session.transmit(bit);
      const bool flipped = r.received_bit != r.sent_bit;
      const DensityMatrix key = key_pair(session.key());
      const bool minus = fidelity(key, phi_minus) > 1.0 - 1e-10;
      const bool plus = fidelity(key, phi_plus) > 1.0 - 1e-10;
      ok = ok && flipped == row.flips && (row.to_phi_minus ? minus : plus);
      if (bit == 0) {
        got = std::string(flipped ? "flip" : "no flip") + ", key " + (minus ? "Φ-" : plus ? "Φ+" : "other");
      }
    }
    const protocol::ExactRound exact = protocol::exact_round(phi_plus, kPi / 4, forced);
    const DensityMatrix key_after = partial_trace(exact.key_after, {protocol::kKeyA, protocol::kKeyB});
    ok = ok && std::abs(exact.error_probability - (row.flips ? 1.0 : 0.0)) < 1e-10 &&
         fidelity(key_after, row.to_phi_minus ? phi_minus : phi_plus) > 1.0 - 1e-10;
    c.add("forced " + name + " transit", want, got, ok);
  }
  Scenario s = base(o, 7, 10000);
  const double p1 = 0.03, p2 = 0.02, p3 = 0.05;
  s.noise = channels::PauliChannel(p1, p2, p3);
  const double want = p1 + p2;
  c.near("Pauli channel (0.03, 0.02, 0.05): exact qber", want, harness::exact_round_statistics(s).qber_exact, 1e-10);
  const auto oracle = harness::scenario_oracle_qber(s);
  c.near("Pauli channel: oracle qber", want, oracle ? *oracle : -1.0, 1e-10);
  const harness::RoundEstimate mc = harness::estimate_round_qber(s);
  c.near("Pauli channel: Monte Carlo (3 SE)", want, mc.qber.value, 3 * binomial_se(want, mc.qber.trials));
  return c.take();
}

CriterionResult check_degradation(const VerifyOptions& o) {
  Collector c(8, "degraded-key bounds");
  const DensityMatrix phi_plus = to_density(epr_phi_plus(protocol::kKeyA, protocol::kKeyB));
  for (double eps : {0.01, 0.04, 0.09}) {
    double max_td_ratio = 0.0;
    double min_fid_margin = 1.0;
    double max_fail_margin = -1.0;
    for (int i = 0; i < 50; ++i) {
      Scenario s = base(o, 8, 1);
      s.key.epsilon = eps;
      s.key.contaminant = harness::Contaminant::random;
      s.key.contaminant_seed = o.seed + 8000 + static_cast<std::uint64_t>(i);
      const DensityMatrix rho = channels::degrade_key(s.key.model());
      max_td_ratio = std::max(max_td_ratio, trace_distance(rho, phi_plus) / (2 * std::sqrt(eps)));
      min_fid_margin = std::min(min_fid_margin, fidelity(rho, phi_plus) - (1.0 - eps));
      max_fail_margin = std::max(max_fail_margin, harness::exact_round_statistics(s).qber_exact - eps);
    }
    char at[48];
    std::snprintf(at, sizeof at, "ε=%.2f, 50 random ρ1: ", eps);
    c.at_most(std::string(at) + "max trace distance / 2√ε", 1.0, max_td_ratio);
    c.at_least(std::string(at) + "min fidelity - (1-ε)", 0.0, min_fid_margin);
    c.at_most(std::string(at) + "max failure probability - ε", 1e-12, max_fail_margin);
  }
  Scenario worst = base(o, 8, 1);
  worst.key.epsilon = 0.09;
  worst.key.contaminant = harness::Contaminant::phi_minus;
  c.near("ε=0.09, ρ1=Φ-: failure probability meets the bound", 0.09,
         harness::exact_round_statistics(worst).qber_exact, 1e-10);
  return c.take();
}

CriterionResult check_repetition(const VerifyOptions& o) {
  Collector c(9, "repetition code");
  c.near("n=3, p1=0.1: binomial logical error rate", o.expect.repetition_rate,
         harness::repetition_failure_probability(0.1, 3), 1e-12);
  Scenario s = base(o, 9, 10000);
  s.repetition_n = 3;
  s.noise = channels::PauliChannel(0.1, 0.0, 0.0);
  const harness::RunStats st = harness::run_scenario(s);
  c.near("n=3, p1=0.1, 10^4 logical bits: logical error rate (3 SE)", o.expect.repetition_rate, st.qber.value,
         3 * binomial_se(o.expect.repetition_rate, st.qber.trials));
  s.repetition_n = 1;
  s.noise = channels::PauliChannel(0.1, 0.0, 0.0);
  const harness::RunStats raw = harness::run_scenario(s);
  c.near("n=1, p1=0.1: logical rate equals raw rate (3 SE)", 0.1, raw.qber.value,
         3 * binomial_se(0.1, raw.qber.trials));
  return c.take();
}

std::string stats_fingerprint(const harness::RunStats& st) {
  RunReport r;
  r.stats = st;
  std::ostringstream out;
  write_run(out, r, Format::csv);
  return out.str();
}

CriterionResult check_determinism(const VerifyOptions& o) {
  Collector c(10, "determinism");
  Scenario s = base(o, 10, 2000);
  s.attack.kind = AttackKind::general_unitary;
  s.attack.unitary_seed = 5;
  s.noise = channels::PauliChannel(0.02, 0.01, 0.01);
  const bool same_run = stats_fingerprint(harness::run_scenario(s)) == stats_fingerprint(harness::run_scenario(s));
  c.add("repeated session from one seed", "identical", same_run ? "identical" : "different", same_run);

  s.threads = 1;
  const harness::RoundEstimate one = harness::estimate_round_qber(s);
  s.threads = 4;
  const harness::RoundEstimate four = harness::estimate_round_qber(s);
  const bool same_parallel = one.qber.successes == four.qber.successes &&
                             one.eve_accuracy.successes == four.eve_accuracy.successes &&
                             one.eve_mutual_info_bits == four.eve_mutual_info_bits;
  c.add("per-round estimate with 1 and 4 threads", "identical", same_parallel ? "identical" : "different",
        same_parallel);
  return c.take();
}

}  // namespace

bool CriterionResult::pass() const {
  if (claims.empty()) return false;
  for (const auto& c : claims) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<CriterionResult> run_claims(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(check_correctness(options));
  out.push_back(check_carrier_secrecy(options));
  out.push_back(check_intercept(options));
  out.push_back(check_entangle(options));
  out.push_back(check_rotation_necessity(options));
  out.push_back(check_general_attack(options));
  out.push_back(check_noise(options));
  out.push_back(check_degradation(options));
  out.push_back(check_repetition(options));
  out.push_back(check_determinism(options));
  return out;
}

std::string format_claim(const Claim& c) {
  return "C" + std::to_string(c.criterion) + " " + c.label + ": expected " + c.expected + " got " + c.got +
         (c.pass ? " PASS" : " FAIL");
}

std::string format_criterion(const CriterionResult& r) {
  int passed = 0;
  for (const auto& c : r.claims) passed += c.pass;
  return "criterion " + std::to_string(r.number) + " (" + r.title + "): " + (r.pass() ? "PASS" : "FAIL") + " (" +
         std::to_string(passed) + "/" + std::to_string(r.claims.size()) + " claims)";
}

std::string render_verify(const std::vector<CriterionResult>& results) {
  std::string out;
  bool all = !results.empty();
  for (const auto& r : results) {
    for (const auto& c : r.claims) out += format_claim(c) + "\n";
  }
  out += "\n";
  for (const auto& r : results) {
    out += format_criterion(r) + "\n";
    all = all && r.pass();
  }
  out += all ? "verify: PASS\n" : "verify: FAIL\n";
  return out;
}

}  // namespace cqkd::cli
