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

// Acceptance suite: every criterion at its stated tolerance, one line each.
//
// The claim suite runs twice. Criterion 10 additionally requires the two
// rendered reports to be byte-identical and the whole suite to finish in
// under five minutes.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "cqkd/cli.h"

int main() {
  using cqkd::cli::render_verify;
  using cqkd::cli::run_claims;
  const auto start = std::chrono::steady_clock::now();
  const auto first = run_claims();
  const auto second = run_claims();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool identical = render_verify(first) == render_verify(second);
  const bool in_time = seconds < 300.0;

  std::cout << render_verify(first) << "\n";
  bool all = true;
  for (const auto& r : first) {
    bool pass = r.pass();
    std::string extra;
    if (r.number == 10) {
      pass = pass && identical && in_time;
      extra = std::string("; repeated report ") + (identical ? "identical" : "DIFFERS") + "; suite " +
              (in_time ? "under" : "OVER") + " 5 min";
    }
    all = all && pass;
    std::printf("acceptance %2d %-40s %s (%zu claims%s)\n", r.number, r.title.c_str(), pass ? "PASS" : "FAIL",
                r.claims.size(), extra.c_str());
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
