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

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cqkd/cli.h"

namespace cqkd::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool parse_real(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("invalid angle '" + std::string(text) + "'");
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string_view s = trim(text);
  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) {
    double v = 0.0;
    if (!parse_real(s, v)) bad(text);
    return v;
  }

  std::string_view coef = s.substr(0, pi_at);
  std::string_view rest = s.substr(pi_at + 2);
  if (!coef.empty() && coef.back() == '*') {
    coef.remove_suffix(1);
    if (coef.empty()) bad(text);
  }
  double c = 1.0;
  if (coef == "-") {
    c = -1.0;
  } else if (!coef.empty() && coef != "+") {
    if (!parse_real(coef, c)) bad(text);
  }
  double d = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') bad(text);
    if (!parse_real(rest.substr(1), d) || d == 0.0) bad(text);
  }
  return c * kPi / d;
}

}  // namespace cqkd::cli
