// Copyright 2026 The Clutterlab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clutterlab/rational.h"

#include <cctype>
#include <string>

#include "clutterlab/errors.h"

namespace clutterlab {
namespace {

bool IsIntegerLiteral(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string ToString(const Rational& value) {
  Rational reduced(value);
  reduced.canonicalize();
  return reduced.get_str();
}

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view numerator = text.substr(0, slash);
  const std::string_view denominator =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsIntegerLiteral(numerator) || !IsIntegerLiteral(denominator) ||
      denominator.front() == '-' || denominator.front() == '+') {
    throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
  }
  std::string num(numerator);
  if (num.front() == '+') num.erase(0, 1);
  const mpz_class p(num, 10);
  const mpz_class q(std::string(denominator), 10);
  if (q == 0) throw InvalidInput("rational with zero denominator");
  Rational value(p, q);
  value.canonicalize();
  return value;
}

bool IsInteger(const Rational& value) {
  return mpz_divisible_p(value.get_num_mpz_t(), value.get_den_mpz_t()) != 0;
}

mpz_class Floor(const Rational& value) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

RationalVector ToRationalVector(const std::vector<int>& values) {
  RationalVector out;
  out.reserve(values.size());
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace clutterlab
