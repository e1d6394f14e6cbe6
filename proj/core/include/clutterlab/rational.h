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

#ifndef CLUTTERLAB_RATIONAL_H_
#define CLUTTERLAB_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace clutterlab {

// Arbitrary-precision rational, always kept in lowest terms with a
// positive denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);
// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else or q == 0.
Rational ParseRational(std::string_view text);

bool IsInteger(const Rational& value);
mpz_class Floor(const Rational& value);

RationalVector ToRationalVector(const std::vector<int>& values);

}  // namespace clutterlab

#endif  // CLUTTERLAB_RATIONAL_H_
