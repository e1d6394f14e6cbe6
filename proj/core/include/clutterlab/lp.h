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

// Exact two-phase tableau simplex over rationals, Bland's rule throughout.

#ifndef CLUTTERLAB_LP_H_
#define CLUTTERLAB_LP_H_

#include <vector>

#include "clutterlab/rational.h"

namespace clutterlab {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  RationalVector solution;
};

// maximize <objective, x>  subject to  constraints * x <= rhs,  x >= 0.
// `constraints` is row-major, one row per entry of `rhs`.
LpResult MaximizeLp(const std::vector<RationalVector>& constraints,
                    const RationalVector& rhs, const RationalVector& objective);

}  // namespace clutterlab

#endif  // CLUTTERLAB_LP_H_
