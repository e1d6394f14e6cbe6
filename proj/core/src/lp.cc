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

#include "clutterlab/lp.h"

#include <utility>
#include <vector>

#include "clutterlab/errors.h"

namespace clutterlab {
namespace {

// Dictionary layout: rows 0..m-1 are constraints, row m the objective,
// row m+1 the phase-one objective. Column n is the artificial variable
// (label -1), column n+1 the right-hand side.
class Tableau {
 public:
  Tableau(const std::vector<RationalVector>& a, const RationalVector& b,
          const RationalVector& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        basis_(m_),
        nonbasis_(n_ + 1),
        d_(m_ + 2, RationalVector(n_ + 2)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
      basis_[i] = n_ + i;
      d_[i][n_] = -1;
      d_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasis_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasis_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  LpResult Solve() {
    LpResult result;
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (d_[r][n_ + 1] < 0) {
      Pivot(r, n_);
      if (!Simplex(/*phase=*/1) || d_[m_ + 1][n_ + 1] < 0) {
        result.status = LpStatus::kInfeasible;
        return result;
      }
      // Drive the artificial variable out of the basis when it sits at 0.
      for (int i = 0; i < m_; ++i) {
        if (basis_[i] != -1) continue;
        int s = -1;
        for (int j = 0; j <= n_; ++j) {
          if (d_[i][j] != 0 && (s == -1 || nonbasis_[j] < nonbasis_[s])) s = j;
        }
        if (s != -1) Pivot(i, s);
      }
    }
    if (!Simplex(/*phase=*/2)) {
      result.status = LpStatus::kUnbounded;
      return result;
    }
    result.status = LpStatus::kOptimal;
    result.solution.assign(n_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= 0 && basis_[i] < n_) {
        result.solution[basis_[i]] = d_[i][n_ + 1];
      }
    }
    result.value = d_[m_][n_ + 1];
    return result;
  }

 private:
  void Pivot(int r, int s) {
    const Rational inv = 1 / d_[r][s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || d_[i][s] == 0) continue;
      const Rational factor = d_[i][s] * inv;
      for (int j = 0; j < n_ + 2; ++j) {
        if (j != s && d_[r][j] != 0) d_[i][j] -= d_[r][j] * factor;
      }
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) d_[r][j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) d_[i][s] *= -inv;
    }
    d_[r][s] = inv;
    std::swap(basis_[r], nonbasis_[s]);
  }

  // Bland's rule: smallest-label entering column with negative reduced
  // cost, smallest-label leaving row among ratio-test ties.
  bool Simplex(int phase) {
    const int x = phase == 1 ? m_ + 1 : m_;
    while (true) {
      CheckDeadline();
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (phase == 2 && nonbasis_[j] == -1) continue;
        if (d_[x][j] < 0 && (s == -1 || nonbasis_[j] < nonbasis_[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= 0) continue;
        Rational ratio = d_[i][n_ + 1] / d_[i][s];
        if (r == -1 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == -1) return false;
      Pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> basis_;
  std::vector<int> nonbasis_;
  std::vector<RationalVector> d_;
};

}  // namespace

LpResult MaximizeLp(const std::vector<RationalVector>& constraints,
                    const RationalVector& rhs, const RationalVector& objective) {
  Require(constraints.size() == rhs.size(),
          "lp: constraint rows and right-hand side differ in length");
  for (const auto& row : constraints) {
    Require(row.size() == objective.size(),
            "lp: constraint row length differs from objective length");
  }
  if (rhs.empty()) {
    LpResult result;
    for (const auto& c : objective) {
      if (c > 0) {
        result.status = LpStatus::kUnbounded;
        return result;
      }
    }
    result.status = LpStatus::kOptimal;
    result.value = 0;
    result.solution.assign(objective.size(), Rational(0));
    return result;
  }
  return Tableau(constraints, rhs, objective).Solve();
}

}  // namespace clutterlab
