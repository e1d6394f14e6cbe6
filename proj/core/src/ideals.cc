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

#include "clutterlab/ideals.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clutterlab/errors.h"
#include "clutterlab/packing.h"

namespace clutterlab {
namespace {

int Degree(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0); }

std::string Format(std::span<const int> a) {
  std::string out = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(a[i]);
  }
  return out + "]";
}

}  // namespace

bool Dominates(std::span<const int> a, std::span<const int> b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

std::vector<ExponentVector> MinimalElements(std::vector<ExponentVector> vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  // A divisor has degree at most that of its multiple, so visiting by
  // degree lets each vector be compared against kept ones only.
  std::vector<size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return Degree(vectors[x]) < Degree(vectors[y]);
  });
  std::vector<ExponentVector> kept;
  for (size_t idx : order) {
    CheckDeadline();
    const auto& v = vectors[idx];
    bool minimal = true;
    for (const auto& k : kept) {
      if (Dominates(v, k)) {
        minimal = false;
        break;
      }
    }
    if (minimal) kept.push_back(v);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// ---------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(int num_variables,
                             std::vector<ExponentVector> generators)
    : num_variables_(num_variables) {
  Require(num_variables >= 0, "ideal: negative variable count");
  for (const auto& g : generators) {
    Require(static_cast<int>(g.size()) == num_variables,
            "ideal: generator length differs from variable count");
    for (int e : g) Require(e >= 0, "ideal: negative exponent");
    Require(Degree(g) > 0, "ideal: unit ideal (zero exponent vector) not supported");
  }
  generators_ = MinimalElements(std::move(generators));
}

IncidenceMatrix MonomialIdeal::Matrix() const {
  Require(!is_zero(), "ideal: zero ideal has no generator matrix");
  return IncidenceMatrix(num_variables_, generators_);
}

MonomialIdeal EdgeIdeal(const Clutter& clutter) {
  std::vector<ExponentVector> generators;
  for (const auto& edge : clutter.edges()) {
    ExponentVector g(clutter.num_vertices(), 0);
    for (Vertex v : edge) g[v] = 1;
    generators.push_back(std::move(g));
  }
  return MonomialIdeal(clutter.num_vertices(), std::move(generators));
}

MonomialIdeal Power(const MonomialIdeal& ideal, int i) {
  Require(i >= 1, "power: exponent must be >= 1");
  std::vector<ExponentVector> current = ideal.generators();
  for (int step = 2; step <= i; ++step) {
    std::set<ExponentVector> products;
    for (const auto& g : current) {
      for (const auto& h : ideal.generators()) {
        ExponentVector sum(g.size());
        for (size_t t = 0; t < g.size(); ++t) sum[t] = g[t] + h[t];
        products.insert(std::move(sum));
      }
    }
    current = MinimalElements({products.begin(), products.end()});
  }
  return MonomialIdeal(ideal.num_variables(), std::move(current));
}

bool Membership(const MonomialIdeal& ideal, std::span<const int> a) {
  Require(static_cast<int>(a.size()) == ideal.num_variables(),
          "membership: exponent vector has wrong length");
  for (const auto& g : ideal.generators()) {
    if (Dominates(a, g)) return true;
  }
  return false;
}

namespace {

bool MultisetSearch(const std::vector<ExponentVector>& gens, size_t start,
                    std::vector<int>& residual, int remaining, int min_degree) {
  if (remaining == 0) return true;
  CheckDeadline();
  if (Degree(residual) < remaining * min_degree) return false;
  for (size_t j = start; j < gens.size(); ++j) {
    if (!Dominates(residual, gens[j])) continue;
    for (size_t t = 0; t < residual.size(); ++t) residual[t] -= gens[j][t];
    const bool found = MultisetSearch(gens, j, residual, remaining - 1, min_degree);
    for (size_t t = 0; t < residual.size(); ++t) residual[t] += gens[j][t];
    if (found) return true;
  }
  return false;
}

}  // namespace

bool PowerMembershipBySearch(const MonomialIdeal& ideal, std::span<const int> a,
                             int i) {
  Require(i >= 1, "power membership: exponent must be >= 1");
  Require(static_cast<int>(a.size()) == ideal.num_variables(),
          "power membership: exponent vector has wrong length");
  if (ideal.is_zero()) return false;
  int min_degree = std::numeric_limits<int>::max();
  for (const auto& g : ideal.generators()) min_degree = std::min(min_degree, Degree(g));
  std::vector<int> residual(a.begin(), a.end());
  return MultisetSearch(ideal.generators(), 0, residual, i, min_degree);
}

bool PowerMembership(const MonomialIdeal& ideal, std::span<const int> a, int i) {
  const bool by_search = PowerMembershipBySearch(ideal, a, i);
  const bool by_expansion = Membership(Power(ideal, i), a);
  Ensure(by_search == by_expansion,
         "power membership: multiset search and expansion disagree on " +
             Format(a));
  return by_search;
}

int MaxPowerContaining(const MonomialIdeal& ideal, std::span<const int> a,
                       int cap) {
  int j = 0;
  while (j < cap && PowerMembershipBySearch(ideal, a, j + 1)) ++j;
  return j;
}

// ------------------------------------------------------- Symbolic powers

bool SymbolicPowerMembership(const std::vector<VertexSet>& covers,
                             std::span<const int> a, int i) {
  Require(i >= 1, "symbolic power: exponent must be >= 1");
  for (const auto& cover : covers) {
    int degree = 0;
    for (Vertex v : cover) degree += a[v];
    if (degree < i) return false;
  }
  return true;
}

bool SymbolicPowerMembership(const Clutter& clutter, std::span<const int> a,
                             int i) {
  Require(static_cast<int>(a.size()) == clutter.num_vertices(),
          "symbolic power: exponent vector has wrong length");
  return SymbolicPowerMembership(MinimalVertexCovers(clutter), a, i);
}

MonomialIdeal SymbolicPower(const Clutter& clutter, int i) {
  return SymbolicPower(clutter, MinimalVertexCovers(clutter), i);
}

MonomialIdeal SymbolicPower(const Clutter& clutter,
                            const std::vector<VertexSet>& covers, int i) {
  Require(i >= 1, "symbolic power: exponent must be >= 1");
  const int n = clutter.num_vertices();
  std::uint64_t box = 1;
  for (int t = 0; t < n; ++t) {
    box *= static_cast<std::uint64_t>(i + 1);
    if (box > kDefaultBoxLimit) {
      throw ResourceExhausted("symbolic power: box {0.." + std::to_string(i) +
                              "}^" + std::to_string(n) + " too large");
    }
  }
  std::vector<ExponentVector> generators;
  ExponentVector a(n, 0);
  while (true) {
    CheckDeadline();
    if (SymbolicPowerMembership(covers, a, i)) {
      bool minimal = true;
      for (int t = 0; t < n && minimal; ++t) {
        if (a[t] == 0) continue;
        --a[t];
        minimal = !SymbolicPowerMembership(covers, a, i);
        ++a[t];
      }
      if (minimal) generators.push_back(a);
    }
    int t = n - 1;
    while (t >= 0 && a[t] == i) a[t--] = 0;
    if (t < 0) break;
    ++a[t];
  }
  return MonomialIdeal(n, std::move(generators));
}

// ---------------------------------------------------- Integral closure

bool IntegralClosureMembership(const MonomialIdeal& ideal,
                               std::span<const int> a, int k) {
  Require(k >= 1, "integral closure: k must be >= 1");
  Require(static_cast<int>(a.size()) == ideal.num_variables(),
          "integral closure: exponent vector has wrong length");
  for (int v : a) {
    if (v < 0) return false;
  }
  if (ideal.is_zero()) return false;
  const RationalVector z = ToRationalVector({a.begin(), a.end()});
  return ConvexCombinationWitness(ideal.Matrix(), z, Rational(k)).has_value();
}

MonomialIdeal IntegralClosureOfPower(const MonomialIdeal& ideal, int k) {
  Require(k >= 1, "integral closure: k must be >= 1");
  if (ideal.is_zero()) return ideal;
  return MonomialIdeal(ideal.num_variables(),
                       LatticePointsScaled(ideal.Matrix(), k).minimal);
}

// ---------------------------------------------------------- Verdicts

std::string ToString(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kNormalUpTo:
      return "normal-up-to";
    case VerdictKind::kNotNormal:
      return "not-normal";
    case VerdictKind::kNtfUpTo:
      return "ntf-up-to";
    case VerdictKind::kNotNtf:
      return "not-ntf";
  }
  return "unknown";
}

namespace {

NormalityVerdict NotNormal(const MonomialIdeal& ideal, int kmax, int k,
                           const ExponentVector& witness) {
  NormalityVerdict verdict;
  verdict.kind = VerdictKind::kNotNormal;
  verdict.bound = kmax;
  verdict.failing_power = k;
  verdict.witness = witness;
  auto lambda = ConvexCombinationWitness(ideal.Matrix(),
                                         ToRationalVector(witness), Rational(k));
  Ensure(lambda.has_value(),
         "normality: witness " + Format(witness) +
             " is not in the integral closure by the LP route");
  verdict.closure_lambda = std::move(*lambda);
  verdict.max_ordinary_power = MaxPowerContaining(ideal, witness, k);
  Ensure(*verdict.max_ordinary_power < k,
         "normality: witness " + Format(witness) + " lies in the power");
  verdict.explanation = "x^" + Format(witness) + " lies in the integral closure of I^" +
                        std::to_string(k) + " but not in I^" + std::to_string(k);
  return verdict;
}

NormalityVerdict Normal(int kmax) {
  NormalityVerdict verdict;
  verdict.kind = VerdictKind::kNormalUpTo;
  verdict.bound = kmax;
  verdict.explanation = "I^k equals its integral closure for every k <= " +
                        std::to_string(kmax);
  return verdict;
}

}  // namespace

NormalityVerdict NormalityByDirectContainment(const MonomialIdeal& ideal,
                                              int kmax) {
  Require(kmax >= 1, "normality: kmax must be >= 1");
  if (ideal.is_zero()) return Normal(kmax);
  const BlockingPolyhedron blocker(ideal.Matrix());
  for (int k = 1; k <= kmax; ++k) {
    for (const auto& point : LatticePointsScaled(blocker, k).minimal) {
      if (!PowerMembershipBySearch(ideal, point, k)) {
        return NotNormal(ideal, kmax, k, point);
      }
    }
  }
  return Normal(kmax);
}

NormalityVerdict NormalityByBlocker(const MonomialIdeal& ideal, int kmax) {
  Require(kmax >= 1, "normality: kmax must be >= 1");
  if (ideal.is_zero()) return Normal(kmax);
  const BlockingPolyhedron blocker(ideal.Matrix());
  for (const auto& m : MinimalIntegerVectors(blocker)) {
    if (!std::binary_search(ideal.generators().begin(), ideal.generators().end(), m)) {
      return NotNormal(ideal, kmax, 1, m);
    }
  }
  if (kmax >= 2) {
    const IdpCertificate idp = IntegerDecompositionCheck(blocker, kmax);
    if (!idp.holds) return NotNormal(ideal, kmax, *idp.failing_k, *idp.counterexample);
  }
  return Normal(kmax);
}

NormalityVerdict IsNormalUpTo(const MonomialIdeal& ideal, int kmax) {
  NormalityVerdict direct = NormalityByDirectContainment(ideal, kmax);
  const NormalityVerdict blocker = NormalityByBlocker(ideal, kmax);
  Ensure(direct.kind == blocker.kind && direct.failing_power == blocker.failing_power &&
             direct.witness == blocker.witness,
         "normality: direct containment and blocker/IDP routes disagree");
  return direct;
}

NormalityVerdict IsNtfUpTo(const Clutter& clutter, int imax) {
  Require(imax >= 1, "ntf: imax must be >= 1");
  NormalityVerdict verdict;
  verdict.bound = imax;
  const MonomialIdeal ideal = EdgeIdeal(clutter);
  if (ideal.is_zero()) {
    verdict.kind = VerdictKind::kNtfUpTo;
    verdict.explanation = "zero ideal";
    return verdict;
  }
  const std::vector<VertexSet> covers = MinimalVertexCovers(clutter);
  for (int i = 1; i <= imax; ++i) {
    const MonomialIdeal ordinary = Power(ideal, i);
    for (const auto& g : ordinary.generators()) {
      Ensure(SymbolicPowerMembership(covers, g, i),
             "ntf: generator " + Format(g) + " of I^" + std::to_string(i) +
                 " is not in the symbolic power");
    }
    const MonomialIdeal symbolic = SymbolicPower(clutter, covers, i);
    for (const auto& g : symbolic.generators()) {
      if (PowerMembershipBySearch(ideal, g, i)) continue;
      verdict.kind = VerdictKind::kNotNtf;
      verdict.failing_power = i;
      verdict.witness = g;
      int degree = std::numeric_limits<int>::max();
      for (const auto& cover : covers) {
        int d = 0;
        for (Vertex v : cover) d += g[v];
        degree = std::min(degree, d);
      }
      verdict.min_cover_degree = degree;
      verdict.max_ordinary_power = MaxPowerContaining(ideal, g, i);
      verdict.explanation = "x^" + Format(g) + " lies in I^(" + std::to_string(i) +
                            ") but not in I^" + std::to_string(i);
      return verdict;
    }
  }
  verdict.kind = VerdictKind::kNtfUpTo;
  verdict.explanation =
      "I^i equals I^(i) for every i <= " + std::to_string(imax);
  return verdict;
}

}  // namespace clutterlab
