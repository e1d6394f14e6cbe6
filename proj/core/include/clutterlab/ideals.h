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

// Monomial ideals as finite sets of exponent vectors: powers, symbolic powers
// of edge ideals, integral closures of powers, and bounded normality and
// normal torsion-freeness verdicts. All of it is lattice arithmetic and
// independent of the coefficient field.

#ifndef CLUTTERLAB_IDEALS_H_
#define CLUTTERLAB_IDEALS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clutterlab/polyhedra.h"
#include "clutterlab/structures.h"

namespace clutterlab {

using ExponentVector = std::vector<int>;

// Ideal generated by the monomials x^a, a in `generators`. Stored with a
// minimal generating set (no generator divides another) in lexicographic
// order. The empty list is the zero ideal; the zero vector (unit ideal) is
// rejected.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int num_variables, std::vector<ExponentVector> generators);

  int num_variables() const { return num_variables_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  // Matrix whose columns are the generators. Requires a nonzero ideal.
  IncidenceMatrix Matrix() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int num_variables_ = 0;
  std::vector<ExponentVector> generators_;
};

// Componentwise a >= b.
bool Dominates(std::span<const int> a, std::span<const int> b);

// Minimal elements of a finite set of exponent vectors, sorted.
std::vector<ExponentVector> MinimalElements(std::vector<ExponentVector> vectors);

// Squarefree generators, one per edge.
MonomialIdeal EdgeIdeal(const Clutter& clutter);

MonomialIdeal Power(const MonomialIdeal& ideal, int i);

// x^a in I.
bool Membership(const MonomialIdeal& ideal, std::span<const int> a);

// x^a in I^i without expanding I^i: a search over multisets of i
// generators whose sum a dominates.
bool PowerMembershipBySearch(const MonomialIdeal& ideal, std::span<const int> a,
                             int i);
// Both routes (search and Membership(Power(I, i), a)), asserted equal.
bool PowerMembership(const MonomialIdeal& ideal, std::span<const int> a, int i);

// Largest j <= cap with x^a in I^j (0 if x^a is not in I).
int MaxPowerContaining(const MonomialIdeal& ideal, std::span<const int> a,
                       int cap);

// x^a in I^(i): sum_{j in C} a_j >= i for every minimal vertex cover C.
bool SymbolicPowerMembership(const Clutter& clutter, std::span<const int> a,
                             int i);
// Same with precomputed minimal vertex covers.
bool SymbolicPowerMembership(const std::vector<VertexSet>& covers,
                             std::span<const int> a, int i);

// Minimal generators of I^(i): minimal lattice points of
// {a in {0..i}^n : sum_{j in C} a_j >= i for every minimal cover C}.
MonomialIdeal SymbolicPower(const Clutter& clutter, int i);
MonomialIdeal SymbolicPower(const Clutter& clutter,
                            const std::vector<VertexSet>& covers, int i);

// x^a in the integral closure of I^k: exists lambda >= 0 with
// sum(lambda) = k and a >= A lambda (exact LP feasibility).
bool IntegralClosureMembership(const MonomialIdeal& ideal,
                               std::span<const int> a, int k);

// Minimal generators of the integral closure of I^k.
MonomialIdeal IntegralClosureOfPower(const MonomialIdeal& ideal, int k);

enum class VerdictKind { kNormalUpTo, kNotNormal, kNtfUpTo, kNotNtf };

std::string ToString(VerdictKind kind);

struct NormalityVerdict {
  VerdictKind kind = VerdictKind::kNormalUpTo;
  // The bound checked (positive verdicts hold for every power <= bound).
  int bound = 1;
  // Negative verdicts only: the power where containment fails and an
  // exponent vector in the larger ideal but not in the smaller one.
  std::optional<int> failing_power;
  std::optional<ExponentVector> witness;
  std::string explanation;
  // Certificates for the witness, so the verdict can be re-checked by hand.
  //   not-normal: lambda with sum k and A lambda <= witness, and
  //     max_ordinary_power < k.
  //   not-ntf: min_cover_degree = min over minimal covers C of
  //     sum_{j in C} witness_j (>= failing power) and max_ordinary_power.
  RationalVector closure_lambda;
  std::optional<int> min_cover_degree;
  std::optional<int> max_ordinary_power;

  bool positive() const {
    return kind == VerdictKind::kNormalUpTo || kind == VerdictKind::kNtfUpTo;
  }
};

// Normality up to kmax by two independent routes, asserted to agree on the
// verdict and on the first failing power:
//   direct:  every minimal lattice point of kB(Q) lies in I^k, k <= kmax;
//   blocker: minimal integer vectors of B(Q) are columns of A and B(Q) has
//            the integer decomposition property up to kmax.
// The witness is the lexicographically least offending point at the
// smallest failing k.
NormalityVerdict IsNormalUpTo(const MonomialIdeal& ideal, int kmax);

// Each route on its own (the same witness conventions).
NormalityVerdict NormalityByDirectContainment(const MonomialIdeal& ideal,
                                              int kmax);
NormalityVerdict NormalityByBlocker(const MonomialIdeal& ideal, int kmax);

// I^i == I^(i) for i <= imax, comparing each minimal generator of I^(i)
// with I^i. Both directions are checked; I^i ⊆ I^(i) is asserted.
NormalityVerdict IsNtfUpTo(const Clutter& clutter, int imax);

}  // namespace clutterlab

#endif  // CLUTTERLAB_IDEALS_H_
