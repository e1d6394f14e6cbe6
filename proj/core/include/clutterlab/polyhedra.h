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

// Exact-rational polyhedra attached to a non-negative integer matrix A with
// columns v_1..v_q:
//
//   Q(A) = {x >= 0 : <x, v_j> >= 1 for all j}       (covering polyhedron)
//   B(Q) = {z >= 0 : <z, x> >= 1 for all x in Q}    (blocking polyhedron)
//        = R_+^n + conv(v_1, ..., v_q)
//
// Lattice points of kB(Q) are the exponents of the integral closure of the
// k-th power of the ideal generated by x^{v_j}. Everything here is exact;
// no floating point is used.

#ifndef CLUTTERLAB_POLYHEDRA_H_
#define CLUTTERLAB_POLYHEDRA_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clutterlab/lp.h"
#include "clutterlab/rational.h"
#include "clutterlab/structures.h"

namespace clutterlab {

using LatticePoint = std::vector<int>;

// n x q matrix of naturals stored by columns. No column may be zero.
class IncidenceMatrix {
 public:
  IncidenceMatrix(int num_rows, std::vector<std::vector<int>> columns);
  // Columns are the characteristic vectors of the edges, in edge order.
  // Requires at least one edge.
  static IncidenceMatrix OfClutter(const Clutter& clutter);

  int num_rows() const { return num_rows_; }
  int num_columns() const { return static_cast<int>(columns_.size()); }
  const std::vector<std::vector<int>>& columns() const { return columns_; }
  const std::vector<int>& column(int j) const { return columns_[j]; }
  int at(int row, int col) const { return columns_[col][row]; }
  // max_j A[row][j].
  int RowMax(int row) const;

  friend bool operator==(const IncidenceMatrix&,
                         const IncidenceMatrix&) = default;

 private:
  int num_rows_;
  std::vector<std::vector<int>> columns_;
};

// {x in R^d : x >= 0, rows * x >= rhs}.
class RationalPolyhedron {
 public:
  RationalPolyhedron(int dimension, std::vector<RationalVector> rows,
                     RationalVector rhs);

  int dimension() const { return dimension_; }
  const std::vector<RationalVector>& rows() const { return rows_; }
  const RationalVector& rhs() const { return rhs_; }
  bool Contains(std::span<const Rational> x) const;

 private:
  int dimension_;
  std::vector<RationalVector> rows_;
  RationalVector rhs_;
};

// Q(A): one row <x, v_j> >= 1 per column of A.
RationalPolyhedron CoveringPolyhedron(const IncidenceMatrix& a);

// Upper bound on the number of candidate bases Vertices() will examine.
inline constexpr std::uint64_t kDefaultBasisLimit = 20'000'000;

// All vertices, sorted lexicographically. Enumerates every choice of
// `dimension` tight constraints (coordinates fixed at zero plus rows of the
// system), solves it exactly and keeps the feasible solutions. Throws
// ResourceExhausted when binomial(dimension + rows, dimension) exceeds
// `basis_limit`.
std::vector<RationalVector> Vertices(const RationalPolyhedron& p,
                                     std::uint64_t basis_limit = kDefaultBasisLimit);

bool IsIntegral(const RationalPolyhedron& p,
                std::uint64_t basis_limit = kDefaultBasisLimit);

// z in B(Q) decided by convex-combination feasibility:
// exists lambda >= 0 with sum(lambda) = 1 and A lambda <= z.
bool BlockingMembershipByConvexCombination(const IncidenceMatrix& a,
                                           std::span<const Rational> z);

// Exact feasibility of {lambda >= 0, sum(lambda) = scale, A lambda <= z};
// returns a witness lambda when feasible.
std::optional<RationalVector> ConvexCombinationWitness(
    const IncidenceMatrix& a, std::span<const Rational> z, const Rational& scale);

// B(Q) together with the vertices of Q(A), computed once.
class BlockingPolyhedron {
 public:
  explicit BlockingPolyhedron(IncidenceMatrix a,
                              std::uint64_t basis_limit = kDefaultBasisLimit);

  const IncidenceMatrix& matrix() const { return a_; }
  int dimension() const { return a_.num_rows(); }
  const std::vector<RationalVector>& covering_vertices() const {
    return vertices_;
  }

  // z in B(Q) decided by <z, l> >= 1 on every vertex l of Q(A).
  bool Contains(std::span<const Rational> z) const;
  // Integer a in kB(Q), i.e. <a, l> >= k on every vertex l.
  bool ContainsScaled(std::span<const int> a, int k) const;
  // min over vertices l of <a, l>; the largest k with a in kB(Q) is its
  // floor.
  Rational MinVertexPairing(std::span<const int> a) const;

  // Coordinate caps k * max_j A[i][j].
  std::vector<int> Box(int k) const;

 private:
  IncidenceMatrix a_;
  std::vector<RationalVector> vertices_;
  // Vertices over a common denominator, for fast integer pairing.
  std::vector<std::vector<std::int64_t>> scaled_vertices_;
  std::int64_t denominator_ = 1;
};

// Both blocker-membership routes, asserted equal.
bool BlockingMembership(const IncidenceMatrix& a, std::span<const Rational> z);

// Upper bound on box sizes scanned for lattice points.
inline constexpr std::uint64_t kDefaultBoxLimit = 5'000'000;

struct LatticeScan {
  int k = 1;
  // Coordinate i ranges over [0, box[i]], box[i] = k * max_j A[i][j]. Each
  // minimal lattice point a of kB(Q) witnesses a >= y for some y in
  // k conv(v_1..v_q), and minimality forces a_i = ceil(y_i) <= box[i].
  std::vector<int> box;
  // All lattice points of kB(Q) inside the box, lexicographic order.
  std::vector<LatticePoint> points;
  // The componentwise-minimal ones, lexicographic order.
  std::vector<LatticePoint> minimal;
};

LatticeScan LatticePointsScaled(const BlockingPolyhedron& blocker, int k,
                                std::uint64_t box_limit = kDefaultBoxLimit);
LatticeScan LatticePointsScaled(const IncidenceMatrix& a, int k,
                                std::uint64_t box_limit = kDefaultBoxLimit);

// Minimal lattice points of B(Q) under the componentwise order.
std::vector<LatticePoint> MinimalIntegerVectors(const BlockingPolyhedron& blocker);
std::vector<LatticePoint> MinimalIntegerVectors(const IncidenceMatrix& a);

// Writes a lattice point of kB(Q) as a sum of k lattice points of B(Q).
// nullopt when no decomposition exists. Precondition: a in kB(Q).
std::optional<std::vector<LatticePoint>> DecomposeLatticePoint(
    const BlockingPolyhedron& blocker, std::span<const int> a, int k);

struct IdpCertificate {
  bool holds = true;
  int kmax = 2;
  // Box lattice points examined per k = 1..kmax (index k-1).
  std::vector<std::uint64_t> points_checked;
  // Set on failure: a lattice point of kB(Q) with no decomposition.
  std::optional<int> failing_k;
  std::optional<LatticePoint> counterexample;
  // On success: the decomposition of the last point examined at kmax.
  LatticePoint sample_point;
  std::vector<LatticePoint> sample_decomposition;
};

// Integer decomposition property of B(Q), checked for k = 2..kmax over
// every box lattice point of kB(Q). Requires kmax >= 2.
IdpCertificate IntegerDecompositionCheck(const BlockingPolyhedron& blocker,
                                         int kmax,
                                         std::uint64_t box_limit = kDefaultBoxLimit);
IdpCertificate IntegerDecompositionCheck(const IncidenceMatrix& a, int kmax,
                                         std::uint64_t box_limit = kDefaultBoxLimit);

struct RoundingEntry {
  std::vector<int> w;
  LpStatus status = LpStatus::kOptimal;
  Rational lp_max;
  mpz_class lp_floor;
  int ilp_max = 0;
  bool holds = true;
};

struct RoundingCertificate {
  bool holds = true;
  std::vector<RoundingEntry> entries;
  // Index into `entries` of the first failing w.
  std::optional<size_t> first_failure;
};

// LP max{<y,1> : y >= 0, Ay <= w} by exact simplex.
LpResult PackingLp(const IncidenceMatrix& a, std::span<const int> w);
// Integer max of the same program by bounded enumeration; each y_j is
// capped at min_i floor(w_i / A[i][j]) <= max_i w_i.
// Stops early once `ceiling` is reached when it is known (e.g. the LP floor).
int PackingIlp(const IncidenceMatrix& a, std::span<const int> w,
               std::optional<int> ceiling = std::nullopt);

// Integer rounding property of {x >= 0, xA >= 1} over the supplied w's:
// ILP max == floor(LP max) for each. Semidecision over a finite set.
RoundingCertificate IntegerRoundingCheck(const IncidenceMatrix& a,
                                         const std::vector<std::vector<int>>& wset);

// All w in {0..bound}^n, lexicographic.
std::vector<std::vector<int>> WeightGrid(int n, int bound);

}  // namespace clutterlab

#endif  // CLUTTERLAB_POLYHEDRA_H_
