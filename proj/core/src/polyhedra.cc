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

#include "clutterlab/polyhedra.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clutterlab/errors.h"

namespace clutterlab {
namespace {

using Int128 = __int128;

struct Overflow {};

std::uint64_t SaturatingBinomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  Int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max() / 2) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

// Integer-preserving Gauss-Jordan elimination (Edmonds / Bareiss). After
// pivoting on every column each pivot entry equals +-det and the augmented
// column holds det * x.
struct Int64Arith {
  using Int = std::int64_t;
  static Int Combine(Int akk, Int aij, Int aik, Int akj, Int prev) {
    const Int128 num = Int128(akk) * aij - Int128(aik) * akj;
    Ensure(num % prev == 0, "fraction-free elimination: inexact division");
    const Int128 q = num / prev;
    if (q > std::numeric_limits<Int>::max() ||
        q < std::numeric_limits<Int>::min()) {
      throw Overflow{};
    }
    return static_cast<Int>(q);
  }
  // Accumulates sum(row * num) - rhs * det and reports its sign.
  static int PairingSign(const std::vector<Int>& row, const std::vector<Int>& num,
                         Int rhs, Int det) {
    Int128 acc = -Int128(rhs) * det;
    for (size_t i = 0; i < row.size(); ++i) acc += Int128(row[i]) * num[i];
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
  }
  static Int From(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    return z.get_si();
  }
  static mpz_class ToMpz(Int v) { return mpz_class(static_cast<long>(v)); }
};

struct MpzArith {
  using Int = mpz_class;
  static Int Combine(const Int& akk, const Int& aij, const Int& aik,
                     const Int& akj, const Int& prev) {
    Int num = akk * aij - aik * akj;
    Ensure(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()) != 0,
           "fraction-free elimination: inexact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
    return q;
  }
  static int PairingSign(const std::vector<Int>& row, const std::vector<Int>& num,
                         const Int& rhs, const Int& det) {
    Int acc = -rhs * det;
    for (size_t i = 0; i < row.size(); ++i) acc += row[i] * num[i];
    return sgn(acc);
  }
  static Int From(const mpz_class& z) { return z; }
  static mpz_class ToMpz(const Int& v) { return v; }
};

// Integer form of {x >= 0, rows x >= rhs}: each row scaled by the lcm of
// its denominators.
struct IntegerSystem {
  int dimension = 0;
  std::vector<std::vector<mpz_class>> rows;
  std::vector<mpz_class> rhs;
  std::vector<std::uint64_t> support;  // nonzero coordinates of each row
};

IntegerSystem ToIntegerSystem(const RationalPolyhedron& p) {
  IntegerSystem s;
  s.dimension = p.dimension();
  for (size_t r = 0; r < p.rows().size(); ++r) {
    mpz_class scale = p.rhs()[r].get_den();
    for (const auto& v : p.rows()[r]) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<mpz_class> row;
    std::uint64_t mask = 0;
    for (int i = 0; i < s.dimension; ++i) {
      const Rational scaled = p.rows()[r][i] * scale;
      row.push_back(scaled.get_num());
      if (scaled != 0) mask |= std::uint64_t{1} << i;
    }
    s.rows.push_back(std::move(row));
    s.rhs.push_back(Rational(p.rhs()[r] * scale).get_num());
    s.support.push_back(mask);
  }
  return s;
}

// Solves the square system picked by (free coordinates, tight rows) and
// returns the vertex when it is a feasible point of the polyhedron.
template <typename Arith>
std::optional<RationalVector> SolveBasis(const IntegerSystem& system,
                                         const std::vector<int>& free_coords,
                                         const std::vector<int>& tight_rows) {
  using Int = typename Arith::Int;
  const int f = static_cast<int>(free_coords.size());
  std::vector<std::vector<Int>> m(f, std::vector<Int>(f + 1));
  for (int r = 0; r < f; ++r) {
    const auto& row = system.rows[tight_rows[r]];
    for (int c = 0; c < f; ++c) m[r][c] = Arith::From(row[free_coords[c]]);
    m[r][f] = Arith::From(system.rhs[tight_rows[r]]);
  }
  Int prev = 1;
  for (int k = 0; k < f; ++k) {
    int pivot = -1;
    for (int r = k; r < f && pivot == -1; ++r) {
      if (m[r][k] != 0) pivot = r;
    }
    if (pivot == -1) return std::nullopt;  // singular
    std::swap(m[k], m[pivot]);
    for (int i = 0; i < f; ++i) {
      if (i == k) continue;
      for (int j = 0; j <= f; ++j) {
        if (j == k) continue;
        m[i][j] = Arith::Combine(m[k][k], m[i][j], m[i][k], m[k][j], prev);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Int det = f == 0 ? Int(1) : m[0][0];
  const bool flip = det < 0;
  if (flip) det = -det;
  std::vector<Int> num(system.dimension, Int(0));
  for (int r = 0; r < f; ++r) {
    Int value = flip ? Int(-m[r][f]) : m[r][f];
    if (value < 0) return std::nullopt;
    num[free_coords[r]] = std::move(value);
  }
  for (size_t r = 0; r < system.rows.size(); ++r) {
    std::vector<Int> row;
    row.reserve(system.dimension);
    for (const auto& v : system.rows[r]) row.push_back(Arith::From(v));
    if (Arith::PairingSign(row, num, Arith::From(system.rhs[r]), det) < 0) {
      return std::nullopt;
    }
  }
  RationalVector vertex;
  vertex.reserve(system.dimension);
  const mpz_class den = Arith::ToMpz(det);
  for (const auto& v : num) {
    Rational q(Arith::ToMpz(v), den);
    q.canonicalize();
    vertex.push_back(std::move(q));
  }
  return vertex;
}

// Calls `visit` with every size-k subset of {0..n-1} in lexicographic order.
template <typename Visit>
void ForEachCombination(int n, int k, Visit visit) {
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  if (k > n) return;
  while (true) {
    visit(comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) return;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace

// ------------------------------------------------------ IncidenceMatrix

IncidenceMatrix::IncidenceMatrix(int num_rows,
                                 std::vector<std::vector<int>> columns)
    : num_rows_(num_rows), columns_(std::move(columns)) {
  Require(num_rows >= 0, "matrix: negative row count");
  Require(!columns_.empty(), "matrix: at least one column required");
  for (const auto& col : columns_) {
    Require(static_cast<int>(col.size()) == num_rows,
            "matrix: column length differs from row count");
    bool nonzero = false;
    for (int v : col) {
      Require(v >= 0, "matrix: negative entry");
      nonzero = nonzero || v > 0;
    }
    Require(nonzero, "matrix: zero column");
  }
}

IncidenceMatrix IncidenceMatrix::OfClutter(const Clutter& clutter) {
  Require(clutter.num_edges() > 0, "incidence matrix: clutter has no edges");
  std::vector<std::vector<int>> columns;
  for (const auto& edge : clutter.edges()) {
    std::vector<int> col(clutter.num_vertices(), 0);
    for (Vertex v : edge) col[v] = 1;
    columns.push_back(std::move(col));
  }
  return IncidenceMatrix(clutter.num_vertices(), std::move(columns));
}

int IncidenceMatrix::RowMax(int row) const {
  int best = 0;
  for (const auto& col : columns_) best = std::max(best, col[row]);
  return best;
}

// --------------------------------------------------- RationalPolyhedron

RationalPolyhedron::RationalPolyhedron(int dimension,
                                       std::vector<RationalVector> rows,
                                       RationalVector rhs)
    : dimension_(dimension), rows_(std::move(rows)), rhs_(std::move(rhs)) {
  Require(dimension >= 0, "polyhedron: negative dimension");
  Require(rows_.size() == rhs_.size(),
          "polyhedron: row count differs from right-hand side length");
  for (const auto& row : rows_) {
    Require(static_cast<int>(row.size()) == dimension,
            "polyhedron: row length differs from dimension");
  }
}

bool RationalPolyhedron::Contains(std::span<const Rational> x) const {
  Require(static_cast<int>(x.size()) == dimension_,
          "polyhedron: point has wrong dimension");
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rational acc = 0;
    for (int i = 0; i < dimension_; ++i) acc += rows_[r][i] * x[i];
    if (acc < rhs_[r]) return false;
  }
  return true;
}

RationalPolyhedron CoveringPolyhedron(const IncidenceMatrix& a) {
  std::vector<RationalVector> rows;
  for (const auto& col : a.columns()) rows.push_back(ToRationalVector(col));
  RationalVector rhs(a.num_columns(), Rational(1));
  return RationalPolyhedron(a.num_rows(), std::move(rows), std::move(rhs));
}

std::vector<RationalVector> Vertices(const RationalPolyhedron& p,
                                     std::uint64_t basis_limit) {
  const int d = p.dimension();
  const int m = static_cast<int>(p.rows().size());
  if (d > 62) throw ResourceExhausted("vertices: dimension above 62");
  if (SaturatingBinomial(d + m, d) > basis_limit) {
    throw ResourceExhausted("vertices: binomial(" + std::to_string(d + m) +
                            ", " + std::to_string(d) +
                            ") candidate bases exceed the limit");
  }
  const IntegerSystem system = ToIntegerSystem(p);
  std::set<RationalVector> found;
  for (int f = 0; f <= std::min(d, m); ++f) {
    ForEachCombination(d, f, [&](const std::vector<int>& free_coords) {
      std::uint64_t free_mask = 0;
      for (int c : free_coords) free_mask |= std::uint64_t{1} << c;
      // A row with positive rhs and no free coordinate is violated by every
      // point vanishing off free_coords.
      for (int r = 0; r < m; ++r) {
        if ((system.support[r] & free_mask) == 0 && system.rhs[r] > 0) return;
      }
      std::vector<int> usable;
      for (int r = 0; r < m; ++r) {
        if ((system.support[r] & free_mask) != 0) usable.push_back(r);
      }
      ForEachCombination(
          static_cast<int>(usable.size()), f, [&](const std::vector<int>& pick) {
            CheckDeadline();
            std::vector<int> tight;
            tight.reserve(f);
            for (int i : pick) tight.push_back(usable[i]);
            std::optional<RationalVector> vertex;
            try {
              vertex = SolveBasis<Int64Arith>(system, free_coords, tight);
            } catch (const Overflow&) {
              vertex = SolveBasis<MpzArith>(system, free_coords, tight);
            }
            if (vertex.has_value()) found.insert(std::move(*vertex));
          });
    });
  }
  return {found.begin(), found.end()};
}

bool IsIntegral(const RationalPolyhedron& p, std::uint64_t basis_limit) {
  for (const auto& vertex : Vertices(p, basis_limit)) {
    for (const auto& v : vertex) {
      if (!IsInteger(v)) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- Blocker

std::optional<RationalVector> ConvexCombinationWitness(
    const IncidenceMatrix& a, std::span<const Rational> z,
    const Rational& scale) {
  const int n = a.num_rows();
  const int q = a.num_columns();
  Require(static_cast<int>(z.size()) == n, "blocker: point has wrong dimension");
  std::vector<RationalVector> rows;
  RationalVector rhs;
  for (int i = 0; i < n; ++i) {
    RationalVector row(q);
    for (int j = 0; j < q; ++j) row[j] = a.at(i, j);
    rows.push_back(std::move(row));
    rhs.push_back(z[i]);
  }
  rows.emplace_back(q, Rational(1));
  rhs.push_back(scale);
  rows.emplace_back(q, Rational(-1));
  rhs.push_back(-scale);
  LpResult result = MaximizeLp(rows, rhs, RationalVector(q, Rational(0)));
  if (result.status != LpStatus::kOptimal) return std::nullopt;
  return std::move(result.solution);
}

bool BlockingMembershipByConvexCombination(const IncidenceMatrix& a,
                                           std::span<const Rational> z) {
  for (const auto& v : z) {
    if (v < 0) return false;
  }
  return ConvexCombinationWitness(a, z, Rational(1)).has_value();
}

BlockingPolyhedron::BlockingPolyhedron(IncidenceMatrix a,
                                       std::uint64_t basis_limit)
    : a_(std::move(a)), vertices_(Vertices(CoveringPolyhedron(a_), basis_limit)) {
  Ensure(!vertices_.empty(), "blocker: covering polyhedron has no vertex");
  mpz_class lcm = 1;
  for (const auto& vertex : vertices_) {
    for (const auto& v : vertex) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
  }
  if (!lcm.fits_slong_p()) {
    throw ResourceExhausted("blocker: vertex denominators exceed 64 bits");
  }
  denominator_ = lcm.get_si();
  for (const auto& vertex : vertices_) {
    std::vector<std::int64_t> scaled;
    for (const auto& v : vertex) {
      const Rational s = v * lcm;
      if (!s.get_num().fits_slong_p()) {
        throw ResourceExhausted("blocker: vertex coordinates exceed 64 bits");
      }
      scaled.push_back(s.get_num().get_si());
    }
    scaled_vertices_.push_back(std::move(scaled));
  }
}

bool BlockingPolyhedron::Contains(std::span<const Rational> z) const {
  Require(static_cast<int>(z.size()) == dimension(),
          "blocker: point has wrong dimension");
  for (const auto& v : z) {
    if (v < 0) return false;
  }
  for (const auto& vertex : vertices_) {
    Rational acc = 0;
    for (size_t i = 0; i < z.size(); ++i) acc += z[i] * vertex[i];
    if (acc < 1) return false;
  }
  return true;
}

bool BlockingPolyhedron::ContainsScaled(std::span<const int> a, int k) const {
  for (int v : a) {
    if (v < 0) return false;
  }
  const Int128 threshold = Int128(k) * denominator_;
  for (const auto& vertex : scaled_vertices_) {
    Int128 acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += Int128(a[i]) * vertex[i];
    if (acc < threshold) return false;
  }
  return true;
}

Rational BlockingPolyhedron::MinVertexPairing(std::span<const int> a) const {
  std::optional<Rational> best;
  for (const auto& vertex : vertices_) {
    Rational acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * vertex[i];
    if (!best.has_value() || acc < *best) best = acc;
  }
  return *best;
}

std::vector<int> BlockingPolyhedron::Box(int k) const {
  std::vector<int> box(dimension());
  for (int i = 0; i < dimension(); ++i) box[i] = k * a_.RowMax(i);
  return box;
}

bool BlockingMembership(const IncidenceMatrix& a, std::span<const Rational> z) {
  const bool by_combination = BlockingMembershipByConvexCombination(a, z);
  const bool by_vertices = BlockingPolyhedron(a).Contains(z);
  Ensure(by_combination == by_vertices,
         "blocker membership: convex-combination and vertex routes disagree");
  return by_combination;
}

// ------------------------------------------------------ Lattice points

LatticeScan LatticePointsScaled(const BlockingPolyhedron& blocker, int k,
                                std::uint64_t box_limit) {
  Require(k >= 1, "lattice points: k must be >= 1");
  LatticeScan scan;
  scan.k = k;
  scan.box = blocker.Box(k);
  const int n = blocker.dimension();
  Int128 total = 1;
  for (int cap : scan.box) {
    total *= cap + 1;
    if (total > Int128(box_limit)) {
      throw ResourceExhausted("lattice points: box exceeds " +
                              std::to_string(box_limit) + " points");
    }
  }
  LatticePoint a(n, 0);
  while (true) {
    CheckDeadline();
    if (blocker.ContainsScaled(a, k)) scan.points.push_back(a);
    int i = n - 1;
    while (i >= 0 && a[i] == scan.box[i]) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  // kB(Q) is closed upwards, so one-step decrements decide minimality.
  for (const auto& p : scan.points) {
    bool minimal = true;
    LatticePoint q = p;
    for (int i = 0; i < n && minimal; ++i) {
      if (q[i] == 0) continue;
      --q[i];
      minimal = !blocker.ContainsScaled(q, k);
      ++q[i];
    }
    if (minimal) scan.minimal.push_back(p);
  }
  return scan;
}

LatticeScan LatticePointsScaled(const IncidenceMatrix& a, int k,
                                std::uint64_t box_limit) {
  return LatticePointsScaled(BlockingPolyhedron(a), k, box_limit);
}

std::vector<LatticePoint> MinimalIntegerVectors(const BlockingPolyhedron& blocker) {
  return LatticePointsScaled(blocker, 1).minimal;
}

std::vector<LatticePoint> MinimalIntegerVectors(const IncidenceMatrix& a) {
  return MinimalIntegerVectors(BlockingPolyhedron(a));
}

namespace {

// Splits a lattice point of kB(Q) into k lattice points of B(Q). Any
// decomposition can be rearranged so that its first k-1 summands are
// minimal integer vectors of B(Q), so only those are tried.
class Decomposer {
 public:
  explicit Decomposer(const BlockingPolyhedron& blocker)
      : blocker_(blocker), minimal_(MinimalIntegerVectors(blocker)) {}

  std::optional<std::vector<LatticePoint>> Run(const LatticePoint& a, int k) {
    std::vector<LatticePoint> parts;
    if (!Search(a, k, parts)) return std::nullopt;
    return parts;
  }

 private:
  bool Search(const LatticePoint& a, int k, std::vector<LatticePoint>& parts) {
    CheckDeadline();
    if (k == 1) {
      if (!blocker_.ContainsScaled(a, 1)) return false;
      parts.push_back(a);
      return true;
    }
    if (failed_.contains({a, k})) return false;
    LatticePoint rest(a.size());
    for (const auto& m : minimal_) {
      bool fits = true;
      for (size_t i = 0; i < a.size() && fits; ++i) {
        rest[i] = a[i] - m[i];
        fits = rest[i] >= 0;
      }
      if (!fits || !blocker_.ContainsScaled(rest, k - 1)) continue;
      parts.push_back(m);
      if (Search(rest, k - 1, parts)) return true;
      parts.pop_back();
    }
    failed_.insert({a, k});
    return false;
  }

  const BlockingPolyhedron& blocker_;
  std::vector<LatticePoint> minimal_;
  std::set<std::pair<LatticePoint, int>> failed_;
};

}  // namespace

std::optional<std::vector<LatticePoint>> DecomposeLatticePoint(
    const BlockingPolyhedron& blocker, std::span<const int> a, int k) {
  Require(k >= 1, "decompose: k must be >= 1");
  Require(static_cast<int>(a.size()) == blocker.dimension(),
          "decompose: point has wrong dimension");
  Require(blocker.ContainsScaled(a, k), "decompose: point is not in kB(Q)");
  return Decomposer(blocker).Run(LatticePoint(a.begin(), a.end()), k);
}

IdpCertificate IntegerDecompositionCheck(const BlockingPolyhedron& blocker,
                                         int kmax, std::uint64_t box_limit) {
  Require(kmax >= 2, "integer decomposition: kmax must be >= 2");
  IdpCertificate cert;
  cert.kmax = kmax;
  Decomposer decomposer(blocker);
  cert.points_checked.push_back(LatticePointsScaled(blocker, 1, box_limit).points.size());
  for (int k = 2; k <= kmax; ++k) {
    const LatticeScan scan = LatticePointsScaled(blocker, k, box_limit);
    cert.points_checked.push_back(scan.points.size());
    for (const auto& point : scan.points) {
      auto parts = decomposer.Run(point, k);
      if (!parts.has_value()) {
        cert.holds = false;
        cert.failing_k = k;
        cert.counterexample = point;
        cert.sample_point.clear();
        cert.sample_decomposition.clear();
        return cert;
      }
      cert.sample_point = point;
      cert.sample_decomposition = std::move(*parts);
    }
  }
  return cert;
}

IdpCertificate IntegerDecompositionCheck(const IncidenceMatrix& a, int kmax,
                                         std::uint64_t box_limit) {
  return IntegerDecompositionCheck(BlockingPolyhedron(a), kmax, box_limit);
}

// ---------------------------------------------------- Integer rounding

LpResult PackingLp(const IncidenceMatrix& a, std::span<const int> w) {
  const int n = a.num_rows();
  const int q = a.num_columns();
  Require(static_cast<int>(w.size()) == n, "packing lp: w has wrong length");
  std::vector<RationalVector> rows(n, RationalVector(q));
  RationalVector rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < q; ++j) rows[i][j] = a.at(i, j);
    rhs[i] = w[i];
  }
  return MaximizeLp(rows, rhs, RationalVector(q, Rational(1)));
}

namespace {

class PackingSearch {
 public:
  PackingSearch(const IncidenceMatrix& a, std::optional<int> ceiling)
      : a_(a), ceiling_(ceiling) {
    const int q = a.num_columns();
    column_mass_.resize(q);
    suffix_min_mass_.assign(q + 1, std::numeric_limits<int>::max());
    for (int j = 0; j < q; ++j) {
      column_mass_[j] = std::accumulate(a.column(j).begin(), a.column(j).end(), 0);
    }
    for (int j = q - 1; j >= 0; --j) {
      suffix_min_mass_[j] = std::min(suffix_min_mass_[j + 1], column_mass_[j]);
    }
  }

  int Run(std::vector<int> residual) {
    Search(0, residual, 0);
    return best_;
  }

 private:
  int Capacity(int j, const std::vector<int>& residual) const {
    int cap = std::numeric_limits<int>::max();
    for (int i = 0; i < a_.num_rows(); ++i) {
      if (a_.at(i, j) > 0) cap = std::min(cap, residual[i] / a_.at(i, j));
    }
    return cap;
  }

  bool Done() const { return ceiling_.has_value() && best_ >= *ceiling_; }

  void Search(int j, std::vector<int>& residual, int current) {
    CheckDeadline();
    best_ = std::max(best_, current);
    const int q = a_.num_columns();
    if (j == q || Done()) return;
    const int mass = std::accumulate(residual.begin(), residual.end(), 0);
    if (current + mass / suffix_min_mass_[j] <= best_) return;
    const int cap = Capacity(j, residual);
    Ensure(cap <= *std::max_element(residual.begin(), residual.end()),
           "packing ilp: per-column bound exceeds max_i w_i");
    for (int c = cap; c >= 0 && !Done(); --c) {
      for (int i = 0; i < a_.num_rows(); ++i) residual[i] -= c * a_.at(i, j);
      Search(j + 1, residual, current + c);
      for (int i = 0; i < a_.num_rows(); ++i) residual[i] += c * a_.at(i, j);
    }
  }

  const IncidenceMatrix& a_;
  std::optional<int> ceiling_;
  std::vector<int> column_mass_;
  std::vector<int> suffix_min_mass_;
  int best_ = 0;
};

}  // namespace

int PackingIlp(const IncidenceMatrix& a, std::span<const int> w,
               std::optional<int> ceiling) {
  Require(static_cast<int>(w.size()) == a.num_rows(),
          "packing ilp: w has wrong length");
  for (int v : w) Require(v >= 0, "packing ilp: negative weight");
  return PackingSearch(a, ceiling).Run(std::vector<int>(w.begin(), w.end()));
}

RoundingCertificate IntegerRoundingCheck(
    const IncidenceMatrix& a, const std::vector<std::vector<int>>& wset) {
  RoundingCertificate cert;
  for (const auto& w : wset) {
    RoundingEntry entry;
    entry.w = w;
    const LpResult lp = PackingLp(a, w);
    entry.status = lp.status;
    if (lp.status == LpStatus::kOptimal) {
      entry.lp_max = lp.value;
      entry.lp_floor = Floor(lp.value);
      Ensure(entry.lp_floor.fits_sint_p(), "integer rounding: LP value too large");
      const int floor = static_cast<int>(entry.lp_floor.get_si());
      entry.ilp_max = PackingIlp(a, w, floor);
      Ensure(entry.ilp_max <= floor, "integer rounding: ILP exceeds LP");
      entry.holds = entry.ilp_max == floor;
    }
    if (!entry.holds && !cert.first_failure.has_value()) {
      cert.holds = false;
      cert.first_failure = cert.entries.size();
    }
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

std::vector<std::vector<int>> WeightGrid(int n, int bound) {
  Require(n >= 0 && bound >= 0, "weight grid: negative parameter");
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 0);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == bound) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

}  // namespace clutterlab
