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

// Covering and packing numbers of clutters, the Konig property, bounded
// max-flow min-cut certification over parallelizations, and a Menger-style
// path oracle for clique clutters of comparability graphs.
//
// The searches are exhaustive with pruning and are meant as exact oracles on
// desk-scale instances (up to 64 vertices; practical up to ~20).

#ifndef CLUTTERLAB_PACKING_H_
#define CLUTTERLAB_PACKING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clutterlab/rational.h"
#include "clutterlab/structures.h"

namespace clutterlab {

struct KonigCertificate {
  // Minimum vertex cover size and a lexicographically least witness.
  int alpha0 = 0;
  VertexSet cover;
  // Maximum number of pairwise disjoint edges and the lexicographically
  // least such list (edges in canonical order).
  int beta1 = 0;
  std::vector<VertexSet> matching;

  bool holds() const { return alpha0 == beta1; }
};

// Every inclusion-minimal transversal, sorted. A clutter without edges has
// the single cover {}.
std::vector<VertexSet> MinimalVertexCovers(const Clutter& clutter);

VertexSet MinimumVertexCover(const Clutter& clutter);
std::vector<VertexSet> MaximumMatching(const Clutter& clutter);
int Alpha0(const Clutter& clutter);
int Beta1(const Clutter& clutter);

// Computes both optima with witnesses and checks the witness invariants.
KonigCertificate KonigHolds(const Clutter& clutter);

struct MfmcCertificate {
  bool holds = true;  // "holds-up-to-bound" when true
  int wmax = 1;
  std::uint64_t weights_checked = 0;
  std::optional<WeightVector> counterexample;
  std::optional<KonigCertificate> counterexample_certificate;
};

// Konig property of C^w for every w in {0..wmax}^n, visited in
// lexicographic order; stops at the first failure. Requires wmax >= 1.
MfmcCertificate MfmcBounded(const Clutter& clutter, int wmax);

struct LpDualityVerdict {
  Rational lp_min;  // min{<w,x> : x >= 0, xA >= 1}
  Rational lp_max;  // max{<y,1> : y >= 0, Ay <= w}
  RationalVector primal_solution;
  RationalVector dual_solution;
  int integer_min = 0;
  int integer_max = 0;
  VertexSet integer_cover;

  // Both LP optima are attained by integer points.
  bool integral() const {
    return lp_min == integer_min && lp_max == integer_max;
  }
};

// Solves both sides of the covering LP-duality equation exactly (the
// minimum over the vertices of Q(A), the maximum by simplex), asserts they
// coincide, then enumerates integer points of each side.
LpDualityVerdict LpDualityIntegerCheck(const Clutter& clutter,
                                       std::span<const int> w);
// Same, reusing precomputed vertices of Q(A).
LpDualityVerdict LpDualityIntegerCheck(
    const Clutter& clutter, const std::vector<RationalVector>& covering_vertices,
    std::span<const int> w);

// Digraph of covering pairs of a poset with some elements removed.
struct MengerInstance {
  // The poset after duplicating element i w_i - 1 times (w_i >= 1). The
  // duplicates are appended after the original elements.
  Poset parallel;
  // Original elements with w_i = 0; they stay in `parallel` but not in the
  // digraph.
  VertexSet deleted;
  // Vertex set of the digraph (all non-deleted elements) and its arcs:
  // (x, y) with x < y and no z of `parallel` strictly between them.
  VertexSet vertices;
  std::vector<std::pair<Vertex, Vertex>> arcs;
  // Sources and sinks of `parallel` that are not deleted.
  VertexSet sources;
  VertexSet sinks;
};

MengerInstance BuildMengerInstance(const Poset& poset, std::span<const int> w);

struct MengerResult {
  MengerInstance instance;
  // beta1: number of vertex-disjoint source-sink paths; matching: those
  // paths as vertex sets. alpha0/cover: a minimum disconnecting vertex set
  // read off the minimum cut. Indices refer to instance.parallel.
  KonigCertificate certificate;
  // Every source-sink path of the digraph, as sorted vertex sets.
  std::vector<VertexSet> all_paths;
};

// Max vertex-disjoint paths by unit vertex-capacity max-flow on the split
// digraph, min disconnecting set from the residual cut. Asserts that both
// numbers agree and that the paths are exactly the maximal cliques of the
// comparability graph of `parallel` avoiding the deleted elements.
MengerResult MengerOracle(const Poset& poset, std::span<const int> w);

// Each maximal clique of the comparability graph listed as a chain
// c_1 < c_2 < ... < c_s. Throws ConsistencyError if some clique is not a
// chain.
std::vector<std::vector<Vertex>> CliqueChains(const Poset& poset);

}  // namespace clutterlab

#endif  // CLUTTERLAB_PACKING_H_
