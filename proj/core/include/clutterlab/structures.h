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

// Finite graphs, posets and clutters, together with the constructions that
// relate them: comparability graphs, clique clutters, complete admissible
// uniform clutters and parallelizations (vertex duplication / deletion).
//
// All types are immutable values once constructed. Constructors validate
// their input and throw InvalidInput instead of repairing it.

#ifndef CLUTTERLAB_STRUCTURES_H_
#define CLUTTERLAB_STRUCTURES_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clutterlab {

// Vertices are 0-based indices into the owning structure.
using Vertex = int;
// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
// One natural number per vertex.
using WeightVector = std::vector<int>;

// Undirected simple graph.
class Graph {
 public:
  Graph() = default;
  // Pairs may be given in either orientation; loops, repeated pairs and
  // out-of-range endpoints are rejected.
  Graph(int num_vertices, std::vector<std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return num_vertices_; }
  // Sorted, each pair stored as (smaller, larger).
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool Adjacent(Vertex a, Vertex b) const;
  // Requires num_vertices() <= 64.
  std::uint64_t NeighborMask(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<char> adjacency_;
};

// Strict partial order. The relation holds the pairs (a, b) with a < b and
// must be irreflexive, antisymmetric and transitively closed.
class Poset {
 public:
  Poset() = default;
  Poset(int num_vertices, std::vector<std::pair<Vertex, Vertex>> relation);

  // Closes `relation` transitively first. Still rejects cycles and loops.
  static Poset FromTransitiveClosure(
      int num_vertices, std::vector<std::pair<Vertex, Vertex>> relation);

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<Vertex, Vertex>>& relation() const {
    return relation_;
  }
  bool Less(Vertex a, Vertex b) const;
  bool Comparable(Vertex a, Vertex b) const {
    return Less(a, b) || Less(b, a);
  }
  // Sources (nothing below) and sinks (nothing above).
  std::vector<Vertex> MinimalElements() const;
  std::vector<Vertex> MaximalElements() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<std::pair<Vertex, Vertex>> relation_;
  std::vector<char> less_;
};

// Family of pairwise inclusion-incomparable, non-empty vertex subsets.
// Edges are kept sorted lexicographically; every vertex carries a unique
// display label (default "x<index>").
class Clutter {
 public:
  Clutter() = default;
  Clutter(int num_vertices, std::vector<VertexSet> edges);
  Clutter(int num_vertices, std::vector<std::string> labels,
          std::vector<VertexSet> edges);

  // Drops every edge that properly contains another one, and repeated
  // edges, before validating.
  static Clutter Minimalized(int num_vertices, std::vector<std::string> labels,
                             std::vector<VertexSet> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }

  // Edges rewritten as sorted label lists, then sorted. Two clutters built
  // through different sequences of duplications and deletions agree here
  // whenever they describe the same labeled set system.
  std::vector<std::vector<std::string>> LabeledEdges() const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<std::string> labels_;
  std::vector<VertexSet> edges_;
};

// Same vertex count and same edges, labels ignored.
bool SameEdges(const Clutter& a, const Clutter& b);

std::string DefaultLabel(Vertex v);
std::vector<std::string> DefaultLabels(int num_vertices);

// Edge {i,j} iff i and j are comparable.
Graph ComparabilityGraph(const Poset& poset);

// All inclusion-maximal cliques, canonical order. Isolated vertices give
// singleton cliques. Requires at most 64 vertices.
std::vector<VertexSet> MaximalCliques(const Graph& graph);

// Clutter of maximal cliques with default labels.
Clutter CliqueClutter(const Graph& graph);

// Vertex x_k^l (1 <= k <= g, 1 <= l <= d) has index (l-1)*g + (k-1) and
// label "x<k>^<l>". Edges are {x_{i_1}^1, ..., x_{i_d}^d} for every
// non-decreasing tuple i_1 <= ... <= i_d.
Clutter CompleteAdmissibleUniformClutter(int d, int g);

// x_k^l < x_p^m iff l < m and k <= p, on the same vertex indexing.
Poset CaucPoset(int d, int g);

// Appends a parallel copy i' of vertex i; every edge through i gains a
// twin with i replaced by i'. The copy is labeled "<label(i)>'<k>" with the
// smallest k >= 1 not already in use.
Clutter Duplicate(const Clutter& clutter, Vertex i);

// Removes vertex i and every edge through it; remaining indices compacted,
// labels kept.
Clutter Delete(const Clutter& clutter, Vertex i);

// C^w: delete every vertex with w_i = 0, duplicate w_i - 1 times every
// vertex with w_i >= 1. Deletions are applied first.
Clutter Parallelization(const Clutter& clutter, std::span<const int> weights);

// Appends a vertex adjacent to exactly the neighbors of i (not to i).
Graph DuplicateVertex(const Graph& graph, Vertex i);
Graph DeleteVertex(const Graph& graph, Vertex i);

// Appends y with y < x iff i < x and x < y iff x < i; y and i incomparable.
Poset DuplicateElement(const Poset& poset, Vertex i);

}  // namespace clutterlab

#endif  // CLUTTERLAB_STRUCTURES_H_
