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

#include "clutterlab/structures.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "clutterlab/errors.h"

namespace clutterlab {
namespace {

std::uint64_t Bit(int v) { return std::uint64_t{1} << v; }

VertexSet MaskToSet(std::uint64_t mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

bool IsSubset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::pair<Vertex, Vertex>> CheckedPairs(
    int n, std::vector<std::pair<Vertex, Vertex>> pairs, const char* what) {
  for (const auto& [a, b] : pairs) {
    Require(a >= 0 && a < n && b >= 0 && b < n,
            std::string(what) + ": endpoint out of range");
    Require(a != b, std::string(what) + ": loop at vertex " + std::to_string(a));
  }
  return pairs;
}

std::string NextDuplicateLabel(const std::vector<std::string>& labels,
                               const std::string& base) {
  const std::unordered_set<std::string> used(labels.begin(), labels.end());
  for (int k = 1;; ++k) {
    std::string candidate = base + "'" + std::to_string(k);
    if (!used.contains(candidate)) return candidate;
  }
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int num_vertices, std::vector<std::pair<Vertex, Vertex>> edges)
    : num_vertices_(num_vertices) {
  Require(num_vertices >= 0, "graph: negative vertex count");
  edges_ = CheckedPairs(num_vertices, std::move(edges), "graph");
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  Require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
          "graph: parallel edge");
  adjacency_.assign(static_cast<size_t>(num_vertices) * num_vertices, 0);
  for (const auto& [a, b] : edges_) {
    adjacency_[a * num_vertices + b] = 1;
    adjacency_[b * num_vertices + a] = 1;
  }
}

bool Graph::Adjacent(Vertex a, Vertex b) const {
  return adjacency_[a * num_vertices_ + b] != 0;
}

std::uint64_t Graph::NeighborMask(Vertex v) const {
  std::uint64_t mask = 0;
  for (int u = 0; u < num_vertices_; ++u) {
    if (Adjacent(v, u)) mask |= Bit(u);
  }
  return mask;
}

// ---------------------------------------------------------------- Poset

Poset::Poset(int num_vertices, std::vector<std::pair<Vertex, Vertex>> relation)
    : num_vertices_(num_vertices) {
  Require(num_vertices >= 0, "poset: negative vertex count");
  relation_ = CheckedPairs(num_vertices, std::move(relation), "poset");
  std::sort(relation_.begin(), relation_.end());
  relation_.erase(std::unique(relation_.begin(), relation_.end()),
                  relation_.end());
  const int n = num_vertices;
  less_.assign(static_cast<size_t>(n) * n, 0);
  for (const auto& [a, b] : relation_) less_[a * n + b] = 1;
  for (const auto& [a, b] : relation_) {
    Require(!less_[b * n + a], "poset: not antisymmetric at (" +
                                   std::to_string(a) + "," +
                                   std::to_string(b) + ")");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!less_[a * n + b]) continue;
      for (int c = 0; c < n; ++c) {
        Require(!less_[b * n + c] || less_[a * n + c],
                "poset: not transitive, missing (" + std::to_string(a) + "," +
                    std::to_string(c) + ")");
      }
    }
  }
}

Poset Poset::FromTransitiveClosure(
    int num_vertices, std::vector<std::pair<Vertex, Vertex>> relation) {
  Require(num_vertices >= 0, "poset: negative vertex count");
  const int n = num_vertices;
  relation = CheckedPairs(n, std::move(relation), "poset");
  std::vector<char> reach(static_cast<size_t>(n) * n, 0);
  for (const auto& [a, b] : relation) reach[a * n + b] = 1;
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      if (!reach[a * n + k]) continue;
      for (int b = 0; b < n; ++b) {
        if (reach[k * n + b]) reach[a * n + b] = 1;
      }
    }
  }
  std::vector<std::pair<Vertex, Vertex>> closed;
  for (int a = 0; a < n; ++a) {
    Require(!reach[a * n + a], "poset: relation has a cycle through " +
                                   std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (reach[a * n + b]) closed.emplace_back(a, b);
    }
  }
  return Poset(n, std::move(closed));
}

bool Poset::Less(Vertex a, Vertex b) const {
  return less_[a * num_vertices_ + b] != 0;
}

std::vector<Vertex> Poset::MinimalElements() const {
  std::vector<Vertex> out;
  for (int v = 0; v < num_vertices_; ++v) {
    bool minimal = true;
    for (int u = 0; u < num_vertices_ && minimal; ++u) minimal = !Less(u, v);
    if (minimal) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> Poset::MaximalElements() const {
  std::vector<Vertex> out;
  for (int v = 0; v < num_vertices_; ++v) {
    bool maximal = true;
    for (int u = 0; u < num_vertices_ && maximal; ++u) maximal = !Less(v, u);
    if (maximal) out.push_back(v);
  }
  return out;
}

// -------------------------------------------------------------- Clutter

std::string DefaultLabel(Vertex v) { return "x" + std::to_string(v); }

std::vector<std::string> DefaultLabels(int num_vertices) {
  std::vector<std::string> labels;
  labels.reserve(num_vertices);
  for (int v = 0; v < num_vertices; ++v) labels.push_back(DefaultLabel(v));
  return labels;
}

Clutter::Clutter(int num_vertices, std::vector<VertexSet> edges)
    : Clutter(num_vertices, DefaultLabels(std::max(num_vertices, 0)),
              std::move(edges)) {}

Clutter::Clutter(int num_vertices, std::vector<std::string> labels,
                 std::vector<VertexSet> edges)
    : num_vertices_(num_vertices),
      labels_(std::move(labels)),
      edges_(std::move(edges)) {
  Require(num_vertices >= 0, "clutter: negative vertex count");
  Require(static_cast<int>(labels_.size()) == num_vertices,
          "clutter: label count does not match vertex count");
  {
    std::set<std::string> seen;
    for (const auto& label : labels_) {
      Require(seen.insert(label).second, "clutter: duplicate label " + label);
    }
  }
  for (auto& edge : edges_) {
    Require(!edge.empty(), "clutter: empty edge");
    std::sort(edge.begin(), edge.end());
    Require(std::adjacent_find(edge.begin(), edge.end()) == edge.end(),
            "clutter: repeated vertex inside an edge");
    Require(edge.front() >= 0 && edge.back() < num_vertices,
            "clutter: edge vertex out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  Require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
          "clutter: repeated edge");
  if (num_vertices <= 64) {
    std::vector<std::uint64_t> masks;
    masks.reserve(edges_.size());
    for (const auto& edge : edges_) {
      std::uint64_t m = 0;
      for (Vertex v : edge) m |= Bit(v);
      masks.push_back(m);
    }
    for (size_t i = 0; i < masks.size(); ++i) {
      for (size_t j = 0; j < masks.size(); ++j) {
        Require(i == j || (masks[i] & ~masks[j]) != 0,
                "clutter: an edge contains another edge");
      }
    }
  } else {
    for (size_t i = 0; i < edges_.size(); ++i) {
      for (size_t j = 0; j < edges_.size(); ++j) {
        Require(i == j || !IsSubset(edges_[i], edges_[j]),
                "clutter: an edge contains another edge");
      }
    }
  }
}

Clutter Clutter::Minimalized(int num_vertices, std::vector<std::string> labels,
                             std::vector<VertexSet> edges) {
  for (auto& edge : edges) {
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<VertexSet> kept;
  for (size_t i = 0; i < edges.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < edges.size() && minimal; ++j) {
      minimal = i == j || !IsSubset(edges[j], edges[i]);
    }
    if (minimal) kept.push_back(edges[i]);
  }
  return Clutter(num_vertices, std::move(labels), std::move(kept));
}

std::vector<std::vector<std::string>> Clutter::LabeledEdges() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(edges_.size());
  for (const auto& edge : edges_) {
    std::vector<std::string> named;
    for (Vertex v : edge) named.push_back(labels_[v]);
    std::sort(named.begin(), named.end());
    out.push_back(std::move(named));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SameEdges(const Clutter& a, const Clutter& b) {
  return a.num_vertices() == b.num_vertices() && a.edges() == b.edges();
}

// ----------------------------------------------------------- Operations

Graph ComparabilityGraph(const Poset& poset) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const int n = poset.num_vertices();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (poset.Comparable(a, b)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

// Bron-Kerbosch with Tomita pivoting over 64-bit vertex masks.
class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(const Graph& graph) {
    const int n = graph.num_vertices();
    neighbors_.resize(n);
    for (int v = 0; v < n; ++v) neighbors_[v] = graph.NeighborMask(v);
  }

  std::vector<VertexSet> Run(int n) {
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : Bit(n) - 1;
    if (n > 0) Expand(0, all, 0);
    std::sort(cliques_.begin(), cliques_.end());
    return std::move(cliques_);
  }

 private:
  void Expand(std::uint64_t clique, std::uint64_t candidates,
              std::uint64_t excluded) {
    CheckDeadline();
    if (candidates == 0) {
      if (excluded == 0) cliques_.push_back(MaskToSet(clique));
      return;
    }
    int pivot = -1;
    int best = -1;
    for (std::uint64_t rest = candidates | excluded; rest != 0;
         rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int score = std::popcount(candidates & neighbors_[u]);
      if (score > best) {
        best = score;
        pivot = u;
      }
    }
    for (std::uint64_t branch = candidates & ~neighbors_[pivot]; branch != 0;
         branch &= branch - 1) {
      const int v = std::countr_zero(branch);
      Expand(clique | Bit(v), candidates & neighbors_[v],
             excluded & neighbors_[v]);
      candidates &= ~Bit(v);
      excluded |= Bit(v);
    }
  }

  std::vector<std::uint64_t> neighbors_;
  std::vector<VertexSet> cliques_;
};

}  // namespace

std::vector<VertexSet> MaximalCliques(const Graph& graph) {
  if (graph.num_vertices() > 64) {
    throw ResourceExhausted("maximal cliques: more than 64 vertices");
  }
  return CliqueEnumerator(graph).Run(graph.num_vertices());
}

Clutter CliqueClutter(const Graph& graph) {
  return Clutter(graph.num_vertices(), MaximalCliques(graph));
}

namespace {

void CheckCaucParameters(int d, int g) {
  Require(d >= 2, "complete admissible uniform clutter: d must be >= 2");
  Require(g >= 2, "complete admissible uniform clutter: g must be >= 2");
  Require(static_cast<long long>(d) * g <= 64,
          "complete admissible uniform clutter: d*g must be <= 64");
}

int CaucIndex(int g, int k, int level) { return (level - 1) * g + (k - 1); }

std::vector<std::string> CaucLabels(int d, int g) {
  std::vector<std::string> labels(static_cast<size_t>(d) * g);
  for (int level = 1; level <= d; ++level) {
    for (int k = 1; k <= g; ++k) {
      labels[CaucIndex(g, k, level)] =
          "x" + std::to_string(k) + "^" + std::to_string(level);
    }
  }
  return labels;
}

}  // namespace

Clutter CompleteAdmissibleUniformClutter(int d, int g) {
  CheckCaucParameters(d, g);
  std::vector<VertexSet> edges;
  std::vector<int> tuple(d, 1);
  while (true) {
    VertexSet edge;
    for (int level = 1; level <= d; ++level) {
      edge.push_back(CaucIndex(g, tuple[level - 1], level));
    }
    edges.push_back(std::move(edge));
    // Next non-decreasing tuple in lexicographic order.
    int pos = d - 1;
    while (pos >= 0 && tuple[pos] == g) --pos;
    if (pos < 0) break;
    ++tuple[pos];
    for (int j = pos + 1; j < d; ++j) tuple[j] = tuple[pos];
  }
  return Clutter(d * g, CaucLabels(d, g), std::move(edges));
}

Poset CaucPoset(int d, int g) {
  CheckCaucParameters(d, g);
  std::vector<std::pair<Vertex, Vertex>> relation;
  for (int l = 1; l <= d; ++l) {
    for (int m = l + 1; m <= d; ++m) {
      for (int k = 1; k <= g; ++k) {
        for (int p = k; p <= g; ++p) {
          relation.emplace_back(CaucIndex(g, k, l), CaucIndex(g, p, m));
        }
      }
    }
  }
  return Poset(d * g, std::move(relation));
}

Clutter Duplicate(const Clutter& clutter, Vertex i) {
  const int n = clutter.num_vertices();
  Require(i >= 0 && i < n, "duplicate: vertex out of range");
  std::vector<std::string> labels = clutter.labels();
  labels.push_back(NextDuplicateLabel(labels, clutter.label(i)));
  std::vector<VertexSet> edges = clutter.edges();
  for (const auto& edge : clutter.edges()) {
    if (!std::binary_search(edge.begin(), edge.end(), i)) continue;
    VertexSet twin;
    for (Vertex v : edge) {
      if (v != i) twin.push_back(v);
    }
    twin.push_back(n);
    edges.push_back(std::move(twin));
  }
  // Duplication never creates containments; the constructor re-checks.
  return Clutter(n + 1, std::move(labels), std::move(edges));
}

Clutter Delete(const Clutter& clutter, Vertex i) {
  const int n = clutter.num_vertices();
  Require(i >= 0 && i < n, "delete: vertex out of range");
  std::vector<std::string> labels = clutter.labels();
  labels.erase(labels.begin() + i);
  std::vector<VertexSet> edges;
  for (const auto& edge : clutter.edges()) {
    if (std::binary_search(edge.begin(), edge.end(), i)) continue;
    VertexSet shifted;
    for (Vertex v : edge) shifted.push_back(v > i ? v - 1 : v);
    edges.push_back(std::move(shifted));
  }
  return Clutter(n - 1, std::move(labels), std::move(edges));
}

Clutter Parallelization(const Clutter& clutter, std::span<const int> weights) {
  const int n = clutter.num_vertices();
  Require(static_cast<int>(weights.size()) == n,
          "parallelization: weight vector length differs from vertex count");
  for (int w : weights) Require(w >= 0, "parallelization: negative weight");

  // copies[v] lists the final indices standing for original vertex v.
  std::vector<std::vector<Vertex>> copies(n);
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    if (weights[v] == 0) continue;
    copies[v].push_back(static_cast<Vertex>(labels.size()));
    labels.push_back(clutter.label(v));
  }
  for (int v = 0; v < n; ++v) {
    for (int k = 1; k < weights[v]; ++k) {
      copies[v].push_back(static_cast<Vertex>(labels.size()));
      labels.push_back(NextDuplicateLabel(labels, clutter.label(v)));
    }
  }

  std::vector<VertexSet> edges;
  for (const auto& edge : clutter.edges()) {
    bool survives = true;
    for (Vertex v : edge) survives = survives && weights[v] > 0;
    if (!survives) continue;
    // Every way of picking one copy per vertex of the edge.
    std::vector<size_t> choice(edge.size(), 0);
    while (true) {
      VertexSet image;
      image.reserve(edge.size());
      for (size_t j = 0; j < edge.size(); ++j) {
        image.push_back(copies[edge[j]][choice[j]]);
      }
      edges.push_back(std::move(image));
      size_t j = 0;
      while (j < edge.size() && ++choice[j] == copies[edge[j]].size()) {
        choice[j++] = 0;
      }
      if (j == edge.size()) break;
    }
    CheckDeadline();
  }
  const int size = static_cast<int>(labels.size());
  return Clutter(size, std::move(labels), std::move(edges));
}

Graph DuplicateVertex(const Graph& graph, Vertex i) {
  const int n = graph.num_vertices();
  Require(i >= 0 && i < n, "duplicate: vertex out of range");
  auto edges = graph.edges();
  for (int u = 0; u < n; ++u) {
    if (graph.Adjacent(i, u)) edges.emplace_back(u, n);
  }
  return Graph(n + 1, std::move(edges));
}

Graph DeleteVertex(const Graph& graph, Vertex i) {
  const int n = graph.num_vertices();
  Require(i >= 0 && i < n, "delete: vertex out of range");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : graph.edges()) {
    if (a == i || b == i) continue;
    edges.emplace_back(a > i ? a - 1 : a, b > i ? b - 1 : b);
  }
  return Graph(n - 1, std::move(edges));
}

Poset DuplicateElement(const Poset& poset, Vertex i) {
  const int n = poset.num_vertices();
  Require(i >= 0 && i < n, "duplicate: element out of range");
  auto relation = poset.relation();
  for (int x = 0; x < n; ++x) {
    if (poset.Less(i, x)) relation.emplace_back(n, x);
    if (poset.Less(x, i)) relation.emplace_back(x, n);
  }
  return Poset(n + 1, std::move(relation));
}

}  // namespace clutterlab
