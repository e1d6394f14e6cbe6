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

#include "clutterlab/packing.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clutterlab/errors.h"
#include "clutterlab/polyhedra.h"

namespace clutterlab {
namespace {

using Mask = std::uint64_t;

Mask Bit(int v) { return Mask{1} << v; }

VertexSet MaskToSet(Mask mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::vector<Mask> EdgeMasks(const Clutter& clutter) {
  if (clutter.num_vertices() > 64) {
    throw ResourceExhausted("packing: more than 64 vertices");
  }
  std::vector<Mask> masks;
  masks.reserve(clutter.num_edges());
  for (const auto& edge : clutter.edges()) {
    Mask m = 0;
    for (Vertex v : edge) m |= Bit(v);
    masks.push_back(m);
  }
  return masks;
}

// A greedy family of disjoint edges; its size bounds alpha0 from below.
int GreedyMatchingSize(const std::vector<Mask>& edges) {
  Mask used = 0;
  int count = 0;
  for (Mask e : edges) {
    if ((e & used) == 0) {
      used |= e;
      ++count;
    }
  }
  return count;
}

// Lexicographically least vertex cover with exactly `size` vertices.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Mask>& edges, int n) : edges_(edges), n_(n) {}

  std::optional<Mask> Find(int size) {
    size_ = size;
    if (Search(0, 0, 0)) return result_;
    return std::nullopt;
  }

 private:
  bool Search(int start, Mask chosen, int count) {
    CheckDeadline();
    // The unhit edge whose largest vertex is smallest bounds the next pick.
    int limit = n_;
    bool any_unhit = false;
    for (Mask e : edges_) {
      if ((e & chosen) != 0) continue;
      any_unhit = true;
      limit = std::min(limit, 63 - std::countl_zero(e));
    }
    if (!any_unhit) {
      if (count != size_) return false;
      result_ = chosen;
      return true;
    }
    if (count == size_) return false;
    for (int v = start; v <= limit; ++v) {
      if (Search(v + 1, chosen | Bit(v), count + 1)) return true;
    }
    return false;
  }

  const std::vector<Mask>& edges_;
  int n_;
  int size_ = 0;
  Mask result_ = 0;
};

// Lexicographically least list of `size` pairwise disjoint edges.
class MatchingSearch {
 public:
  explicit MatchingSearch(const std::vector<Mask>& edges) : edges_(edges) {
    min_size_ = 64;
    for (Mask e : edges_) min_size_ = std::min(min_size_, std::popcount(e));
  }

  std::optional<std::vector<int>> Find(int size, Mask universe) {
    size_ = size;
    picked_.clear();
    if (Search(0, universe)) return picked_;
    return std::nullopt;
  }

 private:
  bool Search(int start, Mask free) {
    CheckDeadline();
    const int needed = size_ - static_cast<int>(picked_.size());
    if (needed == 0) return true;
    if (static_cast<int>(edges_.size()) - start < needed) return false;
    if (std::popcount(free) < needed * min_size_) return false;
    for (int j = start; j < static_cast<int>(edges_.size()); ++j) {
      if ((edges_[j] & ~free) != 0) continue;
      picked_.push_back(j);
      if (Search(j + 1, free & ~edges_[j])) return true;
      picked_.pop_back();
    }
    return false;
  }

  const std::vector<Mask>& edges_;
  int min_size_;
  int size_ = 0;
  std::vector<int> picked_;
};

Mask Universe(int n) { return n == 64 ? ~Mask{0} : Bit(n) - 1; }

std::pair<int, Mask> MinimumCover(const std::vector<Mask>& edges, int n) {
  if (edges.empty()) return {0, 0};
  CoverSearch search(edges, n);
  for (int size = GreedyMatchingSize(edges); size <= n; ++size) {
    if (auto found = search.Find(size)) return {size, *found};
  }
  throw ConsistencyError("vertex cover: none found");
}

std::vector<int> MaximumMatchingIndices(const std::vector<Mask>& edges, int n,
                                        int upper_bound) {
  if (edges.empty()) return {};
  MatchingSearch search(edges);
  for (int size = upper_bound; size >= 1; --size) {
    if (auto found = search.Find(size, Universe(n))) return *found;
  }
  throw ConsistencyError("matching: none found in a non-empty clutter");
}

}  // namespace

std::vector<VertexSet> MinimalVertexCovers(const Clutter& clutter) {
  const std::vector<Mask> edges = EdgeMasks(clutter);
  std::set<VertexSet> found;
  // Branch on the vertices of the first unhit edge; vertices tried earlier
  // in the same edge are forbidden in later branches.
  auto is_minimal = [&](Mask cover) {
    for (Mask rest = cover; rest != 0; rest &= rest - 1) {
      const Mask v = rest & -rest;
      bool has_private_edge = false;
      for (Mask e : edges) {
        if ((e & cover) == v) {
          has_private_edge = true;
          break;
        }
      }
      if (!has_private_edge) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, Mask cover, Mask forbidden) -> void {
    CheckDeadline();
    const Mask* unhit = nullptr;
    for (const Mask& e : edges) {
      if ((e & cover) == 0) {
        unhit = &e;
        break;
      }
    }
    if (unhit == nullptr) {
      if (is_minimal(cover)) found.insert(MaskToSet(cover));
      return;
    }
    Mask options = *unhit & ~forbidden;
    Mask tried = 0;
    while (options != 0) {
      const Mask v = options & -options;
      options &= options - 1;
      self(self, cover | v, forbidden | tried);
      tried |= v;
    }
  };
  search(search, 0, 0);
  return {found.begin(), found.end()};
}

VertexSet MinimumVertexCover(const Clutter& clutter) {
  return MaskToSet(MinimumCover(EdgeMasks(clutter), clutter.num_vertices()).second);
}

std::vector<VertexSet> MaximumMatching(const Clutter& clutter) {
  const std::vector<Mask> edges = EdgeMasks(clutter);
  const int alpha0 = MinimumCover(edges, clutter.num_vertices()).first;
  std::vector<VertexSet> out;
  for (int j : MaximumMatchingIndices(edges, clutter.num_vertices(), alpha0)) {
    out.push_back(clutter.edges()[j]);
  }
  return out;
}

int Alpha0(const Clutter& clutter) {
  return MinimumCover(EdgeMasks(clutter), clutter.num_vertices()).first;
}

int Beta1(const Clutter& clutter) {
  return static_cast<int>(MaximumMatching(clutter).size());
}

KonigCertificate KonigHolds(const Clutter& clutter) {
  const std::vector<Mask> edges = EdgeMasks(clutter);
  const int n = clutter.num_vertices();
  KonigCertificate cert;
  const auto [alpha0, cover] = MinimumCover(edges, n);
  cert.alpha0 = alpha0;
  cert.cover = MaskToSet(cover);
  Mask used = 0;
  for (int j : MaximumMatchingIndices(edges, n, alpha0)) {
    Ensure((edges[j] & used) == 0, "konig: matching edges overlap");
    used |= edges[j];
    cert.matching.push_back(clutter.edges()[j]);
  }
  cert.beta1 = static_cast<int>(cert.matching.size());
  for (Mask e : edges) Ensure((e & cover) != 0, "konig: cover misses an edge");
  Ensure(cert.beta1 <= cert.alpha0, "konig: beta1 exceeds alpha0");
  return cert;
}

MfmcCertificate MfmcBounded(const Clutter& clutter, int wmax) {
  Require(wmax >= 1, "mfmc: wmax must be >= 1");
  MfmcCertificate cert;
  cert.wmax = wmax;
  const int n = clutter.num_vertices();
  WeightVector w(n, 0);
  while (true) {
    ++cert.weights_checked;
    KonigCertificate konig = KonigHolds(Parallelization(clutter, w));
    if (!konig.holds()) {
      cert.holds = false;
      cert.counterexample = w;
      cert.counterexample_certificate = std::move(konig);
      return cert;
    }
    int i = n - 1;
    while (i >= 0 && w[i] == wmax) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return cert;
}

// ----------------------------------------------------------- LP duality

LpDualityVerdict LpDualityIntegerCheck(const Clutter& clutter,
                                       std::span<const int> w) {
  if (clutter.num_edges() == 0) return LpDualityIntegerCheck(clutter, {}, w);
  return LpDualityIntegerCheck(
      clutter, Vertices(CoveringPolyhedron(IncidenceMatrix::OfClutter(clutter))),
      w);
}

LpDualityVerdict LpDualityIntegerCheck(
    const Clutter& clutter, const std::vector<RationalVector>& covering_vertices,
    std::span<const int> w) {
  const int n = clutter.num_vertices();
  Require(static_cast<int>(w.size()) == n, "lp duality: w has wrong length");
  for (int v : w) Require(v >= 0, "lp duality: negative weight");
  Require(n <= 24, "lp duality: integer enumeration limited to 24 vertices");
  LpDualityVerdict verdict;
  if (clutter.num_edges() == 0) {
    verdict.lp_min = 0;
    verdict.lp_max = 0;
    verdict.primal_solution.assign(n, Rational(0));
    return verdict;
  }
  const IncidenceMatrix a = IncidenceMatrix::OfClutter(clutter);

  std::optional<Rational> best;
  for (const auto& vertex : covering_vertices) {
    Rational value = 0;
    for (int i = 0; i < n; ++i) value += w[i] * vertex[i];
    if (!best.has_value() || value < *best) {
      best = value;
      verdict.primal_solution = vertex;
    }
  }
  Ensure(best.has_value(), "lp duality: covering polyhedron has no vertex");
  verdict.lp_min = *best;

  const LpResult dual = PackingLp(a, w);
  Ensure(dual.status == LpStatus::kOptimal, "lp duality: packing LP not optimal");
  verdict.lp_max = dual.value;
  verdict.dual_solution = dual.solution;
  Ensure(verdict.lp_min == verdict.lp_max,
         "lp duality: primal " + ToString(verdict.lp_min) + " != dual " +
             ToString(verdict.lp_max));

  // Integer covers can be capped at 1 per coordinate; enumerate {0,1}^n.
  const std::vector<Mask> edges = EdgeMasks(clutter);
  int integer_min = std::numeric_limits<int>::max();
  Mask best_cover = 0;
  for (Mask x = 0; x <= Universe(n); ++x) {
    CheckDeadline();
    bool covers = true;
    for (Mask e : edges) {
      if ((e & x) == 0) {
        covers = false;
        break;
      }
    }
    if (covers) {
      int value = 0;
      for (Mask rest = x; rest != 0; rest &= rest - 1) {
        value += w[std::countr_zero(rest)];
      }
      if (value < integer_min) {
        integer_min = value;
        best_cover = x;
      }
    }
    if (x == Universe(n)) break;
  }
  verdict.integer_min = integer_min;
  verdict.integer_cover = MaskToSet(best_cover);
  verdict.integer_max = PackingIlp(a, w);
  Ensure(verdict.integer_max <= verdict.lp_max &&
             verdict.lp_min <= verdict.integer_min,
         "lp duality: integer optimum beyond LP optimum");
  return verdict;
}

// --------------------------------------------------------------- Menger

MengerInstance BuildMengerInstance(const Poset& poset, std::span<const int> w) {
  const int n = poset.num_vertices();
  Require(static_cast<int>(w.size()) == n, "menger: w has wrong length");
  MengerInstance inst;
  Poset parallel = poset;
  for (int i = 0; i < n; ++i) {
    Require(w[i] >= 0, "menger: negative weight");
    for (int k = 1; k < w[i]; ++k) parallel = DuplicateElement(parallel, i);
    if (w[i] == 0) inst.deleted.push_back(i);
  }
  const int total = parallel.num_vertices();
  std::vector<char> deleted(total, 0);
  for (Vertex v : inst.deleted) deleted[v] = 1;
  for (int v = 0; v < total; ++v) {
    if (!deleted[v]) inst.vertices.push_back(v);
  }
  for (Vertex x : inst.vertices) {
    for (Vertex y : inst.vertices) {
      if (!parallel.Less(x, y)) continue;
      bool covering = true;
      for (int z = 0; z < total && covering; ++z) {
        covering = !(parallel.Less(x, z) && parallel.Less(z, y));
      }
      if (covering) inst.arcs.emplace_back(x, y);
    }
  }
  for (Vertex v : parallel.MinimalElements()) {
    if (!deleted[v]) inst.sources.push_back(v);
  }
  for (Vertex v : parallel.MaximalElements()) {
    if (!deleted[v]) inst.sinks.push_back(v);
  }
  inst.parallel = std::move(parallel);
  return inst;
}

namespace {

// Edmonds-Karp on a small dense-indexed graph.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  void AddArc(int from, int to, int capacity) {
    arcs_.push_back({to, head_[from], capacity});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int MaxFlow(int source, int sink) {
    int flow = 0;
    while (true) {
      std::vector<int> via(head_.size(), -1);
      std::deque<int> queue{source};
      std::vector<char> seen(head_.size(), 0);
      seen[source] = 1;
      while (!queue.empty() && !seen[sink]) {
        const int u = queue.front();
        queue.pop_front();
        for (int a = head_[u]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].residual > 0 && !seen[arcs_[a].to]) {
            seen[arcs_[a].to] = 1;
            via[arcs_[a].to] = a;
            queue.push_back(arcs_[a].to);
          }
        }
      }
      if (!seen[sink]) return flow;
      for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].residual -= 1;
        arcs_[via[v] ^ 1].residual += 1;
      }
      ++flow;
      CheckDeadline();
    }
  }

  std::vector<char> ResidualReachable(int source) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].residual > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

  // Forward arcs out of `node` currently carrying flow, with their heads.
  std::vector<int> FlowSuccessors(int node) const {
    std::vector<int> out;
    for (int a = head_[node]; a != -1; a = arcs_[a].next) {
      if ((a & 1) == 0 && arcs_[a ^ 1].residual > 0) out.push_back(arcs_[a].to);
    }
    return out;
  }

 private:
  struct Arc {
    int to;
    int next;
    int residual;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

MengerResult MengerOracle(const Poset& poset, std::span<const int> w) {
  MengerResult result;
  result.instance = BuildMengerInstance(poset, w);
  const MengerInstance& inst = result.instance;
  const int total = inst.parallel.num_vertices();

  // Node 2v is v_in, node 2v+1 is v_out; arcs other than v_in -> v_out get
  // a capacity no cut can afford, so minimum cuts consist of vertices.
  const int source = 2 * total;
  const int sink = 2 * total + 1;
  const int big = total + 1;
  FlowNetwork network(2 * total + 2);
  for (Vertex v : inst.vertices) network.AddArc(2 * v, 2 * v + 1, 1);
  for (const auto& [x, y] : inst.arcs) network.AddArc(2 * x + 1, 2 * y, big);
  for (Vertex a : inst.sources) network.AddArc(source, 2 * a, big);
  for (Vertex b : inst.sinks) network.AddArc(2 * b + 1, sink, big);
  const int flow = network.MaxFlow(source, sink);

  const std::vector<char> reach = network.ResidualReachable(source);
  VertexSet cut;
  for (Vertex v : inst.vertices) {
    if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
  }

  // Unit vertex capacities make the flow decompose into disjoint paths.
  std::vector<VertexSet> paths;
  for (int start : network.FlowSuccessors(source)) {
    VertexSet path;
    int node = start;
    while (node != sink) {
      const Vertex v = node / 2;
      path.push_back(v);
      const auto next = network.FlowSuccessors(2 * v + 1);
      Ensure(next.size() == 1, "menger: flow does not decompose into paths");
      node = next.front();
    }
    std::sort(path.begin(), path.end());
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());

  Ensure(static_cast<int>(paths.size()) == flow, "menger: path count != flow");
  Ensure(static_cast<int>(cut.size()) == flow,
         "menger: disconnecting set size " + std::to_string(cut.size()) +
             " != max disjoint paths " + std::to_string(flow));

  // Enumerate every source-sink path of the acyclic digraph.
  std::vector<std::vector<Vertex>> out(total);
  for (const auto& [x, y] : inst.arcs) out[x].push_back(y);
  std::vector<char> is_sink(total, 0);
  for (Vertex b : inst.sinks) is_sink[b] = 1;
  std::set<VertexSet> all_paths;
  std::vector<Vertex> stack;
  auto walk = [&](auto&& self, Vertex v) -> void {
    CheckDeadline();
    stack.push_back(v);
    if (is_sink[v]) {
      VertexSet members = stack;
      std::sort(members.begin(), members.end());
      all_paths.insert(std::move(members));
    }
    for (Vertex next : out[v]) self(self, next);
    stack.pop_back();
  };
  for (Vertex a : inst.sources) walk(walk, a);
  result.all_paths.assign(all_paths.begin(), all_paths.end());

  // The cut must meet every path.
  for (const auto& path : result.all_paths) {
    bool hit = false;
    for (Vertex v : path) hit = hit || std::binary_search(cut.begin(), cut.end(), v);
    Ensure(hit, "menger: disconnecting set misses a path");
  }

  // Paths are the maximal cliques of the parallelized comparability graph
  // that avoid every deleted element.
  std::vector<VertexSet> cliques;
  for (auto& clique : MaximalCliques(ComparabilityGraph(inst.parallel))) {
    bool avoids = true;
    for (Vertex v : clique) {
      avoids = avoids && !std::binary_search(inst.deleted.begin(),
                                             inst.deleted.end(), v);
    }
    if (avoids) cliques.push_back(std::move(clique));
  }
  Ensure(cliques == result.all_paths,
         "menger: source-sink paths differ from the maximal cliques avoiding "
         "deleted elements");

  result.certificate.alpha0 = static_cast<int>(cut.size());
  result.certificate.cover = std::move(cut);
  result.certificate.beta1 = flow;
  result.certificate.matching = std::move(paths);
  return result;
}

std::vector<std::vector<Vertex>> CliqueChains(const Poset& poset) {
  std::vector<std::vector<Vertex>> chains;
  for (auto clique : MaximalCliques(ComparabilityGraph(poset))) {
    // Within a clique the order is total, so counting predecessors ranks it.
    std::vector<std::pair<int, Vertex>> ranked;
    for (Vertex v : clique) {
      int below = 0;
      for (Vertex u : clique) below += poset.Less(u, v) ? 1 : 0;
      ranked.emplace_back(below, v);
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<Vertex> chain;
    for (const auto& [rank, v] : ranked) chain.push_back(v);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      Ensure(poset.Less(chain[i], chain[i + 1]),
             "clique chains: clique is not a chain");
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

}  // namespace clutterlab
