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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "clutterlab/certify.h"
#include "clutterlab/errors.h"
#include "oracles.h"

namespace clutterlab {
namespace {

Graph Cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph Complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph RandomGraph(int n, SeededRng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Coin()) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

// a=0, b=1, c=2, d=3.
Poset Diamond() { return Poset(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}); }

std::vector<std::vector<int>> Edges(const Clutter& c) { return c.edges(); }

TEST(GraphTest, NormalizesAndValidates) {
  const Graph g(3, {{2, 1}, {0, 1}});
  EXPECT_EQ(g.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(g.Adjacent(1, 2));
  EXPECT_FALSE(g.Adjacent(0, 2));
  EXPECT_THROW(Graph(2, {{0, 0}}), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 2}}), InvalidInput);
}

TEST(PosetTest, ValidatesOrderAxioms) {
  EXPECT_THROW(Poset(2, {{0, 0}}), InvalidInput);
  EXPECT_THROW(Poset(2, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Poset(3, {{0, 1}, {1, 2}}), InvalidInput);
  EXPECT_THROW(Poset::FromTransitiveClosure(3, {{0, 1}, {1, 2}, {2, 0}}), InvalidInput);
  const Poset chain = Poset::FromTransitiveClosure(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(chain.relation(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(chain.Less(0, 2));
  EXPECT_FALSE(chain.Less(2, 0));
}

TEST(ComparabilityGraphTest, Examples) {
  const Poset chain(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(ComparabilityGraph(chain), Complete(3));
  EXPECT_TRUE(ComparabilityGraph(Poset(3, {})).edges().empty());
  EXPECT_EQ(ComparabilityGraph(Diamond()).edges(),
            (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}));
}

TEST(ComparabilityGraphTest, EdgeIffExactlyOneOrientation) {
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : AllPosets(n)) {
      const Graph g = ComparabilityGraph(p);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const bool ij = p.Less(i, j), ji = p.Less(j, i);
          EXPECT_FALSE(ij && ji);
          EXPECT_EQ(g.Adjacent(i, j), ij != ji);
        }
      }
    }
  }
}

TEST(CliqueClutterTest, Examples) {
  EXPECT_EQ(Edges(CliqueClutter(Complete(3))), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(Edges(CliqueClutter(Cycle(5))),
            (std::vector<VertexSet>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(Edges(CliqueClutter(ComparabilityGraph(Diamond()))),
            (std::vector<VertexSet>{{0, 1, 3}, {0, 2, 3}}));
  // An isolated vertex is a maximal clique of size one.
  EXPECT_EQ(Edges(CliqueClutter(Graph(3, {{0, 1}}))), (std::vector<VertexSet>{{0, 1}, {2}}));
}

TEST(CliqueClutterTest, MatchesSubsetEnumeration) {
  SeededRng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = RandomGraph(rng.Uniform(1, 12), rng);
    const auto cliques = MaximalCliques(g);
    EXPECT_EQ(cliques, oracle::MaximalCliques(g.num_vertices(), g.edges()));
    for (size_t a = 0; a < cliques.size(); ++a) {
      for (size_t b = 0; b < cliques.size(); ++b) {
        if (a == b) continue;
        EXPECT_FALSE(std::includes(cliques[a].begin(), cliques[a].end(), cliques[b].begin(),
                                   cliques[b].end()));
      }
    }
  }
}

TEST(CliqueClutterTest, RejectsMoreThan64Vertices) {
  EXPECT_THROW(MaximalCliques(Graph(65, {})), ResourceExhausted);
}

TEST(ClutterTest, ValidatesAndCanonicalizes) {
  const Clutter c(4, {{3, 1}, {0, 2}});
  EXPECT_EQ(c.edges(), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
  EXPECT_EQ(c.label(3), "x3");
  EXPECT_THROW(Clutter(3, {{0, 1}, {0, 1, 2}}), InvalidInput);
  EXPECT_THROW(Clutter(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Clutter(3, {{}}), InvalidInput);
  EXPECT_THROW(Clutter(3, {{0, 3}}), InvalidInput);
  EXPECT_THROW(Clutter(2, {"a", "a"}, {{0, 1}}), InvalidInput);
  const Clutter m = Clutter::Minimalized(3, DefaultLabels(3), {{0, 1, 2}, {1}, {1}, {0, 2}});
  EXPECT_EQ(m.edges(), (std::vector<VertexSet>{{0, 2}, {1}}));
}

TEST(CaucTest, SmallExamples) {
  // x_k^l has index (l-1)g + (k-1): x1^1=0, x2^1=1, x1^2=2, x2^2=3.
  const Clutter c = CompleteAdmissibleUniformClutter(2, 2);
  EXPECT_EQ(c.edges(), (std::vector<VertexSet>{{0, 2}, {0, 3}, {1, 3}}));
  EXPECT_EQ(c.labels(), (std::vector<std::string>{"x1^1", "x2^1", "x1^2", "x2^2"}));
  EXPECT_EQ(CompleteAdmissibleUniformClutter(2, 3).num_edges(), 6);
  EXPECT_EQ(CompleteAdmissibleUniformClutter(3, 2).num_edges(), 4);
  EXPECT_THROW(CompleteAdmissibleUniformClutter(1, 3), InvalidInput);
  EXPECT_THROW(CompleteAdmissibleUniformClutter(3, 1), InvalidInput);
  EXPECT_THROW(CaucPoset(1, 2), InvalidInput);
}

long Binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(CaucTest, EdgeCountUniformityAndRoundTrip) {
  for (int d = 2; d <= 4; ++d) {
    for (int g = 2; g <= 4; ++g) {
      const Clutter c = CompleteAdmissibleUniformClutter(d, g);
      EXPECT_EQ(c.num_vertices(), d * g);
      EXPECT_EQ(c.num_edges(), Binomial(g + d - 1, d)) << d << "," << g;
      for (const auto& e : c.edges()) EXPECT_EQ(static_cast<int>(e.size()), d);
      EXPECT_TRUE(SameEdges(CliqueClutter(ComparabilityGraph(CaucPoset(d, g))), c))
          << d << "," << g;
    }
  }
}

TEST(CaucTest, PosetRelation) {
  EXPECT_EQ(CaucPoset(2, 2).relation(),
            (std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {0, 3}, {1, 3}}));
  // x_k^l < x_p^m iff l < m and k <= p, checked pairwise on CAUC(3,3).
  const Poset p = CaucPoset(3, 3);
  for (int l = 1; l <= 3; ++l) {
    for (int k = 1; k <= 3; ++k) {
      for (int m = 1; m <= 3; ++m) {
        for (int q = 1; q <= 3; ++q) {
          EXPECT_EQ(p.Less((l - 1) * 3 + k - 1, (m - 1) * 3 + q - 1), l < m && k <= q);
        }
      }
    }
  }
}

TEST(DuplicateTest, Examples) {
  const Clutter one = Duplicate(Clutter(2, {{0, 1}}), 0);
  EXPECT_EQ(one.edges(), (std::vector<VertexSet>{{0, 1}, {1, 2}}));
  EXPECT_EQ(one.label(2), "x0'1");
  const Clutter tri = Duplicate(Clutter(3, {{0, 1, 2}}), 0);
  EXPECT_EQ(tri.edges(), (std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}}));
  const Clutter isolated = Duplicate(Clutter(3, {{0, 1}}), 2);
  EXPECT_EQ(isolated.num_vertices(), 4);
  EXPECT_EQ(isolated.edges(), (std::vector<VertexSet>{{0, 1}}));
  // A second copy takes the next free suffix.
  EXPECT_EQ(Duplicate(one, 0).label(3), "x0'2");
}

TEST(DeleteTest, TriangleCounterexample) {
  const Graph k3 = Complete(3);
  const Clutter deleted = Delete(CliqueClutter(k3), 0);
  EXPECT_EQ(deleted.num_vertices(), 2);
  EXPECT_TRUE(deleted.edges().empty());
  EXPECT_EQ(deleted.labels(), (std::vector<std::string>{"x1", "x2"}));
  const Clutter of_deleted = CliqueClutter(DeleteVertex(k3, 0));
  EXPECT_EQ(of_deleted.edges(), (std::vector<VertexSet>{{0, 1}}));
  EXPECT_FALSE(SameEdges(deleted, of_deleted));
  EXPECT_EQ(Delete(Clutter(3, {{0, 1}}), 2).edges(), (std::vector<VertexSet>{{0, 1}}));
}

TEST(ParallelizationTest, Examples) {
  const Clutter c5 = CliqueClutter(Cycle(5));
  EXPECT_EQ(Parallelization(c5, std::vector<int>{1, 1, 1, 1, 1}), c5);
  const Clutter zero = Parallelization(c5, std::vector<int>(5, 0));
  EXPECT_EQ(zero.num_vertices(), 0);
  EXPECT_TRUE(zero.edges().empty());
  const Clutter w = Parallelization(c5, std::vector<int>{2, 1, 1, 1, 1});
  EXPECT_EQ(w.num_vertices(), 6);
  EXPECT_EQ(w.num_edges(), 7);
  EXPECT_THROW(Parallelization(c5, std::vector<int>{1, 1}), InvalidInput);
  EXPECT_THROW(Parallelization(c5, std::vector<int>{1, 1, 1, 1, -1}), InvalidInput);
}

Vertex IndexOf(const Clutter& c, const std::string& label) {
  const auto& labels = c.labels();
  return static_cast<Vertex>(std::find(labels.begin(), labels.end(), label) - labels.begin());
}

TEST(ParallelizationTest, IndependentOfOperationOrder) {
  SeededRng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.Uniform(1, 6);
    std::vector<VertexSet> edges;
    for (int e = rng.Uniform(1, 6); e > 0; --e) {
      edges.push_back(oracle::MaskToSet(rng.Uniform(1, (1 << n) - 1), n));
    }
    const Clutter c = Clutter::Minimalized(n, DefaultLabels(n), edges);
    std::vector<int> w(n);
    for (int& x : w) x = rng.Uniform(0, 3);
    // One entry per elementary operation, named by the original label.
    std::vector<std::pair<bool, std::string>> ops;
    for (int v = 0; v < n; ++v) {
      if (w[v] == 0) ops.emplace_back(false, c.label(v));
      for (int k = 1; k < w[v]; ++k) ops.emplace_back(true, c.label(v));
    }
    for (int i = static_cast<int>(ops.size()) - 1; i > 0; --i) {
      std::swap(ops[i], ops[rng.Uniform(0, i)]);
    }
    Clutter sequential = c;
    for (const auto& [duplicate, label] : ops) {
      const Vertex v = IndexOf(sequential, label);
      sequential = duplicate ? Duplicate(sequential, v) : Delete(sequential, v);
    }
    const Clutter direct = Parallelization(c, w);
    EXPECT_EQ(direct.LabeledEdges(), sequential.LabeledEdges());
    auto sorted = [](std::vector<std::string> l) {
      std::sort(l.begin(), l.end());
      return l;
    };
    EXPECT_EQ(sorted(direct.labels()), sorted(sequential.labels()));
  }
}

TEST(DuplicationCommutesTest, RandomGraphs) {
  SeededRng rng(35);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = RandomGraph(rng.Uniform(1, 8), rng);
    const Clutter cl = CliqueClutter(g);
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
      EXPECT_TRUE(SameEdges(Duplicate(cl, i), CliqueClutter(DuplicateVertex(g, i))));
    }
  }
}

TEST(DuplicateElementTest, ComparabilityGraphOfDuplicateIsDuplicateVertex) {
  for (const Poset& p : AllPosets(4)) {
    const Graph g = ComparabilityGraph(p);
    for (Vertex i = 0; i < 4; ++i) {
      EXPECT_EQ(ComparabilityGraph(DuplicateElement(p, i)), DuplicateVertex(g, i));
    }
  }
}

}  // namespace
}  // namespace clutterlab
