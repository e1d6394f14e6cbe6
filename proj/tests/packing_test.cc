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

#include <gtest/gtest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "clutterlab/certify.h"
#include "clutterlab/errors.h"
#include "clutterlab/polyhedra.h"
#include "oracles.h"

namespace clutterlab {
namespace {

Clutter C5() { return Clutter(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
Clutter Triangle() { return Clutter(3, {{0, 1, 2}}); }
Clutter DiamondCliques() { return Clutter(4, {{0, 1, 3}, {0, 2, 3}}); }
Poset Diamond() { return Poset(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}); }

Clutter RandomClutter(SeededRng& rng, int max_n, int max_edges) {
  const int n = rng.Uniform(1, max_n);
  std::vector<VertexSet> edges;
  for (int e = rng.Uniform(1, max_edges); e > 0; --e) {
    edges.push_back(oracle::MaskToSet(rng.Uniform(1, (1 << n) - 1), n));
  }
  return Clutter::Minimalized(n, DefaultLabels(n), edges);
}

// Lexicographically least list of beta1 pairwise disjoint edges.
std::vector<VertexSet> LeastMaximumMatching(const Clutter& c) {
  const int q = c.num_edges();
  const int size = oracle::MaximumMatching(c.edges());
  std::optional<std::vector<VertexSet>> best;
  for (std::uint32_t m = 0; m < (1u << q); ++m) {
    if (__builtin_popcount(m) != size) continue;
    std::vector<VertexSet> pick;
    std::uint32_t used = 0;
    bool disjoint = true;
    for (int j = 0; j < q && disjoint; ++j) {
      if (!(m >> j & 1)) continue;
      const std::uint32_t e = oracle::SetToMask(c.edges()[j]);
      disjoint = (e & used) == 0;
      used |= e;
      pick.push_back(c.edges()[j]);
    }
    if (disjoint && (!best || pick < *best)) best = pick;
  }
  return best.value_or(std::vector<VertexSet>{});
}

TEST(MinimalVertexCoversTest, Examples) {
  EXPECT_EQ(MinimalVertexCovers(Triangle()), (std::vector<VertexSet>{{0}, {1}, {2}}));
  const auto c5 = MinimalVertexCovers(C5());
  EXPECT_EQ(c5.size(), 5u);
  for (const auto& c : c5) EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(MinimalVertexCovers(Clutter(3, std::vector<VertexSet>{})),
            (std::vector<VertexSet>{{}}));
}

TEST(MinimalVertexCoversTest, MatchesSubsetEnumeration) {
  SeededRng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Clutter c = RandomClutter(rng, 10, 10);
    EXPECT_EQ(MinimalVertexCovers(c), oracle::MinimalCovers(c.num_vertices(), c.edges()));
  }
}

TEST(KonigTest, Examples) {
  const KonigCertificate c5 = KonigHolds(C5());
  EXPECT_EQ(c5.alpha0, 3);
  EXPECT_EQ(c5.beta1, 2);
  EXPECT_FALSE(c5.holds());
  const KonigCertificate tri = KonigHolds(Triangle());
  EXPECT_EQ(tri.alpha0, 1);
  EXPECT_EQ(tri.beta1, 1);
  EXPECT_TRUE(tri.holds());
  const KonigCertificate diamond = KonigHolds(DiamondCliques());
  EXPECT_EQ(diamond.alpha0, 1);
  EXPECT_EQ(diamond.beta1, 1);
  EXPECT_EQ(diamond.cover, (VertexSet{0}));
  EXPECT_EQ(Alpha0(C5()), 3);
  EXPECT_EQ(Beta1(C5()), 2);
}

TEST(KonigTest, WitnessesMatchOracleAndAreLexLeast) {
  SeededRng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Clutter c = RandomClutter(rng, 9, 9);
    const KonigCertificate k = KonigHolds(c);
    const auto [alpha0, cover] = oracle::MinimumCover(c.num_vertices(), c.edges());
    EXPECT_EQ(k.alpha0, alpha0);
    EXPECT_EQ(k.cover, cover);
    EXPECT_EQ(k.beta1, oracle::MaximumMatching(c.edges()));
    EXPECT_EQ(k.matching, LeastMaximumMatching(c));
    EXPECT_LE(k.beta1, k.alpha0);
    EXPECT_EQ(static_cast<int>(k.cover.size()), k.alpha0);
    EXPECT_EQ(static_cast<int>(k.matching.size()), k.beta1);
  }
}

TEST(MfmcTest, Examples) {
  const MfmcCertificate c5 = MfmcBounded(C5(), 1);
  EXPECT_FALSE(c5.holds);
  EXPECT_EQ(*c5.counterexample, (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(c5.counterexample_certificate->alpha0, 3);
  const MfmcCertificate edge = MfmcBounded(Clutter(2, {{0, 1}}), 3);
  EXPECT_TRUE(edge.holds);
  EXPECT_EQ(edge.weights_checked, 16u);
  EXPECT_THROW(MfmcBounded(C5(), 0), InvalidInput);
}

TEST(MfmcTest, StopsAtLexicographicallyFirstFailure) {
  // C5 with a pendant edge: the first failing w must be the lex-least one
  // found by scanning the whole grid.
  const Clutter c(6, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  const MfmcCertificate m = MfmcBounded(c, 1);
  ASSERT_FALSE(m.holds);
  for (const auto& w : WeightGrid(6, 1)) {
    if (!KonigHolds(Parallelization(c, w)).holds()) {
      EXPECT_EQ(*m.counterexample, w);
      break;
    }
  }
}

TEST(MfmcTest, ComparabilityCliqueClutters) {
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : AllPosets(n)) {
      EXPECT_TRUE(MfmcBounded(CliqueClutter(ComparabilityGraph(p)), 2).holds);
    }
  }
  for (const Poset& p : PosetGenerator(5, 30, 2)) {
    EXPECT_TRUE(MfmcBounded(CliqueClutter(ComparabilityGraph(p)), 2).holds);
  }
}

TEST(LpDualityTest, Examples) {
  const LpDualityVerdict tri = LpDualityIntegerCheck(Triangle(), std::vector<int>{1, 1, 1});
  EXPECT_EQ(tri.lp_min, 1);
  EXPECT_EQ(tri.lp_max, 1);
  EXPECT_TRUE(tri.integral());
  const LpDualityVerdict c5 = LpDualityIntegerCheck(C5(), std::vector<int>(5, 1));
  EXPECT_EQ(c5.lp_min, Rational(5, 2));
  EXPECT_EQ(c5.lp_max, Rational(5, 2));
  EXPECT_EQ(c5.integer_max, 2);
  EXPECT_EQ(c5.integer_min, 3);
  EXPECT_FALSE(c5.integral());
  const LpDualityVerdict diamond = LpDualityIntegerCheck(DiamondCliques(), std::vector<int>(4, 1));
  EXPECT_EQ(diamond.lp_min, 1);
  EXPECT_TRUE(diamond.integral());
}

TEST(LpDualityTest, IntegerOptimaMatchOraclesAndKonigOfParallelization) {
  SeededRng rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const Clutter c = RandomClutter(rng, 5, 6);
    std::vector<int> w(c.num_vertices());
    for (int& x : w) x = rng.Uniform(0, 3);
    const LpDualityVerdict lp = LpDualityIntegerCheck(c, w);
    EXPECT_EQ(lp.lp_min, lp.lp_max);
    EXPECT_EQ(lp.integer_min, oracle::MinWeightCover(c.num_vertices(), c.edges(), w));
    EXPECT_EQ(lp.integer_max, oracle::MaxWeightedPacking(c.edges(), w));
    EXPECT_LE(lp.integer_max, lp.lp_max);
    EXPECT_GE(lp.integer_min, lp.lp_min);
    const KonigCertificate k = KonigHolds(Parallelization(c, w));
    EXPECT_EQ(lp.integer_min, k.alpha0);
    EXPECT_EQ(lp.integer_max, k.beta1);
    EXPECT_EQ(lp.integral(), k.holds());
  }
}

TEST(MengerTest, Examples) {
  const MengerResult chain = MengerOracle(Poset(3, {{0, 1}, {0, 2}, {1, 2}}), std::vector<int>{1, 1, 1});
  EXPECT_EQ(chain.certificate.beta1, 1);
  EXPECT_EQ(chain.certificate.alpha0, 1);
  EXPECT_EQ(chain.all_paths, (std::vector<VertexSet>{{0, 1, 2}}));
  const MengerResult diamond = MengerOracle(Diamond(), std::vector<int>{1, 1, 1, 1});
  EXPECT_EQ(diamond.certificate.beta1, 1);
  EXPECT_EQ(diamond.certificate.alpha0, 1);
  EXPECT_TRUE(diamond.certificate.cover == VertexSet{0} || diamond.certificate.cover == VertexSet{3});
  const MengerResult cauc = MengerOracle(CaucPoset(2, 2), std::vector<int>{1, 1, 1, 1});
  EXPECT_EQ(cauc.all_paths.size(), 3u);
  EXPECT_EQ(cauc.certificate.beta1, 2);
  EXPECT_EQ(cauc.certificate.alpha0, 2);
}

TEST(MengerTest, AllWeightsZeroLeavesNothing) {
  const MengerResult m = MengerOracle(Diamond(), std::vector<int>{0, 0, 0, 0});
  EXPECT_EQ(m.certificate.beta1, 0);
  EXPECT_EQ(m.certificate.alpha0, 0);
  EXPECT_TRUE(m.all_paths.empty());
}

TEST(MengerTest, ArcsAreCoveringPairs) {
  for (const Poset& p : AllPosets(4)) {
    const MengerInstance inst = BuildMengerInstance(p, std::vector<int>{2, 1, 0, 1});
    const Poset& q = inst.parallel;
    std::vector<std::pair<Vertex, Vertex>> expected;
    for (Vertex x : inst.vertices) {
      for (Vertex y : inst.vertices) {
        if (!q.Less(x, y)) continue;
        bool covering = true;
        for (Vertex z = 0; z < q.num_vertices(); ++z) {
          if (q.Less(x, z) && q.Less(z, y)) covering = false;
        }
        if (covering) expected.emplace_back(x, y);
      }
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(inst.arcs, expected);
    EXPECT_EQ(inst.deleted, (VertexSet{2}));
  }
}

TEST(MengerTest, AgreesWithKonigOfParallelizedCliqueClutter) {
  auto check = [](const Poset& p, int wmax) {
    const Clutter cl = CliqueClutter(ComparabilityGraph(p));
    for (const auto& w : WeightGrid(p.num_vertices(), wmax)) {
      const MengerResult m = MengerOracle(p, w);
      const KonigCertificate k = KonigHolds(Parallelization(cl, w));
      ASSERT_EQ(m.certificate.alpha0, k.alpha0);
      ASSERT_EQ(m.certificate.beta1, k.beta1);
      ASSERT_TRUE(m.certificate.holds());
    }
  };
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : AllPosets(n)) check(p, 2);
  }
  for (const Poset& p : PosetGenerator(6, 15, 9)) check(p, 2);
}

TEST(CliqueChainsTest, EveryMaximalCliqueIsAChain) {
  for (const Poset& p : AllPosets(4)) {
    const auto chains = CliqueChains(p);
    EXPECT_EQ(chains.size(), CliqueClutter(ComparabilityGraph(p)).edges().size());
    for (const auto& chain : chains) {
      for (size_t i = 0; i + 1 < chain.size(); ++i) EXPECT_TRUE(p.Less(chain[i], chain[i + 1]));
    }
  }
}

}  // namespace
}  // namespace clutterlab
