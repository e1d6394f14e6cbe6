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


#include "clutterlab/certify.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "clutterlab/errors.h"

namespace clutterlab {
namespace {

Clutter C5() { return Clutter(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

TEST(SeededRngTest, ReproducibleAndInRange) {
  SeededRng a(42), b(42), c(43);
  std::vector<int> xs, ys, zs;
  for (int i = 0; i < 100; ++i) {
    xs.push_back(a.Uniform(-3, 7));
    ys.push_back(b.Uniform(-3, 7));
    zs.push_back(c.Uniform(-3, 7));
  }
  EXPECT_EQ(xs, ys);
  EXPECT_NE(xs, zs);
  EXPECT_EQ(*std::min_element(xs.begin(), xs.end()), -3);
  EXPECT_EQ(*std::max_element(xs.begin(), xs.end()), 7);
  SeededRng d(1);
  EXPECT_EQ(d.Uniform(5, 5), 5);
  EXPECT_THROW(d.Uniform(2, 1), InvalidInput);
}

TEST(AllPosetsTest, LabelledPosetCounts) {
  EXPECT_EQ(AllPosets(1).size(), 1u);
  EXPECT_EQ(AllPosets(2).size(), 3u);
  EXPECT_EQ(AllPosets(3).size(), 19u);
  EXPECT_EQ(AllPosets(4).size(), 219u);
  EXPECT_THROW(AllPosets(5), InvalidInput);
  EXPECT_THROW(AllPosets(0), InvalidInput);
}

TEST(PosetGeneratorTest, DeterministicDistinctAndExhaustiveOnThree) {
  EXPECT_EQ(PosetGenerator(6, 30, 5), PosetGenerator(6, 30, 5));
  EXPECT_NE(PosetGenerator(6, 30, 5), PosetGenerator(6, 30, 6));
  const auto one = PosetGenerator(1, 10, 3);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].relation().empty());
  const auto three = PosetGenerator(3, 40, 8);
  EXPECT_EQ(three.size(), 19u);
  std::set<std::vector<std::pair<Vertex, Vertex>>> drawn, all;
  for (const auto& p : three) drawn.insert(p.relation());
  for (const auto& p : AllPosets(3)) all.insert(p.relation());
  EXPECT_EQ(drawn, all);
  EXPECT_THROW(PosetGenerator(9, 1, 1), InvalidInput);
}

TEST(CorpusTest, EveryKindIsReproducible) {
  for (CorpusKind kind : {CorpusKind::kAllPosets, CorpusKind::kRandomPosets,
                          CorpusKind::kRandomGraphs, CorpusKind::kRandomIdeals,
                          CorpusKind::kRandomClutters, CorpusKind::kCauc}) {
    CorpusSpec spec;
    spec.kind = kind;
    spec.n = 3;
    spec.n_min = 2;
    spec.count = 25;
    spec.seed = 77;
    const auto a = GenerateCorpus(spec);
    const auto b = GenerateCorpus(spec);
    ASSERT_EQ(a.size(), b.size()) << ToString(kind);
    EXPECT_FALSE(a.empty()) << ToString(kind);
    for (size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].name, b[i].name);
      EXPECT_EQ(Describe(a[i]), Describe(b[i]));
    }
    EXPECT_EQ(ParseCorpusKind(ToString(kind)), kind);
  }
  EXPECT_THROW(ParseCorpusKind("everything"), InvalidInput);
}

TEST(CorpusTest, Sizes) {
  CorpusSpec spec;
  spec.kind = CorpusKind::kAllPosets;
  spec.n = 4;
  spec.n_min = 1;
  EXPECT_EQ(GenerateCorpus(spec).size(), 1u + 3u + 19u + 219u);
  spec.kind = CorpusKind::kCauc;
  spec.n = 3;
  spec.n_min = 0;
  spec.g_max = 3;
  const auto cauc = GenerateCorpus(spec);
  ASSERT_EQ(cauc.size(), 4u);
  EXPECT_EQ(cauc[0].name, "cauc-2-2");
  EXPECT_TRUE(cauc[0].expect_positive);
}

TEST(TheoremSuiteTest, AllPosetsOnThreeArePositive) {
  CorpusSpec spec;
  spec.kind = CorpusKind::kAllPosets;
  spec.n = 3;
  Bounds bounds;
  bounds.wmax = 2;
  const Report r = RunTheoremSuite(GenerateCorpus(spec), bounds);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.skipped_checks, 0);
  EXPECT_TRUE(r.gallery.empty());
  for (const auto& inst : r.instances) {
    for (const char* check : {"mfmc", "menger", "ntf", "normal-direct", "normal-blocker",
                              "integral", "rounding", "lp-duality", "duplication"}) {
      const CheckOutcome* c = inst.Find(check);
      ASSERT_NE(c, nullptr) << check;
      EXPECT_TRUE(c->positive) << inst.name << " " << check;
    }
  }
}

TEST(TheoremSuiteTest, PentagonIsConsistentlyNegative) {
  const Report r = RunTheoremSuite({{"c5", C5(), false}}, Bounds{});
  ASSERT_TRUE(r.pass());
  const InstanceReport& inst = r.instances[0];
  EXPECT_FALSE(inst.Find("konig")->positive);
  EXPECT_FALSE(inst.Find("integral")->positive);
  EXPECT_FALSE(inst.Find("mfmc")->positive);
  EXPECT_FALSE(inst.Find("lp-duality")->positive);
  EXPECT_FALSE(inst.Find("ntf")->positive);
  EXPECT_TRUE(inst.Find("normal-direct")->positive);
  EXPECT_EQ(*inst.Find("ntf")->witness, std::vector<int>(5, 1));
  EXPECT_EQ(*inst.Find("mfmc")->witness, std::vector<int>(5, 1));
  EXPECT_FALSE(r.gallery.empty());
}

TEST(TheoremSuiteTest, CaucFamilyIsPositive) {
  CorpusSpec spec;
  spec.kind = CorpusKind::kCauc;
  spec.n = 3;
  spec.g_max = 3;
  Bounds bounds;
  bounds.wmax = 1;
  const Report r = RunTheoremSuite(GenerateCorpus(spec), bounds);
  EXPECT_TRUE(r.pass());
  for (const auto& inst : r.instances) {
    for (const auto& c : inst.checks) {
      if (!c.skipped) {
        EXPECT_TRUE(c.positive) << inst.name << " " << c.name;
      }
    }
  }
}

TEST(TheoremSuiteTest, UnmetExpectationIsLocalized) {
  const Report r = RunTheoremSuite({{"c5-marked-positive", C5(), true}}, Bounds{});
  EXPECT_FALSE(r.pass());
  std::set<std::string> relations;
  for (const auto& d : r.instances[0].disagreements) relations.insert(d.relation);
  EXPECT_TRUE(relations.count("expected-positive-vs-ntf"));
  EXPECT_TRUE(relations.count("expected-positive-vs-mfmc"));
  EXPECT_FALSE(relations.count("ntf-vs-mfmc"));
}

TEST(TheoremSuiteTest, RandomIdealsAndClutters) {
  CorpusSpec spec;
  spec.kind = CorpusKind::kRandomIdeals;
  spec.n = 3;
  spec.n_min = 1;
  spec.count = 40;
  EXPECT_TRUE(RunTheoremSuite(GenerateCorpus(spec), Bounds{}).pass());
  spec.kind = CorpusKind::kRandomClutters;
  spec.n = 5;
  spec.max_edges = 6;
  spec.count = 30;
  EXPECT_TRUE(RunTheoremSuite(GenerateCorpus(spec), Bounds{}).pass());
  spec.kind = CorpusKind::kRandomGraphs;
  spec.n = 8;
  EXPECT_TRUE(RunTheoremSuite(GenerateCorpus(spec), Bounds{}).pass());
}

TEST(TheoremSuiteTest, GuardsSkipWithLog) {
  Bounds bounds;
  bounds.max_grid = 10;
  const Report r = RunTheoremSuite({{"c5", C5(), false}}, bounds);
  EXPECT_TRUE(r.pass());
  EXPECT_GE(r.skipped_checks, 3);
  const CheckOutcome* mfmc = r.instances[0].Find("mfmc");
  ASSERT_NE(mfmc, nullptr);
  EXPECT_TRUE(mfmc->skipped);
  EXPECT_NE(mfmc->detail.find("max_grid"), std::string::npos);

  Bounds tight;
  tight.wmax = 1;
  tight.instance_budget_ms = 0;
  const Report timed =
      RunTheoremSuite({{"cauc", CompleteAdmissibleUniformClutter(3, 3), true}}, tight);
  EXPECT_TRUE(timed.pass());
  EXPECT_GT(timed.skipped_checks, 0);
}

TEST(TheoremSuiteTest, RejectsZeroBounds) {
  Bounds bounds;
  bounds.kmax = 0;
  EXPECT_THROW(RunTheoremSuite({}, bounds), InvalidInput);
}

}  // namespace
}  // namespace clutterlab
