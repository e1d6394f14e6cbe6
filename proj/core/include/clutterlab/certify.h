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


// Corpus generation and the cross-validation suite: every check of the
// library is run on each instance and the relations between them are
// asserted. A failed relation names the two checks that disagree.

#ifndef CLUTTERLAB_CERTIFY_H_
#define CLUTTERLAB_CERTIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clutterlab/ideals.h"
#include "clutterlab/structures.h"

namespace clutterlab {

// Small deterministic generator. The draws are defined here rather than
// through <random> distributions so that seeded corpora are identical on
// every standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next();
  // Uniform integer in [lo, hi].
  int Uniform(int lo, int hi);
  bool Coin() { return (Next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

enum class CorpusKind {
  kAllPosets,
  kRandomPosets,
  kRandomGraphs,
  kRandomIdeals,
  kRandomClutters,
  kCauc,
};

std::string ToString(CorpusKind kind);
// Accepts the names produced by ToString; throws InvalidInput otherwise.
CorpusKind ParseCorpusKind(const std::string& name);

struct CorpusSpec {
  CorpusKind kind = CorpusKind::kAllPosets;
  // Sizes are drawn from [n_min, n] (all sizes in that range for the
  // exhaustive kind). n_min = 0 means n_min = n.
  int n = 4;
  int n_min = 0;
  int count = 100;
  std::uint64_t seed = 1;
  // Random ideals: up to q generators with exponents in [0, max_exponent].
  int q = 4;
  int max_exponent = 3;
  // Random clutters: up to max_edges edges before minimalization.
  int max_edges = 8;
  // CAUC(d, g) for 2 <= d <= n and 2 <= g <= g_max.
  int g_max = 3;
};

struct Instance {
  std::string name;
  std::variant<Poset, Graph, Clutter, MonomialIdeal> data;
  // Every verdict is expected positive (posets and CAUC clutters).
  bool expect_positive = false;
};

// All posets on exactly n labelled elements (n <= 4), in the order of their
// relation sets read as bitmasks over the ordered pairs.
std::vector<Poset> AllPosets(int n);

// Random DAGs on n elements (random linear order, each forward pair kept
// with probability 1/2), transitively closed and deduplicated. Stops after
// `count` distinct posets or 64 * count attempts. Requires 1 <= n <= 8.
std::vector<Poset> PosetGenerator(int n, int count, std::uint64_t seed);

std::vector<Instance> GenerateCorpus(const CorpusSpec& spec);

struct Bounds {
  int kmax = 3;
  int imax = 3;
  int wmax = 3;
  // Integer rounding is tested on w in {0..rounding_bound}^n.
  int rounding_bound = 3;
  // Weight grids larger than this are skipped (with a log entry).
  std::uint64_t max_grid = 20'000;
  // Per-instance time budget; nullopt means unlimited.
  std::optional<std::int64_t> instance_budget_ms;
};

struct CheckOutcome {
  std::string name;     // e.g. "ntf", "mfmc", "normal-direct"
  std::string verdict;  // e.g. "ntf-up-to", "fails", "skipped"
  bool positive = true;
  bool skipped = false;
  int bound = 0;
  // Negative verdicts: the offending weight or exponent vector.
  std::optional<std::vector<int>> witness;
  std::optional<int> witness_power;
  std::string detail;
};

struct Disagreement {
  std::string relation;  // "<check>-vs-<check>"
  std::string detail;
};

struct InstanceReport {
  int index = 0;
  std::string name;
  std::string type;  // "poset", "graph", "clutter", "ideal"
  std::string description;
  std::vector<CheckOutcome> checks;
  std::vector<Disagreement> disagreements;
  double millis = 0;

  const CheckOutcome* Find(const std::string& check) const;
};

struct GalleryEntry {
  std::string instance;
  std::string check;
  std::vector<int> witness;
  std::optional<int> power;
  std::string detail;
};

struct Report {
  std::string corpus;
  Bounds bounds;
  std::vector<InstanceReport> instances;
  std::vector<GalleryEntry> gallery;
  int skipped_checks = 0;
  int disagreement_count = 0;
  double millis = 0;

  bool pass() const { return disagreement_count == 0; }
};

// Runs every applicable check on each instance and asserts:
//  (i)   normality by direct containment == normality via blocker/IDP, and
//        both consistent with integer rounding on the weight grid;
//  (ii)  for clutters, ntf <=> (normal and Q(A) integral) <=> bounded mfmc,
//        and per weight: integral LP duality <=> Konig of C^w;
//  (iii) for posets and CAUC clutters, every verdict positive;
//  (iv)  duplication commutes with clique clutters (graphs and posets);
//  (v)   the Menger oracle matches Konig of the parallelized clique clutter.
Report RunTheoremSuite(const std::vector<Instance>& corpus, const Bounds& bounds,
                       const std::string& corpus_name = "explicit");

std::string Describe(const Instance& instance);

}  // namespace clutterlab

#endif  // CLUTTERLAB_CERTIFY_H_
