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

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clutterlab/errors.h"
#include "clutterlab/packing.h"
#include "clutterlab/polyhedra.h"

namespace clutterlab {

// ------------------------------------------------------------------ RNG

std::uint64_t SeededRng::Next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int SeededRng::Uniform(int lo, int hi) {
  Require(lo <= hi, "rng: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

// -------------------------------------------------------------- Corpora

std::string ToString(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::kAllPosets:
      return "all-posets";
    case CorpusKind::kRandomPosets:
      return "random-posets";
    case CorpusKind::kRandomGraphs:
      return "random-graphs";
    case CorpusKind::kRandomIdeals:
      return "random-ideals";
    case CorpusKind::kRandomClutters:
      return "random-clutters";
    case CorpusKind::kCauc:
      return "cauc";
  }
  return "unknown";
}

CorpusKind ParseCorpusKind(const std::string& name) {
  for (CorpusKind kind :
       {CorpusKind::kAllPosets, CorpusKind::kRandomPosets, CorpusKind::kRandomGraphs,
        CorpusKind::kRandomIdeals, CorpusKind::kRandomClutters, CorpusKind::kCauc}) {
    if (ToString(kind) == name) return kind;
  }
  throw InvalidInput("unknown corpus kind '" + name + "'");
}

std::vector<Poset> AllPosets(int n) {
  Require(n >= 1 && n <= 4, "all-posets: n must be in [1, 4]");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  std::vector<Poset> posets;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (size_t t = 0; t < pairs.size(); ++t) {
      if (mask >> t & 1) less[pairs[t].first][pairs[t].second] = true;
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (!less[a][b]) continue;
        if (less[b][a]) ok = false;
        for (int c = 0; c < n && ok; ++c) {
          if (less[b][c] && !less[a][c]) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<std::pair<Vertex, Vertex>> relation;
    for (size_t t = 0; t < pairs.size(); ++t) {
      if (mask >> t & 1) relation.push_back(pairs[t]);
    }
    posets.emplace_back(n, std::move(relation));
  }
  return posets;
}

namespace {

Poset RandomPoset(int n, SeededRng& rng) {
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.Uniform(0, i)]);
  std::vector<std::pair<Vertex, Vertex>> relation;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Coin()) relation.emplace_back(order[i], order[j]);
    }
  }
  return Poset::FromTransitiveClosure(n, std::move(relation));
}

std::vector<Poset> RandomPosets(int n_min, int n, int count, std::uint64_t seed) {
  Require(n_min >= 1 && n_min <= n && n <= 8, "poset generator: need 1 <= n <= 8");
  Require(count >= 0, "poset generator: negative count");
  SeededRng rng(seed);
  std::set<std::pair<int, std::vector<std::pair<Vertex, Vertex>>>> seen;
  std::vector<Poset> posets;
  for (long attempt = 0; attempt < 64L * count && static_cast<int>(posets.size()) < count;
       ++attempt) {
    Poset p = RandomPoset(rng.Uniform(n_min, n), rng);
    if (seen.emplace(p.num_vertices(), p.relation()).second) posets.push_back(std::move(p));
  }
  return posets;
}

Graph RandomGraph(int n, SeededRng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Coin()) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

MonomialIdeal RandomIdeal(int n, int q, int max_exponent, SeededRng& rng) {
  std::vector<ExponentVector> generators;
  const int count = rng.Uniform(1, q);
  while (static_cast<int>(generators.size()) < count) {
    ExponentVector g(n);
    for (int& e : g) e = rng.Uniform(0, max_exponent);
    if (std::any_of(g.begin(), g.end(), [](int e) { return e > 0; })) {
      generators.push_back(std::move(g));
    }
  }
  return MonomialIdeal(n, std::move(generators));
}

Clutter RandomClutter(int n, int max_edges, SeededRng& rng) {
  std::vector<VertexSet> edges;
  const int count = rng.Uniform(1, max_edges);
  for (int e = 0; e < count; ++e) {
    const int mask = rng.Uniform(1, (1 << n) - 1);
    VertexSet edge;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) edge.push_back(v);
    }
    edges.push_back(std::move(edge));
  }
  return Clutter::Minimalized(n, DefaultLabels(n), std::move(edges));
}

template <typename T, typename Key, typename Make>
std::vector<T> Distinct(int count, Make make, Key key) {
  std::set<decltype(key(std::declval<const T&>()))> seen;
  std::vector<T> out;
  for (long attempt = 0; attempt < 64L * count && static_cast<int>(out.size()) < count;
       ++attempt) {
    T value = make();
    if (seen.insert(key(value)).second) out.push_back(std::move(value));
  }
  return out;
}

}  // namespace

std::vector<Poset> PosetGenerator(int n, int count, std::uint64_t seed) {
  return RandomPosets(n, n, count, seed);
}

std::vector<Instance> GenerateCorpus(const CorpusSpec& spec) {
  const int n_min = spec.n_min == 0 ? spec.n : spec.n_min;
  Require(n_min >= 1 && n_min <= spec.n, "corpus: need 1 <= n_min <= n");
  Require(spec.count >= 0, "corpus: negative count");
  std::vector<Instance> corpus;
  auto add = [&](std::string name, auto data, bool positive) {
    corpus.push_back(Instance{std::move(name), std::move(data), positive});
  };
  SeededRng rng(spec.seed);
  switch (spec.kind) {
    case CorpusKind::kAllPosets:
      for (int n = n_min; n <= spec.n; ++n) {
        int index = 0;
        for (auto& p : AllPosets(n)) {
          add("poset-n" + std::to_string(n) + "-" + std::to_string(index++), std::move(p),
              true);
        }
      }
      break;
    case CorpusKind::kRandomPosets: {
      int index = 0;
      for (auto& p : RandomPosets(n_min, spec.n, spec.count, spec.seed)) {
        add("random-poset-" + std::to_string(index++), std::move(p), true);
      }
      break;
    }
    case CorpusKind::kRandomGraphs: {
      Require(spec.n <= 20, "corpus: random graphs need n <= 20");
      auto graphs = Distinct<Graph>(
          spec.count, [&] { return RandomGraph(rng.Uniform(n_min, spec.n), rng); },
          [](const Graph& g) { return std::make_pair(g.num_vertices(), g.edges()); });
      int index = 0;
      for (auto& g : graphs) add("random-graph-" + std::to_string(index++), std::move(g), false);
      break;
    }
    case CorpusKind::kRandomIdeals: {
      Require(spec.q >= 1 && spec.max_exponent >= 1,
              "corpus: random ideals need q >= 1 and max_exponent >= 1");
      auto ideals = Distinct<MonomialIdeal>(
          spec.count,
          [&] {
            return RandomIdeal(rng.Uniform(n_min, spec.n), spec.q, spec.max_exponent, rng);
          },
          [](const MonomialIdeal& i) {
            return std::make_pair(i.num_variables(), i.generators());
          });
      int index = 0;
      for (auto& i : ideals) add("random-ideal-" + std::to_string(index++), std::move(i), false);
      break;
    }
    case CorpusKind::kRandomClutters: {
      Require(spec.n <= 16 && spec.max_edges >= 1,
              "corpus: random clutters need n <= 16 and max_edges >= 1");
      auto clutters = Distinct<Clutter>(
          spec.count,
          [&] { return RandomClutter(rng.Uniform(n_min, spec.n), spec.max_edges, rng); },
          [](const Clutter& c) { return std::make_pair(c.num_vertices(), c.edges()); });
      int index = 0;
      for (auto& c : clutters) {
        add("random-clutter-" + std::to_string(index++), std::move(c), false);
      }
      break;
    }
    case CorpusKind::kCauc:
      Require(spec.n >= 2 && spec.g_max >= 2, "corpus: cauc needs n >= 2 and g_max >= 2");
      for (int d = 2; d <= spec.n; ++d) {
        for (int g = 2; g <= spec.g_max; ++g) {
          add("cauc-" + std::to_string(d) + "-" + std::to_string(g),
              CompleteAdmissibleUniformClutter(d, g), true);
        }
      }
      break;
  }
  return corpus;
}

// ------------------------------------------------------------ Describe

namespace {

std::string Join(std::span<const int> values) {
  std::string out = "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

template <typename Range>
std::string JoinRows(const Range& rows) {
  std::string out = "[";
  bool first = true;
  for (const auto& row : rows) {
    if (!first) out += ",";
    first = false;
    out += Join(row);
  }
  return out + "]";
}

std::string JoinPairs(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<std::vector<int>> rows;
  for (const auto& [a, b] : pairs) rows.push_back({a, b});
  return JoinRows(rows);
}

}  // namespace

std::string Describe(const Instance& instance) {
  struct Visitor {
    std::string operator()(const Poset& p) const {
      return "poset n=" + std::to_string(p.num_vertices()) +
             " relation=" + JoinPairs(p.relation());
    }
    std::string operator()(const Graph& g) const {
      return "graph n=" + std::to_string(g.num_vertices()) + " edges=" + JoinPairs(g.edges());
    }
    std::string operator()(const Clutter& c) const {
      return "clutter n=" + std::to_string(c.num_vertices()) + " edges=" + JoinRows(c.edges());
    }
    std::string operator()(const MonomialIdeal& i) const {
      return "ideal n=" + std::to_string(i.num_variables()) +
             " generators=" + JoinRows(i.generators());
    }
  };
  return std::visit(Visitor{}, instance.data);
}

const CheckOutcome* InstanceReport::Find(const std::string& check) const {
  for (const auto& c : checks) {
    if (c.name == check) return &c;
  }
  return nullptr;
}

// --------------------------------------------------------------- Suite

namespace {

std::uint64_t GridSize(int n, int bound) {
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::uint64_t>(bound + 1);
    if (size > (1ULL << 40)) break;
  }
  return size;
}

class InstanceRunner {
 public:
  InstanceRunner(InstanceReport& report, const Bounds& bounds, bool expect_positive)
      : report_(report), bounds_(bounds), expect_positive_(expect_positive) {}

  // Runs `body`, which fills the outcome's verdict fields. Resource guards
  // turn into a logged skip; internal assertion failures into a
  // disagreement localized to this check.
  void Run(const std::string& name,
                          const std::function<void(CheckOutcome&)>& body) {
    CheckOutcome outcome;
    outcome.name = name;
    try {
      body(outcome);
    } catch (const ResourceExhausted& e) {
      outcome = Skipped(name, e.what());
    } catch (const ConsistencyError& e) {
      Disagree(name + "-internal", e.what());
      outcome.verdict = "error";
      outcome.positive = false;
      outcome.detail = e.what();
    } catch (const InvalidInput& e) {
      outcome = Skipped(name, std::string("not applicable: ") + e.what());
    }
    if (expect_positive_ && !outcome.skipped && !outcome.positive) {
      Disagree("expected-positive-vs-" + name,
               "verdict '" + outcome.verdict + "' on an instance where every check must hold");
    }
    report_.checks.push_back(std::move(outcome));
  }

  void SkipGrid(const std::string& name, int n, int bound) {
    report_.checks.push_back(Skipped(
        name, "weight grid {0.." + std::to_string(bound) + "}^" + std::to_string(n) +
                  " exceeds max_grid " + std::to_string(bounds_.max_grid)));
  }

  bool GridFits(int n, int bound) const { return GridSize(n, bound) <= bounds_.max_grid; }

  void Disagree(const std::string& relation, const std::string& detail) {
    report_.disagreements.push_back({relation, detail});
  }

  const CheckOutcome* Get(const std::string& name) const {
    const CheckOutcome* c = report_.Find(name);
    return c != nullptr && !c->skipped && c->verdict != "error" ? c : nullptr;
  }

 private:
  static CheckOutcome Skipped(const std::string& name, const std::string& why) {
    CheckOutcome outcome;
    outcome.name = name;
    outcome.verdict = "skipped";
    outcome.skipped = true;
    outcome.detail = why;
    return outcome;
  }

  InstanceReport& report_;
  const Bounds& bounds_;
  bool expect_positive_;
};

void FillVerdict(CheckOutcome& out, const NormalityVerdict& v) {
  out.verdict = ToString(v.kind);
  out.positive = v.positive();
  out.bound = v.bound;
  out.witness = v.witness;
  out.witness_power = v.failing_power;
  out.detail = v.explanation;
}

// (i): the two normality routes and integer rounding.
void IdealChecks(const MonomialIdeal& ideal, const Bounds& bounds, InstanceRunner& run) {
  std::optional<NormalityVerdict> direct, blocker;
  run.Run("normal-direct", [&](CheckOutcome& out) {
    direct = NormalityByDirectContainment(ideal, bounds.kmax);
    FillVerdict(out, *direct);
  });
  run.Run("normal-blocker", [&](CheckOutcome& out) {
    blocker = NormalityByBlocker(ideal, bounds.kmax);
    FillVerdict(out, *blocker);
  });
  if (run.Get("normal-direct") && run.Get("normal-blocker")) {
    if (direct->kind != blocker->kind || direct->failing_power != blocker->failing_power ||
        direct->witness != blocker->witness) {
      run.Disagree("normal-direct-vs-normal-blocker",
                   "direct says " + ToString(direct->kind) + ", blocker/IDP says " +
                       ToString(blocker->kind));
    }
  }
  if (ideal.is_zero()) return;
  const int n = ideal.num_variables();
  if (!run.GridFits(n, bounds.rounding_bound)) {
    run.SkipGrid("rounding", n, bounds.rounding_bound);
    return;
  }
  std::optional<RoundingCertificate> rounding;
  run.Run("rounding", [&](CheckOutcome& out) {
    rounding = IntegerRoundingCheck(ideal.Matrix(), WeightGrid(n, bounds.rounding_bound));
    out.positive = rounding->holds;
    out.verdict = rounding->holds ? "holds-on-grid" : "fails";
    out.bound = bounds.rounding_bound;
    if (!rounding->holds) {
      const RoundingEntry& e = rounding->entries[*rounding->first_failure];
      out.witness = e.w;
      out.detail = "LP max " + ToString(e.lp_max) + ", integer max " +
                   std::to_string(e.ilp_max);
    }
  });
  if (!run.Get("rounding") || !direct || !run.Get("normal-direct")) return;
  // w fails rounding with floor(LP) = L exactly when x^w lies in the
  // closure of I^L but not in I^L.
  for (const auto& e : rounding->entries) {
    if (e.holds) continue;
    const int level = static_cast<int>(e.lp_floor.get_si());
    if (!IntegralClosureMembership(ideal, e.w, level) ||
        PowerMembershipBySearch(ideal, e.w, level)) {
      run.Disagree("rounding-vs-closure",
                   "rounding failure at w=" + Join(e.w) + " is not a closure witness");
    }
    if (level <= bounds.kmax &&
        (direct->positive() || *direct->failing_power > level)) {
      run.Disagree("normal-vs-rounding",
                   "rounding fails at w=" + Join(e.w) + " (level " + std::to_string(level) +
                       ") but normality holds up to that power");
    }
  }
  if (!direct->positive()) {
    const auto& a = *direct->witness;
    if (std::all_of(a.begin(), a.end(), [&](int v) { return v <= bounds.rounding_bound; })) {
      const bool fails_there = std::any_of(
          rounding->entries.begin(), rounding->entries.end(),
          [&](const RoundingEntry& e) { return e.w == a && !e.holds; });
      if (!fails_there) {
        run.Disagree("normal-vs-rounding",
                     "normality witness " + Join(a) + " passes integer rounding");
      }
    }
  }
}

// (ii) for a clutter with at least one edge.
void ClutterChecks(const Clutter& clutter, const Bounds& bounds, InstanceRunner& run) {
  const int n = clutter.num_vertices();
  run.Run("konig", [&](CheckOutcome& out) {
    const KonigCertificate k = KonigHolds(clutter);
    out.positive = k.holds();
    out.verdict = k.holds() ? "holds" : "fails";
    out.detail = "alpha0=" + std::to_string(k.alpha0) + " beta1=" + std::to_string(k.beta1);
  });
  std::vector<RationalVector> vertices;
  run.Run("integral", [&](CheckOutcome& out) {
    vertices = Vertices(CoveringPolyhedron(IncidenceMatrix::OfClutter(clutter)));
    out.positive = true;
    for (const auto& v : vertices) {
      if (!std::all_of(v.begin(), v.end(), [](const Rational& r) { return IsInteger(r); })) {
        out.positive = false;
        std::string text = "fractional vertex (";
        for (size_t i = 0; i < v.size(); ++i) text += (i ? "," : "") + ToString(v[i]);
        out.detail = text + ")";
        break;
      }
    }
    out.verdict = out.positive ? "integral" : "not-integral";
  });
  if (run.GridFits(n, bounds.wmax)) {
    run.Run("mfmc", [&](CheckOutcome& out) {
      const MfmcCertificate m = MfmcBounded(clutter, bounds.wmax);
      out.positive = m.holds;
      out.verdict = m.holds ? "holds-up-to-bound" : "fails";
      out.bound = bounds.wmax;
      out.witness = m.counterexample;
    });
  } else {
    run.SkipGrid("mfmc", n, bounds.wmax);
  }
  if (run.GridFits(n, bounds.wmax) && run.Get("integral")) {
    run.Run("lp-duality", [&](CheckOutcome& out) {
      out.positive = true;
      out.bound = bounds.wmax;
      for (const auto& w : WeightGrid(n, bounds.wmax)) {
        const LpDualityVerdict lp = LpDualityIntegerCheck(clutter, vertices, w);
        const KonigCertificate k = KonigHolds(Parallelization(clutter, w));
        if (lp.integer_min != k.alpha0 || lp.integer_max != k.beta1 ||
            lp.integral() != k.holds()) {
          run.Disagree("lp-duality-vs-konig",
                       "at w=" + Join(w) + ": integer optima " + std::to_string(lp.integer_min) +
                           "/" + std::to_string(lp.integer_max) + ", alpha0/beta1 of C^w " +
                           std::to_string(k.alpha0) + "/" + std::to_string(k.beta1));
        }
        if (!lp.integral() && out.positive) {
          out.positive = false;
          out.witness = w;
          out.detail = "LP optimum " + ToString(lp.lp_min);
        }
      }
      out.verdict = out.positive ? "integral-up-to-bound" : "fails";
    });
  } else if (!run.GridFits(n, bounds.wmax)) {
    run.SkipGrid("lp-duality", n, bounds.wmax);
  }
  run.Run("ntf", [&](CheckOutcome& out) { FillVerdict(out, IsNtfUpTo(clutter, bounds.imax)); });
  IdealChecks(EdgeIdeal(clutter), bounds, run);

  const CheckOutcome* ntf = run.Get("ntf");
  const CheckOutcome* normal = run.Get("normal-direct");
  const CheckOutcome* integral = run.Get("integral");
  const CheckOutcome* mfmc = run.Get("mfmc");
  const CheckOutcome* lp = run.Get("lp-duality");
  auto sign = [](bool b) { return std::string(b ? "positive" : "negative"); };
  if (ntf && normal && integral) {
    const bool both = normal->positive && integral->positive;
    if (ntf->positive != both) {
      run.Disagree("ntf-vs-normal-and-integral",
                   "ntf " + sign(ntf->positive) + ", normal and integral " + sign(both));
    }
  }
  if (ntf && mfmc && ntf->positive != mfmc->positive) {
    run.Disagree("ntf-vs-mfmc", "ntf " + sign(ntf->positive) + ", mfmc " + sign(mfmc->positive));
  }
  if (normal && integral && mfmc && (normal->positive && integral->positive) != mfmc->positive) {
    run.Disagree("normal-and-integral-vs-mfmc",
                 "normal and integral " + sign(normal->positive && integral->positive) +
                     ", mfmc " + sign(mfmc->positive));
  }
  if (mfmc && lp && mfmc->positive != lp->positive) {
    run.Disagree("mfmc-vs-lp-duality",
                 "mfmc " + sign(mfmc->positive) + ", lp-duality " + sign(lp->positive));
  }
}

// (iv) on a graph.
void DuplicationCheck(const Graph& graph, const Clutter& clique_clutter,
                      InstanceRunner& run) {
  run.Run("duplication", [&](CheckOutcome& out) {
    out.positive = true;
    for (Vertex i = 0; i < graph.num_vertices(); ++i) {
      const Clutter lhs = Duplicate(clique_clutter, i);
      const Clutter rhs = CliqueClutter(DuplicateVertex(graph, i));
      if (!SameEdges(lhs, rhs)) {
        out.positive = false;
        out.witness = std::vector<int>{i};
        run.Disagree("duplicate-vs-clique-clutter",
                     "duplicating vertex " + std::to_string(i) + " does not commute");
      }
    }
    out.verdict = out.positive ? "commutes" : "fails";
  });
}

void PosetChecks(const Poset& poset, const Bounds& bounds, InstanceRunner& run) {
  const Graph graph = ComparabilityGraph(poset);
  const Clutter clutter = CliqueClutter(graph);
  const int n = poset.num_vertices();
  run.Run("clique-chains", [&](CheckOutcome& out) {
    CliqueChains(poset);
    out.verdict = "chains";
  });
  DuplicationCheck(graph, clutter, run);
  run.Run("duplicate-element", [&](CheckOutcome& out) {
    out.positive = true;
    for (Vertex i = 0; i < n; ++i) {
      if (!(ComparabilityGraph(DuplicateElement(poset, i)) == DuplicateVertex(graph, i))) {
        out.positive = false;
        run.Disagree("duplicate-element-vs-duplicate-vertex",
                     "element " + std::to_string(i));
      }
    }
    out.verdict = out.positive ? "commutes" : "fails";
  });
  ClutterChecks(clutter, bounds, run);
  if (!run.GridFits(n, bounds.wmax)) {
    run.SkipGrid("menger", n, bounds.wmax);
    return;
  }
  run.Run("menger", [&](CheckOutcome& out) {
    out.positive = true;
    out.bound = bounds.wmax;
    for (const auto& w : WeightGrid(n, bounds.wmax)) {
      const MengerResult m = MengerOracle(poset, w);
      const KonigCertificate k = KonigHolds(Parallelization(clutter, w));
      if (m.certificate.alpha0 != k.alpha0 || m.certificate.beta1 != k.beta1) {
        run.Disagree("menger-vs-konig",
                     "at w=" + Join(w) + ": paths " + std::to_string(m.certificate.beta1) +
                         "/cut " + std::to_string(m.certificate.alpha0) + " vs beta1 " +
                         std::to_string(k.beta1) + "/alpha0 " + std::to_string(k.alpha0));
      }
      if (!m.certificate.holds() && out.positive) {
        out.positive = false;
        out.witness = w;
      }
    }
    out.verdict = out.positive ? "holds-up-to-bound" : "fails";
  });
}

}  // namespace

Report RunTheoremSuite(const std::vector<Instance>& corpus, const Bounds& bounds,
                       const std::string& corpus_name) {
  Require(bounds.kmax >= 1 && bounds.imax >= 1 && bounds.wmax >= 1 &&
              bounds.rounding_bound >= 0,
          "certify: bounds must be >= 1");
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  Report report;
  report.corpus = corpus_name;
  report.bounds = bounds;
  for (size_t index = 0; index < corpus.size(); ++index) {
    const Instance& instance = corpus[index];
    const auto instance_start = Clock::now();
    InstanceReport r;
    r.index = static_cast<int>(index);
    r.name = instance.name;
    r.description = Describe(instance);
    InstanceRunner run(r, bounds, instance.expect_positive);
    {
      std::optional<std::chrono::milliseconds> budget;
      if (bounds.instance_budget_ms) budget = std::chrono::milliseconds(*bounds.instance_budget_ms);
      ScopedDeadline deadline(budget);
      if (const auto* p = std::get_if<Poset>(&instance.data)) {
        r.type = "poset";
        PosetChecks(*p, bounds, run);
      } else if (const auto* g = std::get_if<Graph>(&instance.data)) {
        r.type = "graph";
        DuplicationCheck(*g, CliqueClutter(*g), run);
      } else if (const auto* c = std::get_if<Clutter>(&instance.data)) {
        r.type = "clutter";
        if (c->num_edges() == 0) {
          run.Run("ntf", [&](CheckOutcome& out) { FillVerdict(out, IsNtfUpTo(*c, bounds.imax)); });
        } else {
          ClutterChecks(*c, bounds, run);
        }
      } else {
        r.type = "ideal";
        IdealChecks(std::get<MonomialIdeal>(instance.data), bounds, run);
      }
    }
    for (const auto& check : r.checks) {
      if (check.skipped) ++report.skipped_checks;
      if (!check.skipped && !check.positive && check.witness) {
        report.gallery.push_back(
            {r.name, check.name, *check.witness, check.witness_power, check.detail});
      }
    }
    report.disagreement_count += static_cast<int>(r.disagreements.size());
    r.millis = std::chrono::duration<double, std::milli>(Clock::now() - instance_start).count();
    report.instances.push_back(std::move(r));
  }
  report.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

}  // namespace clutterlab
