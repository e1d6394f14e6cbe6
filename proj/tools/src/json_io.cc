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


#include "json_io.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "clutterlab/errors.h"
#include "clutterlab/rational.h"

namespace clutterlab::io {
namespace {

const Json& Field(const Json& j, const char* key) {
  Require(j.is_object(), "expected a JSON object");
  auto it = j.find(key);
  Require(it != j.end(), std::string("missing key \"") + key + "\"");
  return *it;
}

int AsInt(const Json& j, const std::string& what) {
  Require(j.is_number_integer(), what + ": expected an integer");
  const auto v = j.get<long long>();
  Require(v >= INT32_MIN && v <= INT32_MAX, what + ": integer out of range");
  return static_cast<int>(v);
}

std::vector<int> AsIntVector(const Json& j, const std::string& what) {
  Require(j.is_array(), what + ": expected an array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(AsInt(e, what));
  return out;
}

std::vector<std::vector<int>> AsIntMatrix(const Json& j, const std::string& what) {
  Require(j.is_array(), what + ": expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) out.push_back(AsIntVector(row, what));
  return out;
}

std::vector<std::pair<Vertex, Vertex>> AsPairs(const Json& j, const std::string& what) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& row : AsIntMatrix(j, what)) {
    Require(row.size() == 2, what + ": expected pairs");
    out.emplace_back(row[0], row[1]);
  }
  return out;
}

Json Pairs(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

Json Optional(const std::optional<std::vector<int>>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON (byte ") + std::to_string(e.byte) +
                       "): " + e.what());
  }
}

Json ToJson(const Graph& graph) {
  return {{"n", graph.num_vertices()}, {"edges", Pairs(graph.edges())}};
}

Json ToJson(const Poset& poset) {
  return {{"n", poset.num_vertices()}, {"relation", Pairs(poset.relation())}};
}

Json ToJson(const Clutter& clutter) {
  return {{"n", clutter.num_vertices()},
          {"labels", clutter.labels()},
          {"edges", clutter.edges().empty() ? Json::array() : Json(clutter.edges())}};
}

Json ToJson(const IncidenceMatrix& matrix) {
  return {{"n", matrix.num_rows()}, {"q", matrix.num_columns()}, {"columns", matrix.columns()}};
}

Json ToJson(const MonomialIdeal& ideal) {
  return {{"n", ideal.num_variables()},
          {"generators", ideal.is_zero() ? Json::array() : Json(ideal.generators())}};
}

Json ToJson(const RationalVector& vector) {
  Json out = Json::array();
  for (const auto& r : vector) out.push_back(ToString(r));
  return out;
}

Json ToJson(const KonigCertificate& c) {
  Json matching = Json::array();
  for (const auto& e : c.matching) matching.push_back(e);
  return {{"property", "konig"}, {"verdict", c.holds() ? "holds" : "fails"},
          {"alpha0", c.alpha0},  {"beta1", c.beta1},
          {"cover", c.cover},    {"matching", matching}};
}

Json ToJson(const MfmcCertificate& c) {
  return {{"property", "mfmc"},
          {"verdict", c.holds ? "holds-up-to-bound" : "fails"},
          {"wmax", c.wmax},
          {"weights_checked", c.weights_checked},
          {"counterexample", Optional(c.counterexample)},
          {"certificate",
           c.counterexample_certificate ? ToJson(*c.counterexample_certificate) : Json(nullptr)}};
}

Json ToJson(const MengerResult& r) {
  Json j = ToJson(r.certificate);
  j["property"] = "menger";
  Json paths = Json::array();
  for (const auto& p : r.all_paths) paths.push_back(p);
  j["all_paths"] = paths;
  j["arcs"] = Pairs(r.instance.arcs);
  j["deleted"] = r.instance.deleted;
  j["sources"] = r.instance.sources;
  j["sinks"] = r.instance.sinks;
  j["vertices"] = r.instance.vertices;
  j["parallel"] = ToJson(r.instance.parallel);
  return j;
}

Json ToJson(const IdpCertificate& c) {
  Json j = {{"property", "integer-decomposition"},
            {"verdict", c.holds ? "holds-up-to-bound" : "fails"},
            {"kmax", c.kmax},
            {"points_checked", c.points_checked},
            {"failing_k", c.failing_k ? Json(*c.failing_k) : Json(nullptr)},
            {"counterexample", Optional(c.counterexample)}};
  if (c.holds) {
    j["sample_point"] = c.sample_point;
    Json parts = Json::array();
    for (const auto& p : c.sample_decomposition) parts.push_back(p);
    j["sample_decomposition"] = parts;
  }
  return j;
}

Json ToJson(const RoundingCertificate& c, int bound) {
  Json failures = Json::array();
  for (const auto& e : c.entries) {
    if (e.holds) continue;
    failures.push_back({{"w", e.w},
                        {"lp_max", ToString(e.lp_max)},
                        {"lp_floor", e.lp_floor.get_str()},
                        {"ilp_max", e.ilp_max}});
  }
  return {{"property", "integer-rounding"},
          {"verdict", c.holds ? "holds-on-grid" : "fails"},
          {"bound", bound},
          {"weights_checked", c.entries.size()},
          {"failures", failures}};
}

Json ToJson(const NormalityVerdict& v) {
  const bool ntf = v.kind == VerdictKind::kNtfUpTo || v.kind == VerdictKind::kNotNtf;
  Json j = {{"property", ntf ? "ntf" : "normality"},
            {"verdict", ToString(v.kind)},
            {"bound", v.bound},
            {"explanation", v.explanation},
            {"failing_power", v.failing_power ? Json(*v.failing_power) : Json(nullptr)},
            {"witness", Optional(v.witness)}};
  if (!v.positive()) {
    Json cert = Json::object();
    if (!v.closure_lambda.empty()) cert["closure_lambda"] = ToJson(v.closure_lambda);
    if (v.min_cover_degree) cert["min_cover_degree"] = *v.min_cover_degree;
    if (v.max_ordinary_power) cert["max_ordinary_power"] = *v.max_ordinary_power;
    j["certificate"] = cert;
  }
  return j;
}

Json ToJson(const LpDualityVerdict& v) {
  return {{"property", "lp-duality"},
          {"verdict", v.integral() ? "integral" : "fractional"},
          {"lp_min", ToString(v.lp_min)},
          {"lp_max", ToString(v.lp_max)},
          {"primal_solution", ToJson(v.primal_solution)},
          {"dual_solution", ToJson(v.dual_solution)},
          {"integer_min", v.integer_min},
          {"integer_max", v.integer_max},
          {"integer_cover", v.integer_cover}};
}

Json ToJson(const Report& report, bool with_timing) {
  Json instances = Json::array();
  for (const auto& r : report.instances) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"verdict", c.verdict},
                        {"positive", c.positive},
                        {"skipped", c.skipped},
                        {"bound", c.bound},
                        {"witness", Optional(c.witness)},
                        {"power", c.witness_power ? Json(*c.witness_power) : Json(nullptr)},
                        {"detail", c.detail}});
    }
    Json disagreements = Json::array();
    for (const auto& d : r.disagreements) {
      disagreements.push_back({{"relation", d.relation}, {"detail", d.detail}});
    }
    Json entry = {{"index", r.index},       {"name", r.name},
                  {"type", r.type},         {"description", r.description},
                  {"checks", checks},       {"disagreements", disagreements}};
    if (with_timing) entry["millis"] = r.millis;
    instances.push_back(std::move(entry));
  }
  Json gallery = Json::array();
  for (const auto& g : report.gallery) {
    gallery.push_back({{"instance", g.instance},
                       {"check", g.check},
                       {"witness", g.witness},
                       {"power", g.power ? Json(*g.power) : Json(nullptr)},
                       {"detail", g.detail}});
  }
  const Bounds& b = report.bounds;
  Json j = {{"corpus", report.corpus},
            {"bounds",
             {{"kmax", b.kmax},
              {"imax", b.imax},
              {"wmax", b.wmax},
              {"rounding_bound", b.rounding_bound},
              {"max_grid", b.max_grid}}},
            {"verdict", report.pass() ? "pass" : "fail"},
            {"instance_count", report.instances.size()},
            {"skipped_checks", report.skipped_checks},
            {"disagreement_count", report.disagreement_count},
            {"instances", instances},
            {"gallery", gallery}};
  if (with_timing) j["millis"] = report.millis;
  return j;
}

Graph GraphFromJson(const Json& j) {
  return Graph(AsInt(Field(j, "n"), "n"), AsPairs(Field(j, "edges"), "edges"));
}

Poset PosetFromJson(const Json& j, bool close) {
  const int n = AsInt(Field(j, "n"), "n");
  auto relation = AsPairs(Field(j, "relation"), "relation");
  return close ? Poset::FromTransitiveClosure(n, std::move(relation))
               : Poset(n, std::move(relation));
}

Clutter ClutterFromJson(const Json& j) {
  const int n = AsInt(Field(j, "n"), "n");
  auto edges = AsIntMatrix(Field(j, "edges"), "edges");
  if (j.contains("labels")) {
    const Json& labels = j["labels"];
    Require(labels.is_array(), "labels: expected an array of strings");
    std::vector<std::string> names;
    for (const auto& l : labels) {
      Require(l.is_string(), "labels: expected strings");
      names.push_back(l.get<std::string>());
    }
    return Clutter(n, std::move(names), std::move(edges));
  }
  return Clutter(n, std::move(edges));
}

IncidenceMatrix MatrixFromJson(const Json& j) {
  const int n = AsInt(Field(j, "n"), "n");
  auto columns = AsIntMatrix(Field(j, "columns"), "columns");
  if (j.contains("q")) {
    Require(AsInt(j["q"], "q") == static_cast<int>(columns.size()),
            "q differs from the number of columns");
  }
  for (const auto& c : columns) {
    Require(static_cast<int>(c.size()) == n, "columns: length differs from n");
  }
  return IncidenceMatrix(n, std::move(columns));
}

MonomialIdeal IdealFromJson(const Json& j) {
  return MonomialIdeal(AsInt(Field(j, "n"), "n"),
                       AsIntMatrix(Field(j, "generators"), "generators"));
}

Schema DetectSchema(const Json& j) {
  if (!j.is_object()) return Schema::kUnknown;
  if (j.contains("instances")) return Schema::kCorpus;
  if (j.contains("relation")) return Schema::kPoset;
  if (j.contains("columns")) return Schema::kMatrix;
  if (j.contains("generators")) return Schema::kIdeal;
  if (j.contains("edges")) {
    if (j.contains("labels")) return Schema::kClutter;
    const Json& edges = j["edges"];
    if (edges.is_array()) {
      for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) return Schema::kClutter;
      }
    }
    return Schema::kGraph;
  }
  return Schema::kUnknown;
}

std::vector<Instance> CorpusFromJson(const Json& j) {
  std::vector<Instance> corpus;
  auto add_one = [&](const Json& doc, std::string name, std::optional<bool> positive) {
    Instance instance;
    instance.name = std::move(name);
    if (doc.contains("poset")) {
      instance.data = PosetFromJson(doc["poset"]);
      instance.expect_positive = true;
    } else if (doc.contains("graph")) {
      instance.data = GraphFromJson(doc["graph"]);
    } else if (doc.contains("clutter")) {
      instance.data = ClutterFromJson(doc["clutter"]);
    } else if (doc.contains("ideal")) {
      instance.data = IdealFromJson(doc["ideal"]);
    } else {
      switch (DetectSchema(doc)) {
        case Schema::kPoset:
          instance.data = PosetFromJson(doc);
          instance.expect_positive = true;
          break;
        case Schema::kGraph:
          instance.data = GraphFromJson(doc);
          break;
        case Schema::kClutter:
          instance.data = ClutterFromJson(doc);
          break;
        case Schema::kIdeal:
          instance.data = IdealFromJson(doc);
          break;
        case Schema::kMatrix:
          instance.data = MonomialIdeal(MatrixFromJson(doc).num_rows(),
                                        MatrixFromJson(doc).columns());
          break;
        default:
          throw InvalidInput("corpus entry of unknown schema");
      }
    }
    if (positive) instance.expect_positive = *positive;
    corpus.push_back(std::move(instance));
  };
  if (DetectSchema(j) != Schema::kCorpus) {
    add_one(j, "instance-0", std::nullopt);
    return corpus;
  }
  const Json& list = j["instances"];
  Require(list.is_array(), "instances: expected an array");
  for (size_t i = 0; i < list.size(); ++i) {
    const Json& entry = list[i];
    Require(entry.is_object(), "instances: expected objects");
    std::string name = entry.contains("name") && entry["name"].is_string()
                           ? entry["name"].get<std::string>()
                           : "instance-" + std::to_string(i);
    std::optional<bool> positive;
    if (entry.contains("expect_positive")) {
      Require(entry["expect_positive"].is_boolean(), "expect_positive: expected a boolean");
      positive = entry["expect_positive"].get<bool>();
    }
    add_one(entry, std::move(name), positive);
  }
  return corpus;
}

}  // namespace clutterlab::io
