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


#include "cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clutterlab/certify.h"
#include "clutterlab/errors.h"
#include "clutterlab/ideals.h"
#include "clutterlab/packing.h"
#include "clutterlab/polyhedra.h"
#include "clutterlab/rational.h"
#include "clutterlab/structures.h"
#include "json_io.h"

#ifndef CLUTTERLAB_VERSION
#define CLUTTERLAB_VERSION "0.0.0"
#endif
#ifndef CLUTTERLAB_SCHEMA_VERSION
#define CLUTTERLAB_SCHEMA_VERSION "0"
#endif

namespace clutterlab::cli {
namespace {

using io::Json;
using io::Schema;

std::string Set(std::span<const int> v, const char* open = "{", const char* close = "}") {
  std::string out = open;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + close;
}

std::string Vec(std::span<const int> v) { return Set(v, "(", ")"); }

std::string Rationals(const RationalVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + ToString(v[i]);
  return out + ")";
}

std::vector<int> ParseIntList(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      Require(used == item.size(), "");
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput(flag + ": expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

RationalVector ParseRationalList(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseRational(item));
  return out;
}

struct Context {
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  bool text = false;
  bool close = false;
  bool timing = false;
  std::string input = "-";
  std::string inline_json;
};

Json ReadInput(const Context& ctx) {
  std::string text;
  if (!ctx.inline_json.empty()) {
    text = ctx.inline_json;
  } else if (ctx.input == "-") {
    std::ostringstream buffer;
    buffer << ctx.in->rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(ctx.input);
    Require(file.good(), "cannot open input file '" + ctx.input + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return io::Parse(text);
}

void Emit(const Context& ctx, const Json& json, const std::string& text) {
  if (ctx.text) {
    *ctx.out << text;
    if (!text.empty() && text.back() != '\n') *ctx.out << "\n";
  } else {
    *ctx.out << json.dump() << "\n";
  }
}

// Clutter from a clutter document, or the clique clutter of a graph or of
// the comparability graph of a poset.
Clutter ReadClutter(const Context& ctx, const Json& j) {
  switch (io::DetectSchema(j)) {
    case Schema::kPoset:
      return CliqueClutter(ComparabilityGraph(io::PosetFromJson(j, ctx.close)));
    case Schema::kClutter:
    case Schema::kGraph:
      return io::ClutterFromJson(j);
    default:
      throw InvalidInput("expected a clutter ({\"n\",\"edges\"}) or a poset");
  }
}

IncidenceMatrix ReadMatrix(const Context& ctx, const Json& j) {
  switch (io::DetectSchema(j)) {
    case Schema::kMatrix:
      return io::MatrixFromJson(j);
    case Schema::kIdeal: {
      const MonomialIdeal ideal = io::IdealFromJson(j);
      return ideal.Matrix();
    }
    default:
      return IncidenceMatrix::OfClutter(ReadClutter(ctx, j));
  }
}

MonomialIdeal ReadIdeal(const Context& ctx, const Json& j) {
  switch (io::DetectSchema(j)) {
    case Schema::kIdeal:
      return io::IdealFromJson(j);
    case Schema::kMatrix: {
      const IncidenceMatrix a = io::MatrixFromJson(j);
      return MonomialIdeal(a.num_rows(), a.columns());
    }
    default:
      return EdgeIdeal(ReadClutter(ctx, j));
  }
}

std::string GraphText(const Graph& g) {
  std::string out = "graph on " + std::to_string(g.num_vertices()) + " vertices, " +
                    std::to_string(g.edges().size()) + " edges\n";
  for (const auto& [a, b] : g.edges()) out += "  " + Set(std::vector<int>{a, b}) + "\n";
  return out;
}

std::string ClutterText(const Clutter& c) {
  std::string out = "clutter on " + std::to_string(c.num_vertices()) + " vertices, " +
                    std::to_string(c.num_edges()) + " edges\n";
  for (const auto& edge : c.LabeledEdges()) {
    out += "  {";
    for (size_t i = 0; i < edge.size(); ++i) out += (i ? "," : "") + edge[i];
    out += "}\n";
  }
  return out;
}

std::string IdealText(const MonomialIdeal& ideal) {
  std::string out = "monomial ideal in " + std::to_string(ideal.num_variables()) +
                    " variables, " + std::to_string(ideal.generators().size()) +
                    " minimal generators\n";
  for (const auto& g : ideal.generators()) out += "  " + Vec(g) + "\n";
  return out;
}

std::string KonigText(const KonigCertificate& k) {
  std::string out = std::string("konig: ") + (k.holds() ? "holds" : "fails") + "\n";
  out += "  alpha0 = " + std::to_string(k.alpha0) + "  cover " + Set(k.cover) + "\n";
  out += "  beta1  = " + std::to_string(k.beta1) + "  matching";
  for (const auto& e : k.matching) out += " " + Set(e);
  return out + "\n";
}

std::string VerdictText(const NormalityVerdict& v) {
  std::string out = ToString(v.kind) + " " + std::to_string(v.bound) + "\n  " + v.explanation + "\n";
  if (!v.positive()) {
    if (!v.closure_lambda.empty()) out += "  lambda " + Rationals(v.closure_lambda) + "\n";
    if (v.min_cover_degree) {
      out += "  min cover degree " + std::to_string(*v.min_cover_degree) + "\n";
    }
    if (v.max_ordinary_power) {
      out += "  largest ordinary power containing it " +
             std::to_string(*v.max_ordinary_power) + "\n";
    }
  }
  return out;
}

std::string ReportText(const Report& r) {
  std::ostringstream out;
  out << "corpus " << r.corpus << ": " << r.instances.size() << " instances, "
      << (r.pass() ? "PASS" : "FAIL") << ", " << r.disagreement_count << " disagreements, "
      << r.skipped_checks << " skipped checks, " << r.millis << " ms\n";
  out << "bounds kmax=" << r.bounds.kmax << " imax=" << r.bounds.imax
      << " wmax=" << r.bounds.wmax << " rounding=" << r.bounds.rounding_bound << "\n";
  for (const auto& inst : r.instances) {
    out << "[" << inst.index << "] " << inst.name << " (" << inst.type << ", "
        << inst.millis << " ms)";
    for (const auto& c : inst.checks) out << " " << c.name << "=" << c.verdict;
    out << "\n";
    for (const auto& d : inst.disagreements) {
      out << "    DISAGREEMENT " << d.relation << ": " << d.detail << "\n";
    }
    for (const auto& c : inst.checks) {
      if (c.skipped) out << "    skipped " << c.name << ": " << c.detail << "\n";
    }
  }
  if (!r.gallery.empty()) out << "counterexamples:\n";
  for (const auto& g : r.gallery) {
    out << "  " << g.instance << " " << g.check << " witness " << Vec(g.witness);
    if (g.power) out << " at power " << *g.power;
    if (!g.detail.empty()) out << " (" << g.detail << ")";
    out << "\n";
  }
  return out.str();
}

int Exit(bool positive) { return positive ? kPositive : kNegative; }

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  Context ctx;
  ctx.in = &in;
  ctx.out = &out;

  CLI::App app{"Exact combinatorial-optimization checks for clutters, posets and monomial ideals",
               "clutterlab"};
  app.set_version_flag("--version", std::string("clutterlab ") + CLUTTERLAB_VERSION +
                                        " (schema " + CLUTTERLAB_SCHEMA_VERSION + ")");
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  app.add_flag("--json", json_flag, "Canonical JSON output (default)");
  app.add_flag("--text", ctx.text, "Human-readable output");
  app.add_flag("--close", ctx.close, "Replace poset relations by their transitive closure");

  std::map<std::string, std::function<int()>> handlers;
  auto command = [&](const std::string& name, const std::string& help, bool takes_input = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (takes_input) {
      sub->add_option("input", ctx.input, "Input JSON file ('-' or omitted: stdin)");
      sub->add_option("--inline", ctx.inline_json, "Input JSON given inline");
    }
    return sub;
  };

  int kmax = 3, imax = 3, wmax = 3, power = 1, bound = 3;
  int d = 2, g = 2;
  bool as_poset = false;
  std::string w_text, a_text, z_text;
  std::optional<int> duplicate_vertex, delete_vertex;

  command("comparability", "Comparability graph of a poset");
  handlers["comparability"] = [&] {
    const Graph graph = ComparabilityGraph(io::PosetFromJson(ReadInput(ctx), ctx.close));
    Emit(ctx, io::ToJson(graph), GraphText(graph));
    return kPositive;
  };

  command("clique-clutter", "Clutter of maximal cliques of a graph (or of a poset's comparability graph)");
  handlers["clique-clutter"] = [&] {
    const Json j = ReadInput(ctx);
    const Graph graph = io::DetectSchema(j) == Schema::kPoset
                            ? ComparabilityGraph(io::PosetFromJson(j, ctx.close))
                            : io::GraphFromJson(j);
    const Clutter c = CliqueClutter(graph);
    Emit(ctx, io::ToJson(c), ClutterText(c));
    return kPositive;
  };

  {
    CLI::App* sub = command("cauc", "Complete admissible uniform clutter CAUC(d,g)", false);
    sub->add_option("--d", d, "Number of layers (>= 2)")->required();
    sub->add_option("--g", g, "Layer size (>= 2)")->required();
    sub->add_flag("--poset", as_poset, "Emit the poset whose clique clutter it is");
  }
  handlers["cauc"] = [&] {
    if (as_poset) {
      const Poset p = CaucPoset(d, g);
      std::ostringstream text;
      text << "poset on " << p.num_vertices() << " elements, " << p.relation().size()
           << " relations\n";
      Emit(ctx, io::ToJson(p), text.str());
    } else {
      const Clutter c = CompleteAdmissibleUniformClutter(d, g);
      Emit(ctx, io::ToJson(c), ClutterText(c));
    }
    return kPositive;
  };

  {
    CLI::App* sub = command("parallelize", "Parallelization C^w, or a single duplication/deletion");
    auto* w = sub->add_option("--w", w_text, "Weight vector, comma-separated");
    auto* dup = sub->add_option("--duplicate", duplicate_vertex, "Duplicate one vertex");
    auto* del = sub->add_option("--delete", delete_vertex, "Delete one vertex");
    w->excludes(dup)->excludes(del);
    dup->excludes(del);
  }
  handlers["parallelize"] = [&] {
    const Clutter c = ReadClutter(ctx, ReadInput(ctx));
    auto in_range = [&](int v) {
      Require(v >= 0 && v < c.num_vertices(), "vertex index out of range");
      return v;
    };
    Clutter result;
    if (duplicate_vertex) {
      result = Duplicate(c, in_range(*duplicate_vertex));
    } else if (delete_vertex) {
      result = Delete(c, in_range(*delete_vertex));
    } else {
      Require(!w_text.empty(), "parallelize: one of --w, --duplicate, --delete is required");
      const auto w = ParseIntList(w_text, "--w");
      Require(static_cast<int>(w.size()) == c.num_vertices(), "--w: length differs from n");
      for (int v : w) Require(v >= 0, "--w: weights must be non-negative");
      result = Parallelization(c, w);
    }
    Emit(ctx, io::ToJson(result), ClutterText(result));
    return kPositive;
  };

  command("konig", "Covering number, matching number and the Konig property");
  handlers["konig"] = [&] {
    const KonigCertificate k = KonigHolds(ReadClutter(ctx, ReadInput(ctx)));
    Emit(ctx, io::ToJson(k), KonigText(k));
    return Exit(k.holds());
  };

  command("mfmc", "Konig property of every parallelization C^w, w in {0..wmax}^n")
      ->add_option("--wmax", wmax, "Weight bound (>= 1)");
  handlers["mfmc"] = [&] {
    const MfmcCertificate m = MfmcBounded(ReadClutter(ctx, ReadInput(ctx)), wmax);
    std::string text = std::string("mfmc: ") + (m.holds ? "holds-up-to-bound " : "fails ") +
                       std::to_string(m.wmax) + " (" + std::to_string(m.weights_checked) +
                       " weights checked)\n";
    if (m.counterexample) {
      text += "  counterexample w = " + Vec(*m.counterexample) + "\n" +
              KonigText(*m.counterexample_certificate);
    }
    Emit(ctx, io::ToJson(m), text);
    return Exit(m.holds);
  };

  command("menger", "Vertex-disjoint chains and minimum separators in a parallelized poset")
      ->add_option("--w", w_text, "Weight vector, comma-separated (default all ones)");
  handlers["menger"] = [&] {
    const Poset p = io::PosetFromJson(ReadInput(ctx), ctx.close);
    std::vector<int> w(p.num_vertices(), 1);
    if (!w_text.empty()) w = ParseIntList(w_text, "--w");
    Require(static_cast<int>(w.size()) == p.num_vertices(), "--w: length differs from n");
    for (int v : w) Require(v >= 0, "--w: weights must be non-negative");
    const MengerResult m = MengerOracle(p, w);
    std::string text = "menger: " + std::to_string(m.certificate.beta1) +
                       " vertex-disjoint paths, separator of size " +
                       std::to_string(m.certificate.alpha0) + " " + Set(m.certificate.cover) +
                       "\n  paths";
    for (const auto& path : m.certificate.matching) text += " " + Set(path);
    text += "\n  " + std::to_string(m.all_paths.size()) + " source-sink paths in " +
            std::to_string(m.instance.arcs.size()) + " covering arcs\n";
    Emit(ctx, io::ToJson(m), text);
    return Exit(m.certificate.holds());
  };

  {
    CLI::App* sub = command("polyhedron", "Covering polyhedron Q(A): vertices and integrality");
    sub->add_option("--w", w_text, "Also solve both sides of the LP-duality equation at w");
    sub->add_option("--z", z_text, "Also test z (comma-separated rationals) against B(Q)");
  }
  handlers["polyhedron"] = [&] {
    const Json input = ReadInput(ctx);
    const IncidenceMatrix a = ReadMatrix(ctx, input);
    const RationalPolyhedron q = CoveringPolyhedron(a);
    const auto vertices = Vertices(q);
    bool integral = true;
    Json vj = Json::array();
    std::string text = "Q(A) in R^" + std::to_string(a.num_rows()) + ", " +
                       std::to_string(q.rows().size()) + " inequalities, " +
                       std::to_string(vertices.size()) + " vertices\n";
    for (const auto& v : vertices) {
      vj.push_back(io::ToJson(v));
      text += "  " + Rationals(v) + "\n";
      for (const auto& x : v) integral = integral && IsInteger(x);
    }
    Json rows = Json::array();
    for (const auto& r : q.rows()) rows.push_back(io::ToJson(r));
    Json j = {{"property", "covering-polyhedron"},
              {"dimension", a.num_rows()},
              {"rows", rows},
              {"rhs", io::ToJson(q.rhs())},
              {"vertices", vj},
              {"integral", integral}};
    text += std::string("  ") + (integral ? "integral" : "not integral") + "\n";
    if (!w_text.empty()) {
      const auto w = ParseIntList(w_text, "--w");
      Require(static_cast<int>(w.size()) == a.num_rows(), "--w: length differs from n");
      const Clutter c = ReadClutter(ctx, input);
      const LpDualityVerdict lp = LpDualityIntegerCheck(c, vertices, w);
      j["lp_duality"] = io::ToJson(lp);
      text += "  LP optimum " + ToString(lp.lp_min) + ", integer min " +
              std::to_string(lp.integer_min) + ", integer max " +
              std::to_string(lp.integer_max) + (lp.integral() ? " (integral)" : " (fractional)") +
              "\n";
    }
    if (!z_text.empty()) {
      const RationalVector z = ParseRationalList(z_text);
      Require(static_cast<int>(z.size()) == a.num_rows(), "--z: length differs from n");
      const bool member = BlockingMembership(a, z);
      j["blocking_membership"] = member;
      text += std::string("  z ") + (member ? "lies" : "does not lie") + " in B(Q)\n";
    }
    Emit(ctx, j, text);
    return kPositive;
  };

  command("idp", "Integer decomposition property of B(Q) up to kmax, minimal integer vectors")
      ->add_option("--kmax", kmax, "Largest dilation checked (>= 2)");
  handlers["idp"] = [&] {
    const BlockingPolyhedron blocker(ReadMatrix(ctx, ReadInput(ctx)));
    const IdpCertificate c = IntegerDecompositionCheck(blocker, kmax);
    const auto minimal = MinimalIntegerVectors(blocker);
    Json j = io::ToJson(c);
    j["minimal_integer_vectors"] = minimal;
    bool columns = true;
    for (const auto& m : minimal) {
      columns = columns && std::find(blocker.matrix().columns().begin(),
                                     blocker.matrix().columns().end(),
                                     m) != blocker.matrix().columns().end();
    }
    j["minimal_vectors_are_columns"] = columns;
    std::string text = std::string("integer decomposition: ") +
                       (c.holds ? "holds-up-to-bound " : "fails ") + std::to_string(kmax) + "\n";
    if (!c.holds) {
      text += "  " + Vec(*c.counterexample) + " in " + std::to_string(*c.failing_k) +
              "B(Q) is not a sum of lattice points of B(Q)\n";
    }
    text += "  minimal integer vectors:";
    for (const auto& m : minimal) text += " " + Vec(m);
    text += columns ? "  (all columns)\n" : "  (not all columns)\n";
    Emit(ctx, j, text);
    return Exit(c.holds);
  };

  {
    CLI::App* sub = command("rounding", "Integer rounding property on the grid {0..bound}^n");
    sub->add_option("--bound", bound, "Grid bound");
    sub->add_option("--w", w_text, "Check a single weight vector instead");
  }
  handlers["rounding"] = [&] {
    const IncidenceMatrix a = ReadMatrix(ctx, ReadInput(ctx));
    std::vector<std::vector<int>> wset;
    if (!w_text.empty()) {
      wset.push_back(ParseIntList(w_text, "--w"));
      Require(static_cast<int>(wset[0].size()) == a.num_rows(), "--w: length differs from n");
    } else {
      Require(bound >= 0, "--bound must be >= 0");
      wset = WeightGrid(a.num_rows(), bound);
    }
    const RoundingCertificate c = IntegerRoundingCheck(a, wset);
    std::string text = std::string("integer rounding: ") + (c.holds ? "holds" : "fails") +
                       " on " + std::to_string(c.entries.size()) + " weight vectors\n";
    for (const auto& e : c.entries) {
      if (e.holds && wset.size() > 1) continue;
      text += "  w=" + Vec(e.w) + " LP max " + ToString(e.lp_max) + ", floor " +
              e.lp_floor.get_str() + ", integer max " + std::to_string(e.ilp_max) + "\n";
    }
    Emit(ctx, io::ToJson(c, w_text.empty() ? bound : -1), text);
    return Exit(c.holds);
  };

  command("edge-ideal", "Edge ideal of a clutter");
  handlers["edge-ideal"] = [&] {
    const MonomialIdeal ideal = EdgeIdeal(ReadClutter(ctx, ReadInput(ctx)));
    Emit(ctx, io::ToJson(ideal), IdealText(ideal));
    return kPositive;
  };

  {
    CLI::App* sub = command("power", "Minimal generators of I^i");
    sub->add_option("--i", power, "Exponent (>= 1)");
    sub->add_option("--a", a_text, "Instead decide x^a in I^i");
  }
  handlers["power"] = [&] {
    const MonomialIdeal ideal = ReadIdeal(ctx, ReadInput(ctx));
    if (!a_text.empty()) {
      const auto a = ParseIntList(a_text, "--a");
      Require(static_cast<int>(a.size()) == ideal.num_variables(), "--a: wrong length");
      const bool member = PowerMembership(ideal, a, power);
      Emit(ctx, {{"property", "power-membership"}, {"power", power}, {"a", a}, {"member", member}},
           "x^" + Vec(a) + (member ? " lies in I^" : " does not lie in I^") +
               std::to_string(power) + "\n");
      return Exit(member);
    }
    const MonomialIdeal p = Power(ideal, power);
    Emit(ctx, io::ToJson(p), IdealText(p));
    return kPositive;
  };

  {
    CLI::App* sub = command("symbolic", "Minimal generators of the symbolic power I^(i) of an edge ideal");
    sub->add_option("--i", power, "Exponent (>= 1)");
    sub->add_option("--a", a_text, "Instead decide x^a in I^(i)");
  }
  handlers["symbolic"] = [&] {
    const Clutter c = ReadClutter(ctx, ReadInput(ctx));
    if (!a_text.empty()) {
      const auto a = ParseIntList(a_text, "--a");
      Require(static_cast<int>(a.size()) == c.num_vertices(), "--a: wrong length");
      const bool member = SymbolicPowerMembership(c, a, power);
      Emit(ctx, {{"property", "symbolic-membership"}, {"power", power}, {"a", a}, {"member", member}},
           "x^" + Vec(a) + (member ? " lies in I^(" : " does not lie in I^(") +
               std::to_string(power) + ")\n");
      return Exit(member);
    }
    const MonomialIdeal s = SymbolicPower(c, power);
    Emit(ctx, io::ToJson(s), IdealText(s));
    return kPositive;
  };

  {
    CLI::App* sub = command("closure", "Integral closure of I^k");
    sub->add_option("--k", power, "Power (>= 1)");
    sub->add_option("--a", a_text, "Instead decide x^a in the closure of I^k");
  }
  handlers["closure"] = [&] {
    const MonomialIdeal ideal = ReadIdeal(ctx, ReadInput(ctx));
    if (!a_text.empty()) {
      const auto a = ParseIntList(a_text, "--a");
      Require(static_cast<int>(a.size()) == ideal.num_variables(), "--a: wrong length");
      const bool member = IntegralClosureMembership(ideal, a, power);
      Emit(ctx, {{"property", "closure-membership"}, {"power", power}, {"a", a}, {"member", member}},
           "x^" + Vec(a) + (member ? " lies in the closure of I^" : " does not lie in the closure of I^") +
               std::to_string(power) + "\n");
      return Exit(member);
    }
    const MonomialIdeal c = IntegralClosureOfPower(ideal, power);
    Emit(ctx, io::ToJson(c), IdealText(c));
    return kPositive;
  };

  command("normal", "Normality up to kmax (two independent routes)")
      ->add_option("--kmax", kmax, "Largest power checked (>= 1)");
  handlers["normal"] = [&] {
    const NormalityVerdict v = IsNormalUpTo(ReadIdeal(ctx, ReadInput(ctx)), kmax);
    Emit(ctx, io::ToJson(v), VerdictText(v));
    return Exit(v.positive());
  };

  command("ntf", "Normal torsion-freeness of an edge ideal up to imax")
      ->add_option("--imax", imax, "Largest power checked (>= 1)");
  handlers["ntf"] = [&] {
    const NormalityVerdict v = IsNtfUpTo(ReadClutter(ctx, ReadInput(ctx)), imax);
    Emit(ctx, io::ToJson(v), VerdictText(v));
    return Exit(v.positive());
  };

  CorpusSpec spec;
  Bounds bounds;
  std::string corpus_kind = "all-posets";
  std::uint64_t max_grid = bounds.max_grid;
  {
    CLI::App* sub = command("certify", "Run the cross-validation suite on a corpus");
    sub->add_option("--corpus", corpus_kind,
                    "all-posets | random-posets | random-graphs | random-ideals | "
                    "random-clutters | cauc | explicit");
    sub->add_option("--n", spec.n, "Largest instance size");
    sub->add_option("--n-min", spec.n_min, "Smallest instance size (default: n)");
    sub->add_option("--count", spec.count, "Instances to draw (random corpora)");
    sub->add_option("--seed", spec.seed, "Seed (random corpora)");
    sub->add_option("--q", spec.q, "Random ideals: generators");
    sub->add_option("--max-exponent", spec.max_exponent, "Random ideals: exponent bound");
    sub->add_option("--max-edges", spec.max_edges, "Random clutters: edges drawn");
    sub->add_option("--g-max", spec.g_max, "cauc: largest g");
    sub->add_option("--kmax", bounds.kmax, "Normality bound");
    sub->add_option("--imax", bounds.imax, "Normal torsion-freeness bound");
    sub->add_option("--wmax", bounds.wmax, "Weight bound for mfmc, LP duality and Menger");
    sub->add_option("--rounding-bound", bounds.rounding_bound, "Integer rounding grid bound");
    sub->add_option("--max-grid", max_grid, "Skip weight grids larger than this");
    sub->add_flag("--timing", ctx.timing, "Include timings in JSON output");
  }
  handlers["certify"] = [&] {
    bounds.max_grid = max_grid;
    if (const auto budget = GuardBudgetFromEnvironment()) bounds.instance_budget_ms = budget->count();
    std::vector<Instance> corpus;
    std::string name;
    if (corpus_kind == "explicit") {
      corpus = io::CorpusFromJson(ReadInput(ctx));
      name = "explicit";
    } else {
      spec.kind = ParseCorpusKind(corpus_kind);
      corpus = GenerateCorpus(spec);
      name = corpus_kind + "(n=" + std::to_string(spec.n) +
             (spec.n_min ? ",n_min=" + std::to_string(spec.n_min) : "") +
             (spec.kind == CorpusKind::kAllPosets || spec.kind == CorpusKind::kCauc
                  ? ""
                  : ",count=" + std::to_string(spec.count) + ",seed=" + std::to_string(spec.seed)) +
             ")";
    }
    const Report report = RunTheoremSuite(corpus, bounds, name);
    Emit(ctx, io::ToJson(report, ctx.timing), ReportText(report));
    return Exit(report.pass());
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsageError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "certify") return handlers[name]();
    ScopedDeadline deadline(GuardBudgetFromEnvironment());
    return handlers[name]();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceExhausted& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceExhausted;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace clutterlab::cli
