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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.h"

namespace clutterlab::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Result r;
  r.code = RunCli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const char* kPentagon = R"({"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]})";
const char* kSquares = R"({"n":2,"generators":[[2,0],[0,2]]})";
const char* kChain = R"({"n":3,"relation":[[0,1],[1,2]]})";

TEST(CliTest, VersionHelpAndUsageErrors) {
  EXPECT_EQ(Cli({"--version"}).out, "clutterlab 1.0.0 (schema 1)\n");
  EXPECT_EQ(Cli({"--version"}).code, kPositive);
  EXPECT_EQ(Cli({"--help"}).code, kPositive);
  EXPECT_EQ(Cli({}).code, kUsageError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(Cli({"konig", "--bogus", "--inline", kPentagon}).code, kUsageError);
  EXPECT_EQ(Cli({"power", "--i", "0", "--inline", kSquares}).code, kUsageError);
}

TEST(CliTest, MalformedInputIsReportedWithPosition) {
  const Result r = Cli({"konig"}, "{\"n\": 3,\n \"edges\": [[0,1],]}");
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  const Result nontransitive = Cli({"comparability", "--inline", kChain});
  EXPECT_EQ(nontransitive.code, kUsageError);
  EXPECT_NE(nontransitive.err.find("missing (0,2)"), std::string::npos);
  EXPECT_EQ(Cli({"konig", "--inline", R"({"n":2,"edges":[[0,5]]})"}).code, kUsageError);
  EXPECT_EQ(Cli({"konig", "/nonexistent/input.json"}).code, kUsageError);
}

TEST(CliTest, GoldenStructureOutputs) {
  EXPECT_EQ(Cli({"--close", "comparability", "--inline", kChain}).out,
            "{\"edges\":[[0,1],[0,2],[1,2]],\"n\":3}\n");
  EXPECT_EQ(Cli({"cauc", "--d", "2", "--g", "2"}).out,
            "{\"edges\":[[0,2],[0,3],[1,3]],\"labels\":[\"x1^1\",\"x2^1\",\"x1^2\",\"x2^2\"],"
            "\"n\":4}\n");
  EXPECT_EQ(Cli({"cauc", "--d", "2", "--g", "2", "--poset"}).out,
            "{\"n\":4,\"relation\":[[0,2],[0,3],[1,3]]}\n");
  EXPECT_EQ(Cli({"parallelize", "--w", "2,1,0", "--inline", R"({"n":3,"edges":[[0,1],[1,2]]})"})
                .out,
            "{\"edges\":[[0,1],[1,2]],\"labels\":[\"x0\",\"x1\",\"x0'1\"],\"n\":3}\n");
  EXPECT_EQ(Cli({"clique-clutter", "--inline", R"({"n":4,"edges":[[0,1],[1,2],[0,2]]})"}).out,
            "{\"edges\":[[0,1,2],[3]],\"labels\":[\"x0\",\"x1\",\"x2\",\"x3\"],\"n\":4}\n");
}

TEST(CliTest, GoldenIdealOutputs) {
  EXPECT_EQ(Cli({"edge-ideal", "--inline", R"({"n":3,"edges":[[0,1],[1,2]]})"}).out,
            "{\"generators\":[[0,1,1],[1,1,0]],\"n\":3}\n");
  EXPECT_EQ(Cli({"power", "--i", "2", "--inline", kSquares}).out,
            "{\"generators\":[[0,4],[2,2],[4,0]],\"n\":2}\n");
  EXPECT_EQ(Cli({"closure", "--k", "1", "--inline", kSquares}).out,
            "{\"generators\":[[0,2],[1,1],[2,0]],\"n\":2}\n");
  EXPECT_EQ(Cli({"symbolic", "--i", "2", "--inline", R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})"})
                .out,
            "{\"generators\":[[0,2,2],[1,1,1],[2,0,2],[2,2,0]],\"n\":3}\n");
  const Result member = Cli({"power", "--i", "2", "--a", "1,3", "--inline", kSquares});
  EXPECT_EQ(member.code, kNegative);
  EXPECT_EQ(Cli({"closure", "--k", "1", "--a", "1,1", "--inline", kSquares}).code, kPositive);
}

TEST(CliTest, VerdictsAndExitCodes) {
  const Result konig = Cli({"konig", "--inline", kPentagon});
  EXPECT_EQ(konig.code, kNegative);
  EXPECT_EQ(konig.out,
            "{\"alpha0\":3,\"beta1\":2,\"cover\":[0,1,3],\"matching\":[[0,1],[2,3]],"
            "\"property\":\"konig\",\"verdict\":\"fails\"}\n");
  const Result ntf = Cli({"ntf", "--imax", "3", "--inline", kPentagon});
  EXPECT_EQ(ntf.code, kNegative);
  const io::Json nj = io::Parse(ntf.out);
  EXPECT_EQ(nj["verdict"], "not-ntf");
  EXPECT_EQ(nj["failing_power"], 3);
  EXPECT_EQ(nj["witness"], io::Json::parse("[1,1,1,1,1]"));
  EXPECT_EQ(nj["certificate"]["max_ordinary_power"], 2);

  const Result normal = Cli({"normal", "--kmax", "3", "--inline", kSquares});
  EXPECT_EQ(normal.code, kNegative);
  const io::Json j = io::Parse(normal.out);
  EXPECT_EQ(j["witness"], io::Json::parse("[1,1]"));
  EXPECT_EQ(j["certificate"]["closure_lambda"], io::Json::parse(R"(["1/2","1/2"])"));

  EXPECT_EQ(Cli({"mfmc", "--wmax", "2", "--inline", kPentagon}).code, kNegative);
  EXPECT_EQ(Cli({"idp", "--kmax", "3", "--inline", kSquares}).code, kPositive);
  EXPECT_EQ(Cli({"rounding", "--inline", kSquares}).code, kNegative);
  EXPECT_EQ(Cli({"rounding", "--inline", kPentagon}).code, kPositive);
  const Result menger = Cli({"--close", "menger", "--inline", kChain});
  EXPECT_EQ(menger.code, kPositive);
  EXPECT_EQ(io::Parse(menger.out)["beta1"], 1);
  const Result poly = Cli({"polyhedron", "--w", "1,1,1,1,1", "--inline", kPentagon});
  EXPECT_EQ(poly.code, kPositive);
  const io::Json pj = io::Parse(poly.out);
  EXPECT_EQ(pj["integral"], false);
  EXPECT_EQ(pj["vertices"].size(), 6u);
  EXPECT_EQ(pj["lp_duality"]["lp_max"], "5/2");
}

TEST(CliTest, ResourceGuards) {
  const Result box = Cli({"symbolic", "--i", "60", "--inline",
                          R"({"n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5]]})"});
  EXPECT_EQ(box.code, kResourceExhausted);
  EXPECT_NE(box.err.find("resource limit"), std::string::npos);

  const std::string cauc = Cli({"cauc", "--d", "3", "--g", "3"}).out;
  ::setenv("CLUTTERLAB_GUARD_MS", "1", 1);
  const Result timed = Cli({"mfmc", "--wmax", "3", "--inline", cauc});
  ::unsetenv("CLUTTERLAB_GUARD_MS");
  EXPECT_EQ(timed.code, kResourceExhausted);
  EXPECT_NE(timed.err.find("deadline"), std::string::npos);
}

TEST(CliTest, OutputsPipeIntoOtherSubcommands) {
  const std::string cauc = Cli({"cauc", "--d", "2", "--g", "3"}).out;
  EXPECT_EQ(Cli({"ntf", "--imax", "3"}, cauc).code, kPositive);
  EXPECT_EQ(Cli({"konig", "-"}, cauc).code, kPositive);
  const std::string ideal = Cli({"edge-ideal"}, cauc).out;
  EXPECT_EQ(Cli({"normal", "--kmax", "3"}, ideal).code, kPositive);
  const std::string poset = Cli({"cauc", "--d", "2", "--g", "3", "--poset"}).out;
  EXPECT_EQ(Cli({"menger", "--w", "1,2,0,1,1,1"}, poset).code, kPositive);
  EXPECT_EQ(Cli({"clique-clutter"}, Cli({"comparability"}, poset).out).out,
            Cli({"clique-clutter"}, poset).out);

  const std::string doubled = Cli({"parallelize", "--duplicate", "0", "--inline", kPentagon}).out;
  const io::Json dj = io::Parse(doubled);
  EXPECT_EQ(dj["n"], 6);
  // Doubling a vertex of the pentagon adds a third disjoint edge.
  const Result doubled_konig = Cli({"konig"}, doubled);
  EXPECT_EQ(doubled_konig.code, kPositive);
  EXPECT_EQ(io::Parse(doubled_konig.out)["beta1"], 3);
  const std::string squared = Cli({"power", "--i", "2", "--inline", kSquares}).out;
  EXPECT_EQ(Cli({"normal", "--kmax", "2"}, squared).code, kNegative);
  const std::string symbolic = Cli({"symbolic", "--i", "2", "--inline", kPentagon}).out;
  EXPECT_EQ(Cli({"power", "--i", "1"}, symbolic).out, symbolic);
}

TEST(CliTest, TextOutput) {
  const Result r = Cli({"--text", "konig", "--inline", kPentagon});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_NE(r.out.find("alpha0 = 3"), std::string::npos);
  const Result ntf = Cli({"--text", "ntf", "--imax", "3", "--inline", kPentagon});
  EXPECT_NE(ntf.out.find("lies in I^(3) but not in I^3"), std::string::npos);
}

TEST(CliTest, CertifyIsReproducibleAndLocalizesDisagreements) {
  const std::vector<std::string> args = {"certify", "--corpus", "random-clutters", "--n", "4",
                                         "--count", "12", "--seed", "5"};
  const Result a = Cli(args), b = Cli(args);
  EXPECT_EQ(a.code, kPositive);
  EXPECT_EQ(a.out, b.out);
  const io::Json report = io::Parse(a.out);
  EXPECT_EQ(report["verdict"], "pass");
  EXPECT_EQ(report["instance_count"], 12);
  EXPECT_FALSE(report.contains("millis"));
  EXPECT_TRUE(io::Parse(Cli({"certify", "--corpus", "cauc", "--n", "2", "--timing"}).out)
                  .contains("millis"));

  const std::string corpus = std::string(R"({"instances":[{"name":"c5","expect_positive":true,)") +
                             R"("clutter":)" + kPentagon + "}]}";
  const Result bad = Cli({"certify", "--corpus", "explicit", "--inline", corpus});
  EXPECT_EQ(bad.code, kNegative);
  const io::Json bj = io::Parse(bad.out);
  EXPECT_EQ(bj["verdict"], "fail");
  bool localized = false;
  for (const auto& d : bj["instances"][0]["disagreements"]) {
    localized |= d["relation"] == "expected-positive-vs-ntf";
  }
  EXPECT_TRUE(localized);
  EXPECT_EQ(Cli({"certify", "--corpus", "all-posets", "--n", "9"}).code, kUsageError);
}

}  // namespace
}  // namespace clutterlab::cli
