/* Copyright (C) 2026 The chainring authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */


#include <sstream>

#include <gtest/gtest.h>

#include "chainring/io.hpp"
#include "cli.hpp"

using namespace chainring;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, RingShow) {
  auto r = run({"ring", "show", "--family", "unramified", "--p", "2", "--n", "1", "--s", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z4"), std::string::npos);
  EXPECT_NE(r.out.find("Gamma = {0,1}"), std::string::npos);
  EXPECT_NE(r.out.find("units = 2"), std::string::npos);
}

TEST(Cli, RingList) {
  auto r = run({"ring", "list"});
  EXPECT_EQ(r.code, 0);
  for (const auto& n : fixture_names()) EXPECT_NE(r.out.find(n), std::string::npos) << n;
}

TEST(Cli, CodeRsf) {
  auto r = run({"code", "rsf", "--ring", "z4", "--matrix", "2 2;1 1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 1\ntype (2;1,0)\n");
}

TEST(Cli, CodeDualFromStdin) {
  auto r = run({"code", "dual", "--ring", "z4"}, "1 1\n0 2\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 2\ntype (2;0,1)\n");
}

TEST(Cli, Cosets) {
  auto r = run({"cyclic", "cosets", "--ell", "7", "--q", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{0} {1,2,4} {3,5,6}\n");
  auto bad = run({"cyclic", "cosets", "--ell", "6", "--q", "2"});
  EXPECT_EQ(bad.code, 1);
  auto j = json::parse(bad.err);
  EXPECT_EQ(j["error"], "NotCoprime");
}

TEST(Cli, DomainErrorsAreJson) {
  auto r = run({"code", "rsf", "--ring", "z4", "--matrix", "1 1;1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"], "LengthMismatch");
  auto f = run({"code", "rsf", "--ring", "nope", "--matrix", "1"});
  EXPECT_EQ(f.code, 1);
  EXPECT_EQ(json::parse(f.err)["error"], "UnknownFixture");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"code"}).code, 2);
  EXPECT_EQ(run({"code", "rsf", "--bogus"}).code, 2);
  auto r = run({"verify", "unknown"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownSuite"), std::string::npos);
}

TEST(Cli, JsonRoundTripThroughConsumers) {
  auto a = run({"--json", "code", "rsf", "--ring", "gr42", "--matrix", "1 0,1;0 2"});
  ASSERT_EQ(a.code, 0);
  Code c = code_from_json(json::parse(a.out));
  EXPECT_EQ(c.length(), 2);
  for (const char* sub : {"rsf", "dual", "res", "trace", "closure", "interior", "bounds", "delsarte",
                          "invariant"}) {
    auto b = run({"--json", "code", sub}, a.out);
    EXPECT_EQ(b.code, 0) << sub << ": " << b.err;
    EXPECT_NO_THROW(json::parse(b.out)) << sub;
  }
  auto d = run({"code", "dual", "--json"}, a.out);
  ASSERT_EQ(d.code, 0);
  auto dd = run({"--json", "code", "dual"}, d.out);
  EXPECT_EQ(code_from_json(json::parse(dd.out)), c);
}

TEST(Cli, ExtCommands) {
  auto t = run({"ext", "trace", "--ring", "gr43", "--elem", "1"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "3\n");
  auto f = run({"ext", "frobenius", "--ring", "gr43", "--elem", "0,1,0"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out, "0,0,1\n");
  auto b = run({"--json", "ext", "build", "--ring", "z4", "--m", "3"});
  EXPECT_EQ(b.code, 0);
  auto tw = tower_from_json(json::parse(b.out));
  EXPECT_TRUE(tw->same_as(*fixture("gr43")));
  EXPECT_EQ(run({"ext", "dualbasis", "--ring", "gr43"}).code, 0);
}

TEST(Cli, CyclicCommands) {
  auto m = run({"cyclic", "multiindex", "--ring", "z4", "--ell", "7", "--t", "2,2,2"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "0\ntype (7;0,0)\n");
  auto b = run({"cyclic", "bch", "--ring", "z4", "--ell", "7", "--set", "1,2", "--t", "1"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("holds yes"), std::string::npos);
  auto w = run({"cyclic", "minweight", "--ring", "z4", "--matrix", "1 1 1 1 1 1 1"});
  EXPECT_EQ(w.out, "7\n");
  auto ctx = run({"--json", "cyclic", "context", "--ring", "z4", "--ell", "7"});
  ASSERT_EQ(ctx.code, 0);
  auto j = json::parse(ctx.out);
  EXPECT_EQ(j["cosets"], json::parse("[[0],[1,2,4],[3,5,6]]"));
  EXPECT_EQ(j["factors"].size(), 3u);
  EXPECT_EQ(j["idempotents"].size(), 3u);
  for (const char* sub : {"eval", "genpoly", "restrict"})
    EXPECT_EQ(run({"cyclic", sub, "--ring", "z4", "--ell", "7", "--set", "1,2,4"}).code, 0) << sub;
}

TEST(Cli, VerifyIsDeterministic) {
  std::vector<std::string> args = {"verify", "delsarte", "--fixture", "gr42", "--cases", "50"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("50/50"), std::string::npos);
}

TEST(Cli, GuardFlag) {
  auto r = run({"--guard", "4", "cyclic", "minweight", "--ring", "z4", "--matrix", "1 0 0;0 1 0;0 0 1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"], "SizeGuardExceeded");
  EXPECT_EQ(run({"cyclic", "minweight", "--ring", "z4", "--matrix", "1 0 0;0 1 0;0 0 1"}).out, "1\n");
}

}  // namespace
