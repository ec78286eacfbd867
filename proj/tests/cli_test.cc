// Copyright 2026 The jtypebench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the jtb binary.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "jtb/snippet.h"
#include "json.hpp"
#include "stub_server.h"
#include "test_util.h"

namespace jtb {
namespace {

using json = nlohmann::json;
using jtb::testing::FixturePath;
using jtb::testing::ReadFixture;
using jtb::testing::StubChatServer;
using jtb::testing::TempDir;
using jtb::testing::WriteFile;

struct RunResult {
  int code = -1;
  std::string out;  // stdout only
};

RunResult Jtb(const std::string& args) {
  std::string cmd = std::string(JTB_BINARY) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

json ReadJson(const std::filesystem::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::string ReadText(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kKb = "'" + FixturePath("kb/six_libraries.jsonl").string() + "'";

TEST(CliTest, HelpAndVersionExitZero) {
  EXPECT_EQ(Jtb("--help").code, 0);
  RunResult help = Jtb("score --help");
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("--results"), std::string::npos);
  EXPECT_EQ(Jtb("stats wilcoxon --help").code, 0);
  RunResult v = Jtb("--version");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(JTB_VERSION), std::string::npos);
}

TEST(CliTest, UsageErrorsExitTwo) {
  TempDir tmp;
  EXPECT_EQ(Jtb("").code, 2);
  EXPECT_EQ(Jtb("frobnicate").code, 2);
  EXPECT_EQ(Jtb("score --bogus").code, 2);
  EXPECT_EQ(Jtb("stats").code, 2);
  EXPECT_EQ(Jtb("transform --in a --out b --kind shuffle").code, 2);
  EXPECT_EQ(Jtb("generate --out " + Q(tmp.path() / "g")).code, 2);  // no KB
  WriteFile(tmp.path() / "bad.json", "{\"colour\": \"blue\"}");
  EXPECT_EQ(Jtb("--config " + Q(tmp.path() / "bad.json") + " generate --kb " +
                kKb + " --out " + Q(tmp.path() / "g"))
                .code,
            2);
}

TEST(CliTest, OperationalErrorsExitOne) {
  TempDir tmp;
  EXPECT_EQ(Jtb("infer --kb " + kKb + " --in " + Q(tmp.path() / "none") +
                " --out " + Q(tmp.path() / "r.json"))
                .code,
            1);
  WriteFile(tmp.path() / "Bad.java", "class {");
  EXPECT_EQ(Jtb("parse " + Q(tmp.path() / "Bad.java")).code, 1);
}

TEST(CliTest, ParseAndConstraints) {
  RunResult ok = Jtb("parse --check " + Q(FixturePath("java/kitchen_sink.java")));
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find(": ok"), std::string::npos);
  RunResult dump = Jtb("constraints --dump --in " +
                       Q(FixturePath("java/thalia_main.java")));
  EXPECT_EQ(dump.code, 0);
  EXPECT_EQ(dump.out, ReadFixture("constraints/thalia_main.golden"));
}

TEST(CliTest, PipelineSmoke) {
  TempDir tmp;
  const auto gen = tmp.path() / "gen";
  const auto all = tmp.path() / "all";
  ASSERT_EQ(Jtb("generate --kb " + kKb + " --per-library 1 --out " + Q(gen)).code, 0);
  ASSERT_EQ(Jtb("transform --kind all --in " + Q(gen) + " --out " + Q(all)).code, 0);
  ASSERT_EQ(Jtb("infer --kb " + kKb + " --in " + Q(all) + " --out " +
                Q(tmp.path() / "res.json"))
                .code,
            0);
  ASSERT_EQ(Jtb("freq --root " + Q(gen) + " --corpus " + Q(gen) + " --out " +
                Q(tmp.path() / "freq.json"))
                .code,
            0);
  ASSERT_EQ(Jtb("score --results " + Q(tmp.path() / "res.json") + " --corpus " +
                Q(all) + " --freq " + Q(tmp.path() / "freq.json") +
                " --buckets 0,1,3 --out " + Q(tmp.path() / "report.json"))
                .code,
            0);
  json report = ReadJson(tmp.path() / "report.json");
  EXPECT_EQ(report["snippet_count"], 6);
  EXPECT_EQ(report["snippets"].size(), 6u);
  const json& meta = report["metadata"];
  EXPECT_EQ(meta["tool"], "jtb");
  EXPECT_EQ(meta["version"], JTB_VERSION);
  EXPECT_EQ(meta["config_hash"].get<std::string>().size(), 64u);
  EXPECT_EQ(meta["inputs"]["results"]["sha256"].get<std::string>().size(), 64u);
  EXPECT_EQ(meta["inputs"]["corpus"]["sha256"].get<std::string>().size(), 64u);
  EXPECT_EQ(meta["inputs"]["freq"]["sha256"].get<std::string>().size(), 64u);
  EXPECT_EQ(meta["model"], "constraint-solver");
  EXPECT_EQ(meta["transform"], "all");
  EXPECT_EQ(meta["corpus"], "generated-all");
  EXPECT_EQ(meta["seed"], 1);
  for (const char* k : {"precision", "recall", "f1"}) {
    EXPECT_EQ(report["micro"][k], 1.0) << k;
    EXPECT_EQ(report["macro"][k], 1.0) << k;
  }
  EXPECT_GT(report["micro"]["tp"].get<int>(), 0);
  // Every generated type occurs in exactly one generated file here.
  const json& rows = report["buckets"]["rows"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["bucket"], "[0,1)");
  EXPECT_EQ(rows[1]["bucket"], "[1,3)");
  EXPECT_EQ(rows[1]["total"], report["micro"]["tp"]);
  EXPECT_TRUE(report["buckets"]["diagnostics"].empty());

  // Self-comparison: nothing to test.
  RunResult stats = Jtb("stats wilcoxon --metric f1 --a " +
                        Q(tmp.path() / "report.json") + " --b " +
                        Q(tmp.path() / "report.json"));
  ASSERT_EQ(stats.code, 0);
  json w = json::parse(stats.out);
  EXPECT_EQ(w["wilcoxon"]["n_effective"], 0);
  EXPECT_TRUE(w["wilcoxon"]["p_value"].is_null());
  EXPECT_EQ(w["significance"], "not significant");
}

TEST(CliTest, GenerationIsDeterministicPerSeed) {
  TempDir tmp;
  for (const char* d : {"a", "b"}) {
    ASSERT_EQ(Jtb("generate --seed 5 --kb " + kKb + " --per-library 2 --out " +
                  Q(tmp.path() / d))
                  .code,
              0);
  }
  ASSERT_EQ(Jtb("generate --seed 6 --kb " + kKb + " --per-library 2 --out " +
                Q(tmp.path() / "c"))
                .code,
            0);
  EXPECT_EQ(ReadText(tmp.path() / "a/jdk02.java"), ReadText(tmp.path() / "b/jdk02.java"));
  EXPECT_EQ(ReadText(tmp.path() / "a/provenance.json"),
            ReadText(tmp.path() / "b/provenance.json"));
  EXPECT_NE(ReadText(tmp.path() / "a/provenance.json"),
            ReadText(tmp.path() / "c/provenance.json"));
}

TEST(CliTest, FlagsOverrideConfigFileOverridesDefaults) {
  TempDir tmp;
  WriteFile(tmp.path() / "cfg.json",
            json{{"seed", 7},
                 {"jobs", 2},
                 {"kb", FixturePath("kb/six_libraries.jsonl").string()}}
                .dump());
  const std::string base = "--config " + Q(tmp.path() / "cfg.json") +
                           " generate --per-library 1 --out ";
  ASSERT_EQ(Jtb(base + Q(tmp.path() / "f")).code, 0);
  ASSERT_EQ(Jtb(base + Q(tmp.path() / "g") + " --seed 9").code, 0);
  ASSERT_EQ(Jtb("generate --kb " + kKb + " --per-library 1 --out " + Q(tmp.path() / "d")).code, 0);
  json f = ReadJson(tmp.path() / "f/generate_report.json")["metadata"];
  json g = ReadJson(tmp.path() / "g/generate_report.json")["metadata"];
  json d = ReadJson(tmp.path() / "d/generate_report.json")["metadata"];
  EXPECT_EQ(f["config"]["seed"], 7);
  EXPECT_EQ(f["config"]["jobs"], 2);
  EXPECT_EQ(g["config"]["seed"], 9);
  EXPECT_EQ(g["config"]["jobs"], 2);
  EXPECT_EQ(d["config"]["seed"], 1);
  EXPECT_EQ(d["config"]["jobs"], 4);
  EXPECT_NE(f["config_hash"], g["config_hash"]);
  EXPECT_EQ(f["inputs"]["kb"]["sha256"], d["inputs"]["kb"]["sha256"]);
}

TEST(CliTest, LlmEvalAgainstStubThenCached) {
  TempDir tmp;
  StubChatServer server([](const json& req, int, httplib::Response& res) {
    const std::string user = req["messages"][1]["content"];
    StubChatServer::Reply(res, user.find("List") != std::string::npos
                                   ? "```java\nimport java.util.List;\n```"
                                   : "import java.util.Map;");
  });
  Corpus c;
  c.snippets.push_back(Snippet::FromSource(
      "b", "", "import java.util.List;\nclass B { List l; }\n"));
  c.snippets.push_back(Snippet::FromSource(
      "a", "", "import java.util.Set;\nclass A { Set s; }\n"));
  SaveCorpus(c, tmp.path() / "corpus");
  const std::string cmd = "llm-eval --model stub --retries 0 --endpoint " +
                          server.endpoint() + " --cache-dir " +
                          Q(tmp.path() / "cache") + " --in " +
                          Q(tmp.path() / "corpus") + " --out ";
  ASSERT_EQ(Jtb(cmd + Q(tmp.path() / "r1.json")).code, 0);
  ASSERT_EQ(Jtb(cmd + Q(tmp.path() / "r2.json")).code, 0);
  EXPECT_EQ(server.calls(), 2u);
  EXPECT_EQ(ReadText(tmp.path() / "r1.json"), ReadText(tmp.path() / "r2.json"));
  json meta2 = ReadJson(tmp.path() / "r2.json.meta.json");
  EXPECT_EQ(meta2["network_calls"], 0);
  EXPECT_EQ(meta2["cache_hits"], 2);
  json body = json::parse(server.bodies()[0]);
  EXPECT_EQ(body["temperature"], 0.0);
  EXPECT_EQ(body["seed"], 1);

  ASSERT_EQ(Jtb("score --results " + Q(tmp.path() / "r1.json") + " --corpus " +
                Q(tmp.path() / "corpus") + " --out " + Q(tmp.path() / "rep.json"))
                .code,
            0);
  json rep = ReadJson(tmp.path() / "rep.json");
  EXPECT_EQ(rep["metadata"]["model"], "stub");
  EXPECT_EQ(rep["micro"]["tp"], 1);  // List right, Map instead of Set wrong
  EXPECT_EQ(rep["micro"]["fp"], 1);
  EXPECT_EQ(rep["micro"]["fn"], 1);
}

TEST(CliTest, LeakScan) {
  TempDir tmp;
  std::string meta;
  for (int i = 0; i < 6; ++i) {
    meta += json{{"path", "x/JodaTime0" + std::to_string(i) + ".java"},
                 {"repo", "big/r"}, {"author", "big"}}.dump() + "\n";
  }
  meta += json{{"path", "JodaTime01.java"}, {"repo", "small/r"}, {"author", "small"}}.dump() + "\n";
  meta += "garbage\n";
  WriteFile(tmp.path() / "meta.jsonl", meta);
  std::string names;
  for (int i = 0; i < 10; ++i) names += "JodaTime0" + std::to_string(i) + ".java\n";
  WriteFile(tmp.path() / "names.txt", names);
  ASSERT_EQ(Jtb("leak-scan --min 5 --meta " + Q(tmp.path() / "meta.jsonl") +
                " --names " + Q(tmp.path() / "names.txt") + " --out " +
                Q(tmp.path() / "leak.json"))
                .code,
            0);
  json leak = ReadJson(tmp.path() / "leak.json");
  EXPECT_EQ(leak["report"]["total_matches"], 7);
  EXPECT_EQ(leak["report"]["malformed"], 1);
  ASSERT_EQ(leak["shortlist"]["repos"].size(), 1u);
  EXPECT_EQ(leak["shortlist"]["repos"][0]["name"], "big/r");
  EXPECT_EQ(leak["shortlist"]["repos"][0]["count"], 6);
  EXPECT_EQ(leak["metadata"]["inputs"]["meta"]["sha256"].get<std::string>().size(), 64u);
}

}  // namespace
}  // namespace jtb
