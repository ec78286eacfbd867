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

#include "jtb/inference.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "jtb/java/parser.h"
#include "jtb/transforms.h"
#include "test_util.h"

namespace jtb::infer {
namespace {

using ::jtb::testing::FixturePath;
using ::jtb::testing::ReadFixture;
using kb::KnowledgeBase;
using kb::MemberSig;
using CK = Constraint::Kind;

ConstraintSystem Extract(std::string_view source) {
  return ExtractConstraints(java::Parse(source));
}

int TvNamed(const ConstraintSystem& sys, std::string_view origin) {
  for (const TypeVar& tv : sys.tvs) {
    if (tv.kind == TypeVar::Kind::kType && tv.origin == origin) return tv.id;
  }
  return -1;
}

Snippet FromText(std::string text) {
  return Snippet::FromSource("s", "lib", std::move(text));
}

TEST(ExtractTest, LoggerSnippetConstraints) {
  ConstraintSystem sys = Extract(ReadFixture("java/logger_example.java"));
  int string_tv = TvNamed(sys, "String");
  int logger_tv = TvNamed(sys, "Logger");
  ASSERT_GE(string_tv, 0);
  ASSERT_GE(logger_tv, 0);
  EXPECT_EQ(TvNamed(sys, "Example"), -1);  // declared locally
  auto has = [&](const Constraint& want) {
    return std::find(sys.constraints.begin(), sys.constraints.end(), want) !=
           sys.constraints.end();
  };
  EXPECT_TRUE(has({CK::kSimpleName, string_tv, "String", {}, -1}));
  EXPECT_TRUE(has({CK::kSimpleName, logger_tv, "Logger", {}, -1}));
  auto call = std::find_if(sys.constraints.begin(), sys.constraints.end(),
                           [](const Constraint& c) { return c.kind == CK::kHasStaticMethod; });
  ASSERT_NE(call, sys.constraints.end());
  EXPECT_EQ(call->tv, logger_tv);
  EXPECT_EQ(call->name, "getLogger");
  EXPECT_EQ(call->args, std::vector<int>{string_tv});
}

TEST(ExtractTest, EmptyClassHasNoExternalTypes) {
  ConstraintSystem sys = Extract("class A {}");
  EXPECT_TRUE(sys.constraints.empty());
  for (const TypeVar& tv : sys.tvs) EXPECT_NE(tv.kind, TypeVar::Kind::kType);
}

TEST(ExtractTest, ThaliaSnippetMatchesGolden) {
  ConstraintSystem sys = Extract(ReadFixture("java/thalia_main.java"));
  EXPECT_EQ(sys.Dump(), ReadFixture("constraints/thalia_main.golden"));
}

TEST(ExtractTest, TypeVariablesAreNumberedConsistently) {
  ConstraintSystem sys = Extract(
      "class A<T> { Zeta z; java.util.List<Beta> xs; Outer.Inner oi; T t;\n"
      "  void f(int[] a, String... rest) { Alpha x = Zeta.make(a.length); } }");
  std::vector<std::string> types;
  for (size_t i = 0; i < sys.tvs.size(); ++i) {
    EXPECT_EQ(sys.tvs[i].id, static_cast<int>(i));
    if (sys.tvs[i].kind == TypeVar::Kind::kType) types.push_back(sys.tvs[i].origin);
  }
  EXPECT_EQ(types, (std::vector<std::string>{"Alpha", "Beta", "Outer", "String", "Zeta"}));
  for (const Constraint& c : sys.constraints) {
    EXPECT_LT(c.tv, static_cast<int>(sys.tvs.size()));
    EXPECT_LT(c.result, static_cast<int>(sys.tvs.size()));
    for (int a : c.args) EXPECT_LT(a, static_cast<int>(sys.tvs.size()));
  }
}

TEST(ExtractTest, FullyQualifiedTypesAreFixed) {
  ConstraintSystem sys = Extract(
      "class A { void f() { java.util.List x = java.util.Collections.emptyList(); } }");
  ASSERT_GE(sys.tvs.size(), 2u);
  EXPECT_EQ(sys.tvs[0].kind, TypeVar::Kind::kQualified);
  EXPECT_EQ(sys.tvs[0].origin, "java.util.Collections");
  EXPECT_EQ(sys.tvs[1].origin, "java.util.List");
  EXPECT_NE(sys.Dump().find("HasStaticMethod(t0, emptyList, [], t2)"), std::string::npos)
      << sys.Dump();
}

class InferTest : public ::testing::Test {
 protected:
  KnowledgeBase logger_kb_ = kb::LoadKb(FixturePath("kb/logger_kb.jsonl"));
};

TEST_F(InferTest, LoggerResolvesToJavaUtilLogging) {
  Inference inf = Infer(FromText(ReadFixture("java/logger_example.java")), logger_kb_);
  EXPECT_EQ(inf.imports, (ImportSet{Fqn("java.util.logging.Logger")}));
  int logger_tv = TvNamed(inf.system, "Logger");
  int string_tv = TvNamed(inf.system, "String");
  EXPECT_EQ(inf.assignment.values[logger_tv], "java.util.logging.Logger");
  EXPECT_EQ(inf.assignment.values[string_tv], "java.lang.String");
  // org.slf4j.Logger lacks getLogger, so filtering alone decides.
  EXPECT_EQ(inf.assignment.domains[logger_tv],
            std::set<std::string>{"java.util.logging.Logger"});
  EXPECT_TRUE(inf.assignment.solved);
  EXPECT_TRUE(inf.assignment.search_complete);
  EXPECT_TRUE(inf.unsatisfied.empty());
  EXPECT_TRUE(inf.assignment.violations.empty());
}

TEST_F(InferTest, PrimitivesOnlyGiveNoImports) {
  Inference inf = Infer(
      FromText("class A { int f(long x) { int y = 3; return y + (int) x; } }"), logger_kb_);
  EXPECT_TRUE(inf.imports.empty());
}

TEST_F(InferTest, ImportsInSourceAreIgnored) {
  Inference inf = Infer(FromText("import org.slf4j.Logger;\n" +
                                 ReadFixture("java/logger_example.java")),
                        logger_kb_);
  EXPECT_EQ(inf.imports, (ImportSet{Fqn("java.util.logging.Logger")}));
}

TEST_F(InferTest, TieBreakPicksLeastFqn) {
  Inference inf = Infer(FromText("class A { Logger log; }"), logger_kb_);
  EXPECT_EQ(inf.imports, (ImportSet{Fqn("java.util.logging.Logger")}));
  EXPECT_FALSE(inf.assignment.solved);
  inf = Infer(FromText("class A { void f(Logger log) { log.debug(\"x\"); } }"), logger_kb_);
  EXPECT_EQ(inf.imports, (ImportSet{Fqn("org.slf4j.Logger")}));
  EXPECT_TRUE(inf.assignment.solved);
}

TEST_F(InferTest, UnknownNamesAbstain) {
  Inference inf = Infer(FromText("class A { Widget w; Logger l = Logger.getLogger(\"a\"); }"),
                        logger_kb_);
  EXPECT_EQ(inf.imports, (ImportSet{Fqn("java.util.logging.Logger")}));
  EXPECT_EQ(inf.unresolved, std::vector<std::string>{"Widget"});
}

TEST_F(InferTest, ConflictIsReportedAndStillEmits) {
  // No Logger has both getLogger and debug.
  Inference inf = Infer(FromText(
      "class A { void f() { Logger l = Logger.getLogger(\"a\"); l.debug(\"b\"); } }"),
      logger_kb_);
  EXPECT_EQ(inf.unsatisfied, std::vector<std::string>{"Logger"});
  EXPECT_EQ(inf.imports.size(), 1u);
  EXPECT_TRUE(std::count(inf.assignment.disabled.begin(), inf.assignment.disabled.end(), true) >= 1);
}

TEST_F(InferTest, OwnPackageIsNotImported) {
  KnowledgeBase kb = kb::ParseKb(
      "{\"fqn\": \"p.q.Helper\"}\n{\"fqn\": \"r.Other\"}\n");
  Inference inf = Infer(
      FromText("package p.q;\nclass A { Helper h = new Helper(); Other o = new Other(); }"), kb);
  EXPECT_EQ(inf.imports, (ImportSet{Fqn("r.Other")}));
}

TEST_F(InferTest, FieldAccessSeparatesTwoCandidates) {
  KnowledgeBase kb = kb::ParseKb(
      "{\"fqn\": \"a.Box\", \"members\": [{\"kind\": \"field\", \"name\": \"size\", \"returns\": \"int\"}]}\n"
      "{\"fqn\": \"b.Box\", \"members\": [{\"kind\": \"field\", \"name\": \"count\", \"returns\": \"int\"}]}\n");
  const std::string src = "class A { int f(Box b) { return b.count; } }";
  Inference inf = Infer(FromText(src), kb);
  EXPECT_EQ(inf.imports, (ImportSet{Fqn("b.Box")}));
  // Brute force over both choices: exactly one satisfies everything.
  int box = TvNamed(inf.system, "Box");
  int satisfying = 0;
  for (std::string choice : {"a.Box", "b.Box"}) {
    std::vector<Value> values = inf.assignment.values;
    values[box] = choice;
    // The field's type follows the member it resolves to.
    for (const Constraint& c : inf.system.constraints) {
      if (c.kind == CK::kHasField) values[c.result] = "int";
    }
    if (CheckAssignment(inf.system, kb, values).empty()) ++satisfying;
  }
  EXPECT_EQ(satisfying, 1);
}

TEST_F(InferTest, UnambiguousKbSolvesEverything) {
  KnowledgeBase kb = kb::ParseKb(
      "{\"fqn\": \"org.joda.time.LocalTime\", \"members\": [{\"kind\": \"constructor\", \"params\": [\"long\"]}, {\"kind\": \"method\", \"name\": \"getChronology\", \"returns\": \"org.joda.time.Chronology\"}]}\n"
      "{\"fqn\": \"org.joda.time.Chronology\"}\n"
      "{\"fqn\": \"org.joda.time.chrono.ZonedChronology\", \"supertypes\": [\"org.joda.time.Chronology\"]}\n"
      "{\"fqn\": \"org.joda.time.DateMidnight\", \"members\": [{\"kind\": \"static_method\", \"name\": \"now\", \"params\": [\"org.joda.time.Chronology\"], \"returns\": \"org.joda.time.DateMidnight\"}, {\"kind\": \"method\", \"name\": \"getDayOfYear\", \"returns\": \"int\"}]}\n");
  Snippet s = Snippet::FromSource("jodatime05", "jodatime", ReadFixture("java/thalia_main.java"));
  Inference inf = Infer(s, kb);
  EXPECT_EQ(inf.imports, s.ground_truth);
  EXPECT_TRUE(inf.assignment.solved);
  EXPECT_TRUE(inf.unsatisfied.empty());
  EXPECT_EQ(inf.unresolved, std::vector<std::string>{"Exception"});
}

TEST_F(InferTest, DeterministicAcrossRuns) {
  Snippet s = FromText(ReadFixture("java/kitchen_sink.java"));
  Inference a = Infer(s, logger_kb_);
  Inference b = Infer(s, logger_kb_);
  EXPECT_EQ(a.imports, b.imports);
  EXPECT_EQ(a.system.Dump(), b.system.Dump());
  EXPECT_EQ(a.assignment.values, b.assignment.values);
}

TEST_F(InferTest, TransformsDoNotChangeInferredImports) {
  Snippet s = Snippet::FromSource("x", "lib", ReadFixture("java/logger_example.java"));
  ImportSet want = InferImports(s, logger_kb_);
  for (auto kind : {transforms::TransformKind::kRename, transforms::TransformKind::kLower,
                    transforms::TransformKind::kComment, transforms::TransformKind::kAll}) {
    for (uint64_t seed : {1u, 2u, 3u}) {
      Snippet t = transforms::ApplyTransform(s, kind, seed).snippet;
      EXPECT_EQ(InferImports(t, logger_kb_), want) << t.source;
    }
  }
}

TEST(CompatibleTest, PrimitiveAndReferenceRules) {
  KnowledgeBase kb = kb::ParseKb(
      "{\"fqn\": \"a.Sub\", \"supertypes\": [\"a.Base\"]}\n"
      "{\"fqn\": \"a.Base\", \"supertypes\": [\"java.lang.Object\"]}\n"
      "{\"fqn\": \"a.Other\"}\n"
      "{\"fqn\": \"a.Leaky\", \"supertypes\": [\"x.Unknown\"]}\n");
  auto ok = [&](const char* a, const char* d) { return Compatible(kb, a ? Value(a) : std::nullopt, d ? Value(d) : std::nullopt); };
  EXPECT_TRUE(ok("int", "long"));
  EXPECT_TRUE(ok("char", "int"));
  EXPECT_FALSE(ok("long", "int"));
  EXPECT_FALSE(ok("byte", "char"));
  EXPECT_FALSE(ok("boolean", "int"));
  EXPECT_TRUE(ok("int", "java.lang.Integer"));
  EXPECT_TRUE(ok("java.lang.Integer", "long"));
  EXPECT_FALSE(ok("int", "java.lang.Long"));
  EXPECT_TRUE(ok("a.Sub", "a.Base"));
  EXPECT_FALSE(ok("a.Base", "a.Sub"));
  EXPECT_FALSE(ok("a.Other", "a.Base"));
  EXPECT_TRUE(ok("a.Leaky", "a.Base"));  // chain leaves the KB
  EXPECT_TRUE(ok("z.Unknown", "a.Base"));
  EXPECT_TRUE(ok("a.Sub[]", "a.Base[]"));
  EXPECT_FALSE(ok("int[]", "long[]"));
  EXPECT_TRUE(ok("a.Sub[][]", "java.lang.Object[]"));
  EXPECT_FALSE(ok("void", "a.Base"));
  EXPECT_TRUE(ok(nullptr, "int"));
  EXPECT_TRUE(ok("int", nullptr));
}

// --- Brute-force oracle over random small problems. ---

// Evaluates a constraint directly from its definition.
bool Holds(const KnowledgeBase& kb, const Constraint& c, const std::vector<Value>& v) {
  auto compat = [&](const Value& a, const std::string& d) { return Compatible(kb, a, Value(d)); };
  switch (c.kind) {
    case CK::kSimpleName: {
      auto cands = kb.LookupSimple(c.name);
      if (cands.empty()) return !v[c.tv];
      for (const auto* e : cands) {
        if (v[c.tv] == e->fqn.str()) return true;
      }
      return false;
    }
    case CK::kIsLiteral:
      return v[c.tv] == c.name;
    case CK::kAssignableTo:
      return Compatible(kb, v[c.tv], v[c.result]);
    default:
      break;
  }
  if (!v[c.tv]) return true;
  const kb::KbEntry* e = kb.LookupFqn(*v[c.tv]);
  if (!e) return *v[c.tv] != "int";
  std::vector<const MemberSig*> members;
  if (c.kind == CK::kHasConstructor) {
    bool any_ctor = false;
    for (const auto& m : e->members) {
      if (m.kind == MemberSig::Kind::kConstructor) {
        any_ctor = true;
        members.push_back(&m);
      }
    }
    if (!any_ctor && c.args.empty()) return true;
  } else {
    for (const MemberSig* m : kb.MembersOf(*v[c.tv])) {
      auto want = c.kind == CK::kHasField ? MemberSig::Kind::kField
                  : c.kind == CK::kHasStaticMethod ? MemberSig::Kind::kStaticMethod
                                                   : MemberSig::Kind::kMethod;
      if (m->kind == want && m->name == c.name) members.push_back(m);
    }
  }
  for (const MemberSig* m : members) {
    if (m->params.size() != c.args.size()) continue;
    if (c.result >= 0 && v[c.result] != m->returns) continue;
    bool ok = true;
    for (size_t i = 0; i < c.args.size(); ++i) ok = ok && compat(v[c.args[i]], m->params[i]);
    if (ok) return true;
  }
  return false;
}

struct Problem {
  KnowledgeBase kb;
  ConstraintSystem sys;
};

Problem RandomProblem(std::mt19937_64& rng) {
  auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };
  const std::vector<std::string> simple = {"A", "B", "C"};
  std::vector<std::string> fqns;
  for (const char* pkg : {"p", "q"}) {
    for (const auto& s : simple) fqns.push_back(std::string(pkg) + "." + s);
  }
  std::vector<std::string> types = fqns;
  types.push_back("int");
  Problem pr;
  for (const auto& f : fqns) {
    nlohmann::json j = {{"fqn", f}, {"supertypes", nlohmann::json::array()}};
    if (pick(3) == 0) j["supertypes"].push_back(fqns[pick(fqns.size())]);
    if (j["supertypes"].size() == 1 && j["supertypes"][0] == f) j["supertypes"].clear();
    nlohmann::json members = nlohmann::json::array();
    std::set<std::string> used;
    for (int k = 0, n = static_cast<int>(pick(4)); k < n; ++k) {
      static const char* kKinds[] = {"method", "static_method", "field", "constructor"};
      std::string kind = kKinds[pick(4)];
      std::string name = kind == "field" ? "f" : "m" + std::to_string(pick(2));
      nlohmann::json params = nlohmann::json::array();
      if (kind != "field" && pick(2)) params.push_back(types[pick(types.size())]);
      std::string key = name + params.dump();  // kind does not disambiguate
      if (kind == "constructor") key = "ctor" + params.dump();
      if (kind == "field") key = "f";
      if (!used.insert(key).second) continue;
      nlohmann::json m = {{"kind", kind}, {"params", params}};
      if (kind != "constructor") {
        m["name"] = name;
        m["returns"] = types[pick(types.size())];
      }
      members.push_back(m);
    }
    j["members"] = members;
    pr.kb.Add(kb::ParseKb(j.dump()).Entries()[0][0]);
  }
  ConstraintSystem& sys = pr.sys;
  for (size_t i = 0; i < simple.size(); ++i) {
    sys.tvs.push_back({static_cast<int>(i), TypeVar::Kind::kType, simple[i]});
    sys.constraints.push_back({CK::kSimpleName, static_cast<int>(i), simple[i], {}, -1});
  }
  const int n_expr = 3;
  for (int i = 0; i < n_expr; ++i) {
    sys.tvs.push_back({static_cast<int>(sys.tvs.size()), TypeVar::Kind::kExpr, "e" + std::to_string(i)});
  }
  auto any_tv = [&] { return static_cast<int>(pick(sys.tvs.size())); };
  auto expr_tv = [&] { return static_cast<int>(simple.size() + pick(n_expr)); };
  for (int k = 0, n = 2 + static_cast<int>(pick(4)); k < n; ++k) {
    Constraint c;
    switch (pick(5)) {
      case 0: c = {CK::kHasMethod, any_tv(), "m" + std::to_string(pick(2)), {}, expr_tv()}; break;
      case 1: c = {CK::kHasStaticMethod, static_cast<int>(pick(simple.size())), "m" + std::to_string(pick(2)), {}, expr_tv()}; break;
      case 2: c = {CK::kHasField, any_tv(), "f", {}, expr_tv()}; break;
      case 3: c = {CK::kHasConstructor, static_cast<int>(pick(simple.size())), "", {}, -1}; break;
      default: c = {CK::kAssignableTo, expr_tv(), "", {}, static_cast<int>(pick(simple.size()))}; break;
    }
    if (c.kind != CK::kHasField && c.kind != CK::kAssignableTo && pick(2)) c.args.push_back(any_tv());
    if (c.result == c.tv) continue;
    sys.constraints.push_back(c);
  }
  return pr;
}

// Lexicographically least model over the named variables, by enumeration.
std::optional<std::vector<Value>> BruteForce(const Problem& pr) {
  std::vector<std::vector<Value>> choices;
  std::set<std::string> universe{"int"};
  for (const auto* e : pr.kb.Entries()) {
    universe.insert(e->fqn.str());
    for (const auto& m : e->members) {
      universe.insert(m.returns);
      universe.insert(m.params.begin(), m.params.end());
    }
  }
  for (const TypeVar& tv : pr.sys.tvs) {
    std::vector<Value> vals;
    if (tv.kind == TypeVar::Kind::kType) {
      for (const auto* e : pr.kb.LookupSimple(tv.origin)) vals.push_back(e->fqn.str());
    } else {
      vals.push_back(std::nullopt);
      vals.insert(vals.end(), universe.begin(), universe.end());
    }
    choices.push_back(vals);
  }
  std::vector<Value> cur(choices.size());
  std::optional<std::vector<Value>> best;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (best) return;
    if (i == choices.size()) {
      for (const auto& c : pr.sys.constraints) {
        if (!Holds(pr.kb, c, cur)) return;
      }
      best = cur;
      return;
    }
    for (const auto& v : choices[i]) {
      cur[i] = v;
      rec(i + 1);
      if (best) return;
    }
  };
  rec(0);
  return best;
}

TEST(SolveTest, MatchesBruteForceOnRandomProblems) {
  std::mt19937_64 rng(20240611);
  int with_model = 0;
  for (int trial = 0; trial < 600; ++trial) {
    Problem pr = RandomProblem(rng);
    Assignment a = Solve(pr.sys, pr.kb);
    auto model = BruteForce(pr);
    SCOPED_TRACE(pr.sys.Dump());
    if (!model) {
      // No model: the solver cannot report one without dropping constraints.
      bool dropped = std::count(a.disabled.begin(), a.disabled.end(), true) > 0;
      EXPECT_TRUE(dropped || !a.search_complete);
      continue;
    }
    ++with_model;
    // A model exists: nothing is disabled and the least one is found.
    EXPECT_EQ(std::count(a.disabled.begin(), a.disabled.end(), true), 0);
    ASSERT_TRUE(a.search_complete);
    for (size_t i = 0; i < 3; ++i) EXPECT_EQ(a.values[i], (*model)[i]) << "tv " << i;
    for (const auto& c : pr.sys.constraints) EXPECT_TRUE(Holds(pr.kb, c, a.values)) << c.ToString();
    EXPECT_TRUE(a.violations.empty());
  }
  EXPECT_GT(with_model, 100);
}

TEST(SolveTest, DomainsOnlyShrinkAndRoundsAreBounded) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Problem pr = RandomProblem(rng);
    Assignment a = Solve(pr.sys, pr.kb);
    for (size_t i = 0; i < 3; ++i) {
      std::set<std::string> initial;
      for (const auto* e : pr.kb.LookupSimple(pr.sys.tvs[i].origin)) initial.insert(e->fqn.str());
      ASSERT_TRUE(a.domains[i].has_value());
      EXPECT_TRUE(std::includes(initial.begin(), initial.end(), a.domains[i]->begin(),
                                a.domains[i]->end()));
    }
    EXPECT_LE(static_cast<size_t>(a.rounds),
              a.candidate_budget + pr.sys.tvs.size() + pr.sys.constraints.size() + 1);
  }
}

}  // namespace
}  // namespace jtb::infer
