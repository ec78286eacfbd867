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

#include "jtb/scoring.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "test_util.h"

namespace jtb::score {
namespace {

using jtb::testing::TempDir;
using jtb::testing::WriteFile;

ImportSet Set(std::initializer_list<const char*> names) {
  ImportSet s;
  for (const char* n : names) s.Insert(Fqn(n));
  return s;
}

TEST(ScoreSnippetTest, IdenticalSetsArePerfect) {
  SnippetScore s = ScoreSnippet(Set({"a.B", "c.D"}), Set({"a.B", "c.D"}));
  EXPECT_EQ(s.tp, 2u);
  EXPECT_EQ(*s.precision, 1.0);
  EXPECT_EQ(*s.recall, 1.0);
  EXPECT_EQ(*s.f1, 1.0);
}

TEST(ScoreSnippetTest, PartialRecall) {
  SnippetScore s = ScoreSnippet(Set({"a.B"}), Set({"a.B", "c.D"}));
  EXPECT_EQ(s.tp, 1u);
  EXPECT_EQ(s.fp, 0u);
  EXPECT_EQ(s.fn, 1u);
  EXPECT_DOUBLE_EQ(*s.precision, 1.0);
  EXPECT_DOUBLE_EQ(*s.recall, 0.5);
  EXPECT_DOUBLE_EQ(*s.f1, 2.0 / 3.0);
  EXPECT_EQ(s.missed, std::vector<std::string>{"c.D"});
}

TEST(ScoreSnippetTest, UndefinedMarkers) {
  SnippetScore empty_inferred = ScoreSnippet({}, Set({"a.B"}));
  EXPECT_FALSE(empty_inferred.precision.has_value());
  EXPECT_EQ(*empty_inferred.recall, 0.0);
  EXPECT_FALSE(empty_inferred.f1.has_value());
  SnippetScore empty_expected = ScoreSnippet(Set({"a.B"}), {});
  EXPECT_EQ(*empty_expected.precision, 0.0);
  EXPECT_FALSE(empty_expected.recall.has_value());
  SnippetScore both = ScoreSnippet({}, {});
  EXPECT_FALSE(both.precision || both.recall || both.f1);
  // Defined but zero on both sides gives F1 = 0, not undefined.
  SnippetScore disjoint = ScoreSnippet(Set({"a.B"}), Set({"c.D"}));
  EXPECT_EQ(*disjoint.f1, 0.0);
}

TEST(ScoreSnippetTest, MatchesBruteForceOnRandomPairs) {
  std::vector<std::string> universe;
  for (const char* p : {"a", "b.c", "java.util"}) {
    for (const char* t : {"List", "Map", "Node", "X"}) {
      universe.push_back(std::string(p) + "." + t);
    }
  }
  std::mt19937 rng(7);
  std::vector<SnippetScore> scores;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> inf, exp;
    for (const auto& u : universe) {
      if (rng() % 3 == 0) inf.push_back(u);
      if (rng() % 3 == 0) exp.push_back(u);
    }
    // Duplicates in a response must not count twice.
    if (!inf.empty() && rng() % 2) inf.push_back(inf.front());
    ImportSet is, es;
    for (const auto& s : inf) is.Insert(Fqn(s));
    for (const auto& s : exp) es.Insert(Fqn(s));
    // Brute force: distinct inferred strings tested against the expected list.
    std::vector<std::string> distinct;
    for (const auto& s : inf) {
      if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) {
        distinct.push_back(s);
      }
    }
    uint64_t tp = 0;
    for (const auto& s : distinct) {
      for (const auto& e : exp) tp += (s == e);
    }
    SnippetScore sc = ScoreSnippet(is, es, "s" + std::to_string(trial));
    ASSERT_EQ(sc.tp, tp);
    ASSERT_EQ(sc.fp, distinct.size() - tp);
    ASSERT_EQ(sc.fn, exp.size() - tp);
    scores.push_back(sc);
  }
  EvalReport r = AggregateScores(scores);
  const auto& m = r.aggregate.micro;
  ASSERT_TRUE(m.precision && m.recall && m.f1);
  EXPECT_NEAR(*m.f1, 2 * *m.precision * *m.recall / (*m.precision + *m.recall),
              1e-12);
}

TEST(AggregateTest, SingleSnippet) {
  EvalReport r = AggregateScores({ScoreSnippet(Set({"a.B"}), Set({"a.B"}))});
  EXPECT_EQ(*r.aggregate.micro.precision, 1.0);
  EXPECT_EQ(*r.aggregate.macro.precision, 1.0);
  EXPECT_EQ(*r.aggregate.micro.f1, 1.0);
  EXPECT_EQ(*r.aggregate.macro.f1, 1.0);
}

TEST(AggregateTest, MicroFromSummedCounts) {
  SnippetScore x = ScoreSnippet(Set({"a.B", "b.C"}), Set({"a.B"}));  // 1,1,0
  SnippetScore y = ScoreSnippet(Set({"c.D"}), Set({"c.D", "d.E"}));  // 1,0,1
  EvalReport r = AggregateScores({x, y});
  EXPECT_EQ(r.aggregate.tp, 2u);
  EXPECT_DOUBLE_EQ(*r.aggregate.micro.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*r.aggregate.micro.recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*r.aggregate.micro.f1, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*r.aggregate.macro.precision, 0.75);
  EXPECT_DOUBLE_EQ(*r.aggregate.macro.recall, 0.75);
}

TEST(AggregateTest, AllEmptyInference) {
  EvalReport r = AggregateScores(
      {ScoreSnippet({}, Set({"a.B"})), ScoreSnippet({}, Set({"c.D"}))});
  EXPECT_FALSE(r.aggregate.micro.precision.has_value());
  EXPECT_EQ(*r.aggregate.micro.recall, 0.0);
  EXPECT_FALSE(r.aggregate.macro.precision.has_value());
  EXPECT_EQ(r.aggregate.macro_defined[0], 0u);
  EXPECT_TRUE(r.ToJson()["macro"]["precision"].is_null());
}

TEST(AggregateTest, EmptyInputThrows) {
  EXPECT_THROW(AggregateScores({}), std::invalid_argument);
}

TEST(AggregateTest, ReportJsonRoundTrip) {
  EvalReport r = AggregateScores({ScoreSnippet(Set({"a.B"}), Set({"a.B", "c.D"}), "x"),
                                  ScoreSnippet({}, Set({"e.F"}), "y")});
  r.metadata = {{"model", "m"}};
  EvalReport back = EvalReport::FromJson(r.ToJson());
  EXPECT_EQ(back.ToJson(), r.ToJson());
}

TEST(ScoreRunTest, MissingResultsCountAsEmpty) {
  Corpus c;
  c.snippets.push_back(Snippet::FromSource("b", "", "import a.B;\nclass M {}\n"));
  c.snippets.push_back(Snippet::FromSource("a", "", "import c.D;\nclass M {}\n"));
  std::vector<std::string> unknown;
  EvalReport r = ScoreRun(c, {{"b", Set({"a.B"})}, {"zzz", Set({"q.Q"})}}, &unknown);
  ASSERT_EQ(r.scores.size(), 2u);
  EXPECT_EQ(r.scores[0].id, "a");
  EXPECT_EQ(r.scores[0].fn, 1u);
  EXPECT_EQ(r.scores[1].tp, 1u);
  EXPECT_EQ(unknown, std::vector<std::string>{"zzz"});
}

// --- document frequency ---

TEST(DocFreqTest, CountsImportingFiles) {
  TempDir tmp;
  WriteFile(tmp.path() / "A.java", "import a.B;\nclass A { B b; }\n");
  WriteFile(tmp.path() / "sub/C.java", "import a.B;\nimport a.B;\nclass C {}\n");
  WriteFile(tmp.path() / "D.java", "class D {}\n");
  WriteFile(tmp.path() / "notes.txt", "import a.B;\n");
  DocFreqTable t = DocFreq(tmp.path(), {Fqn("a.B")});
  EXPECT_EQ(t.counts["a.B"], 2u);
  EXPECT_EQ(t.files_scanned, 3u);
}

TEST(DocFreqTest, EmptyRootGivesZeros) {
  TempDir tmp;
  DocFreqTable t = DocFreq(tmp.path(), {Fqn("a.B"), Fqn("c.D")});
  EXPECT_EQ(t.counts.size(), 2u);
  EXPECT_EQ(t.counts["a.B"], 0u);
  EXPECT_EQ(t.files_scanned, 0u);
}

TEST(DocFreqTest, UnreadableFilesAreSkippedAndCounted) {
  TempDir tmp;
  WriteFile(tmp.path() / "A.java", "import a.B;\n");
  std::filesystem::create_symlink(tmp.path() / "gone.java",
                                  tmp.path() / "Broken.java");
  DocFreqTable t = DocFreq(tmp.path(), {Fqn("a.B")});
  EXPECT_EQ(t.unreadable, 1u);
  EXPECT_EQ(t.files_scanned, 1u);
  EXPECT_EQ(t.counts["a.B"], 1u);
}

TEST(DocFreqTest, ReferenceRules) {
  const std::vector<Fqn> u = {Fqn("a.B"), Fqn("x.y.Z")};
  using V = std::vector<std::string>;
  EXPECT_EQ(ReferencedTypes("import a.*;\nclass M { B b; }", u), V{"a.B"});
  EXPECT_EQ(ReferencedTypes("import a.*;\nclass M { }", u), V{});
  EXPECT_EQ(ReferencedTypes("package a;\nclass M { B b; }", u), V{"a.B"});
  EXPECT_EQ(ReferencedTypes("class M { a.B b; x.y.Z.f(); }", u),
            (V{"a.B", "x.y.Z"}));
  EXPECT_EQ(ReferencedTypes("class M { B b; }", u), V{});
  // Comments and strings are not references.
  EXPECT_EQ(ReferencedTypes("// import a.B;\nclass M { String s = \"a.B\"; }", u),
            V{});
  EXPECT_EQ(ReferencedTypes("/* import a.B;\n*/ class M {}", u), V{});
  // A single-type import of another B shadows the wildcard.
  EXPECT_EQ(ReferencedTypes("import a.*;\nimport q.B;\nclass M { B b; }", u), V{});
  // A longer chain is not the same type.
  EXPECT_EQ(ReferencedTypes("class M { w.a.B b; }", u), V{});
}

// Planted tree: every (file, type) pair gets one randomly chosen form of
// mention, and the planting log is the oracle.
TEST(DocFreqTest, MatchesPlantedCounts) {
  TempDir tmp;
  const std::vector<Fqn> universe = {Fqn("org.joda.time.LocalTime"),
                                     Fqn("org.joda.time.Chronology"),
                                     Fqn("java.util.List"),
                                     Fqn("com.acme.Widget"),
                                     Fqn("android.view.View")};
  std::map<std::string, uint64_t> planted;
  for (const auto& t : universe) planted[t.str()] = 0;
  std::mt19937 rng(2026);
  for (int f = 0; f < 100; ++f) {
    std::string header = "package p" + std::to_string(f) + ";\n";
    std::string body;
    std::map<std::string, int> mode;
    std::set<std::string> wildcard_pkgs;
    for (const auto& t : universe) {
      const std::string simple(t.SimpleName());
      const std::string pkg(t.PackageName());
      const int m = static_cast<int>(rng() % 7);
      mode[t.str()] = m;
      switch (m) {
        case 0:  // explicit import, used
          header += "import " + t.str() + ";\n";
          body += "  " + simple + " f" + simple + ";\n";
          break;
        case 1:  // explicit import, twice, unused
          header += "import " + t.str() + ";\nimport " + t.str() + ";\n";
          break;
        case 2:  // wildcard plus use
          header += "import " + pkg + ".*;\n";
          wildcard_pkgs.insert(pkg);
          body += "  " + simple + " w" + simple + ";\n";
          break;
        case 3:  // fully qualified use
          body += "  " + t.str() + " q" + simple + ";\n";
          break;
        case 4:  // simple name; resolves only via a sibling's wildcard
          body += "  " + simple + " n" + simple + ";\n";
          break;
        case 5:  // only in a comment and a string
          body += "  // uses " + t.str() + "\n  String s" + simple + " = \"" +
                  t.str() + "\";\n";
          break;
        default:
          break;
      }
    }
    for (const auto& t : universe) {
      const int m = mode[t.str()];
      if (m <= 3 ||
          (m == 4 && wildcard_pkgs.count(std::string(t.PackageName())))) {
        ++planted[t.str()];
      }
    }
    WriteFile(tmp.path() / ("d" + std::to_string(f % 7)) /
                  ("F" + std::to_string(f) + ".java"),
              header + "\nclass F" + std::to_string(f) + " {\n" + body + "}\n");
  }
  DocFreqTable t = DocFreq(tmp.path(), universe);
  EXPECT_EQ(t.files_scanned, 100u);
  EXPECT_EQ(t.counts, planted);
  DocFreqTable back = DocFreqTable::FromJson(t.ToJson());
  EXPECT_EQ(back.counts, t.counts);
}

// --- buckets ---

TEST(BucketTest, Labels) {
  BucketEdges e = DefaultBucketEdges();
  EXPECT_EQ(BucketLabel(e, 0), "[0,1e2)");
  EXPECT_EQ(BucketLabel(e, 3), "[1e4,1e5)");
  EXPECT_EQ(BucketLabel(e, 4), ">=1e5");
  EXPECT_EQ(ParseBucketEdges("default"), e);
  EXPECT_EQ(ParseBucketEdges("0,10,50"), (BucketEdges{0, 10, 50}));
  EXPECT_THROW(ParseBucketEdges("1,10"), std::invalid_argument);
  EXPECT_THROW(ParseBucketEdges("0,10,5"), std::invalid_argument);
  EXPECT_THROW(ParseBucketEdges("0,x"), std::invalid_argument);
}

TEST(BucketTest, AllInOneBucketAllRecovered) {
  EvalReport r = AggregateScores({ScoreSnippet(Set({"a.B", "c.D"}), Set({"a.B", "c.D"}))});
  DocFreqTable f;
  f.counts = {{"a.B", 500}, {"c.D", 999}};
  BucketTable t = BucketRecall(r, f);
  ASSERT_EQ(t.rows.size(), 5u);
  EXPECT_EQ(t.rows[1].total, 2u);
  EXPECT_EQ(*t.rows[1].recall, 1.0);
  for (size_t i : {0, 2, 3, 4}) {
    EXPECT_EQ(t.rows[i].total, 0u);
    EXPECT_FALSE(t.rows[i].recall.has_value());
  }
  EXPECT_TRUE(t.diagnostics.empty());
}

TEST(BucketTest, HandComputedMiniCorpus) {
  // s1 expects {Logger, String}, s2 {Logger, Widget}, s3 {List}; inference
  // recovers Logger in s1 only, plus List.
  EvalReport r = AggregateScores({
      ScoreSnippet(Set({"java.util.logging.Logger"}),
                   Set({"java.util.logging.Logger", "java.lang.String"}), "s1"),
      ScoreSnippet(Set({"org.slf4j.Logger"}),
                   Set({"java.util.logging.Logger", "com.acme.Widget"}), "s2"),
      ScoreSnippet(Set({"java.util.List"}), Set({"java.util.List"}), "s3"),
  });
  DocFreqTable f;
  f.counts = {{"java.util.logging.Logger", 4200},
              {"java.lang.String", 250000},
              {"java.util.List", 100000},
              {"org.slf4j.Logger", 7}};
  BucketTable t = BucketRecall(r, f);
  // Widget missing from the table -> [0,1e2) with a diagnostic.
  EXPECT_EQ(t.rows[0].total, 1u);
  EXPECT_EQ(t.rows[0].tp, 0u);
  EXPECT_EQ(t.rows[2].total, 2u);  // Logger (4200) twice
  EXPECT_EQ(t.rows[2].tp, 1u);
  EXPECT_DOUBLE_EQ(*t.rows[2].recall, 0.5);
  EXPECT_EQ(t.rows[1].total + t.rows[3].total, 0u);
  EXPECT_EQ(t.rows[4].total, 2u);  // String and List (edge 1e5 is inclusive)
  EXPECT_EQ(t.rows[4].tp, 1u);
  ASSERT_EQ(t.diagnostics.size(), 1u);
  EXPECT_NE(t.diagnostics[0].find("com.acme.Widget"), std::string::npos);
  uint64_t total = 0;
  for (const auto& row : t.rows) total += row.total;
  EXPECT_EQ(total, r.aggregate.tp + r.aggregate.fn);
}

// --- Wilcoxon ---

// Independent oracle: enumerate every sign pattern over the rank vector and
// count those at least as extreme as the observed statistic.
double EnumerateP(const std::vector<double>& ranks, double w) {
  const size_t n = ranks.size();
  double total = 0;
  for (double r : ranks) total += r;
  uint64_t extreme = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    double plus = 0;
    for (size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) plus += ranks[i];
    }
    if (std::min(plus, total - plus) <= w + 1e-9) ++extreme;
  }
  return static_cast<double>(extreme) / static_cast<double>(uint64_t{1} << n);
}

// Ranks of |d| (ties averaged) computed by pairwise counting.
std::vector<double> OracleRanks(const std::vector<double>& d) {
  std::vector<double> r;
  for (double x : d) {
    double less = 0, equal = 0;
    for (double y : d) {
      if (std::abs(y) < std::abs(x)) ++less;
      if (std::abs(y) == std::abs(x)) ++equal;
    }
    r.push_back(less + (equal + 1) / 2);
  }
  return r;
}

TEST(WilcoxonTest, IdenticalSamplesHaveUndefinedP) {
  WilcoxonResult r = WilcoxonSignedRank({0.1, 0.5, 1}, {0.1, 0.5, 1});
  EXPECT_EQ(r.n_effective, 0u);
  EXPECT_FALSE(r.p_value.has_value());
  EXPECT_TRUE(r.ToJson()["p_value"].is_null());
}

TEST(WilcoxonTest, ThreePositiveDifferences) {
  WilcoxonResult r = WilcoxonSignedRank({0, 0, 0}, {1, 2, 3});
  EXPECT_EQ(r.n_effective, 3u);
  EXPECT_EQ(r.w, 0);
  EXPECT_EQ(r.w_plus, 6);
  EXPECT_EQ(r.method, WilcoxonResult::Method::kExact);
  EXPECT_EQ(*r.p_value, 0.25);
}

TEST(WilcoxonTest, ExactMatchesEnumerationUpToTen) {
  std::mt19937 rng(11);
  int cases = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const size_t n = 1 + rng() % 12;
    std::vector<double> a(n), b(n), d;
    for (size_t i = 0; i < n; ++i) {
      // Small integer grid: plenty of ties and zeros.
      a[i] = static_cast<double>(rng() % 5);
      b[i] = static_cast<double>(rng() % 5);
      if (b[i] != a[i]) d.push_back(b[i] - a[i]);
    }
    if (d.empty() || d.size() > 10) continue;
    ++cases;
    WilcoxonResult r = WilcoxonSignedRank(a, b);
    ASSERT_EQ(r.n_effective, d.size());
    std::vector<double> ranks = OracleRanks(d);
    double wp = 0, wm = 0;
    for (size_t i = 0; i < d.size(); ++i) (d[i] > 0 ? wp : wm) += ranks[i];
    ASSERT_EQ(r.w_plus, wp);
    ASSERT_EQ(r.w_minus, wm);
    ASSERT_EQ(*r.p_value, EnumerateP(ranks, std::min(wp, wm))) << "trial " << trial;
  }
  EXPECT_GT(cases, 200);
}

TEST(WilcoxonTest, SymmetricAndShiftInvariant) {
  std::vector<double> a = {0.5, 0.25, 1, 0.75, 0.2, 0.9, 0.1, 0.6};
  std::vector<double> b = {0.75, 0.5, 1, 0.25, 0.4, 0.95, 0.7, 0.1};
  WilcoxonResult ab = WilcoxonSignedRank(a, b);
  WilcoxonResult ba = WilcoxonSignedRank(b, a);
  EXPECT_EQ(*ab.p_value, *ba.p_value);
  EXPECT_EQ(ab.w_plus, ba.w_minus);
  EXPECT_EQ(ab.w_minus, ba.w_plus);
  for (double c : {0.1, 0.3, 1.7, -0.45}) {
    std::vector<double> a2 = a, b2 = b;
    for (auto& x : a2) x += c;
    for (auto& x : b2) x += c;
    WilcoxonResult s = WilcoxonSignedRank(a2, b2);
    EXPECT_EQ(s.n_effective, ab.n_effective) << c;
    EXPECT_EQ(s.w_plus, ab.w_plus) << c;
    EXPECT_EQ(*s.p_value, *ab.p_value) << c;
  }
}

// Exact distribution for 30 ranks by meet-in-the-middle enumeration of all
// 2^30 sign patterns (two halves of 2^15 partial sums).
double ExactP30(const std::vector<double>& ranks, double w) {
  const size_t half = ranks.size() / 2;
  auto sums = [&](size_t from, size_t to) {
    std::vector<double> s = {0};
    for (size_t i = from; i < to; ++i) {
      size_t m = s.size();
      for (size_t k = 0; k < m; ++k) s.push_back(s[k] + ranks[i]);
    }
    return s;
  };
  std::vector<double> left = sums(0, half), right = sums(half, ranks.size());
  std::sort(right.begin(), right.end());
  double total = 0;
  for (double r : ranks) total += r;
  uint64_t extreme = 0;
  for (double l : left) {
    // plus <= w
    extreme += std::upper_bound(right.begin(), right.end(), w - l + 1e-9) -
               right.begin();
    // plus >= total - w
    extreme += right.end() - std::lower_bound(right.begin(), right.end(),
                                              total - w - l - 1e-9);
  }
  return std::min(1.0, static_cast<double>(extreme) / std::ldexp(1.0, 30));
}

TEST(WilcoxonTest, NormalApproximationAtThirty) {
  std::vector<double> d;
  for (int i = 0; i < 30; ++i) d.push_back((i + 1) * ((i * 5) % 7 < 5 ? 1 : -1));
  std::vector<double> zero(30, 0.0);
  WilcoxonResult r = WilcoxonSignedRank(zero, d);
  EXPECT_EQ(r.method, WilcoxonResult::Method::kNormal);
  EXPECT_EQ(r.w, 142);
  const double exact = ExactP30(OracleRanks(d), r.w);
  // Reference values computed independently with scipy.stats.wilcoxon.
  EXPECT_NEAR(exact, 0.0635564886033535, 1e-12);
  EXPECT_NEAR(*r.p_value, 0.06414789866383099, 1e-9);
  EXPECT_NEAR(*r.p_value, exact, 0.01);
}

TEST(WilcoxonTest, NormalApproximationWithTies) {
  std::vector<double> d;
  for (int i = 0; i < 30; ++i) {
    d.push_back(((i * 7) % 5 + 1) * ((i * 3) % 5 < 4 ? 1 : -1));
  }
  std::vector<double> zero(30, 0.0);
  WilcoxonResult r = WilcoxonSignedRank(zero, d);
  EXPECT_EQ(r.w, 57);
  EXPECT_NEAR(*r.p_value, 0.0002989233693354008, 1e-9);  // scipy reference
  EXPECT_NEAR(*r.p_value, ExactP30(OracleRanks(d), r.w), 0.01);
}

TEST(WilcoxonTest, LengthMismatchThrows) {
  EXPECT_THROW(WilcoxonSignedRank({1, 2}, {1}), std::invalid_argument);
}

TEST(SignificanceTest, LevelsAndDirection) {
  WilcoxonResult r;
  r.p_value = 0.0005;
  r.sum_diff = -3;
  Significance s = Classify(r);
  EXPECT_EQ(s.level, Significance::Level::kP001);
  EXPECT_EQ(s.direction, Significance::Direction::kDecrease);
  EXPECT_EQ(s.Label(), "decrease p<0.001");
  r.p_value = 0.005;
  r.sum_diff = 2;
  EXPECT_EQ(Classify(r).Label(), "increase p<0.01");
  r.p_value = 0.01;  // thresholds are strict
  EXPECT_EQ(Classify(r).level, Significance::Level::kP05);
  r.p_value = 0.05;
  EXPECT_EQ(Classify(r).Label(), "not significant");
  r.p_value.reset();
  EXPECT_EQ(Classify(r).level, Significance::Level::kNone);
}

TEST(PairMetricTest, PairsByIdAndSkipsUndefined) {
  EvalReport a = AggregateScores({ScoreSnippet(Set({"a.B"}), Set({"a.B"}), "x"),
                                  ScoreSnippet({}, Set({"a.B"}), "y"),
                                  ScoreSnippet(Set({"a.B"}), Set({"a.B"}), "z")});
  EvalReport b = AggregateScores({ScoreSnippet(Set({"c.D"}), Set({"a.B"}), "x"),
                                  ScoreSnippet(Set({"a.B"}), Set({"a.B"}), "y"),
                                  ScoreSnippet(Set({"a.B"}), Set({"a.B"}), "w")});
  PairedSamples p = PairMetric(a, b, "precision");
  EXPECT_EQ(p.ids, std::vector<std::string>{"x"});
  EXPECT_EQ(p.before, std::vector<double>{1.0});
  EXPECT_EQ(p.after, std::vector<double>{0.0});
  EXPECT_EQ(p.skipped_undefined, 1u);
  EXPECT_EQ(p.unmatched, 2u);
  EXPECT_THROW(PairMetric(a, b, "accuracy"), std::invalid_argument);
}

}  // namespace
}  // namespace jtb::score
