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

#ifndef JTB_SCORING_H_
#define JTB_SCORING_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jtb/snippet.h"
#include "json.hpp"

namespace jtb::score {

// nullopt marks an undefined ratio (zero denominator).
using Ratio = std::optional<double>;

struct Metrics {
  Ratio precision;
  Ratio recall;
  Ratio f1;
};

// P = tp/(tp+fp), R = tp/(tp+fn), F1 = harmonic mean. F1 is undefined when
// either side is; it is 0 when both are 0.
Metrics ComputeMetrics(uint64_t tp, uint64_t fp, uint64_t fn);

struct SnippetScore {
  std::string id;
  uint64_t tp = 0, fp = 0, fn = 0;
  Ratio precision, recall, f1;
  std::vector<std::string> correct;   // inferred ∩ expected
  std::vector<std::string> spurious;  // inferred \ expected
  std::vector<std::string> missed;    // expected \ inferred

  Ratio Get(std::string_view metric) const;  // "precision"|"recall"|"f1"
  nlohmann::json ToJson() const;
  static SnippetScore FromJson(const nlohmann::json& j);
};

SnippetScore ScoreSnippet(const ImportSet& inferred, const ImportSet& expected,
                          std::string id = {});

struct Aggregate {
  uint64_t tp = 0, fp = 0, fn = 0;
  Metrics micro;  // from summed counts
  Metrics macro;  // mean of defined per-snippet values
  size_t macro_defined[3] = {0, 0, 0};  // P, R, F1 sample sizes
};

struct EvalReport {
  std::vector<SnippetScore> scores;
  Aggregate aggregate;
  nlohmann::json metadata = nlohmann::json::object();

  const SnippetScore* Find(std::string_view id) const;
  nlohmann::json ToJson() const;
  static EvalReport FromJson(const nlohmann::json& j);
};

// Throws std::invalid_argument when `scores` is empty.
EvalReport AggregateScores(std::vector<SnippetScore> scores);

// Scores results against a corpus by snippet id. Corpus snippets without a
// result count as empty inferences; results for unknown ids are reported in
// `unknown_ids` and ignored.
EvalReport ScoreRun(const Corpus& corpus,
                    const std::map<std::string, ImportSet>& inferred,
                    std::vector<std::string>* unknown_ids = nullptr);

// --- document frequency ---------------------------------------------------

struct DocFreqTable {
  std::map<std::string, uint64_t> counts;  // Fqn -> files referencing it
  uint64_t files_scanned = 0;
  uint64_t unreadable = 0;

  nlohmann::json ToJson() const;
  static DocFreqTable FromJson(const nlohmann::json& j);
};

// Counts, for every Fqn in `universe`, the .java files under `root` that
// reference it: a single-type import of it, a wildcard import of its
// package together with a use of its simple name, a use of its simple name
// from within its own package, or a fully qualified use in code. Each file
// counts at most once per type.
DocFreqTable DocFreq(const std::filesystem::path& root,
                     const std::vector<Fqn>& universe);

// The references one file's text makes to `universe` (exposed for tests).
std::vector<std::string> ReferencedTypes(std::string_view text,
                                         const std::vector<Fqn>& universe);

// --- frequency buckets ----------------------------------------------------

// Lower edges, ascending, first == 0. Bucket i is [edges[i], edges[i+1]);
// the last is unbounded.
using BucketEdges = std::vector<double>;
BucketEdges DefaultBucketEdges();
// "default" or a comma-separated ascending list starting at 0.
BucketEdges ParseBucketEdges(std::string_view text);
std::string BucketLabel(const BucketEdges& edges, size_t i);

struct BucketRow {
  std::string label;
  uint64_t total = 0;
  uint64_t tp = 0;
  Ratio recall;
};

struct BucketTable {
  std::vector<BucketRow> rows;
  std::vector<std::string> diagnostics;  // Fqns missing from the table

  nlohmann::json ToJson() const;
};

// Every expected occurrence (correct ∪ missed of each snippet) lands in one
// bucket by its document frequency.
BucketTable BucketRecall(const EvalReport& report, const DocFreqTable& freq,
                         const BucketEdges& edges = DefaultBucketEdges());

// --- Wilcoxon signed-rank -------------------------------------------------

struct WilcoxonResult {
  enum class Method { kNone, kExact, kNormal };

  size_t n_effective = 0;
  double w_plus = 0, w_minus = 0;
  double w = 0;  // min(W+, W-)
  Ratio p_value;
  Method method = Method::kNone;
  double sum_diff = 0;  // Σ(after - before)

  nlohmann::json ToJson() const;
};

// Differences (after - before) with |d| <= kZeroTolerance are dropped, and
// magnitudes within the tolerance of each other are ties; this keeps the
// result unchanged when a constant is added to both samples.
inline constexpr double kZeroTolerance = 1e-9;
inline constexpr size_t kExactMaxN = 25;

// Throws std::invalid_argument on length mismatch.
WilcoxonResult WilcoxonSignedRank(const std::vector<double>& before,
                                  const std::vector<double>& after);

// Two-sided exact p for W = min(W+, W-) under the null, where the ranks may
// be tie-averaged (multiples of 0.5).
double ExactSignedRankP(const std::vector<double>& ranks, double w);

struct Significance {
  enum class Level { kNone, kP05, kP01, kP001 };
  enum class Direction { kNone, kIncrease, kDecrease };
  Level level = Level::kNone;
  Direction direction = Direction::kNone;
  std::string Label() const;  // e.g. "decrease p<0.01", "not significant"
};
Significance Classify(const WilcoxonResult& result);

// Pairs a metric between two reports by snippet id; pairs where either side
// is undefined are skipped and counted.
struct PairedSamples {
  std::vector<std::string> ids;
  std::vector<double> before, after;
  size_t skipped_undefined = 0;
  size_t unmatched = 0;
};
PairedSamples PairMetric(const EvalReport& before, const EvalReport& after,
                         std::string_view metric);

}  // namespace jtb::score

#endif  // JTB_SCORING_H_
