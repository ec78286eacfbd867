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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jtb::score {
namespace {

using json = nlohmann::json;

json RatioJson(const Ratio& r) { return r ? json(*r) : json(nullptr); }

Ratio RatioFromJson(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<double>();
}

Ratio Mean(const std::vector<double>& xs) {
  if (xs.empty()) return std::nullopt;
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

json MetricsJson(const Metrics& m) {
  return {{"precision", RatioJson(m.precision)},
          {"recall", RatioJson(m.recall)},
          {"f1", RatioJson(m.f1)}};
}

// --- source scanning for document frequency ---

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool IsIdentPart(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Replaces comments and string/char literals with spaces (newlines kept).
std::string CodeOnly(std::string_view text) {
  std::string out(text);
  size_t i = 0;
  auto blank = [&](size_t from, size_t to) {
    for (size_t k = from; k < to && k < out.size(); ++k) {
      if (out[k] != '\n') out[k] = ' ';
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      size_t end = text.find('\n', i);
      if (end == std::string_view::npos) end = text.size();
      blank(i, end);
      i = end;
    } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      size_t end = text.find("*/", i + 2);
      end = end == std::string_view::npos ? text.size() : end + 2;
      blank(i, end);
      i = end;
    } else if (c == '"' && text.substr(i, 3) == "\"\"\"") {
      size_t end = text.find("\"\"\"", i + 3);
      end = end == std::string_view::npos ? text.size() : end + 3;
      blank(i, end);
      i = end;
    } else if (c == '"' || c == '\'') {
      size_t k = i + 1;
      while (k < text.size() && text[k] != c && text[k] != '\n') {
        k += text[k] == '\\' ? 2 : 1;
      }
      size_t end = std::min(text.size(), k + 1);
      blank(i, end);
      i = end;
    } else {
      ++i;
    }
  }
  return out;
}

struct FileFacts {
  std::string package;
  std::set<std::string> identifiers;
  std::set<std::string> dotted;  // every prefix (>= 2 segments) of a chain
};

FileFacts ScanCode(const std::string& code) {
  FileFacts f;
  size_t i = 0;
  bool expect_package = false;
  while (i < code.size()) {
    if (!IsIdentStart(code[i])) {
      ++i;
      continue;
    }
    // Read a chain ident(.ident)* allowing whitespace around dots.
    std::vector<std::string> segs;
    size_t k = i;
    while (true) {
      size_t s = k;
      while (k < code.size() && IsIdentPart(code[k])) ++k;
      segs.emplace_back(code.substr(s, k - s));
      size_t j = k;
      while (j < code.size() && std::isspace(static_cast<unsigned char>(code[j]))) ++j;
      if (j < code.size() && code[j] == '.') {
        size_t n = j + 1;
        while (n < code.size() && std::isspace(static_cast<unsigned char>(code[n]))) ++n;
        if (n < code.size() && IsIdentStart(code[n])) {
          k = n;
          continue;
        }
      }
      break;
    }
    i = k;
    if (expect_package) {
      for (size_t s = 0; s < segs.size(); ++s) {
        f.package += (s ? "." : "") + segs[s];
      }
      expect_package = false;
      continue;
    }
    if (segs.size() == 1 && segs[0] == "package" && f.package.empty()) {
      expect_package = true;
      continue;
    }
    std::string prefix;
    for (size_t s = 0; s < segs.size(); ++s) {
      f.identifiers.insert(segs[s]);
      prefix += (s ? "." : "") + segs[s];
      if (s >= 1) f.dotted.insert(prefix);
    }
  }
  return f;
}

std::string FormatEdge(double v) {
  if (v == 0) return "0";
  double lg = std::log10(v);
  if (v >= 10 && std::abs(lg - std::round(lg)) < 1e-12) {
    return "1e" + std::to_string(static_cast<int>(std::round(lg)));
  }
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

Metrics ComputeMetrics(uint64_t tp, uint64_t fp, uint64_t fn) {
  Metrics m;
  if (tp + fp > 0) m.precision = static_cast<double>(tp) / (tp + fp);
  if (tp + fn > 0) m.recall = static_cast<double>(tp) / (tp + fn);
  if (m.precision && m.recall) {
    double sum = *m.precision + *m.recall;
    m.f1 = sum == 0 ? 0.0 : 2 * *m.precision * *m.recall / sum;
  }
  return m;
}

Ratio SnippetScore::Get(std::string_view metric) const {
  if (metric == "precision") return precision;
  if (metric == "recall") return recall;
  if (metric == "f1") return f1;
  throw std::invalid_argument("unknown metric '" + std::string(metric) +
                              "' (expected precision, recall or f1)");
}

json SnippetScore::ToJson() const {
  return {{"id", id},           {"tp", tp},
          {"fp", fp},           {"fn", fn},
          {"precision", RatioJson(precision)},
          {"recall", RatioJson(recall)},
          {"f1", RatioJson(f1)},
          {"correct", correct}, {"spurious", spurious},
          {"missed", missed}};
}

SnippetScore SnippetScore::FromJson(const json& j) {
  SnippetScore s;
  s.id = j.at("id").get<std::string>();
  s.tp = j.at("tp").get<uint64_t>();
  s.fp = j.at("fp").get<uint64_t>();
  s.fn = j.at("fn").get<uint64_t>();
  s.precision = RatioFromJson(j, "precision");
  s.recall = RatioFromJson(j, "recall");
  s.f1 = RatioFromJson(j, "f1");
  s.correct = j.value("correct", std::vector<std::string>{});
  s.spurious = j.value("spurious", std::vector<std::string>{});
  s.missed = j.value("missed", std::vector<std::string>{});
  return s;
}

SnippetScore ScoreSnippet(const ImportSet& inferred, const ImportSet& expected,
                          std::string id) {
  SnippetScore s;
  s.id = std::move(id);
  for (const auto& f : inferred) {
    (expected.Contains(f) ? s.correct : s.spurious).push_back(f.str());
  }
  for (const auto& f : expected) {
    if (!inferred.Contains(f)) s.missed.push_back(f.str());
  }
  s.tp = s.correct.size();
  s.fp = s.spurious.size();
  s.fn = s.missed.size();
  Metrics m = ComputeMetrics(s.tp, s.fp, s.fn);
  s.precision = m.precision;
  s.recall = m.recall;
  s.f1 = m.f1;
  return s;
}

const SnippetScore* EvalReport::Find(std::string_view id) const {
  for (const auto& s : scores) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

EvalReport AggregateScores(std::vector<SnippetScore> scores) {
  if (scores.empty()) throw std::invalid_argument("no scores to aggregate");
  EvalReport r;
  Aggregate& a = r.aggregate;
  std::vector<double> ps, rs, fs;
  for (const auto& s : scores) {
    a.tp += s.tp;
    a.fp += s.fp;
    a.fn += s.fn;
    if (s.precision) ps.push_back(*s.precision);
    if (s.recall) rs.push_back(*s.recall);
    if (s.f1) fs.push_back(*s.f1);
  }
  a.micro = ComputeMetrics(a.tp, a.fp, a.fn);
  a.macro = {Mean(ps), Mean(rs), Mean(fs)};
  a.macro_defined[0] = ps.size();
  a.macro_defined[1] = rs.size();
  a.macro_defined[2] = fs.size();
  r.scores = std::move(scores);
  return r;
}

json EvalReport::ToJson() const {
  json micro = MetricsJson(aggregate.micro);
  micro["tp"] = aggregate.tp;
  micro["fp"] = aggregate.fp;
  micro["fn"] = aggregate.fn;
  json macro = MetricsJson(aggregate.macro);
  macro["n_precision"] = aggregate.macro_defined[0];
  macro["n_recall"] = aggregate.macro_defined[1];
  macro["n_f1"] = aggregate.macro_defined[2];
  json snippets = json::array();
  for (const auto& s : scores) snippets.push_back(s.ToJson());
  return {{"metadata", metadata},
          {"snippet_count", scores.size()},
          {"micro", micro},
          {"macro", macro},
          {"snippets", snippets}};
}

EvalReport EvalReport::FromJson(const json& j) {
  std::vector<SnippetScore> scores;
  for (const auto& s : j.at("snippets")) scores.push_back(SnippetScore::FromJson(s));
  EvalReport r = AggregateScores(std::move(scores));
  r.metadata = j.value("metadata", json::object());
  return r;
}

EvalReport ScoreRun(const Corpus& corpus,
                    const std::map<std::string, ImportSet>& inferred,
                    std::vector<std::string>* unknown_ids) {
  std::vector<SnippetScore> scores;
  std::set<std::string> known;
  for (const auto& s : corpus.snippets) {
    known.insert(s.id);
    auto it = inferred.find(s.id);
    scores.push_back(ScoreSnippet(it == inferred.end() ? ImportSet{} : it->second,
                                  s.ground_truth, s.id));
  }
  if (unknown_ids) {
    for (const auto& [id, set] : inferred) {
      if (!known.count(id)) unknown_ids->push_back(id);
    }
  }
  std::sort(scores.begin(), scores.end(),
            [](const SnippetScore& a, const SnippetScore& b) {
              return a.id < b.id;
            });
  return AggregateScores(std::move(scores));
}

// --- document frequency ---

std::vector<std::string> ReferencedTypes(std::string_view text,
                                         const std::vector<Fqn>& universe) {
  const std::string code = CodeOnly(text);
  const ImportScan scan = ScanImports(code);
  const FileFacts facts = ScanCode(code);
  std::set<std::string> wildcards(scan.wildcards.begin(), scan.wildcards.end());
  std::map<std::string, std::string> single;  // simple name -> imported fqn
  for (const auto& f : scan.imports) single[std::string(f.SimpleName())] = f.str();

  std::vector<std::string> out;
  for (const auto& t : universe) {
    const std::string simple(t.SimpleName());
    const std::string pkg(t.PackageName());
    bool hit = scan.imports.Contains(t) || facts.dotted.count(t.str()) > 0;
    if (!hit && facts.identifiers.count(simple)) {
      auto imp = single.find(simple);
      // A single-type import of another type shadows package/wildcard lookups.
      bool shadowed = imp != single.end() && imp->second != t.str();
      hit = !shadowed && (wildcards.count(pkg) > 0 || (!pkg.empty() && pkg == facts.package));
    }
    if (hit) out.push_back(t.str());
  }
  return out;
}

DocFreqTable DocFreq(const std::filesystem::path& root,
                     const std::vector<Fqn>& universe) {
  DocFreqTable table;
  for (const auto& t : universe) table.counts[t.str()] = 0;
  if (!std::filesystem::exists(root)) return table;
  std::vector<std::filesystem::path> files;
  for (auto it = std::filesystem::recursive_directory_iterator(
           root, std::filesystem::directory_options::skip_permission_denied);
       it != std::filesystem::recursive_directory_iterator(); ++it) {
    std::error_code ec;
    if (it->is_directory(ec)) continue;
    if (it->path().extension() != ".java") continue;
    files.push_back(it->path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      ++table.unreadable;
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
      ++table.unreadable;
      continue;
    }
    ++table.files_scanned;
    for (const auto& fqn : ReferencedTypes(buf.str(), universe)) {
      ++table.counts[fqn];
    }
  }
  return table;
}

json DocFreqTable::ToJson() const {
  return {{"files_scanned", files_scanned},
          {"unreadable", unreadable},
          {"counts", counts}};
}

DocFreqTable DocFreqTable::FromJson(const json& j) {
  DocFreqTable t;
  t.files_scanned = j.value("files_scanned", uint64_t{0});
  t.unreadable = j.value("unreadable", uint64_t{0});
  const json& counts = j.contains("counts") ? j.at("counts") : j;
  for (const auto& [k, v] : counts.items()) {
    if (!v.is_number_unsigned() && !v.is_number_integer()) continue;
    t.counts[k] = v.get<uint64_t>();
  }
  return t;
}

// --- buckets ---

BucketEdges DefaultBucketEdges() { return {0, 1e2, 1e3, 1e4, 1e5}; }

BucketEdges ParseBucketEdges(std::string_view text) {
  if (text.empty() || text == "default") return DefaultBucketEdges();
  BucketEdges edges;
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    double v;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw std::invalid_argument("bad bucket edge '" + item + "'");
    }
    edges.push_back(v);
  }
  if (edges.empty() || edges.front() != 0) {
    throw std::invalid_argument("bucket edges must start at 0");
  }
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] <= edges[i - 1]) {
      throw std::invalid_argument("bucket edges must be strictly ascending");
    }
  }
  return edges;
}

std::string BucketLabel(const BucketEdges& edges, size_t i) {
  if (i + 1 < edges.size()) {
    return "[" + FormatEdge(edges[i]) + "," + FormatEdge(edges[i + 1]) + ")";
  }
  return ">=" + FormatEdge(edges[i]);
}

BucketTable BucketRecall(const EvalReport& report, const DocFreqTable& freq,
                         const BucketEdges& edges) {
  if (edges.empty() || edges.front() != 0) {
    throw std::invalid_argument("bucket edges must start at 0");
  }
  BucketTable table;
  for (size_t i = 0; i < edges.size(); ++i) {
    table.rows.push_back({BucketLabel(edges, i), 0, 0, std::nullopt});
  }
  std::set<std::string> reported;
  auto bucket_of = [&](const std::string& fqn) -> size_t {
    auto it = freq.counts.find(fqn);
    if (it == freq.counts.end()) {
      if (reported.insert(fqn).second) {
        table.diagnostics.push_back(fqn + ": not in frequency table, counted in " +
                                    table.rows[0].label);
      }
      return 0;
    }
    double c = static_cast<double>(it->second);
    size_t b = 0;
    while (b + 1 < edges.size() && c >= edges[b + 1]) ++b;
    return b;
  };
  for (const auto& s : report.scores) {
    for (const auto& f : s.correct) {
      auto& row = table.rows[bucket_of(f)];
      ++row.total;
      ++row.tp;
    }
    for (const auto& f : s.missed) ++table.rows[bucket_of(f)].total;
  }
  for (auto& row : table.rows) {
    if (row.total > 0) row.recall = static_cast<double>(row.tp) / row.total;
  }
  return table;
}

json BucketTable::ToJson() const {
  json rows_json = json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"bucket", r.label},
                         {"total", r.total},
                         {"tp", r.tp},
                         {"recall", RatioJson(r.recall)}});
  }
  return {{"rows", rows_json}, {"diagnostics", diagnostics}};
}

// --- Wilcoxon ---

double ExactSignedRankP(const std::vector<double>& ranks, double w) {
  // Subset-sum counts over doubled ranks (tie averages are multiples of 0.5).
  std::vector<int> r2;
  int total = 0;
  for (double r : ranks) {
    r2.push_back(static_cast<int>(std::lround(2 * r)));
    total += r2.back();
  }
  std::vector<uint64_t> count(static_cast<size_t>(total) + 1, 0);
  count[0] = 1;
  int reach = 0;
  for (int r : r2) {
    for (int s = reach; s >= 0; --s) {
      if (count[s]) count[static_cast<size_t>(s + r)] += count[s];
    }
    reach += r;
  }
  const long limit = std::lround(2 * w);
  uint64_t tail = 0;
  for (long s = 0; s <= limit && s <= total; ++s) tail += count[s];
  double p = 2.0 * static_cast<double>(tail) /
             std::ldexp(1.0, static_cast<int>(ranks.size()));
  return std::min(1.0, p);
}

WilcoxonResult WilcoxonSignedRank(const std::vector<double>& before,
                                  const std::vector<double>& after) {
  if (before.size() != after.size()) {
    throw std::invalid_argument("wilcoxon: samples differ in length (" +
                                std::to_string(before.size()) + " vs " +
                                std::to_string(after.size()) + ")");
  }
  WilcoxonResult res;
  std::vector<double> d;
  for (size_t i = 0; i < before.size(); ++i) {
    double diff = after[i] - before[i];
    res.sum_diff += diff;
    if (std::abs(diff) > kZeroTolerance) d.push_back(diff);
  }
  const size_t n = d.size();
  res.n_effective = n;
  if (n == 0) return res;

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return std::abs(d[a]) < std::abs(d[b]);
  });
  std::vector<double> rank(n);
  double tie_term = 0;  // Σ(t³ - t)
  for (size_t i = 0; i < n;) {
    size_t j = i + 1;
    while (j < n &&
           std::abs(d[order[j]]) - std::abs(d[order[j - 1]]) <= kZeroTolerance) {
      ++j;
    }
    double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2;
    for (size_t k = i; k < j; ++k) rank[order[k]] = avg;
    double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  for (size_t i = 0; i < n; ++i) {
    (d[i] > 0 ? res.w_plus : res.w_minus) += rank[i];
  }
  res.w = std::min(res.w_plus, res.w_minus);

  if (n <= kExactMaxN) {
    res.method = WilcoxonResult::Method::kExact;
    res.p_value = ExactSignedRankP(rank, res.w);
  } else {
    res.method = WilcoxonResult::Method::kNormal;
    const double nn = static_cast<double>(n);
    const double mean = nn * (nn + 1) / 4;
    const double var = nn * (nn + 1) * (2 * nn + 1) / 24 - tie_term / 48;
    const double z = std::max(0.0, std::abs(res.w - mean) - 0.5) / std::sqrt(var);
    res.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  }
  return res;
}

json WilcoxonResult::ToJson() const {
  const char* m = method == Method::kExact    ? "exact"
                  : method == Method::kNormal ? "normal-approx"
                                              : "none";
  return {{"n_effective", n_effective}, {"w_plus", w_plus},
          {"w_minus", w_minus},         {"w", w},
          {"p_value", RatioJson(p_value)},
          {"method", m},                {"sum_diff", sum_diff}};
}

Significance Classify(const WilcoxonResult& result) {
  Significance s;
  if (result.sum_diff > kZeroTolerance) {
    s.direction = Significance::Direction::kIncrease;
  } else if (result.sum_diff < -kZeroTolerance) {
    s.direction = Significance::Direction::kDecrease;
  }
  if (result.p_value) {
    double p = *result.p_value;
    if (p < 0.001) {
      s.level = Significance::Level::kP001;
    } else if (p < 0.01) {
      s.level = Significance::Level::kP01;
    } else if (p < 0.05) {
      s.level = Significance::Level::kP05;
    }
  }
  return s;
}

std::string Significance::Label() const {
  if (level == Level::kNone) return "not significant";
  std::string dir = direction == Direction::kIncrease   ? "increase"
                    : direction == Direction::kDecrease ? "decrease"
                                                        : "no change";
  const char* p = level == Level::kP001 ? "p<0.001"
                  : level == Level::kP01 ? "p<0.01"
                                         : "p<0.05";
  return dir + " " + p;
}

PairedSamples PairMetric(const EvalReport& before, const EvalReport& after,
                         std::string_view metric) {
  (void)SnippetScore{}.Get(metric);  // reject unknown metric names early
  std::map<std::string_view, const SnippetScore*> by_id;
  for (const auto& t : after.scores) by_id[t.id] = &t;
  PairedSamples out;
  size_t matched = 0;
  for (const auto& s : before.scores) {
    auto it = by_id.find(s.id);
    if (it == by_id.end()) {
      ++out.unmatched;
      continue;
    }
    ++matched;
    Ratio a = s.Get(metric), b = it->second->Get(metric);
    if (!a || !b) {
      ++out.skipped_undefined;
      continue;
    }
    out.ids.push_back(s.id);
    out.before.push_back(*a);
    out.after.push_back(*b);
  }
  out.unmatched += after.scores.size() - matched;
  return out;
}

}  // namespace jtb::score
