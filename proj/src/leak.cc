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

#include "jtb/leak.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "jtb/snippet.h"

namespace jtb::leak {
namespace {

using json = nlohmann::json;

std::vector<Ranked> Rank(const std::map<std::string, uint64_t>& counts,
                         uint64_t min) {
  std::vector<Ranked> out;
  for (const auto& [name, c] : counts) {
    if (c >= min) out.push_back({name, c});
  }
  std::stable_sort(out.begin(), out.end(), [](const Ranked& a, const Ranked& b) {
    return a.count > b.count;  // map order already gives the name tie-break
  });
  return out;
}

json RankedJson(const std::vector<Ranked>& xs) {
  json arr = json::array();
  for (const auto& r : xs) arr.push_back({{"name", r.name}, {"count", r.count}});
  return arr;
}

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string_view Basename(std::string_view path) {
  size_t slash = path.find_last_of("/\\");
  return slash == std::string_view::npos ? path : path.substr(slash + 1);
}

std::string NormalizeName(std::string_view name) {
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  size_t dot = s.rfind('.');
  std::string stem = dot == std::string::npos ? s : s.substr(0, dot);
  std::string ext = dot == std::string::npos ? "" : s.substr(dot);
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) {
    stem.pop_back();
  }
  return stem + ext;
}

Scanner::Scanner(const std::set<std::string>& names, ScanOptions options)
    : options_(options) {
  for (const auto& n : names) {
    names_.insert(options_.normalized ? NormalizeName(n) : n);
  }
}

bool Scanner::Add(const FileMeta& meta) {
  if (meta.path.empty()) {
    ++report_.malformed;
    return false;
  }
  ++report_.records;
  std::string_view base = Basename(meta.path);
  bool hit = options_.normalized ? names_.count(NormalizeName(base)) > 0
                                 : names_.count(std::string(base)) > 0;
  if (!hit) return false;
  ++report_.repo_counts[meta.repo];
  ++report_.author_counts[meta.author];
  ++report_.total_matches;
  return true;
}

void Scanner::Merge(const Scanner& other) {
  for (const auto& [k, v] : other.report_.repo_counts) report_.repo_counts[k] += v;
  for (const auto& [k, v] : other.report_.author_counts) report_.author_counts[k] += v;
  report_.total_matches += other.report_.total_matches;
  report_.records += other.report_.records;
  report_.malformed += other.report_.malformed;
}

json LeakReport::ToJson() const {
  return {{"total_matches", total_matches},
          {"records", records},
          {"malformed", malformed},
          {"repo_counts", repo_counts},
          {"author_counts", author_counts}};
}

MetaFormat FormatForPath(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".csv" ? MetaFormat::kCsv : MetaFormat::kJsonl;
}

bool ParseCsvLine(std::string_view line, std::vector<std::string>& fields) {
  fields.clear();
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' && cur.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else if (c == '\r' && i + 1 == line.size()) {
      // tolerate CRLF
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) return false;
  fields.push_back(std::move(cur));
  return true;
}

LeakReport Scan(std::istream& in, MetaFormat format,
                const std::set<std::string>& names, ScanOptions options) {
  Scanner scanner(names, options);
  std::string line;
  if (format == MetaFormat::kJsonl) {
    while (std::getline(in, line)) {
      if (Trim(line).empty()) continue;
      FileMeta m;
      try {
        json j = json::parse(line);
        m.path = j.at("path").get<std::string>();
        m.repo = j.at("repo").get<std::string>();
        m.author = j.at("author").get<std::string>();
      } catch (const json::exception&) {
        scanner.AddMalformed();
        continue;
      }
      scanner.Add(m);
    }
    return scanner.report();
  }

  std::vector<std::string> fields;
  int col_path = -1, col_repo = -1, col_author = -1;
  size_t width = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    if (!have_header) {
      if (!ParseCsvLine(line, fields)) {
        throw std::runtime_error("malformed CSV header");
      }
      for (size_t i = 0; i < fields.size(); ++i) {
        std::string h = Trim(fields[i]);
        if (h == "path") col_path = static_cast<int>(i);
        if (h == "repo") col_repo = static_cast<int>(i);
        if (h == "author") col_author = static_cast<int>(i);
      }
      if (col_path < 0 || col_repo < 0 || col_author < 0) {
        throw std::runtime_error(
            "CSV header must name the columns path, repo and author");
      }
      width = fields.size();
      have_header = true;
      continue;
    }
    if (!ParseCsvLine(line, fields) || fields.size() != width) {
      scanner.AddMalformed();
      continue;
    }
    scanner.Add({fields[col_path], fields[col_repo], fields[col_author]});
  }
  return scanner.report();
}

LeakReport ScanFile(const std::filesystem::path& path,
                    const std::set<std::string>& names, ScanOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return Scan(in, FormatForPath(path), names, options);
}

std::set<std::string> LoadNames(const std::filesystem::path& path) {
  std::set<std::string> names;
  if (std::filesystem::is_directory(path)) {
    Corpus corpus = LoadCorpus(path);
    for (const auto& s : corpus.snippets) names.insert(s.id + ".java");
    return names;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string name = Trim(line);
    if (name.empty() || name.starts_with('#')) continue;
    if (name.find_first_of("/\\") != std::string::npos) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected a basename, got '" + name + "'");
    }
    names.insert(name);
  }
  return names;
}

Shortlist MakeShortlist(const LeakReport& report, uint64_t min_matches) {
  Shortlist s;
  s.threshold = min_matches;
  s.repos = Rank(report.repo_counts, min_matches);
  s.authors = Rank(report.author_counts, min_matches);
  for (const auto& r : s.repos) s.repo_matches_kept += r.count;
  s.repo_matches_excluded = report.total_matches - s.repo_matches_kept;
  return s;
}

json Shortlist::ToJson() const {
  return {{"threshold", threshold},
          {"repos", RankedJson(repos)},
          {"authors", RankedJson(authors)},
          {"repo_matches_kept", repo_matches_kept},
          {"repo_matches_excluded", repo_matches_excluded}};
}

}  // namespace jtb::leak
