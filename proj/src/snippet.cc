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

#include "jtb/snippet.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "jtb/java/keywords.h"
#include "json.hpp"

namespace jtb {
namespace {

using json = nlohmann::json;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string_view TrimLeft(std::string_view s) {
  size_t i = 0;
  while (i < s.size() && IsSpace(s[i])) ++i;
  return s.substr(i);
}

bool ConsumeWord(std::string_view& s, std::string_view word) {
  if (s.substr(0, word.size()) != word) return false;
  if (s.size() > word.size()) {
    char next = s[word.size()];
    if (!IsSpace(next)) return false;
  } else {
    return false;
  }
  s = TrimLeft(s.substr(word.size()));
  return true;
}

struct LineImport {
  bool is_static = false;
  bool wildcard = false;
  std::string name;
};

// Parses a line consisting solely of import declarations, optionally followed
// by a comment. Returns false for anything else.
bool ParseImportLine(std::string_view line, std::vector<LineImport>& out) {
  std::string_view rest = TrimLeft(line);
  std::vector<LineImport> found;
  while (ConsumeWord(rest, "import")) {
    LineImport imp;
    if (ConsumeWord(rest, "static")) imp.is_static = true;
    size_t semi = rest.find(';');
    if (semi == std::string_view::npos) return false;
    std::string name;
    for (char c : rest.substr(0, semi)) {
      if (!IsSpace(c)) name.push_back(c);
    }
    if (name.size() > 2 && name.ends_with(".*")) {
      imp.wildcard = true;
      name.resize(name.size() - 2);
    }
    if (!Fqn::Parse(name)) return false;
    imp.name = std::move(name);
    found.push_back(std::move(imp));
    rest = TrimLeft(rest.substr(semi + 1));
  }
  if (found.empty()) return false;
  if (!rest.empty() && !rest.starts_with("//") && !rest.starts_with("/*")) {
    return false;
  }
  for (auto& imp : found) out.push_back(std::move(imp));
  return true;
}

// Splits into lines, each including its terminating '\n' when present.
std::vector<std::string_view> SplitLinesKeepEnds(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
    lines.push_back(text.substr(start, end - start));
    start = end;
  }
  return lines;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::optional<Fqn> Fqn::Parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  size_t start = 0;
  while (true) {
    size_t dot = text.find('.', start);
    std::string_view seg = text.substr(
        start, dot == std::string_view::npos ? std::string_view::npos
                                             : dot - start);
    if (!java::IsIdentifier(seg)) return std::nullopt;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Fqn(Trusted{}, std::string(text));
}

Fqn::Fqn(std::string_view text) {
  auto parsed = Parse(text);
  if (!parsed) {
    throw std::invalid_argument("not a fully qualified name: '" +
                                std::string(text) + "'");
  }
  text_ = std::move(parsed->text_);
}

std::string_view Fqn::SimpleName() const {
  std::string_view s = text_;
  size_t dot = s.rfind('.');
  return dot == std::string_view::npos ? s : s.substr(dot + 1);
}

std::string_view Fqn::PackageName() const {
  std::string_view s = text_;
  size_t dot = s.rfind('.');
  return dot == std::string_view::npos ? std::string_view() : s.substr(0, dot);
}

std::vector<std::string_view> Fqn::Segments() const {
  std::vector<std::string_view> out;
  std::string_view s = text_;
  size_t start = 0;
  while (true) {
    size_t dot = s.find('.', start);
    if (dot == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, dot - start));
    start = dot + 1;
  }
}

std::vector<std::string> ImportSet::Strings() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& f : entries_) out.push_back(f.str());
  return out;
}

std::ostream& operator<<(std::ostream& os, const ImportSet& set) {
  os << "{";
  bool first = true;
  for (const auto& f : set) {
    os << (first ? "" : ", ") << f.str();
    first = false;
  }
  return os << "}";
}

ImportScan ScanImports(std::string_view text) {
  ImportScan scan;
  for (std::string_view line : SplitLinesKeepEnds(text)) {
    std::vector<LineImport> found;
    if (!ParseImportLine(line, found)) continue;
    ++scan.import_lines;
    for (auto& imp : found) {
      if (imp.is_static) {
        scan.statics.push_back(imp.wildcard ? imp.name + ".*" : imp.name);
      } else if (imp.wildcard) {
        scan.wildcards.push_back(imp.name);
      } else {
        scan.imports.Insert(Fqn(imp.name));
      }
    }
  }
  return scan;
}

ImportSet ExtractImports(std::string_view text) {
  return ScanImports(text).imports;
}

StrippedSource StripImports(std::string_view source) {
  StrippedSource out;
  for (std::string_view line : SplitLinesKeepEnds(source)) {
    std::vector<LineImport> found;
    if (ParseImportLine(line, found)) {
      for (auto& imp : found) {
        if (!imp.is_static && !imp.wildcard) out.removed.Insert(Fqn(imp.name));
      }
      continue;
    }
    out.source.append(line);
  }
  return out;
}

Snippet Snippet::FromSource(std::string id, std::string library,
                            std::string source) {
  Snippet s{std::move(id), std::move(library), std::move(source), {}};
  s.ground_truth = ExtractImports(s.source);
  return s;
}

std::vector<std::pair<std::string, size_t>> Corpus::LibraryCounts() const {
  std::map<std::string, size_t> counts;
  for (const auto& s : snippets) ++counts[s.library];
  return {counts.begin(), counts.end()};
}

const Snippet* Corpus::Find(std::string_view id) const {
  for (const auto& s : snippets) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

void CheckUniqueIds(const Corpus& corpus) {
  std::set<std::string_view> seen;
  for (const auto& s : corpus.snippets) {
    if (!seen.insert(s.id).second) {
      throw CorpusError(CorpusError::Kind::kDuplicateId,
                        "duplicate snippet id '" + s.id + "'");
    }
  }
}

Corpus LoadCorpus(const std::filesystem::path& dir) {
  const auto manifest_path = dir / "manifest.json";
  if (!std::filesystem::is_regular_file(manifest_path)) {
    throw CorpusError(CorpusError::Kind::kNoManifest,
                      "no manifest: " + manifest_path.string());
  }
  json manifest;
  try {
    manifest = json::parse(ReadFile(manifest_path));
  } catch (const json::exception& e) {
    throw CorpusError(CorpusError::Kind::kMalformedManifest,
                      "malformed manifest " + manifest_path.string() + ": " +
                          e.what());
  }
  auto malformed = [&](const std::string& why) {
    return CorpusError(CorpusError::Kind::kMalformedManifest,
                       "malformed manifest " + manifest_path.string() + ": " +
                           why);
  };
  if (!manifest.is_object() || !manifest.contains("snippets") ||
      !manifest["snippets"].is_array()) {
    throw malformed("expected an object with a 'snippets' array");
  }
  Corpus corpus;
  corpus.name = manifest.value("name", dir.filename().string());
  for (const auto& entry : manifest["snippets"]) {
    if (!entry.is_object() || !entry.contains("id") ||
        !entry["id"].is_string() || !entry.contains("file") ||
        !entry["file"].is_string()) {
      throw malformed("every entry needs string 'id' and 'file'");
    }
    const auto file = dir / entry["file"].get<std::string>();
    if (!std::filesystem::is_regular_file(file)) {
      throw CorpusError(CorpusError::Kind::kMissingFile,
                        "missing snippet file " + file.string() + " for id '" +
                            entry["id"].get<std::string>() + "'");
    }
    std::string library;
    if (entry.contains("library") && entry["library"].is_string()) {
      library = entry["library"].get<std::string>();
    }
    corpus.snippets.push_back(Snippet::FromSource(
        entry["id"].get<std::string>(), std::move(library), ReadFile(file)));
  }
  CheckUniqueIds(corpus);
  return corpus;
}

void SaveCorpus(const Corpus& corpus, const std::filesystem::path& dir) {
  CheckUniqueIds(corpus);
  std::filesystem::create_directories(dir);
  json entries = json::array();
  for (const auto& s : corpus.snippets) {
    const std::string file = s.id + ".java";
    std::ofstream out(dir / file, std::ios::binary);
    out << s.source;
    if (!out) throw std::runtime_error("cannot write " + (dir / file).string());
    entries.push_back({{"id", s.id}, {"library", s.library}, {"file", file}});
  }
  json manifest = {{"name", corpus.name}, {"snippets", entries}};
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  out << manifest.dump(2) << "\n";
  if (!out) throw std::runtime_error("cannot write manifest in " + dir.string());
}

}  // namespace jtb
