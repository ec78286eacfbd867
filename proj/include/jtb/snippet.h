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

#ifndef JTB_SNIPPET_H_
#define JTB_SNIPPET_H_

#include <compare>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jtb {

// A dotted, fully qualified Java type name such as java.util.logging.Logger.
// Always canonical: no whitespace, no wildcard, every segment an identifier.
class Fqn {
 public:
  // Returns nullopt when `text` is not a canonical dotted name.
  static std::optional<Fqn> Parse(std::string_view text);
  // Throws std::invalid_argument on malformed input.
  explicit Fqn(std::string_view text);

  const std::string& str() const { return text_; }
  std::string_view SimpleName() const;
  // Everything before the last dot; empty for single-segment names.
  std::string_view PackageName() const;
  std::vector<std::string_view> Segments() const;

  friend auto operator<=>(const Fqn&, const Fqn&) = default;

 private:
  struct Trusted {};
  Fqn(Trusted, std::string text) : text_(std::move(text)) {}
  std::string text_;
};

// Order-free, duplicate-free set of imports.
class ImportSet {
 public:
  ImportSet() = default;
  ImportSet(std::initializer_list<Fqn> entries) : entries_(entries) {}

  // Duplicate insertion is a no-op.
  void Insert(Fqn fqn) { entries_.insert(std::move(fqn)); }
  bool Contains(const Fqn& fqn) const { return entries_.count(fqn) > 0; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::vector<std::string> Strings() const;

  friend bool operator==(const ImportSet&, const ImportSet&) = default;

 private:
  std::set<Fqn> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Fqn& fqn) {
  return os << fqn.str();
}
std::ostream& operator<<(std::ostream& os, const ImportSet& set);

// Everything an import scan finds. Only `imports` is scoring-relevant;
// wildcard and static imports are kept for diagnostics.
struct ImportScan {
  ImportSet imports;
  std::vector<std::string> wildcards;  // "a.b" for "import a.b.*;"
  std::vector<std::string> statics;    // dotted name after "import static"
  size_t import_lines = 0;             // lines holding at least one import
};

ImportScan ScanImports(std::string_view text);

// Plain single-type imports found anywhere in the text. Tolerates code
// fences, prose, and trailing comments; unparseable lines are skipped.
ImportSet ExtractImports(std::string_view text);

struct StrippedSource {
  std::string source;
  ImportSet removed;
};

// Removes every import line (plain, static, and wildcard) and leaves all
// other lines byte-identical.
StrippedSource StripImports(std::string_view source);

struct Snippet {
  std::string id;
  std::string library;
  std::string source;
  ImportSet ground_truth;

  // Builds a snippet whose ground truth is read from the source imports.
  static Snippet FromSource(std::string id, std::string library,
                            std::string source);

  friend bool operator==(const Snippet&, const Snippet&) = default;
};

struct Corpus {
  std::string name;
  std::vector<Snippet> snippets;

  // Number of snippets per library tag, sorted by tag.
  std::vector<std::pair<std::string, size_t>> LibraryCounts() const;
  const Snippet* Find(std::string_view id) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

class CorpusError : public std::runtime_error {
 public:
  enum class Kind { kNoManifest, kMalformedManifest, kMissingFile, kDuplicateId };
  CorpusError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Directory layout: manifest.json with {"name", "snippets": [{id, library,
// file}]} next to one .java file per snippet holding its imports inline.
Corpus LoadCorpus(const std::filesystem::path& dir);
void SaveCorpus(const Corpus& corpus, const std::filesystem::path& dir);

// Throws CorpusError(kDuplicateId) naming the first repeated id.
void CheckUniqueIds(const Corpus& corpus);

}  // namespace jtb

#endif  // JTB_SNIPPET_H_
