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

#ifndef JTB_LEAK_H_
#define JTB_LEAK_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace jtb::leak {

struct FileMeta {
  std::string path;
  std::string repo;    // owner/name
  std::string author;
};

struct ScanOptions {
  // Case-fold and drop a numeric suffix before the extension
  // ("JodaTime05.java" -> "jodatime.java"). Off for faithful runs.
  bool normalized = false;
};

struct LeakReport {
  std::map<std::string, uint64_t> repo_counts;
  std::map<std::string, uint64_t> author_counts;
  uint64_t total_matches = 0;
  uint64_t records = 0;    // well-formed records seen
  uint64_t malformed = 0;  // skipped records

  nlohmann::json ToJson() const;
};

std::string_view Basename(std::string_view path);
std::string NormalizeName(std::string_view basename);

// Streaming tally; memory grows with distinct repos/authors only.
class Scanner {
 public:
  Scanner(const std::set<std::string>& names, ScanOptions options = {});

  // Returns whether the record matched.
  bool Add(const FileMeta& meta);
  void AddMalformed() { ++report_.malformed; }
  // Counter merge for sharded scans; both sides must use the same names.
  void Merge(const Scanner& other);
  const LeakReport& report() const { return report_; }

 private:
  std::set<std::string> names_;
  ScanOptions options_;
  LeakReport report_;
};

enum class MetaFormat { kJsonl, kCsv };
MetaFormat FormatForPath(const std::filesystem::path& path);

// JSON Lines ({"path","repo","author"} per line) or CSV with a header row
// naming those columns. Blank lines are ignored; anything unusable is
// counted as malformed.
LeakReport Scan(std::istream& in, MetaFormat format,
                const std::set<std::string>& names, ScanOptions options = {});
LeakReport ScanFile(const std::filesystem::path& path,
                    const std::set<std::string>& names,
                    ScanOptions options = {});

// One basename per line ('#' comments and blanks skipped), or a corpus
// directory whose snippet files supply the names. Throws on a name holding
// a directory separator.
std::set<std::string> LoadNames(const std::filesystem::path& path);

struct Ranked {
  std::string name;
  uint64_t count = 0;
  friend bool operator==(const Ranked&, const Ranked&) = default;
};

struct Shortlist {
  uint64_t threshold = 0;
  std::vector<Ranked> repos;
  std::vector<Ranked> authors;
  uint64_t repo_matches_kept = 0;
  uint64_t repo_matches_excluded = 0;

  nlohmann::json ToJson() const;
};

// Entries with count >= min_matches, descending by count, then by name.
Shortlist MakeShortlist(const LeakReport& report, uint64_t min_matches);

// Parses one CSV record (RFC 4180 quoting); false on unbalanced quotes.
bool ParseCsvLine(std::string_view line, std::vector<std::string>& fields);

}  // namespace jtb::leak

#endif  // JTB_LEAK_H_
