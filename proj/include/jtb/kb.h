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

#ifndef JTB_KB_H_
#define JTB_KB_H_

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jtb/snippet.h"
#include "json.hpp"

namespace jtb::kb {

struct MemberSig {
  enum class Kind { kMethod, kStaticMethod, kConstructor, kField };

  Kind kind = Kind::kMethod;
  std::string name;
  std::vector<std::string> params;  // fqns or primitive names
  std::string returns;              // fqn, primitive, or "void"

  friend bool operator==(const MemberSig&, const MemberSig&) = default;
};

std::string_view MemberKindName(MemberSig::Kind kind);

struct KbEntry {
  Fqn fqn;
  std::vector<std::string> supertypes;  // sorted, unique
  std::vector<MemberSig> members;
  std::string library;  // optional tag; empty when untagged

  std::string_view SimpleName() const { return fqn.SimpleName(); }
  nlohmann::json ToJson() const;

  friend bool operator==(const KbEntry&, const KbEntry&) = default;
};

class KbError : public std::runtime_error {
 public:
  enum class Kind { kIo, kMalformedLine, kDuplicateFqn };
  KbError(Kind kind, const std::string& what, int line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}
  Kind kind() const { return kind_; }
  int line() const { return line_; }  // 1-based; 0 when not line-specific

 private:
  Kind kind_;
  int line_;
};

// Entries indexed by fqn (one-to-one) and by simple name (one-to-many).
// Lookups return entries in lexicographic fqn order, which the solver
// relies on for deterministic tie-breaking.
class KnowledgeBase {
 public:
  // Throws KbError(kDuplicateFqn) naming the fqn.
  void Add(KbEntry entry);
  // Adds every entry of `other`; duplicates are an error as in Add().
  void Merge(const KnowledgeBase& other);

  std::vector<const KbEntry*> LookupSimple(std::string_view simple) const;
  const KbEntry* LookupFqn(std::string_view fqn) const;
  std::vector<const KbEntry*> Entries() const;
  size_t size() const { return by_fqn_.size(); }
  bool empty() const { return by_fqn_.empty(); }

  // Entries belonging to `library`: those tagged with it, plus untagged
  // entries whose fqn lies under it when it is read as a package prefix.
  std::vector<const KbEntry*> LibraryEntries(std::string_view library) const;
  // Distinct library tags, sorted.
  std::vector<std::string> Libraries() const;

  // Own members plus inherited non-constructor members, nearest first.
  // Empty when `fqn` is not in the KB.
  std::vector<const MemberSig*> MembersOf(std::string_view fqn) const;

  // Reflexive-transitive supertype reachability through KB entries. Types
  // missing from the KB have no known supertypes.
  bool IsSubtype(std::string_view sub, std::string_view super) const;

 private:
  std::map<std::string, KbEntry, std::less<>> by_fqn_;
  std::map<std::string, std::vector<std::string>, std::less<>> by_simple_;
};

// Drops generic arguments: "java.util.List<java.lang.String>[]" becomes
// "java.util.List[]".
std::string EraseGenerics(std::string_view type);

// One JSON object per line: {"fqn", "supertypes": [...], "members": [{"kind",
// "name", "params": [...], "returns"}], "library"?}. Blank lines are skipped. Type names are stored erased.
KnowledgeBase ParseKb(std::string_view text);
KnowledgeBase LoadKb(const std::filesystem::path& path);
std::string SerializeKb(const KnowledgeBase& kb);

}  // namespace jtb::kb

#endif  // JTB_KB_H_
