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

#include "jtb/kb.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "jtb/java/keywords.h"

namespace jtb::kb {
namespace {

using json = nlohmann::json;

struct KindName {
  MemberSig::Kind kind;
  std::string_view name;
};

constexpr KindName kKinds[] = {
    {MemberSig::Kind::kMethod, "method"},
    {MemberSig::Kind::kStaticMethod, "static_method"},
    {MemberSig::Kind::kConstructor, "constructor"},
    {MemberSig::Kind::kField, "field"},
};

[[noreturn]] void Malformed(int line, const std::string& why) {
  throw KbError(KbError::Kind::kMalformedLine,
                "line " + std::to_string(line) + ": " + why, line);
}

// Type names are fqns, primitives, or (for returns) void; array types carry
// trailing "[]".
bool ValidTypeName(std::string_view t, bool allow_void) {
  while (t.ends_with("[]")) t.remove_suffix(2);
  if (t == "void") return allow_void;
  return java::IsPrimitiveTypeName(t) || Fqn::Parse(t).has_value();
}

std::vector<std::string> StringList(const json& j, const char* key, int line) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) Malformed(line, std::string(key) + " must be an array");
  for (const auto& item : j.at(key)) {
    if (!item.is_string()) Malformed(line, std::string(key) + " must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

KbEntry EntryFromJson(const json& j, int line) {
  if (!j.is_object()) Malformed(line, "expected a JSON object");
  if (!j.contains("fqn") || !j.at("fqn").is_string()) {
    Malformed(line, "missing string field \"fqn\"");
  }
  auto fqn = Fqn::Parse(j.at("fqn").get<std::string>());
  if (!fqn) Malformed(line, "invalid fqn \"" + j.at("fqn").get<std::string>() + "\"");
  KbEntry entry{*fqn, {}, {}, {}};
  for (auto& s : StringList(j, "supertypes", line)) {
    s = EraseGenerics(s);
    if (!Fqn::Parse(s)) Malformed(line, "invalid supertype \"" + s + "\"");
    entry.supertypes.push_back(std::move(s));
  }
  std::sort(entry.supertypes.begin(), entry.supertypes.end());
  entry.supertypes.erase(
      std::unique(entry.supertypes.begin(), entry.supertypes.end()),
      entry.supertypes.end());
  if (j.contains("library")) {
    if (!j.at("library").is_string()) Malformed(line, "library must be a string");
    entry.library = j.at("library").get<std::string>();
  }
  if (j.contains("members")) {
    if (!j.at("members").is_array()) Malformed(line, "members must be an array");
    std::set<std::pair<std::string, std::vector<std::string>>> seen;
    for (const auto& m : j.at("members")) {
      if (!m.is_object() || !m.contains("kind") || !m.at("kind").is_string()) {
        Malformed(line, "member without a kind");
      }
      MemberSig sig;
      std::string kind = m.at("kind").get<std::string>();
      auto it = std::find_if(std::begin(kKinds), std::end(kKinds),
                             [&](const KindName& k) { return k.name == kind; });
      if (it == std::end(kKinds)) Malformed(line, "unknown member kind \"" + kind + "\"");
      sig.kind = it->kind;
      const bool ctor = sig.kind == MemberSig::Kind::kConstructor;
      if (m.contains("name") && m.at("name").is_string()) {
        sig.name = m.at("name").get<std::string>();
      } else if (ctor) {
        sig.name = std::string(entry.SimpleName());
      } else {
        Malformed(line, "member without a name");
      }
      sig.params = StringList(m, "params", line);
      for (auto& p : sig.params) p = EraseGenerics(p);
      if (m.contains("returns") && m.at("returns").is_string()) {
        sig.returns = EraseGenerics(m.at("returns").get<std::string>());
      } else if (ctor) {
        sig.returns = entry.fqn.str();
      } else {
        Malformed(line, "member \"" + sig.name + "\" without a return type");
      }
      if (ctor && (sig.name != entry.SimpleName() || sig.returns != entry.fqn.str())) {
        Malformed(line, "constructor must be named " +
                            std::string(entry.SimpleName()) + " and return " +
                            entry.fqn.str());
      }
      if (sig.kind == MemberSig::Kind::kField && !sig.params.empty()) {
        Malformed(line, "field \"" + sig.name + "\" has parameters");
      }
      if (!java::IsIdentifier(sig.name)) Malformed(line, "invalid member name \"" + sig.name + "\"");
      for (const auto& p : sig.params) {
        if (!ValidTypeName(p, false)) Malformed(line, "invalid parameter type \"" + p + "\"");
      }
      if (!ValidTypeName(sig.returns, !ctor && sig.kind != MemberSig::Kind::kField)) {
        Malformed(line, "invalid return type \"" + sig.returns + "\"");
      }
      // Fields and methods live in different namespaces.
      std::string key = (sig.kind == MemberSig::Kind::kField ? "f:" : "m:") + sig.name;
      if (!seen.insert({key, sig.params}).second) {
        Malformed(line, "duplicate member \"" + sig.name + "\"");
      }
      entry.members.push_back(std::move(sig));
    }
  }
  return entry;
}

}  // namespace

std::string EraseGenerics(std::string_view type) {
  std::string out;
  int depth = 0;
  for (char c : type) {
    if (c == '<') {
      ++depth;
    } else if (c == '>') {
      --depth;
    } else if (depth == 0 && c != ' ') {
      out.push_back(c);
    }
  }
  return out;
}

std::string_view MemberKindName(MemberSig::Kind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

json KbEntry::ToJson() const {
  json members = json::array();
  for (const auto& m : this->members) {
    members.push_back({{"kind", MemberKindName(m.kind)},
                       {"name", m.name},
                       {"params", m.params},
                       {"returns", m.returns}});
  }
  json j = {{"fqn", fqn.str()}, {"supertypes", supertypes}, {"members", members}};
  if (!library.empty()) j["library"] = library;
  return j;
}

void KnowledgeBase::Add(KbEntry entry) {
  const std::string key = entry.fqn.str();
  if (by_fqn_.count(key)) {
    throw KbError(KbError::Kind::kDuplicateFqn, "duplicate fqn " + key);
  }
  auto& names = by_simple_[std::string(entry.SimpleName())];
  names.insert(std::lower_bound(names.begin(), names.end(), key), key);
  by_fqn_.emplace(key, std::move(entry));
}

void KnowledgeBase::Merge(const KnowledgeBase& other) {
  for (const auto& [fqn, entry] : other.by_fqn_) Add(entry);
}

std::vector<const KbEntry*> KnowledgeBase::LookupSimple(std::string_view simple) const {
  std::vector<const KbEntry*> out;
  auto it = by_simple_.find(simple);
  if (it == by_simple_.end()) return out;
  for (const auto& fqn : it->second) out.push_back(&by_fqn_.find(fqn)->second);
  return out;
}

const KbEntry* KnowledgeBase::LookupFqn(std::string_view fqn) const {
  auto it = by_fqn_.find(fqn);
  return it == by_fqn_.end() ? nullptr : &it->second;
}

std::vector<const KbEntry*> KnowledgeBase::Entries() const {
  std::vector<const KbEntry*> out;
  for (const auto& [fqn, entry] : by_fqn_) out.push_back(&entry);
  return out;
}

std::vector<const KbEntry*> KnowledgeBase::LibraryEntries(std::string_view library) const {
  std::vector<const KbEntry*> out;
  const std::string prefix = std::string(library) + ".";
  for (const auto& [fqn, entry] : by_fqn_) {
    if (entry.library == library ||
        (entry.library.empty() && fqn.starts_with(prefix))) {
      out.push_back(&entry);
    }
  }
  return out;
}

std::vector<std::string> KnowledgeBase::Libraries() const {
  std::set<std::string> libs;
  for (const auto& [fqn, entry] : by_fqn_) {
    if (!entry.library.empty()) libs.insert(entry.library);
  }
  return {libs.begin(), libs.end()};
}

std::vector<const MemberSig*> KnowledgeBase::MembersOf(std::string_view fqn) const {
  std::vector<const MemberSig*> out;
  const KbEntry* root = LookupFqn(fqn);
  if (!root) return out;
  for (const auto& m : root->members) out.push_back(&m);
  std::set<std::string, std::less<>> seen{std::string(fqn)};
  std::deque<std::string> queue(root->supertypes.begin(), root->supertypes.end());
  while (!queue.empty()) {
    std::string next = std::move(queue.front());
    queue.pop_front();
    if (!seen.insert(next).second) continue;
    const KbEntry* e = LookupFqn(next);
    if (!e) continue;
    for (const auto& m : e->members) {
      if (m.kind != MemberSig::Kind::kConstructor) out.push_back(&m);
    }
    queue.insert(queue.end(), e->supertypes.begin(), e->supertypes.end());
  }
  return out;
}

bool KnowledgeBase::IsSubtype(std::string_view sub, std::string_view super) const {
  if (sub == super) return true;
  std::set<std::string, std::less<>> seen{std::string(sub)};
  std::deque<std::string> queue{std::string(sub)};
  while (!queue.empty()) {
    const KbEntry* e = LookupFqn(queue.front());
    queue.pop_front();
    if (!e) continue;
    for (const auto& s : e->supertypes) {
      if (s == super) return true;
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return false;
}

KnowledgeBase ParseKb(std::string_view text) {
  KnowledgeBase kb;
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      Malformed(line_no, std::string("invalid JSON: ") + e.what());
    }
    KbEntry entry = EntryFromJson(j, line_no);
    if (kb.LookupFqn(entry.fqn.str())) {
      throw KbError(KbError::Kind::kDuplicateFqn,
                    "line " + std::to_string(line_no) + ": duplicate fqn " +
                        entry.fqn.str(),
                    line_no);
    }
    kb.Add(std::move(entry));
  }
  return kb;
}

KnowledgeBase LoadKb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KbError(KbError::Kind::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseKb(buf.str());
}

std::string SerializeKb(const KnowledgeBase& kb) {
  std::string out;
  for (const KbEntry* e : kb.Entries()) out += e->ToJson().dump() + "\n";
  return out;
}

}  // namespace jtb::kb
