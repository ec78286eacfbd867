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

#include "jtb/generate.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "jtb/java/keywords.h"

namespace jtb::gen {
namespace {

using kb::KbEntry;
using kb::KnowledgeBase;
using kb::MemberSig;

bool IsPrimitive(std::string_view t) { return java::IsPrimitiveTypeName(t); }

// Parameter types a fresh literal can fill.
bool LiteralFillable(std::string_view t) {
  return IsPrimitive(t) || t == "java.lang.String" ||
         t == "java.lang.CharSequence" || t == "java.lang.Object";
}

bool InJavaLang(std::string_view fqn) {
  return fqn.starts_with("java.lang.") &&
         fqn.find('.', 10) == std::string_view::npos;
}

struct Local {
  std::string name;
  std::string type;
};

struct Option {
  enum class Kind { kNew, kStatic, kInstance, kField, kImplicitNew };
  Kind kind;
  const KbEntry* owner;      // constructed or static type; receiver type otherwise
  const MemberSig* member;   // null for kImplicitNew
  int receiver = -1;         // index into locals
  int weight = 1;
};

class Generator {
 public:
  Generator(const KnowledgeBase& kb, const std::string& library,
            const GenConfig& config, Rng& rng)
      : kb_(kb), library_(library), config_(config), rng_(rng) {
    for (const KbEntry* e : kb_.LibraryEntries(library)) lib_types_.push_back(e);
  }

  GeneratedSnippet Run(const std::string& id) {
    std::vector<Option> seeds = SeedOptions();
    if (seeds.empty()) {
      throw GenError("no constructible type");
    }
    Emit(Choose(seeds));
    const int length = rng_.Between(config_.min_chain, config_.max_chain);
    for (int step = 1; step < length; ++step) {
      std::vector<Option> options = StepOptions();
      if (options.empty()) break;
      Emit(Choose(options));
    }
    return Finish(id);
  }

 private:
  // A type we may spell by simple name: in the KB or literal-friendly, not
  // clashing with an already imported type of the same simple name.
  bool Writable(const std::string& type) {
    if (type == "void" || type.find('[') != std::string::npos) return false;
    if (IsPrimitive(type) || InJavaLang(type)) return true;
    const KbEntry* e = kb_.LookupFqn(type);
    if (!e) return false;
    std::string simple(e->SimpleName());
    if (simple == "Main" || simple == "String" || simple == "Object") return false;
    auto it = spelled_.find(simple);
    return it == spelled_.end() || it->second == type;
  }

  bool Usable(const MemberSig& m) {
    for (const auto& p : m.params) {
      if (p.find('[') != std::string::npos) return false;
      if (!LiteralFillable(p) && !kb_.LookupFqn(p)) return false;
    }
    return m.kind == MemberSig::Kind::kConstructor || Writable(m.returns);
  }

  bool LocalFits(const Local& l, const std::string& param) {
    if (l.type == param) return true;
    if (IsPrimitive(l.type) || IsPrimitive(param)) return false;
    return param == "java.lang.Object" || kb_.IsSubtype(l.type, param);
  }

  bool Fillable(const MemberSig& m, bool literals_only) {
    for (const auto& p : m.params) {
      if (LiteralFillable(p)) continue;
      if (literals_only) return false;
      if (std::none_of(locals_.begin(), locals_.end(),
                       [&](const Local& l) { return LocalFits(l, p); })) {
        return false;
      }
    }
    return true;
  }

  // Constructors and static methods of library types; `seed` also admits
  // `new T()` on memberless types and restricts arguments to literals.
  void TypeLevelOptions(bool seed, std::vector<Option>& out) {
    for (const KbEntry* t : lib_types_) {
      if (!Writable(t->fqn.str())) continue;
      if (t->members.empty()) {
        if (seed) out.push_back({Option::Kind::kImplicitNew, t, nullptr, -1, 1});
        continue;
      }
      for (const auto& m : t->members) {
        const bool ctor = m.kind == MemberSig::Kind::kConstructor;
        if (!ctor && m.kind != MemberSig::Kind::kStaticMethod) continue;
        if (!Usable(m) || !Fillable(m, seed)) continue;
        out.push_back({ctor ? Option::Kind::kNew : Option::Kind::kStatic, t, &m, -1, 1});
      }
    }
  }

  std::vector<Option> SeedOptions() {
    std::vector<Option> out;
    TypeLevelOptions(true, out);
    return out;
  }

  std::vector<Option> StepOptions() {
    std::vector<Option> out;
    for (size_t i = 0; i < locals_.size(); ++i) {
      const KbEntry* recv = kb_.LookupFqn(locals_[i].type);
      if (!recv) continue;
      // Favor continuing the chain from the latest value.
      const int weight = i + 1 == locals_.size() ? 8 : 3;
      for (const MemberSig* m : kb_.MembersOf(recv->fqn.str())) {
        Option::Kind kind;
        if (m->kind == MemberSig::Kind::kMethod) {
          kind = Option::Kind::kInstance;
        } else if (m->kind == MemberSig::Kind::kField) {
          kind = Option::Kind::kField;
        } else {
          continue;
        }
        if (!Usable(*m) || !Fillable(*m, false)) continue;
        out.push_back({kind, recv, m, static_cast<int>(i), weight});
      }
    }
    TypeLevelOptions(false, out);
    return out;
  }

  const Option& Choose(const std::vector<Option>& options) {
    int total = 0;
    for (const auto& o : options) total += o.weight;
    int r = static_cast<int>(rng_.Below(static_cast<size_t>(total)));
    for (const auto& o : options) {
      if (r < o.weight) return o;
      r -= o.weight;
    }
    return options.back();
  }

  std::string Literal(const std::string& type) {
    const int n = rng_.Between(-100, 100);
    if (type == "int") return std::to_string(n);
    if (type == "long") return std::to_string(n) + "L";
    if (type == "short" || type == "byte") return "(" + type + ") " + std::to_string(n);
    if (type == "double") return std::to_string(n) + "." + std::to_string(rng_.Below(10));
    if (type == "float") return std::to_string(n) + "." + std::to_string(rng_.Below(10)) + "f";
    if (type == "boolean") return rng_.Below(2) ? "true" : "false";
    if (type == "char") return std::string("'") + static_cast<char>('a' + rng_.Below(26)) + "'";
    auto words = WordList();
    return "\"" + std::string(words[rng_.Below(words.size())]) + "\"";
  }

  std::string Argument(const std::string& param) {
    std::vector<size_t> fits;
    for (size_t i = 0; i < locals_.size(); ++i) {
      if (LocalFits(locals_[i], param)) fits.push_back(i);
    }
    if (!fits.empty() && (!LiteralFillable(param) || rng_.Below(2) == 0)) {
      return locals_[fits[rng_.Below(fits.size())]].name;
    }
    return Literal(param);
  }

  std::string Args(const MemberSig& m) {
    std::string out;
    for (size_t i = 0; i < m.params.size(); ++i) {
      if (i) out += ", ";
      out += Argument(m.params[i]);
    }
    return out;
  }

  // Spelling of a type in the snippet; records the import it needs.
  std::string Spell(const std::string& type) {
    if (IsPrimitive(type)) return type;
    auto fqn = Fqn::Parse(type);
    std::string simple(fqn->SimpleName());
    spelled_[simple] = type;
    if (!InJavaLang(type)) imports_.Insert(*fqn);
    return simple;
  }

  std::string FreshLocal() {
    auto words = WordList();
    while (true) {
      std::string w(words[rng_.Below(words.size())]);
      if (java::IsReservedWord(w) || w == "test" || w == "main") continue;
      if (!kb_.LookupSimple(w).empty()) continue;
      if (std::any_of(locals_.begin(), locals_.end(),
                      [&](const Local& l) { return l.name == w; })) {
        continue;
      }
      if (w == package_[0] || w == package_[1]) continue;
      return w;
    }
  }

  void Emit(const Option& o) {
    std::string expr;
    std::string type;
    ApiUse use{o.owner->fqn.str(), {}, false};
    switch (o.kind) {
      case Option::Kind::kImplicitNew:
        type = o.owner->fqn.str();
        expr = "new " + Spell(type) + "()";
        use.member = {MemberSig::Kind::kConstructor, std::string(o.owner->SimpleName()), {}, type};
        use.implicit_ctor = true;
        break;
      case Option::Kind::kNew:
        type = o.owner->fqn.str();
        expr = "new " + Spell(type) + "(" + Args(*o.member) + ")";
        use.member = *o.member;
        break;
      case Option::Kind::kStatic:
        type = o.member->returns;
        expr = Spell(o.owner->fqn.str()) + "." + o.member->name + "(" + Args(*o.member) + ")";
        use.member = *o.member;
        break;
      case Option::Kind::kInstance:
        type = o.member->returns;
        expr = locals_[o.receiver].name + "." + o.member->name + "(" + Args(*o.member) + ")";
        use.member = *o.member;
        break;
      case Option::Kind::kField:
        type = o.member->returns;
        expr = locals_[o.receiver].name + "." + o.member->name;
        use.member = *o.member;
        break;
    }
    Local local{FreshLocal(), type};
    body_ += "    " + Spell(type) + " " + local.name + " = " + expr + ";\n";
    locals_.push_back(std::move(local));
    provenance_.push_back(std::move(use));
  }

  GeneratedSnippet Finish(const std::string& id) {
    std::string src = "package " + package_[0] + "." + package_[1] + ";\n\n";
    for (const Fqn& f : imports_) src += "import " + f.str() + ";\n";
    if (!imports_.empty()) src += "\n";
    src += "class Main {\n  public static void test() throws Exception {\n" + body_ +
           "  }\n}\n";
    GeneratedSnippet out{Snippet::FromSource(id, library_, std::move(src)),
                         std::move(provenance_)};
    return out;
  }

 public:
  void PickPackage() {
    auto words = WordList();
    for (auto& part : package_) {
      do {
        part = std::string(words[rng_.Below(words.size())]);
      } while (java::IsReservedWord(part));
    }
    if (package_[0] == package_[1]) package_[1] += "s";
  }

 private:
  const KnowledgeBase& kb_;
  const std::string& library_;
  const GenConfig& config_;
  Rng& rng_;
  std::vector<const KbEntry*> lib_types_;
  std::vector<Local> locals_;
  std::map<std::string, std::string> spelled_;  // simple name -> fqn
  ImportSet imports_;
  std::string body_;
  std::string package_[2];
  std::vector<ApiUse> provenance_;
};

}  // namespace

void GenConfig::Validate() const {
  if (libraries.empty()) throw std::invalid_argument("no libraries given");
  if (snippets_per_library < 1) throw std::invalid_argument("snippets per library must be >= 1");
  if (min_chain < 1 || min_chain > max_chain) {
    throw std::invalid_argument("chain length needs 1 <= min <= max");
  }
}

std::string ApiUse::ToString() const {
  std::string out = owner + "#" +
                    (member.kind == MemberSig::Kind::kConstructor ? "<init>" : member.name);
  if (member.kind == MemberSig::Kind::kField) return out;
  out += "(";
  for (size_t i = 0; i < member.params.size(); ++i) {
    if (i) out += ",";
    out += member.params[i];
  }
  return out + ")";
}

GeneratedSnippet GenerateSnippet(const KnowledgeBase& kb, const std::string& library,
                                 const GenConfig& config, Rng& rng,
                                 const std::string& id) {
  Generator g(kb, library, config, rng);
  g.PickPackage();
  return g.Run(id);
}

std::vector<GeneratedSnippet> GenerateCorpus(const KnowledgeBase& kb,
                                             const GenConfig& config) {
  config.Validate();
  const int width = std::max<int>(2, std::to_string(config.snippets_per_library).size());
  std::vector<GeneratedSnippet> out;
  for (const auto& lib : config.libraries) {
    for (int i = 1; i <= config.snippets_per_library; ++i) {
      std::string index = std::to_string(i);
      std::string id = lib + std::string(width - index.size(), '0') + index;
      Rng rng(DeriveSeed(config.seed, "generate", id));
      try {
        out.push_back(GenerateSnippet(kb, lib, config, rng, id));
      } catch (const GenError& e) {
        throw GenError("library '" + lib + "': " + e.what());
      }
    }
  }
  return out;
}

Corpus ToCorpus(const std::vector<GeneratedSnippet>& generated, const std::string& name) {
  Corpus c;
  c.name = name;
  for (const auto& g : generated) c.snippets.push_back(g.snippet);
  return c;
}

}  // namespace jtb::gen
