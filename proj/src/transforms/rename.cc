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

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jtb/java/bindings.h"
#include "jtb/java/lexer.h"
#include "jtb/java/render.h"
#include "jtb/java/visit.h"
#include "jtb/random.h"
#include "jtb/transforms.h"

namespace jtb::transforms {

using java::ClassDecl;
using java::CompilationUnit;
using java::DeclRef;
using java::Expr;
using java::FieldAccessExpr;
using java::Member;
using java::MethodCallExpr;
using java::MethodDecl;
using java::NameExpr;
using java::TypeRef;

std::set<std::string> IdentifiersIn(const CompilationUnit& unit) {
  std::set<std::string> out;
  for (const auto& t : java::Lex(java::Render(unit))) {
    if (t.kind == java::TokenKind::kIdentifier) out.insert(t.text);
  }
  return out;
}

std::vector<std::string> RenameMap::FreshNames() const {
  std::vector<std::string> out;
  for (const auto& [from, to] : variables) out.push_back(to);
  for (const auto* m : {&methods, &classes, &packages}) {
    for (const auto& [from, to] : *m) out.push_back(to);
  }
  return out;
}

nlohmann::json RenameMap::ToJson() const {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& [from, to] : variables) vars.push_back({from, to});
  return {{"variables", vars},
          {"methods", methods},
          {"classes", classes},
          {"packages", packages},
          {"skip_list", skip_list}};
}

RenameMap RenameMap::FromJson(const nlohmann::json& j) {
  RenameMap m;
  for (const auto& pair : j.at("variables")) {
    m.variables.emplace_back(pair.at(0).get<std::string>(),
                             pair.at(1).get<std::string>());
  }
  m.methods = j.at("methods").get<std::map<std::string, std::string>>();
  m.classes = j.at("classes").get<std::map<std::string, std::string>>();
  m.packages = j.at("packages").get<std::map<std::string, std::string>>();
  m.skip_list = j.at("skip_list").get<std::set<std::string>>();
  return m;
}

namespace {

// Gathers the skip list: every method name invoked through a receiver and
// every @Override method.
class SkipListCollector : public java::ConstVisitor {
 public:
  std::set<std::string> names = {"main"};

  bool EnterExpr(const Expr& e) override {
    if (const auto* call = e.As<MethodCallExpr>(); call && call->receiver) {
      names.insert(call->name);
    }
    return true;
  }
  bool EnterMember(const Member& m) override {
    if (const auto* md = m.As<MethodDecl>();
        md && java::HasModifier(md->modifiers, "@Override")) {
      names.insert(md->name);
    }
    return true;
  }
};

class Renamer : public java::Visitor {
 public:
  Renamer(const std::vector<std::string>& variable_names,
          const RenameMap& map, std::string old_package,
          std::string new_package)
      : variable_names_(variable_names),
        map_(map),
        old_package_(std::move(old_package)),
        new_package_(std::move(new_package)) {}

  bool EnterClass(ClassDecl& cls) override {
    class_ = cls.name;
    cls.name = ClassName(cls.name);
    return true;
  }

  bool EnterMember(Member& m) override {
    if (auto* md = m.As<MethodDecl>()) {
      if (md->IsConstructor()) {
        if (md->name == class_) md->name = ClassName(md->name);
      } else if (auto it = map_.methods.find(md->name);
                 it != map_.methods.end()) {
        md->name = it->second;
      }
    }
    return true;
  }

  void VisitDecl(std::string& name, DeclRef& decl) override {
    if (decl.id >= 0) name = variable_names_[decl.id];
  }

  void VisitType(TypeRef& type) override {
    if (type.kind == TypeRef::Kind::kName) type.name = QualifiedClass(type.name);
  }

  bool EnterExpr(Expr& e) override {
    if (auto* n = e.As<NameExpr>()) {
      if (n->decl.id >= 0) {
        n->name = variable_names_[n->decl.id];
      } else {
        n->name = ClassName(n->name);
      }
    } else if (auto* fa = e.As<FieldAccessExpr>()) {
      if (fa->decl.id >= 0) fa->name = variable_names_[fa->decl.id];
    } else if (auto* call = e.As<MethodCallExpr>(); call && !call->receiver) {
      if (auto it = map_.methods.find(call->name); it != map_.methods.end()) {
        call->name = it->second;
      }
    }
    return true;
  }

 private:
  std::string ClassName(const std::string& name) const {
    auto it = map_.classes.find(name);
    return it == map_.classes.end() ? name : it->second;
  }

  // Simple class names, or names qualified with the snippet's own package.
  std::string QualifiedClass(const std::string& name) const {
    if (name.find('.') == std::string::npos) return ClassName(name);
    if (!old_package_.empty() && name.starts_with(old_package_ + ".")) {
      std::string rest = name.substr(old_package_.size() + 1);
      if (map_.classes.count(rest)) {
        return new_package_ + "." + map_.classes.at(rest);
      }
    }
    return name;
  }

  const std::vector<std::string>& variable_names_;
  const RenameMap& map_;
  std::string old_package_;
  std::string new_package_;
  std::string class_;
};

// Maps every identifier occurrence through `names`; dotted names are mapped
// segment by segment.
class Substituter : public java::Visitor {
 public:
  explicit Substituter(const std::map<std::string, std::string>& names)
      : names_(names) {}

  std::string Map(const std::string& s) const {
    auto it = names_.find(s);
    return it == names_.end() ? s : it->second;
  }
  std::string MapDotted(const std::string& s) const {
    std::string out;
    size_t start = 0;
    while (true) {
      size_t dot = s.find('.', start);
      out += Map(s.substr(start, dot == std::string::npos ? dot : dot - start));
      if (dot == std::string::npos) return out;
      out += ".";
      start = dot + 1;
    }
  }

  bool EnterClass(ClassDecl& c) override {
    c.name = Map(c.name);
    return true;
  }
  bool EnterMember(Member& m) override {
    if (auto* md = m.As<MethodDecl>()) md->name = Map(md->name);
    return true;
  }
  void VisitDecl(std::string& name, DeclRef&) override { name = Map(name); }
  void VisitType(TypeRef& t) override { t.name = MapDotted(t.name); }
  bool EnterExpr(Expr& e) override {
    if (auto* n = e.As<NameExpr>()) n->name = Map(n->name);
    if (auto* fa = e.As<FieldAccessExpr>()) fa->name = Map(fa->name);
    if (auto* call = e.As<MethodCallExpr>()) call->name = Map(call->name);
    return true;
  }

 private:
  const std::map<std::string, std::string>& names_;
};

}  // namespace

RenameResult RenameIdentifiers(CompilationUnit unit, uint64_t seed) {
  java::Bindings bindings = java::ResolveBindings(unit);
  FreshNameGenerator fresh(seed, IdentifiersIn(unit));

  RenameMap map;
  SkipListCollector skip;
  skip.Walk(unit);
  map.skip_list = std::move(skip.names);

  std::string old_package, new_package;
  if (unit.package) {
    old_package = unit.package->name;
    new_package = fresh.Next();
    map.packages[old_package] = new_package;
  }
  for (const auto& cls : unit.types) {
    if (!map.classes.count(cls.name)) map.classes[cls.name] = fresh.Next();
  }
  for (const auto& cls : unit.types) {
    for (const auto& m : cls.members) {
      const auto* md = m.As<MethodDecl>();
      if (!md || md->IsConstructor() || map.skip_list.count(md->name) ||
          map.methods.count(md->name)) {
        continue;
      }
      map.methods[md->name] = fresh.Next();
    }
  }
  std::vector<std::string> variable_names;
  for (const auto& d : bindings.decls) {
    variable_names.push_back(fresh.Next());
    map.variables.emplace_back(d.name, variable_names.back());
  }

  Renamer renamer(variable_names, map, old_package, new_package);
  renamer.Walk(unit);
  if (unit.package) unit.package->name = new_package;
  return {std::move(unit), std::move(map)};
}

CompilationUnit InvertRename(CompilationUnit unit, const RenameMap& map) {
  std::map<std::string, std::string> inverse;
  for (const auto& [from, to] : map.variables) inverse[to] = from;
  for (const auto* m : {&map.methods, &map.classes}) {
    for (const auto& [from, to] : *m) inverse[to] = from;
  }
  Substituter sub(inverse);
  sub.Walk(unit);
  if (unit.package) {
    for (const auto& [from, to] : map.packages) {
      if (unit.package->name == to) unit.package->name = from;
    }
  }
  // Qualified references to the renamed package.
  class PackageFix : public java::Visitor {
   public:
    explicit PackageFix(const std::map<std::string, std::string>& packages)
        : packages_(packages) {}
    void VisitType(TypeRef& t) override {
      for (const auto& [from, to] : packages_) {
        if (t.name.starts_with(to + ".")) {
          t.name = from + t.name.substr(to.size());
        }
      }
    }

   private:
    const std::map<std::string, std::string>& packages_;
  };
  PackageFix(map.packages).Walk(unit);
  return unit;
}

}  // namespace jtb::transforms
