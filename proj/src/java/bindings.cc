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

#include "jtb/java/bindings.h"

#include <map>
#include <set>
#include <utility>

#include "jtb/java/visit.h"

namespace jtb::java {
namespace {

struct ClassInfo {
  std::string super;  // local superclass, if any
  std::map<std::string, int> fields;
};

class Resolver : public Visitor {
 public:
  explicit Resolver(Bindings& out) : out_(out) {}

  void Run(CompilationUnit& unit) {
    // Fields are visible throughout their class (and from other classes via
    // qualified access), so register them before any body is resolved.
    for (auto& cls : unit.types) classes_[cls.name];
    for (auto& cls : unit.types) {
      ClassInfo& info = classes_[cls.name];
      if (!cls.is_interface && !cls.extends.empty() &&
          classes_.count(cls.extends[0].name)) {
        info.super = cls.extends[0].name;
      }
      for (auto& m : cls.members) {
        auto* f = m.As<FieldDecl>();
        if (!f) continue;
        f->decl.id = Add(VariableDecl::Kind::kField, f->name, f->type, cls.name);
        info.fields[f->name] = f->decl.id;
      }
    }
    Walk(unit);
  }

  bool EnterClass(ClassDecl& cls) override {
    class_ = cls.name;
    return true;
  }

  bool EnterMember(Member& m) override {
    scopes_.emplace_back();
    if (auto* md = m.As<MethodDecl>()) {
      for (auto& p : md->params) {
        TypeRef t = p.type;
        if (p.varargs) ++t.dims;
        p.decl.id = Add(VariableDecl::Kind::kParam, p.name, t, class_);
        scopes_.back()[p.name] = p.decl.id;
      }
    }
    return true;
  }
  void LeaveMember(Member&) override { scopes_.pop_back(); }

  bool EnterStmt(Stmt& stmt) override {
    if (auto* each = stmt.As<ForEachStmt>()) {
      // The loop variable is not in scope in the iterable expression.
      scopes_.emplace_back();
      Walk(each->type);
      Walk(each->iterable);
      each->decl.id =
          Add(VariableDecl::Kind::kForEach, each->name, each->type, class_);
      scopes_.back()[each->name] = each->decl.id;
      Walk(*each->body);
      scopes_.pop_back();
      pushed_.push_back(false);
      return false;
    }
    if (auto* local = stmt.As<LocalVarStmt>()) {
      local->decl.id =
          Add(VariableDecl::Kind::kLocal, local->name, local->type, class_);
      scopes_.back()[local->name] = local->decl.id;
    }
    if (auto* t = stmt.As<TryStmt>()) {
      for (auto& c : t->catches) {
        c.decl.id =
            Add(VariableDecl::Kind::kCatch, c.name, c.types.front(), class_);
      }
    }
    bool scoped = stmt.Is<BlockStmt>() || stmt.Is<ForStmt>() ||
                  stmt.Is<TryStmt>() || stmt.Is<IfStmt>() ||
                  stmt.Is<WhileStmt>();
    if (scoped) scopes_.emplace_back();
    pushed_.push_back(scoped);
    if (auto* f = stmt.As<ForStmt>(); f && f->init_decl) {
      f->init_decl->decl.id = Add(VariableDecl::Kind::kLocal, f->init_decl->name,
                                  f->init_decl->type, class_);
      scopes_.back()[f->init_decl->name] = f->init_decl->decl.id;
    }
    return true;
  }
  void LeaveStmt(Stmt&) override {
    if (pushed_.back()) scopes_.pop_back();
    pushed_.pop_back();
  }

  void VisitDecl(std::string& name, DeclRef& decl) override {
    // Every id was assigned when its scope opened; here catch parameters
    // become visible as their handler is reached.
    if (decl.id < 0) return;
    const VariableDecl& d = out_.decls[decl.id];
    if (d.kind == VariableDecl::Kind::kCatch) scopes_.back()[name] = decl.id;
  }

  bool EnterExpr(Expr& e) override {
    if (auto* lambda = e.As<LambdaExpr>()) {
      scopes_.emplace_back();
      for (auto& p : lambda->params) {
        p.decl.id = Add(VariableDecl::Kind::kLambdaParam, p.name, p.type, class_);
        scopes_.back()[p.name] = p.decl.id;
      }
    }
    if (auto* name = e.As<NameExpr>()) name->decl.id = Lookup(name->name);
    return true;
  }
  void LeaveExpr(Expr& e) override {
    if (e.Is<LambdaExpr>()) scopes_.pop_back();
    if (auto* fa = e.As<FieldAccessExpr>()) {
      fa->decl.id = -1;
      if (auto cls = LocalClassOf(*fa->object)) {
        fa->decl.id = FindField(*cls, fa->name);
      }
    }
  }

 private:
  int Add(VariableDecl::Kind kind, const std::string& name,
          std::optional<TypeRef> type, const std::string& owner) {
    out_.decls.push_back({kind, name, std::move(type), owner});
    return static_cast<int>(out_.decls.size()) - 1;
  }

  int FindField(std::string cls, const std::string& name) const {
    std::set<std::string> seen;
    while (!cls.empty() && seen.insert(cls).second) {
      auto it = classes_.find(cls);
      if (it == classes_.end()) break;
      auto f = it->second.fields.find(name);
      if (f != it->second.fields.end()) return f->second;
      cls = it->second.super;
    }
    return -1;
  }

  int Lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    return FindField(class_, name);
  }

  // The snippet-local class an expression's value (or static context)
  // belongs to, when that is evident syntactically.
  std::optional<std::string> LocalClassOf(const Expr& e) const {
    if (e.Is<ThisExpr>()) return class_;
    if (e.Is<SuperExpr>()) {
      auto it = classes_.find(class_);
      if (it != classes_.end() && !it->second.super.empty()) {
        return it->second.super;
      }
      return std::nullopt;
    }
    const DeclRef* ref = nullptr;
    if (const auto* n = e.As<NameExpr>()) {
      if (n->decl.id < 0) {
        if (classes_.count(n->name)) return n->name;
        return std::nullopt;
      }
      ref = &n->decl;
    } else if (const auto* f = e.As<FieldAccessExpr>()) {
      ref = &f->decl;
    }
    const VariableDecl* d = out_.Get(ref ? *ref : DeclRef{});
    if (!d || !d->type || d->type->dims > 0 ||
        d->type->kind != TypeRef::Kind::kName) {
      return std::nullopt;
    }
    if (!classes_.count(d->type->name)) return std::nullopt;
    return d->type->name;
  }

  Bindings& out_;
  std::map<std::string, ClassInfo> classes_;
  std::string class_;
  std::vector<std::map<std::string, int>> scopes_;
  std::vector<bool> pushed_;
};

}  // namespace

Bindings ResolveBindings(CompilationUnit& unit) {
  Bindings out;
  Resolver(out).Run(unit);
  return out;
}

}  // namespace jtb::java
