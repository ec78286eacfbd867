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

#include <cctype>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jtb/java/bindings.h"
#include "jtb/random.h"
#include "jtb/transforms.h"

namespace jtb::transforms {
namespace {

using namespace java;  // NOLINT: the lowering touches most node kinds.

// Safety net; real inputs reach a fixpoint within a handful of passes.
constexpr int kMaxPasses = 10000;

bool IsNegatedLiteral(const Expr& e) {
  const auto* u = e.As<UnaryExpr>();
  return u && !u->postfix && (u->op == "-" || u->op == "+") &&
         u->operand->Is<LiteralExpr>();
}

// A dotted chain of names that binds no variable, such as a package or a
// qualified type ("java.util.List", "Map.Entry"). Not a value.
bool IsQualifiedTypeName(const Expr& e) {
  std::string last;
  const Expr* cur = &e;
  while (const auto* fa = cur->As<FieldAccessExpr>()) {
    if (fa->decl.id >= 0) return false;
    if (last.empty()) last = fa->name;
    cur = fa->object.get();
  }
  const auto* root = cur->As<NameExpr>();
  if (!root || root->decl.id >= 0 || cur == &e) return false;
  return std::islower(static_cast<unsigned char>(root->name[0])) ||
         std::isupper(static_cast<unsigned char>(last[0]));
}

bool IsConstructorCall(const Expr& e) {
  const auto* call = e.As<MethodCallExpr>();
  return call && !call->receiver &&
         (call->name == "this" || call->name == "super");
}

bool Eligible(const Expr& e) {
  if (e.Is<NameExpr>() || e.Is<LiteralExpr>() || e.Is<ThisExpr>() ||
      e.Is<SuperExpr>() || e.Is<LambdaExpr>() || e.Is<ClassLiteralExpr>() ||
      e.Is<ArrayInitExpr>()) {
    return false;
  }
  return !IsNegatedLiteral(e) && !IsQualifiedTypeName(e) &&
         !IsConstructorCall(e);
}

class Lowerer {
 public:
  explicit Lowerer(FreshNameGenerator& fresh) : fresh_(fresh) {}

  // One pass over the unit. Returns true when anything was hoisted.
  bool Pass(CompilationUnit& unit) {
    ResolveBindings(unit);
    changed_ = false;
    for (auto& cls : unit.types) {
      for (auto& m : cls.members) {
        if (auto* md = m.As<MethodDecl>(); md && md->body) {
          LowerList(md->body->stmts);
        } else if (auto* init = m.As<InitializerDecl>()) {
          LowerList(init->body.stmts);
        }
      }
    }
    return changed_;
  }

 private:
  void LowerList(std::vector<Stmt>& stmts) {
    std::vector<Stmt> out;
    out.reserve(stmts.size());
    for (auto& s : stmts) {
      std::vector<Stmt> prefix = Hoist(s);
      LowerChildren(s);
      if (!prefix.empty()) {
        prefix.front().trivia.leading = std::move(s.trivia.leading);
        s.trivia.leading.clear();
        for (auto& p : prefix) out.push_back(std::move(p));
      }
      out.push_back(std::move(s));
    }
    stmts = std::move(out);
  }

  // A statement in single-statement position becomes a block when it needs
  // preceding declarations.
  void LowerSub(StmtBox& box) {
    std::vector<Stmt> prefix = Hoist(*box);
    LowerChildren(*box);
    if (prefix.empty()) return;
    Stmt original = std::move(*box);
    Stmt wrapper;
    wrapper.trivia.leading = std::move(original.trivia.leading);
    wrapper.trivia.trailing = std::move(original.trivia.trailing);
    original.trivia = {};
    Block block;
    block.stmts = std::move(prefix);
    block.stmts.push_back(std::move(original));
    wrapper.node = BlockStmt{std::move(block)};
    *box = std::move(wrapper);
  }

  void LowerChildren(Stmt& s) {
    if (auto* b = s.As<BlockStmt>()) {
      LowerList(b->block.stmts);
    } else if (auto* i = s.As<IfStmt>()) {
      LowerSub(i->then_branch);
      if (i->else_branch) LowerSub(*i->else_branch);
    } else if (auto* w = s.As<WhileStmt>()) {
      LowerSub(w->body);
    } else if (auto* f = s.As<ForStmt>()) {
      LowerSub(f->body);
    } else if (auto* fe = s.As<ForEachStmt>()) {
      LowerSub(fe->body);
    } else if (auto* t = s.As<TryStmt>()) {
      LowerList(t->body.stmts);
      for (auto& c : t->catches) LowerList(c.body.stmts);
      if (t->finally_block) LowerList(t->finally_block->stmts);
    }
  }

  // Hoists the outermost eligible expressions of `s` itself (not of nested
  // statements), returning the declarations to place before it.
  std::vector<Stmt> Hoist(Stmt& s) {
    std::vector<Stmt> prefix;
    prefix_ = &prefix;
    if (auto* es = s.As<ExprStmt>()) {
      if (!IsConstructorCall(es->expr)) Children(es->expr);
    } else if (auto* lv = s.As<LocalVarStmt>()) {
      if (lv->init) Children(*lv->init);
    } else if (auto* r = s.As<ReturnStmt>()) {
      if (r->value) Visit(*r->value);
    } else if (auto* i = s.As<IfStmt>()) {
      Visit(i->cond);
    } else if (auto* fe = s.As<ForEachStmt>()) {
      Visit(fe->iterable);
    } else if (auto* t = s.As<ThrowStmt>()) {
      Visit(t->value);
    }
    // while/for headers are loop conditions and stay untouched.
    prefix_ = nullptr;
    return prefix;
  }

  void Visit(Expr& e) {
    if (Eligible(e)) {
      std::string name = fresh_.Next();
      LocalVarStmt decl;
      decl.type = TypeRef::Var();
      decl.name = name;
      decl.init = std::move(e);
      Stmt stmt;
      stmt.node = std::move(decl);
      prefix_->push_back(std::move(stmt));
      e = Expr{NameExpr{name, {}}, {}};
      changed_ = true;
      return;
    }
    Children(e);
  }

  // Visits the sub-expressions of an lvalue without hoisting the lvalue.
  void LvalueChildren(Expr& e) {
    if (auto* fa = e.As<FieldAccessExpr>()) {
      Visit(*fa->object);
    } else if (auto* aa = e.As<ArrayAccessExpr>()) {
      Visit(*aa->array);
      Visit(*aa->index);
    }
  }

  void Children(Expr& e) {
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, FieldAccessExpr>) {
            if (!IsQualifiedTypeName(*n.object)) Visit(*n.object);
          } else if constexpr (std::is_same_v<T, MethodCallExpr>) {
            if (n.receiver && !IsQualifiedTypeName(**n.receiver)) {
              Visit(**n.receiver);
            }
            for (auto& a : n.args) Visit(a);
          } else if constexpr (std::is_same_v<T, NewExpr>) {
            for (auto& a : n.args) Visit(a);
          } else if constexpr (std::is_same_v<T, NewArrayExpr>) {
            for (auto& d : n.dim_exprs) Visit(d);
            if (n.init) Children(**n.init);
          } else if constexpr (std::is_same_v<T, ArrayInitExpr>) {
            for (auto& el : n.elements) {
              if (el.template Is<ArrayInitExpr>()) {
                Children(el);
              } else {
                Visit(el);
              }
            }
          } else if constexpr (std::is_same_v<T, ArrayAccessExpr>) {
            Visit(*n.array);
            Visit(*n.index);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            if (n.op == "++" || n.op == "--") {
              LvalueChildren(*n.operand);
            } else {
              Visit(*n.operand);
            }
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            Visit(*n.lhs);
            // The right operand of a short-circuit operator is conditional.
            if (n.op != "&&" && n.op != "||") Visit(*n.rhs);
          } else if constexpr (std::is_same_v<T, AssignExpr>) {
            LvalueChildren(*n.target);
            Visit(*n.value);
          } else if constexpr (std::is_same_v<T, ConditionalExpr>) {
            Visit(*n.cond);
          } else if constexpr (std::is_same_v<T, CastExpr>) {
            Visit(*n.operand);
          } else if constexpr (std::is_same_v<T, InstanceOfExpr>) {
            Visit(*n.operand);
          }
          // Names, literals, class literals, and lambdas have nothing to hoist.
        },
        e.node);
  }

  FreshNameGenerator& fresh_;
  std::vector<Stmt>* prefix_ = nullptr;
  bool changed_ = false;
};

Expr AsArrayCreation(Expr init, const TypeRef& type) {
  if (!init.Is<ArrayInitExpr>()) return init;
  NewArrayExpr arr;
  arr.element = type;
  arr.element.dims = 0;
  arr.extra_dims = type.dims;
  arr.init = ExprBox(std::move(init));
  return Expr{std::move(arr), {}};
}

void SplitFieldInitializers(ClassDecl& cls) {
  if (cls.is_interface) return;
  std::vector<Member> out;
  for (auto& m : cls.members) {
    auto* f = m.As<FieldDecl>();
    if (f && f->init) {
      // `{ name = init; }`, or `static { ... }` for static fields.
      AssignExpr assign{"=", ExprBox(Expr{NameExpr{f->name, {}}, {}}),
                        ExprBox(AsArrayCreation(std::move(*f->init), f->type))};
      Stmt stmt;
      stmt.node = ExprStmt{Expr{std::move(assign), {}}};
      InitializerDecl init;
      init.is_static = HasModifier(f->modifiers, "static");
      init.body.stmts.push_back(std::move(stmt));
      Member block;
      block.node = std::move(init);
      block.trivia.leading = std::move(m.trivia.leading);
      m.trivia.leading.clear();
      f->init.reset();
      out.push_back(std::move(block));
    }
    out.push_back(std::move(m));
  }
  cls.members = std::move(out);
}

}  // namespace

CompilationUnit LowerCode(CompilationUnit unit, uint64_t seed) {
  FreshNameGenerator fresh(seed, IdentifiersIn(unit));
  Lowerer lowerer(fresh);
  for (int pass = 0; pass < kMaxPasses && lowerer.Pass(unit); ++pass) {
  }
  for (auto& cls : unit.types) SplitFieldInitializers(cls);
  ResolveBindings(unit);
  return unit;
}

}  // namespace jtb::transforms
