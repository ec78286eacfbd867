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

#include "jtb/java/visit.h"

#include <type_traits>
#include <variant>

namespace jtb::java {

void Visitor::Walk(CompilationUnit& unit) {
  for (auto& cls : unit.types) Walk(cls);
}

void Visitor::Walk(ClassDecl& cls) {
  if (EnterClass(cls)) {
    for (auto& tp : cls.type_params) {
      for (auto& b : tp.bounds) Walk(b);
    }
    for (auto& t : cls.extends) Walk(t);
    for (auto& t : cls.implements) Walk(t);
    for (auto& m : cls.members) Walk(m);
  }
  LeaveClass(cls);
}

void Visitor::Walk(Member& member) {
  if (EnterMember(member)) {
    if (auto* f = member.As<FieldDecl>()) {
      Walk(f->type);
      VisitDecl(f->name, f->decl);
      if (f->init) Walk(*f->init);
    } else if (auto* m = member.As<MethodDecl>()) {
      for (auto& tp : m->type_params) {
        for (auto& b : tp.bounds) Walk(b);
      }
      if (m->return_type) Walk(*m->return_type);
      for (auto& p : m->params) {
        Walk(p.type);
        VisitDecl(p.name, p.decl);
      }
      for (auto& t : m->throws) Walk(t);
      if (m->body) Walk(*m->body);
    } else if (auto* init = member.As<InitializerDecl>()) {
      Walk(init->body);
    }
  }
  LeaveMember(member);
}

void Visitor::Walk(Block& block) {
  for (auto& s : block.stmts) Walk(s);
}

void Visitor::WalkLocal(LocalVarStmt& decl) {
  Walk(decl.type);
  VisitDecl(decl.name, decl.decl);
  if (decl.init) Walk(*decl.init);
}

void Visitor::Walk(Stmt& stmt) {
  if (EnterStmt(stmt)) {
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ExprStmt>) {
            Walk(n.expr);
          } else if constexpr (std::is_same_v<T, LocalVarStmt>) {
            WalkLocal(n);
          } else if constexpr (std::is_same_v<T, BlockStmt>) {
            Walk(n.block);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (n.value) Walk(*n.value);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            Walk(n.cond);
            Walk(*n.then_branch);
            if (n.else_branch) Walk(**n.else_branch);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            Walk(n.cond);
            Walk(*n.body);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            if (n.init_decl) WalkLocal(*n.init_decl);
            for (auto& e : n.init_exprs) Walk(e);
            if (n.cond) Walk(*n.cond);
            for (auto& e : n.update) Walk(e);
            Walk(*n.body);
          } else if constexpr (std::is_same_v<T, ForEachStmt>) {
            Walk(n.type);
            VisitDecl(n.name, n.decl);
            Walk(n.iterable);
            Walk(*n.body);
          } else if constexpr (std::is_same_v<T, TryStmt>) {
            Walk(n.body);
            for (auto& c : n.catches) {
              for (auto& t : c.types) Walk(t);
              VisitDecl(c.name, c.decl);
              Walk(c.body);
            }
            if (n.finally_block) Walk(*n.finally_block);
          } else if constexpr (std::is_same_v<T, ThrowStmt>) {
            Walk(n.value);
          }
        },
        stmt.node);
  }
  LeaveStmt(stmt);
}

void Visitor::Walk(Expr& expr) {
  if (EnterExpr(expr)) {
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, FieldAccessExpr>) {
            Walk(*n.object);
          } else if constexpr (std::is_same_v<T, MethodCallExpr>) {
            if (n.receiver) Walk(**n.receiver);
            for (auto& a : n.args) Walk(a);
          } else if constexpr (std::is_same_v<T, NewExpr>) {
            Walk(n.type);
            for (auto& a : n.args) Walk(a);
          } else if constexpr (std::is_same_v<T, NewArrayExpr>) {
            Walk(n.element);
            for (auto& d : n.dim_exprs) Walk(d);
            if (n.init) Walk(**n.init);
          } else if constexpr (std::is_same_v<T, ArrayInitExpr>) {
            for (auto& e : n.elements) Walk(e);
          } else if constexpr (std::is_same_v<T, ArrayAccessExpr>) {
            Walk(*n.array);
            Walk(*n.index);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            Walk(*n.operand);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            Walk(*n.lhs);
            Walk(*n.rhs);
          } else if constexpr (std::is_same_v<T, AssignExpr>) {
            Walk(*n.target);
            Walk(*n.value);
          } else if constexpr (std::is_same_v<T, ConditionalExpr>) {
            Walk(*n.cond);
            Walk(*n.then_expr);
            Walk(*n.else_expr);
          } else if constexpr (std::is_same_v<T, CastExpr>) {
            Walk(n.type);
            Walk(*n.operand);
          } else if constexpr (std::is_same_v<T, InstanceOfExpr>) {
            Walk(*n.operand);
            Walk(n.type);
          } else if constexpr (std::is_same_v<T, ClassLiteralExpr>) {
            Walk(n.type);
          } else if constexpr (std::is_same_v<T, LambdaExpr>) {
            for (auto& p : n.params) {
              if (p.type) Walk(*p.type);
              VisitDecl(p.name, p.decl);
            }
            if (auto* body = std::get_if<ExprBox>(&n.body)) {
              Walk(**body);
            } else {
              Walk(*std::get<Box<Block>>(n.body));
            }
          }
        },
        expr.node);
  }
  LeaveExpr(expr);
}

void Visitor::Walk(TypeRef& type) {
  VisitType(type);
  for (auto& a : type.args) Walk(a);
}

namespace {

// Adapts a ConstVisitor onto the mutable traversal. The traversal itself
// never writes, and every hook only sees const references.
class ConstAdapter : public Visitor {
 public:
  explicit ConstAdapter(ConstVisitor& inner) : inner_(inner) {}

  bool EnterClass(ClassDecl& c) override { return inner_.EnterClass(c); }
  void LeaveClass(ClassDecl& c) override { inner_.LeaveClass(c); }
  bool EnterMember(Member& m) override { return inner_.EnterMember(m); }
  void LeaveMember(Member& m) override { inner_.LeaveMember(m); }
  bool EnterStmt(Stmt& s) override { return inner_.EnterStmt(s); }
  void LeaveStmt(Stmt& s) override { inner_.LeaveStmt(s); }
  bool EnterExpr(Expr& e) override { return inner_.EnterExpr(e); }
  void LeaveExpr(Expr& e) override { inner_.LeaveExpr(e); }
  void VisitType(TypeRef& t) override { inner_.VisitType(t); }
  void VisitDecl(std::string& n, DeclRef& d) override { inner_.VisitDecl(n, d); }

 private:
  ConstVisitor& inner_;
};

template <typename T>
T& Unconst(const T& node) {
  return const_cast<T&>(node);
}

}  // namespace

void ConstVisitor::Walk(const CompilationUnit& unit) {
  ConstAdapter(*this).Walk(Unconst(unit));
}
void ConstVisitor::Walk(const ClassDecl& cls) {
  ConstAdapter(*this).Walk(Unconst(cls));
}
void ConstVisitor::Walk(const Block& block) {
  ConstAdapter(*this).Walk(Unconst(block));
}
void ConstVisitor::Walk(const Stmt& stmt) {
  ConstAdapter(*this).Walk(Unconst(stmt));
}
void ConstVisitor::Walk(const Expr& expr) {
  ConstAdapter(*this).Walk(Unconst(expr));
}

}  // namespace jtb::java
