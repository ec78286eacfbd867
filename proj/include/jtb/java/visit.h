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

#ifndef JTB_JAVA_VISIT_H_
#define JTB_JAVA_VISIT_H_

#include <string>

#include "jtb/java/ast.h"

namespace jtb::java {

// Pre-order traversal over the whole tree with overridable hooks. Returning
// false from an Enter hook skips that node's children (Leave is still
// called). Lambda bodies are traversed like any other expression.
class Visitor {
 public:
  virtual ~Visitor() = default;

  virtual bool EnterClass(ClassDecl&) { return true; }
  virtual void LeaveClass(ClassDecl&) {}
  virtual bool EnterMember(Member&) { return true; }
  virtual void LeaveMember(Member&) {}
  virtual bool EnterStmt(Stmt&) { return true; }
  virtual void LeaveStmt(Stmt&) {}
  virtual bool EnterExpr(Expr&) { return true; }
  virtual void LeaveExpr(Expr&) {}
  // Every TypeRef, including nested generic arguments and bounds.
  virtual void VisitType(TypeRef&) {}
  // Every declaring occurrence of a variable: fields, locals, parameters,
  // lambda/for-each/catch variables.
  virtual void VisitDecl(std::string& /*name*/, DeclRef&) {}

  void Walk(CompilationUnit& unit);
  void Walk(ClassDecl& cls);
  void Walk(Member& member);
  void Walk(Block& block);
  void Walk(Stmt& stmt);
  void Walk(Expr& expr);
  void Walk(TypeRef& type);

 private:
  void WalkLocal(LocalVarStmt& decl);
};

// Read-only traversal for analyses. Hooks receive const references.
class ConstVisitor {
 public:
  virtual ~ConstVisitor() = default;

  virtual bool EnterClass(const ClassDecl&) { return true; }
  virtual void LeaveClass(const ClassDecl&) {}
  virtual bool EnterMember(const Member&) { return true; }
  virtual void LeaveMember(const Member&) {}
  virtual bool EnterStmt(const Stmt&) { return true; }
  virtual void LeaveStmt(const Stmt&) {}
  virtual bool EnterExpr(const Expr&) { return true; }
  virtual void LeaveExpr(const Expr&) {}
  virtual void VisitType(const TypeRef&) {}
  virtual void VisitDecl(const std::string&, const DeclRef&) {}

  void Walk(const CompilationUnit& unit);
  void Walk(const ClassDecl& cls);
  void Walk(const Block& block);
  void Walk(const Stmt& stmt);
  void Walk(const Expr& expr);
};

}  // namespace jtb::java

#endif  // JTB_JAVA_VISIT_H_
