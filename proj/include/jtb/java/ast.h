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

#ifndef JTB_JAVA_AST_H_
#define JTB_JAVA_AST_H_

// Tree over a simplified Java grammar: compilation units of classes holding
// fields, methods, and initializer blocks; statements and expressions follow
// the usual Java productions. Beyond the core grammar the tree models a fixed
// set of tolerated extensions (interfaces, generic type parameters, throws
// clauses, array types, try/catch, enhanced for, throw/break/continue,
// conditional expressions, class literals, and the full binary operator set).
//
// Structural equality (operator==) ignores source spans and name-binding
// annotations; comment trivia participates.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace jtb::java {

struct Span {
  int line = 0;
  int column = 0;
  int end_line = 0;
  int end_column = 0;

  friend bool operator==(const Span&, const Span&) { return true; }
};

// Binding annotation filled in by ResolveBindings(); -1 when unresolved.
struct DeclRef {
  int id = -1;

  friend bool operator==(const DeclRef&, const DeclRef&) { return true; }
};

// Comments attached to a statement-level node. Leading comments precede the
// node on their own lines; a trailing comment follows it on its last line.
struct Trivia {
  std::vector<std::string> leading;
  std::optional<std::string> trailing;

  friend bool operator==(const Trivia&, const Trivia&) = default;
};

// Owning pointer with value semantics: copies deeply and compares pointees.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }
  T* get() { return ptr_.get(); }
  const T* get() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

struct TypeRef {
  enum class Kind { kPrimitive, kName, kVar, kVoid };

  Kind kind = Kind::kName;
  std::string name;            // primitive keyword or dotted type name
  std::vector<TypeRef> args;   // generic arguments, kept opaque
  bool diamond = false;        // "<>" in a class instance creation
  int dims = 0;                // array dimensions
  Span span;

  static TypeRef Named(std::string name);
  static TypeRef Primitive(std::string name);
  static TypeRef Var();
  static TypeRef Void();

  bool IsReference() const { return kind == Kind::kName || dims > 0; }

  friend bool operator==(const TypeRef&, const TypeRef&) = default;
};

struct Expr;
struct Stmt;
struct Block;
using ExprBox = Box<Expr>;
using StmtBox = Box<Stmt>;

enum class LiteralKind { kNull, kBoolean, kInt, kLong, kFloat, kDouble, kChar, kString };

struct NameExpr {
  std::string name;
  DeclRef decl;
  friend bool operator==(const NameExpr&, const NameExpr&) = default;
};

struct LiteralExpr {
  LiteralKind kind = LiteralKind::kInt;
  std::string text;  // source spelling
  friend bool operator==(const LiteralExpr&, const LiteralExpr&) = default;
};

struct ThisExpr {
  friend bool operator==(const ThisExpr&, const ThisExpr&) = default;
};

struct SuperExpr {
  friend bool operator==(const SuperExpr&, const SuperExpr&) = default;
};

struct FieldAccessExpr {
  ExprBox object;
  std::string name;
  DeclRef decl;  // set when the field is declared in the snippet
  friend bool operator==(const FieldAccessExpr&, const FieldAccessExpr&) = default;
};

// "this(...)" and "super(...)" constructor invocations are modelled as calls
// without receiver named "this" / "super".
struct MethodCallExpr {
  std::optional<ExprBox> receiver;
  std::string name;
  std::vector<Expr> args;
  friend bool operator==(const MethodCallExpr&, const MethodCallExpr&) = default;
};

struct NewExpr {
  TypeRef type;
  std::vector<Expr> args;
  friend bool operator==(const NewExpr&, const NewExpr&) = default;
};

struct ArrayInitExpr {
  std::vector<Expr> elements;
  friend bool operator==(const ArrayInitExpr&, const ArrayInitExpr&) = default;
};

struct NewArrayExpr {
  TypeRef element;              // dims == 0
  std::vector<Expr> dim_exprs;  // sized dimensions
  int extra_dims = 0;           // trailing "[]"
  std::optional<ExprBox> init;  // ArrayInitExpr
  friend bool operator==(const NewArrayExpr&, const NewArrayExpr&) = default;
};

struct ArrayAccessExpr {
  ExprBox array;
  ExprBox index;
  friend bool operator==(const ArrayAccessExpr&, const ArrayAccessExpr&) = default;
};

struct UnaryExpr {
  std::string op;  // ! - + ~ ++ --
  bool postfix = false;
  ExprBox operand;
  friend bool operator==(const UnaryExpr&, const UnaryExpr&) = default;
};

struct BinaryExpr {
  std::string op;
  ExprBox lhs;
  ExprBox rhs;
  friend bool operator==(const BinaryExpr&, const BinaryExpr&) = default;
};

struct AssignExpr {
  std::string op;  // = += -= ...
  ExprBox target;
  ExprBox value;
  friend bool operator==(const AssignExpr&, const AssignExpr&) = default;
};

struct ConditionalExpr {
  ExprBox cond;
  ExprBox then_expr;
  ExprBox else_expr;
  friend bool operator==(const ConditionalExpr&, const ConditionalExpr&) = default;
};

struct CastExpr {
  TypeRef type;
  ExprBox operand;
  friend bool operator==(const CastExpr&, const CastExpr&) = default;
};

struct InstanceOfExpr {
  ExprBox operand;
  TypeRef type;
  friend bool operator==(const InstanceOfExpr&, const InstanceOfExpr&) = default;
};

struct ClassLiteralExpr {
  TypeRef type;
  friend bool operator==(const ClassLiteralExpr&, const ClassLiteralExpr&) = default;
};

struct LambdaParam {
  std::optional<TypeRef> type;
  std::string name;
  DeclRef decl;
  friend bool operator==(const LambdaParam&, const LambdaParam&) = default;
};

struct LambdaExpr {
  std::vector<LambdaParam> params;
  bool parenthesized = true;
  std::variant<ExprBox, Box<Block>> body;
  friend bool operator==(const LambdaExpr&, const LambdaExpr&) = default;
};

struct Expr {
  using Node = std::variant<NameExpr, LiteralExpr, ThisExpr, SuperExpr,
                            FieldAccessExpr, MethodCallExpr, NewExpr,
                            NewArrayExpr, ArrayInitExpr, ArrayAccessExpr,
                            UnaryExpr, BinaryExpr, AssignExpr, ConditionalExpr,
                            CastExpr, InstanceOfExpr, ClassLiteralExpr,
                            LambdaExpr>;
  Node node;
  Span span;

  template <typename T>
  T* As() { return std::get_if<T>(&node); }
  template <typename T>
  const T* As() const { return std::get_if<T>(&node); }
  template <typename T>
  bool Is() const { return std::holds_alternative<T>(node); }

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct Block {
  std::vector<Stmt> stmts;
  std::vector<std::string> dangling;  // comments before the closing brace
  Span span;
  friend bool operator==(const Block&, const Block&) = default;
};

struct LocalVarStmt {
  std::vector<std::string> modifiers;
  TypeRef type;
  std::string name;
  std::optional<Expr> init;
  DeclRef decl;
  friend bool operator==(const LocalVarStmt&, const LocalVarStmt&) = default;
};

struct ExprStmt {
  Expr expr;
  friend bool operator==(const ExprStmt&, const ExprStmt&) = default;
};

struct BlockStmt {
  Block block;
  friend bool operator==(const BlockStmt&, const BlockStmt&) = default;
};

struct ReturnStmt {
  std::optional<Expr> value;
  friend bool operator==(const ReturnStmt&, const ReturnStmt&) = default;
};

struct IfStmt {
  Expr cond;
  StmtBox then_branch;
  std::optional<StmtBox> else_branch;
  friend bool operator==(const IfStmt&, const IfStmt&) = default;
};

struct WhileStmt {
  Expr cond;
  StmtBox body;
  friend bool operator==(const WhileStmt&, const WhileStmt&) = default;
};

struct ForStmt {
  std::optional<LocalVarStmt> init_decl;
  std::vector<Expr> init_exprs;
  std::optional<Expr> cond;
  std::vector<Expr> update;
  StmtBox body;
  friend bool operator==(const ForStmt&, const ForStmt&) = default;
};

struct ForEachStmt {
  std::vector<std::string> modifiers;
  TypeRef type;
  std::string name;
  Expr iterable;
  StmtBox body;
  DeclRef decl;
  friend bool operator==(const ForEachStmt&, const ForEachStmt&) = default;
};

struct CatchClause {
  std::vector<std::string> modifiers;
  std::vector<TypeRef> types;  // multi-catch alternatives
  std::string name;
  Block body;
  DeclRef decl;
  friend bool operator==(const CatchClause&, const CatchClause&) = default;
};

struct TryStmt {
  Block body;
  std::vector<CatchClause> catches;
  std::optional<Block> finally_block;
  friend bool operator==(const TryStmt&, const TryStmt&) = default;
};

struct ThrowStmt {
  Expr value;
  friend bool operator==(const ThrowStmt&, const ThrowStmt&) = default;
};

struct BreakStmt {
  friend bool operator==(const BreakStmt&, const BreakStmt&) = default;
};

struct ContinueStmt {
  friend bool operator==(const ContinueStmt&, const ContinueStmt&) = default;
};

struct Stmt {
  using Node = std::variant<ExprStmt, LocalVarStmt, BlockStmt, ReturnStmt,
                            IfStmt, WhileStmt, ForStmt, ForEachStmt, TryStmt,
                            ThrowStmt, BreakStmt, ContinueStmt>;
  Node node;
  Trivia trivia;
  Span span;

  template <typename T>
  T* As() { return std::get_if<T>(&node); }
  template <typename T>
  const T* As() const { return std::get_if<T>(&node); }
  template <typename T>
  bool Is() const { return std::holds_alternative<T>(node); }

  friend bool operator==(const Stmt&, const Stmt&) = default;
};

struct TypeParam {
  std::string name;
  std::vector<TypeRef> bounds;
  friend bool operator==(const TypeParam&, const TypeParam&) = default;
};

struct Param {
  std::vector<std::string> modifiers;
  TypeRef type;
  bool varargs = false;
  std::string name;
  DeclRef decl;
  friend bool operator==(const Param&, const Param&) = default;
};

struct FieldDecl {
  std::vector<std::string> modifiers;
  TypeRef type;
  std::string name;
  std::optional<Expr> init;
  DeclRef decl;
  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

// Constructors have no return type and carry the class name.
struct MethodDecl {
  std::vector<std::string> modifiers;
  std::vector<TypeParam> type_params;
  std::optional<TypeRef> return_type;
  std::string name;
  std::vector<Param> params;
  std::vector<TypeRef> throws;
  std::optional<Block> body;  // absent for abstract/interface methods

  bool IsConstructor() const { return !return_type.has_value(); }
  friend bool operator==(const MethodDecl&, const MethodDecl&) = default;
};

struct InitializerDecl {
  bool is_static = false;
  Block body;
  friend bool operator==(const InitializerDecl&, const InitializerDecl&) = default;
};

struct Member {
  using Node = std::variant<FieldDecl, MethodDecl, InitializerDecl>;
  Node node;
  Trivia trivia;
  Span span;

  template <typename T>
  T* As() { return std::get_if<T>(&node); }
  template <typename T>
  const T* As() const { return std::get_if<T>(&node); }

  friend bool operator==(const Member&, const Member&) = default;
};

struct ClassDecl {
  std::vector<std::string> modifiers;  // annotations spelled "@Name"
  bool is_interface = false;
  std::string name;
  std::vector<TypeParam> type_params;
  std::vector<TypeRef> extends;
  std::vector<TypeRef> implements;
  std::vector<Member> members;
  std::vector<std::string> dangling;
  Trivia trivia;
  Span span;
  friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

struct PackageDecl {
  std::string name;
  Trivia trivia;
  friend bool operator==(const PackageDecl&, const PackageDecl&) = default;
};

struct ImportDecl {
  std::string name;
  bool is_static = false;
  bool wildcard = false;
  Trivia trivia;
  friend bool operator==(const ImportDecl&, const ImportDecl&) = default;
};

struct CompilationUnit {
  std::optional<PackageDecl> package;
  std::vector<ImportDecl> imports;
  std::vector<ClassDecl> types;
  std::vector<std::string> dangling;  // comments after the last declaration
  friend bool operator==(const CompilationUnit&, const CompilationUnit&) = default;
};

bool HasModifier(const std::vector<std::string>& modifiers,
                 std::string_view modifier);

}  // namespace jtb::java

#endif  // JTB_JAVA_AST_H_
