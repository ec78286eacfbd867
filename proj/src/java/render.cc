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

#include "jtb/java/render.h"

#include <string_view>
#include <utility>
#include <vector>

namespace jtb::java {
namespace {

// Precedence ranks; larger binds tighter.
constexpr int kAssign = 1;
constexpr int kConditional = 2;
constexpr int kUnary = 13;
constexpr int kPostfix = 14;
constexpr int kArrayCreation = 15;
constexpr int kPrimary = 16;

int BinaryRank(std::string_view op) {
  if (op == "||") return 3;
  if (op == "&&") return 4;
  if (op == "|") return 5;
  if (op == "^") return 6;
  if (op == "&") return 7;
  if (op == "==" || op == "!=") return 8;
  if (op == "<" || op == ">" || op == "<=" || op == ">=" ||
      op == "instanceof") {
    return 9;
  }
  if (op == "<<" || op == ">>" || op == ">>>") return 10;
  if (op == "+" || op == "-") return 11;
  return 12;  // * / %
}

std::string Pad(int indent) { return std::string(2 * indent, ' '); }

std::string JoinModifiers(const std::vector<std::string>& mods) {
  std::string out;
  for (const auto& m : mods) out += m + " ";
  return out;
}

class Printer {
 public:
  std::string out;

  void Line(int indent, const std::string& text) {
    out += Pad(indent) + text + "\n";
  }

  void Leading(int indent, const std::vector<std::string>& comments) {
    for (const auto& c : comments) Line(indent, c);
  }

  static std::string WithTrailing(std::string text, const Trivia& trivia) {
    if (trivia.trailing) text += " " + *trivia.trailing;
    return text;
  }

  // ---- types ----

  static std::string Type(const TypeRef& t) {
    std::string s = t.name;
    if (t.diamond) {
      s += "<>";
    } else if (!t.args.empty()) {
      s += "<";
      for (size_t i = 0; i < t.args.size(); ++i) {
        if (i) s += ", ";
        s += Type(t.args[i]);
      }
      s += ">";
    }
    for (int i = 0; i < t.dims; ++i) s += "[]";
    return s;
  }

  static std::string TypeParams(const std::vector<TypeParam>& params) {
    if (params.empty()) return "";
    std::string s = "<";
    for (size_t i = 0; i < params.size(); ++i) {
      if (i) s += ", ";
      s += params[i].name;
      for (size_t b = 0; b < params[i].bounds.size(); ++b) {
        s += b == 0 ? " extends " : " & ";
        s += Type(params[i].bounds[b]);
      }
    }
    return s + ">";
  }

  // ---- expressions ----

  static int Rank(const Expr& e) {
    return std::visit(
        [](const auto& n) -> int {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, AssignExpr> ||
                        std::is_same_v<T, LambdaExpr>) {
            return kAssign;
          } else if constexpr (std::is_same_v<T, ConditionalExpr>) {
            return kConditional;
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            return BinaryRank(n.op);
          } else if constexpr (std::is_same_v<T, InstanceOfExpr>) {
            return BinaryRank("instanceof");
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            return n.postfix ? kPostfix : kUnary;
          } else if constexpr (std::is_same_v<T, CastExpr>) {
            return kUnary;
          } else if constexpr (std::is_same_v<T, NewArrayExpr>) {
            return kArrayCreation;
          } else {
            return kPrimary;
          }
        },
        e.node);
  }

  std::string Sub(const Expr& e, int min_rank, int indent) {
    std::string s = Expr(e, indent);
    return Rank(e) < min_rank ? "(" + s + ")" : s;
  }

  std::string Args(const std::vector<java::Expr>& args, int indent) {
    std::string s = "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) s += ", ";
      s += Sub(args[i], kAssign, indent);
    }
    return s + ")";
  }

  std::string Expr(const java::Expr& e, int indent) {
    return std::visit([&](const auto& n) { return Node(n, indent); }, e.node);
  }

  std::string Node(const NameExpr& n, int) { return n.name; }
  std::string Node(const LiteralExpr& n, int) { return n.text; }
  std::string Node(const ThisExpr&, int) { return "this"; }
  std::string Node(const SuperExpr&, int) { return "super"; }
  std::string Node(const FieldAccessExpr& n, int indent) {
    return Sub(*n.object, kArrayCreation, indent) + "." + n.name;
  }
  std::string Node(const MethodCallExpr& n, int indent) {
    std::string s;
    if (n.receiver) s = Sub(**n.receiver, kArrayCreation, indent) + ".";
    return s + n.name + Args(n.args, indent);
  }
  std::string Node(const NewExpr& n, int indent) {
    return "new " + Type(n.type) + Args(n.args, indent);
  }
  std::string Node(const NewArrayExpr& n, int indent) {
    std::string s = "new " + Type(n.element);
    for (const auto& d : n.dim_exprs) s += "[" + Sub(d, kAssign, indent) + "]";
    for (int i = 0; i < n.extra_dims; ++i) s += "[]";
    if (n.init) s += " " + Expr(**n.init, indent);
    return s;
  }
  std::string Node(const ArrayInitExpr& n, int indent) {
    std::string s = "{";
    for (size_t i = 0; i < n.elements.size(); ++i) {
      if (i) s += ", ";
      s += Sub(n.elements[i], kAssign, indent);
    }
    return s + "}";
  }
  std::string Node(const ArrayAccessExpr& n, int indent) {
    return Sub(*n.array, kPrimary, indent) + "[" +
           Sub(*n.index, kAssign, indent) + "]";
  }
  std::string Node(const UnaryExpr& n, int indent) {
    if (n.postfix) return Sub(*n.operand, kPostfix, indent) + n.op;
    std::string operand = Sub(*n.operand, kUnary, indent);
    // Keep "- -x" and "+ +x" from fusing into "--" / "++".
    if (!operand.empty() && (operand[0] == '+' || operand[0] == '-') &&
        (n.op == "+" || n.op == "-" || n.op == "++" || n.op == "--")) {
      return n.op + " " + operand;
    }
    return n.op + operand;
  }
  std::string Node(const BinaryExpr& n, int indent) {
    int rank = BinaryRank(n.op);
    return Sub(*n.lhs, rank, indent) + " " + n.op + " " +
           Sub(*n.rhs, rank + 1, indent);
  }
  std::string Node(const AssignExpr& n, int indent) {
    return Sub(*n.target, kPostfix, indent) + " " + n.op + " " +
           Sub(*n.value, kAssign, indent);
  }
  std::string Node(const ConditionalExpr& n, int indent) {
    return Sub(*n.cond, kConditional + 1, indent) + " ? " +
           Sub(*n.then_expr, kAssign, indent) + " : " +
           Sub(*n.else_expr, kConditional, indent);
  }
  std::string Node(const CastExpr& n, int indent) {
    std::string operand = Sub(*n.operand, kUnary, indent);
    // A reference cast followed by a sign would re-parse as a subtraction.
    const auto* u = n.operand->As<UnaryExpr>();
    if (n.type.kind != TypeRef::Kind::kPrimitive && u && !u->postfix &&
        (u->op == "+" || u->op == "-" || u->op == "++" || u->op == "--")) {
      operand = "(" + operand + ")";
    }
    return "(" + Type(n.type) + ") " + operand;
  }
  std::string Node(const InstanceOfExpr& n, int indent) {
    return Sub(*n.operand, BinaryRank("instanceof"), indent) + " instanceof " +
           Type(n.type);
  }
  std::string Node(const ClassLiteralExpr& n, int) {
    return Type(n.type) + ".class";
  }
  std::string Node(const LambdaExpr& n, int indent) {
    std::string s;
    if (!n.parenthesized && n.params.size() == 1 && !n.params[0].type) {
      s = n.params[0].name;
    } else {
      s = "(";
      for (size_t i = 0; i < n.params.size(); ++i) {
        if (i) s += ", ";
        if (n.params[i].type) s += Type(*n.params[i].type) + " ";
        s += n.params[i].name;
      }
      s += ")";
    }
    s += " -> ";
    if (const auto* body = std::get_if<ExprBox>(&n.body)) {
      s += Sub(**body, kAssign, indent);
    } else {
      s += InlineBlock(*std::get<Box<Block>>(n.body), indent);
    }
    return s;
  }

  // Renders a block whose opening brace continues the current line; the
  // closing brace ends up at `indent` with no trailing newline.
  std::string InlineBlock(const Block& block, int indent) {
    Printer inner;
    for (const auto& st : block.stmts) inner.Stmt(st, indent + 1);
    inner.Leading(indent + 1, block.dangling);
    return "{\n" + inner.out + Pad(indent) + "}";
  }

  // ---- statements ----

  // Emits `header` followed by a sub-statement. `joinable` is set when the
  // output ends in a bare closing brace that "else" may continue.
  void HeaderWithBody(int indent, const std::string& header, const Stmt& body,
                      bool& joinable) {
    const auto* block = body.As<BlockStmt>();
    if (block && body.trivia.leading.empty()) {
      std::string text = header + " " + InlineBlock(block->block, indent);
      Line(indent, WithTrailing(std::move(text), body.trivia));
      joinable = !body.trivia.trailing.has_value();
    } else {
      Line(indent, header);
      Stmt(body, indent + 1);
      joinable = false;
    }
  }

  // Removes the final newline so the last line can be continued.
  void Rejoin() {
    if (!out.empty() && out.back() == '\n') out.pop_back();
  }

  std::string LocalDecl(const LocalVarStmt& d, int indent) {
    std::string s = JoinModifiers(d.modifiers) + Type(d.type) + " " + d.name;
    if (d.init) s += " = " + Sub(*d.init, kAssign, indent);
    return s;
  }

  void Stmt(const java::Stmt& st, int indent) {
    Leading(indent, st.trivia.leading);
    std::visit([&](const auto& n) { StmtNode(n, st.trivia, indent); }, st.node);
  }

  void Simple(int indent, std::string text, const Trivia& trivia) {
    Line(indent, WithTrailing(std::move(text), trivia));
  }

  void StmtNode(const ExprStmt& n, const Trivia& t, int indent) {
    Simple(indent, Expr(n.expr, indent) + ";", t);
  }
  void StmtNode(const LocalVarStmt& n, const Trivia& t, int indent) {
    Simple(indent, LocalDecl(n, indent) + ";", t);
  }
  void StmtNode(const BlockStmt& n, const Trivia& t, int indent) {
    Simple(indent, InlineBlock(n.block, indent), t);
  }
  void StmtNode(const ReturnStmt& n, const Trivia& t, int indent) {
    Simple(indent, n.value ? "return " + Expr(*n.value, indent) + ";" : "return;",
           t);
  }
  void StmtNode(const ThrowStmt& n, const Trivia& t, int indent) {
    Simple(indent, "throw " + Expr(n.value, indent) + ";", t);
  }
  void StmtNode(const BreakStmt&, const Trivia& t, int indent) {
    Simple(indent, "break;", t);
  }
  void StmtNode(const ContinueStmt&, const Trivia& t, int indent) {
    Simple(indent, "continue;", t);
  }
  void StmtNode(const IfStmt& n, const Trivia& t, int indent) {
    IfChain(n, "if (", indent);
    AppendTrailing(t);
  }
  void IfChain(const IfStmt& n, const std::string& prefix, int indent) {
    bool joinable = false;
    HeaderWithBody(indent, prefix + Expr(n.cond, indent) + ")", *n.then_branch,
                   joinable);
    if (!n.else_branch) return;
    const java::Stmt& else_stmt = **n.else_branch;
    const auto* nested = else_stmt.As<IfStmt>();
    std::string head = joinable ? "} else" : "else";
    if (joinable) {
      // Drop the closing brace line; it is re-emitted as "} else".
      Rejoin();
      out.pop_back();
      while (!out.empty() && out.back() == ' ') out.pop_back();
    }
    if (nested && else_stmt.trivia.leading.empty() &&
        !else_stmt.trivia.trailing) {
      IfChain(*nested, head + " if (", indent);
      return;
    }
    bool ignored = false;
    HeaderWithBody(indent, head, else_stmt, ignored);
  }
  void AppendTrailing(const Trivia& t) {
    if (!t.trailing) return;
    Rejoin();
    out += " " + *t.trailing + "\n";
  }
  void StmtNode(const WhileStmt& n, const Trivia& t, int indent) {
    bool joinable = false;
    HeaderWithBody(indent, "while (" + Expr(n.cond, indent) + ")", *n.body,
                   joinable);
    AppendTrailing(t);
  }
  void StmtNode(const ForStmt& n, const Trivia& t, int indent) {
    std::string h = "for (";
    if (n.init_decl) {
      h += LocalDecl(*n.init_decl, indent);
    } else {
      for (size_t i = 0; i < n.init_exprs.size(); ++i) {
        if (i) h += ", ";
        h += Expr(n.init_exprs[i], indent);
      }
    }
    h += ";";
    if (n.cond) h += " " + Expr(*n.cond, indent);
    h += ";";
    for (size_t i = 0; i < n.update.size(); ++i) {
      h += i ? ", " : " ";
      h += Expr(n.update[i], indent);
    }
    h += ")";
    bool joinable = false;
    HeaderWithBody(indent, h, *n.body, joinable);
    AppendTrailing(t);
  }
  void StmtNode(const ForEachStmt& n, const Trivia& t, int indent) {
    std::string h = "for (" + JoinModifiers(n.modifiers) + Type(n.type) + " " +
                    n.name + " : " + Expr(n.iterable, indent) + ")";
    bool joinable = false;
    HeaderWithBody(indent, h, *n.body, joinable);
    AppendTrailing(t);
  }
  void StmtNode(const TryStmt& n, const Trivia& t, int indent) {
    std::string s = "try " + InlineBlock(n.body, indent);
    for (const auto& c : n.catches) {
      s += " catch (" + JoinModifiers(c.modifiers);
      for (size_t i = 0; i < c.types.size(); ++i) {
        if (i) s += " | ";
        s += Type(c.types[i]);
      }
      s += " " + c.name + ") " + InlineBlock(c.body, indent);
    }
    if (n.finally_block) s += " finally " + InlineBlock(*n.finally_block, indent);
    Simple(indent, std::move(s), t);
  }

  // ---- declarations ----

  void Member(const java::Member& m, int indent) {
    Leading(indent, m.trivia.leading);
    if (const auto* f = m.As<FieldDecl>()) {
      std::string s = JoinModifiers(f->modifiers) + Type(f->type) + " " + f->name;
      if (f->init) s += " = " + Sub(*f->init, kAssign, indent);
      Simple(indent, s + ";", m.trivia);
    } else if (const auto* md = m.As<MethodDecl>()) {
      std::string s = JoinModifiers(md->modifiers);
      if (!md->type_params.empty()) s += TypeParams(md->type_params) + " ";
      if (md->return_type) s += Type(*md->return_type) + " ";
      s += md->name + "(";
      for (size_t i = 0; i < md->params.size(); ++i) {
        const Param& p = md->params[i];
        if (i) s += ", ";
        s += JoinModifiers(p.modifiers) + Type(p.type) +
             (p.varargs ? "... " : " ") + p.name;
      }
      s += ")";
      for (size_t i = 0; i < md->throws.size(); ++i) {
        s += i ? ", " : " throws ";
        s += Type(md->throws[i]);
      }
      if (md->body) {
        s += " " + InlineBlock(*md->body, indent);
      } else {
        s += ";";
      }
      Simple(indent, std::move(s), m.trivia);
    } else {
      const auto& init = std::get<InitializerDecl>(m.node);
      Simple(indent,
             std::string(init.is_static ? "static " : "") +
                 InlineBlock(init.body, indent),
             m.trivia);
    }
  }

  void Class(const ClassDecl& c, int indent) {
    Leading(indent, c.trivia.leading);
    std::string s = JoinModifiers(c.modifiers) +
                    (c.is_interface ? "interface " : "class ") + c.name +
                    TypeParams(c.type_params);
    for (size_t i = 0; i < c.extends.size(); ++i) {
      s += i ? ", " : " extends ";
      s += Type(c.extends[i]);
    }
    for (size_t i = 0; i < c.implements.size(); ++i) {
      s += i ? ", " : " implements ";
      s += Type(c.implements[i]);
    }
    Line(indent, s + " {");
    for (const auto& m : c.members) Member(m, indent + 1);
    Leading(indent + 1, c.dangling);
    Simple(indent, "}", c.trivia);
  }
};

}  // namespace

std::string RenderType(const TypeRef& type) { return Printer::Type(type); }

std::string RenderExpr(const Expr& expr) {
  Printer p;
  return p.Expr(expr, 0);
}

std::string RenderStmt(const Stmt& stmt, int indent) {
  Printer p;
  p.Stmt(stmt, indent);
  return p.out;
}

std::string Render(const CompilationUnit& unit, const RenderOptions& options) {
  Printer p;
  bool need_gap = false;
  if (unit.package) {
    p.Leading(0, unit.package->trivia.leading);
    p.Simple(0, "package " + unit.package->name + ";", unit.package->trivia);
    need_gap = true;
  }
  if (options.include_imports && !unit.imports.empty()) {
    if (need_gap) p.out += "\n";
    for (const auto& imp : unit.imports) {
      p.Leading(0, imp.trivia.leading);
      std::string s = "import ";
      if (imp.is_static) s += "static ";
      s += imp.name;
      if (imp.wildcard) s += ".*";
      p.Simple(0, s + ";", imp.trivia);
    }
    need_gap = true;
  }
  for (const auto& c : unit.types) {
    if (need_gap) p.out += "\n";
    p.Class(c, 0);
    need_gap = true;
  }
  p.Leading(0, unit.dangling);
  return p.out;
}

}  // namespace jtb::java
