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

#include "jtb/java/parser.h"

#include <algorithm>
#include <utility>

#include "jtb/java/keywords.h"

namespace jtb::java {

ParseError::ParseError(int line, int column, std::string found,
                       std::vector<std::string> expected)
    : SyntaxError(line, column,
                  [&] {
                    std::string msg = "unexpected " + found;
                    if (!expected.empty()) {
                      msg += "; expected ";
                      for (size_t i = 0; i < expected.size(); ++i) {
                        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
                        msg += expected[i];
                      }
                    }
                    return msg;
                  }()),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

bool HasModifier(const std::vector<std::string>& modifiers,
                 std::string_view modifier) {
  return std::find(modifiers.begin(), modifiers.end(), modifier) !=
         modifiers.end();
}

TypeRef TypeRef::Named(std::string name) {
  TypeRef t;
  t.kind = Kind::kName;
  t.name = std::move(name);
  return t;
}

TypeRef TypeRef::Primitive(std::string name) {
  TypeRef t;
  t.kind = Kind::kPrimitive;
  t.name = std::move(name);
  return t;
}

TypeRef TypeRef::Var() {
  TypeRef t;
  t.kind = Kind::kVar;
  t.name = "var";
  return t;
}

TypeRef TypeRef::Void() {
  TypeRef t;
  t.kind = Kind::kVoid;
  t.name = "void";
  return t;
}

namespace {

constexpr std::string_view kModifierKeywords[] = {
    "public", "protected", "private",  "static",    "abstract", "final",
    "native", "synchronized", "transient", "volatile", "strictfp",
};

bool IsModifierKeyword(const Token& t) {
  if (t.kind != TokenKind::kKeyword) return false;
  return std::find(std::begin(kModifierKeywords), std::end(kModifierKeywords),
                   t.text) != std::end(kModifierKeywords);
}

LiteralKind ClassifyLiteral(const std::string& text) {
  if (text == "null") return LiteralKind::kNull;
  if (text == "true" || text == "false") return LiteralKind::kBoolean;
  if (text[0] == '"') return LiteralKind::kString;
  if (text[0] == '\'') return LiteralKind::kChar;
  const char last = text.back();
  const bool hex = text.size() > 1 && text[0] == '0' &&
                   (text[1] == 'x' || text[1] == 'X');
  if (last == 'l' || last == 'L') return LiteralKind::kLong;
  if (!hex && (last == 'f' || last == 'F')) return LiteralKind::kFloat;
  if (!hex && (last == 'd' || last == 'D')) return LiteralKind::kDouble;
  if (!hex && (text.find('.') != std::string::npos ||
               text.find('e') != std::string::npos ||
               text.find('E') != std::string::npos)) {
    return LiteralKind::kDouble;
  }
  return LiteralKind::kInt;
}

struct BinaryLevel {
  int precedence;
  std::vector<std::string_view> ops;
};

// Lowest to highest.
const std::vector<BinaryLevel>& BinaryLevels() {
  static const std::vector<BinaryLevel> levels = {
      {1, {"||"}},
      {2, {"&&"}},
      {3, {"|"}},
      {4, {"^"}},
      {5, {"&"}},
      {6, {"==", "!="}},
      {7, {"<", ">", "<=", ">=", "instanceof"}},
      {8, {"<<", ">>", ">>>"}},
      {9, {"+", "-"}},
      {10, {"*", "/", "%"}},
  };
  return levels;
}

class Parser {
 public:
  explicit Parser(std::string_view source) {
    std::vector<Token> all = Lex(source);
    for (auto& t : all) {
      if (t.kind == TokenKind::kWhitespace) continue;
      if (t.kind == TokenKind::kComment) {
        int end_line = t.line;
        for (char c : t.text) end_line += c == '\n';
        comments_.push_back({t.text, t.line, end_line, toks_.size(), false});
        continue;
      }
      toks_.push_back(std::move(t));
    }
    Token eof;
    eof.kind = TokenKind::kEof;
    if (!toks_.empty()) {
      eof.line = toks_.back().line;
      eof.column = toks_.back().column + static_cast<int>(toks_.back().text.size());
    }
    for (const auto& c : comments_) eof.line = std::max(eof.line, c.end_line);
    toks_.push_back(eof);
  }

  CompilationUnit ParseUnit() {
    CompilationUnit unit;
    if (PeekKeyword("package")) {
      PackageDecl pkg;
      pkg.trivia.leading = TakeLeading();
      Advance();
      pkg.name = ParseDottedName();
      ExpectPunct(";");
      pkg.trivia.trailing = TakeTrailing();
      unit.package = std::move(pkg);
    }
    while (PeekKeyword("import")) {
      ImportDecl imp;
      imp.trivia.leading = TakeLeading();
      Advance();
      if (PeekKeyword("static")) {
        Advance();
        imp.is_static = true;
      }
      imp.name = ExpectIdent("import name").text;
      while (PeekPunct(".")) {
        Advance();
        if (PeekOp("*")) {
          Advance();
          imp.wildcard = true;
          break;
        }
        imp.name += "." + ExpectIdent("identifier").text;
      }
      ExpectPunct(";");
      imp.trivia.trailing = TakeTrailing();
      unit.imports.push_back(std::move(imp));
    }
    while (!AtEof()) {
      unit.types.push_back(ParseClass());
    }
    unit.dangling = TakeLeading();
    return unit;
  }

  Expr ParseStandaloneExpression() {
    Expr e = ParseExpr();
    if (!AtEof()) Fail({"end of expression"});
    return e;
  }

 private:
  struct Comment {
    std::string text;
    int line;
    int end_line;
    size_t before;  // index of the next significant token
    bool used;
  };

  // ---- token helpers ----

  const Token& Peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool AtEof() const { return Peek().kind == TokenKind::kEof; }
  const Token& Advance() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool PeekPunct(std::string_view p, size_t ahead = 0) const {
    return Peek(ahead).Is(TokenKind::kPunctuation, p);
  }
  bool PeekOp(std::string_view p, size_t ahead = 0) const {
    return Peek(ahead).Is(TokenKind::kOperator, p);
  }
  bool PeekKeyword(std::string_view k, size_t ahead = 0) const {
    return Peek(ahead).Is(TokenKind::kKeyword, k);
  }
  bool PeekIdent(size_t ahead = 0) const {
    return Peek(ahead).kind == TokenKind::kIdentifier;
  }
  // Two tokens with no characters between them.
  bool Adjacent(size_t ahead) const {
    const Token& a = Peek(ahead);
    const Token& b = Peek(ahead + 1);
    return a.line == b.line &&
           a.column + static_cast<int>(a.text.size()) == b.column;
  }

  [[noreturn]] void Fail(std::vector<std::string> expected) const {
    const Token& t = Peek();
    std::string found = t.kind == TokenKind::kEof
                            ? std::string("end of input")
                            : std::string(TokenKindName(t.kind)) + " '" +
                                  t.text + "'";
    throw ParseError(t.line, t.column, std::move(found), std::move(expected));
  }

  const Token& ExpectPunct(std::string_view p) {
    if (!PeekPunct(p)) Fail({"'" + std::string(p) + "'"});
    return Advance();
  }
  const Token& ExpectOp(std::string_view p) {
    if (!PeekOp(p)) Fail({"'" + std::string(p) + "'"});
    return Advance();
  }
  const Token& ExpectKeyword(std::string_view k) {
    if (!PeekKeyword(k)) Fail({"'" + std::string(k) + "'"});
    return Advance();
  }
  const Token& ExpectIdent(const std::string& what) {
    if (!PeekIdent()) Fail({what});
    return Advance();
  }

  Span StartSpan() const {
    Span s;
    s.line = Peek().line;
    s.column = Peek().column;
    return s;
  }
  void EndSpan(Span& s) const {
    const Token& last = toks_[pos_ == 0 ? 0 : pos_ - 1];
    s.end_line = last.line;
    s.end_column = last.column + static_cast<int>(last.text.size());
  }

  // ---- comment trivia ----

  std::vector<std::string> TakeLeading() {
    std::vector<std::string> out;
    for (auto& c : comments_) {
      if (c.before > pos_) break;
      if (!c.used) {
        c.used = true;
        out.push_back(c.text);
      }
    }
    return out;
  }

  std::optional<std::string> TakeTrailing() {
    if (pos_ == 0) return std::nullopt;
    const Token& last = toks_[pos_ - 1];
    for (auto& c : comments_) {
      if (c.before < pos_) continue;
      if (c.before > pos_) break;
      if (c.used) continue;
      if (c.line != last.line) return std::nullopt;
      c.used = true;
      return c.text;
    }
    return std::nullopt;
  }

  // ---- names and types ----

  std::string ParseDottedName() {
    std::string name = ExpectIdent("identifier").text;
    while (PeekPunct(".") && PeekIdent(1)) {
      Advance();
      name += "." + Advance().text;
    }
    return name;
  }

  std::vector<std::string> ParseModifiers() {
    std::vector<std::string> mods;
    while (true) {
      if (IsModifierKeyword(Peek())) {
        mods.push_back(Advance().text);
      } else if (PeekPunct("@") && PeekIdent(1)) {
        Advance();
        mods.push_back("@" + ParseDottedName());
        if (PeekPunct("(")) Fail({"annotation without arguments"});
      } else {
        return mods;
      }
    }
  }

  bool PeekPrimitive(size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kKeyword && IsPrimitiveTypeName(t.text);
  }

  std::vector<TypeRef> ParseTypeArgs(bool& diamond) {
    ExpectOp("<");
    std::vector<TypeRef> args;
    if (PeekOp(">")) {
      Advance();
      diamond = true;
      return args;
    }
    while (true) {
      if (PeekOp("?")) Fail({"type argument (wildcards are not supported)"});
      args.push_back(ParseType(/*allow_void=*/false));
      if (PeekPunct(",")) {
        Advance();
        continue;
      }
      ExpectOp(">");
      return args;
    }
  }

  int ParseDims() {
    int dims = 0;
    while (PeekPunct("[") && PeekPunct("]", 1)) {
      Advance();
      Advance();
      ++dims;
    }
    return dims;
  }

  TypeRef ParseType(bool allow_void) {
    Span span = StartSpan();
    TypeRef t;
    if (PeekPrimitive()) {
      t = TypeRef::Primitive(Advance().text);
    } else if (PeekKeyword("void")) {
      if (!allow_void) Fail({"type"});
      Advance();
      t = TypeRef::Void();
      EndSpan(span);
      t.span = span;
      return t;
    } else if (PeekIdent()) {
      t = TypeRef::Named(ParseDottedName());
      if (PeekOp("<")) t.args = ParseTypeArgs(t.diamond);
    } else {
      Fail({"type"});
    }
    t.dims = ParseDims();
    EndSpan(span);
    t.span = span;
    return t;
  }

  std::vector<TypeParam> ParseTypeParams() {
    ExpectOp("<");
    std::vector<TypeParam> params;
    while (true) {
      TypeParam p;
      p.name = ExpectIdent("type parameter").text;
      if (PeekKeyword("extends")) {
        Advance();
        p.bounds.push_back(ParseType(false));
        while (PeekOp("&")) {
          Advance();
          p.bounds.push_back(ParseType(false));
        }
      }
      params.push_back(std::move(p));
      if (PeekPunct(",")) {
        Advance();
        continue;
      }
      ExpectOp(">");
      return params;
    }
  }

  // Speculatively checks "Type Identifier" at the cursor without consuming.
  bool LooksLikeDeclaration(bool allow_colon) {
    if (!PeekPrimitive() && !PeekIdent()) return false;
    size_t save = pos_;
    bool ok = false;
    try {
      if (PeekIdent() && Peek().text == "var" && PeekIdent(1)) {
        Advance();
      } else {
        ParseType(false);
      }
      if (PeekIdent()) {
        const Token& after = Peek(1);
        ok = after.Is(TokenKind::kOperator, "=") ||
             after.Is(TokenKind::kPunctuation, ";") ||
             (allow_colon && after.Is(TokenKind::kOperator, ":"));
      }
    } catch (const SyntaxError&) {
      ok = false;
    }
    pos_ = save;
    return ok;
  }

  // ---- declarations ----

  ClassDecl ParseClass() {
    ClassDecl cls;
    cls.trivia.leading = TakeLeading();
    cls.span = StartSpan();
    cls.modifiers = ParseModifiers();
    if (PeekKeyword("interface")) {
      cls.is_interface = true;
    } else if (!PeekKeyword("class")) {
      Fail({"'class'", "'interface'"});
    }
    Advance();
    cls.name = ExpectIdent("class name").text;
    if (PeekOp("<")) cls.type_params = ParseTypeParams();
    if (PeekKeyword("extends")) {
      Advance();
      cls.extends.push_back(ParseType(false));
      while (cls.is_interface && PeekPunct(",")) {
        Advance();
        cls.extends.push_back(ParseType(false));
      }
    }
    if (!cls.is_interface && PeekKeyword("implements")) {
      Advance();
      cls.implements.push_back(ParseType(false));
      while (PeekPunct(",")) {
        Advance();
        cls.implements.push_back(ParseType(false));
      }
    }
    ExpectPunct("{");
    while (!PeekPunct("}")) {
      if (AtEof()) Fail({"'}'"});
      cls.members.push_back(ParseMember(cls));
    }
    cls.dangling = TakeLeading();
    Advance();
    EndSpan(cls.span);
    cls.trivia.trailing = TakeTrailing();
    return cls;
  }

  Member ParseMember(const ClassDecl& cls) {
    Member m;
    m.trivia.leading = TakeLeading();
    m.span = StartSpan();
    if (PeekPunct("{") || (PeekKeyword("static") && PeekPunct("{", 1))) {
      InitializerDecl init;
      if (PeekKeyword("static")) {
        Advance();
        init.is_static = true;
      }
      init.body = ParseBlock();
      m.node = std::move(init);
    } else {
      std::vector<std::string> mods = ParseModifiers();
      std::vector<TypeParam> type_params;
      if (PeekOp("<")) type_params = ParseTypeParams();
      if (PeekKeyword("class") || PeekKeyword("interface")) {
        Fail({"field", "method", "initializer block (nested types are not supported)"});
      }
      if (PeekIdent() && Peek().text == cls.name && PeekPunct("(", 1)) {
        MethodDecl method;
        method.modifiers = std::move(mods);
        method.type_params = std::move(type_params);
        method.name = Advance().text;
        ParseMethodRest(method);
        m.node = std::move(method);
      } else {
        if (!PeekPrimitive() && !PeekIdent() && !PeekKeyword("void")) {
          Fail({"'}'", "modifier", "type"});
        }
        TypeRef type = ParseType(/*allow_void=*/true);
        std::string name = ExpectIdent("member name").text;
        if (PeekPunct("(")) {
          MethodDecl method;
          method.modifiers = std::move(mods);
          method.type_params = std::move(type_params);
          method.return_type = std::move(type);
          method.name = std::move(name);
          ParseMethodRest(method);
          m.node = std::move(method);
        } else {
          if (!type_params.empty()) Fail({"'('"});
          if (type.kind == TypeRef::Kind::kVoid) Fail({"'('"});
          FieldDecl field;
          field.modifiers = std::move(mods);
          field.type = std::move(type);
          field.name = std::move(name);
          if (PeekOp("=")) {
            Advance();
            field.init = ParseVariableInit();
          }
          ExpectPunct(";");
          m.node = std::move(field);
        }
      }
    }
    EndSpan(m.span);
    m.trivia.trailing = TakeTrailing();
    return m;
  }

  void ParseMethodRest(MethodDecl& method) {
    ExpectPunct("(");
    if (!PeekPunct(")")) {
      while (true) {
        Param p;
        p.modifiers = ParseModifiers();
        p.type = ParseType(false);
        if (PeekPunct("...")) {
          Advance();
          p.varargs = true;
        }
        p.name = ExpectIdent("parameter name").text;
        method.params.push_back(std::move(p));
        if (PeekPunct(",")) {
          Advance();
          continue;
        }
        break;
      }
    }
    ExpectPunct(")");
    if (PeekKeyword("throws")) {
      Advance();
      method.throws.push_back(ParseType(false));
      while (PeekPunct(",")) {
        Advance();
        method.throws.push_back(ParseType(false));
      }
    }
    if (PeekPunct(";")) {
      Advance();
    } else {
      method.body = ParseBlock();
    }
  }

  // ---- statements ----

  Block ParseBlock() {
    Block block;
    block.span = StartSpan();
    ExpectPunct("{");
    while (!PeekPunct("}")) {
      if (AtEof()) Fail({"'}'"});
      block.stmts.push_back(ParseStatement());
    }
    block.dangling = TakeLeading();
    Advance();
    EndSpan(block.span);
    return block;
  }

  LocalVarStmt ParseLocalVarDecl(std::vector<std::string> mods,
                                 bool allow_colon_end) {
    LocalVarStmt decl;
    decl.modifiers = std::move(mods);
    if (PeekIdent() && Peek().text == "var" && PeekIdent(1)) {
      Advance();
      decl.type = TypeRef::Var();
    } else {
      decl.type = ParseType(false);
    }
    decl.name = ExpectIdent("variable name").text;
    if (PeekOp("=")) {
      Advance();
      decl.init = ParseVariableInit();
    } else if (!allow_colon_end && !PeekPunct(";")) {
      Fail({"'='", "';'"});
    }
    return decl;
  }

  Expr ParseVariableInit() {
    if (PeekPunct("{")) return ParseArrayInit();
    return ParseExpr();
  }

  Expr ParseArrayInit() {
    Span span = StartSpan();
    ExpectPunct("{");
    ArrayInitExpr init;
    while (!PeekPunct("}")) {
      init.elements.push_back(ParseVariableInit());
      if (!PeekPunct(",")) break;
      Advance();
    }
    ExpectPunct("}");
    EndSpan(span);
    return Expr{std::move(init), span};
  }

  StmtBox ParseSubStatement() { return StmtBox(ParseStatement()); }

  Stmt ParseStatement() {
    Stmt s;
    s.trivia.leading = TakeLeading();
    s.span = StartSpan();
    s.node = ParseStatementNode();
    EndSpan(s.span);
    s.trivia.trailing = TakeTrailing();
    return s;
  }

  Stmt::Node ParseStatementNode() {
    if (PeekPunct("{")) return BlockStmt{ParseBlock()};
    if (PeekKeyword("return")) {
      Advance();
      ReturnStmt r;
      if (!PeekPunct(";")) r.value = ParseExpr();
      ExpectPunct(";");
      return r;
    }
    if (PeekKeyword("if")) {
      Advance();
      ExpectPunct("(");
      Expr cond = ParseExpr();
      ExpectPunct(")");
      StmtBox then_branch = ParseSubStatement();
      IfStmt stmt{std::move(cond), std::move(then_branch), std::nullopt};
      if (PeekKeyword("else")) {
        Advance();
        stmt.else_branch = ParseSubStatement();
      }
      return stmt;
    }
    if (PeekKeyword("while")) {
      Advance();
      ExpectPunct("(");
      Expr cond = ParseExpr();
      ExpectPunct(")");
      return WhileStmt{std::move(cond), ParseSubStatement()};
    }
    if (PeekKeyword("for")) return ParseFor();
    if (PeekKeyword("try")) return ParseTry();
    if (PeekKeyword("throw")) {
      Advance();
      Expr value = ParseExpr();
      ExpectPunct(";");
      return ThrowStmt{std::move(value)};
    }
    if (PeekKeyword("break")) {
      Advance();
      ExpectPunct(";");
      return BreakStmt{};
    }
    if (PeekKeyword("continue")) {
      Advance();
      ExpectPunct(";");
      return ContinueStmt{};
    }
    if (PeekKeyword("final") || PeekPunct("@")) {
      std::vector<std::string> mods = ParseModifiers();
      LocalVarStmt decl = ParseLocalVarDecl(std::move(mods), false);
      ExpectPunct(";");
      return decl;
    }
    if (LooksLikeDeclaration(false)) {
      LocalVarStmt decl = ParseLocalVarDecl({}, false);
      ExpectPunct(";");
      return decl;
    }
    if (!StartsExpression()) Fail({"statement"});
    Expr e = ParseExpr();
    ExpectPunct(";");
    return ExprStmt{std::move(e)};
  }

  bool StartsExpression() const {
    const Token& t = Peek();
    switch (t.kind) {
      case TokenKind::kIdentifier:
      case TokenKind::kLiteral:
        return true;
      case TokenKind::kKeyword:
        return t.text == "this" || t.text == "super" || t.text == "new" ||
               IsPrimitiveTypeName(t.text);
      case TokenKind::kOperator:
        return t.text == "++" || t.text == "--" || t.text == "!" ||
               t.text == "~" || t.text == "-" || t.text == "+";
      case TokenKind::kPunctuation:
        return t.text == "(";
      default:
        return false;
    }
  }

  Stmt::Node ParseFor() {
    ExpectKeyword("for");
    ExpectPunct("(");
    std::vector<std::string> mods;
    if (PeekKeyword("final") || PeekPunct("@")) mods = ParseModifiers();
    if (!mods.empty() || LooksLikeDeclaration(true)) {
      LocalVarStmt decl = ParseLocalVarDecl(std::move(mods), true);
      if (PeekOp(":") && !decl.init) {
        Advance();
        Expr iterable = ParseExpr();
        ExpectPunct(")");
        return ForEachStmt{std::move(decl.modifiers), std::move(decl.type),
                           std::move(decl.name), std::move(iterable),
                           ParseSubStatement(), {}};
      }
      ForStmt stmt{std::move(decl), {}, std::nullopt, {}, StmtBox(Stmt{})};
      ParseForRest(stmt);
      return stmt;
    }
    ForStmt stmt{std::nullopt, {}, std::nullopt, {}, StmtBox(Stmt{})};
    if (!PeekPunct(";")) {
      stmt.init_exprs.push_back(ParseExpr());
      while (PeekPunct(",")) {
        Advance();
        stmt.init_exprs.push_back(ParseExpr());
      }
    }
    ParseForRest(stmt);
    return stmt;
  }

  void ParseForRest(ForStmt& stmt) {
    ExpectPunct(";");
    if (!PeekPunct(";")) stmt.cond = ParseExpr();
    ExpectPunct(";");
    if (!PeekPunct(")")) {
      stmt.update.push_back(ParseExpr());
      while (PeekPunct(",")) {
        Advance();
        stmt.update.push_back(ParseExpr());
      }
    }
    ExpectPunct(")");
    stmt.body = ParseSubStatement();
  }

  Stmt::Node ParseTry() {
    ExpectKeyword("try");
    if (PeekPunct("(")) Fail({"'{' (try-with-resources is not supported)"});
    TryStmt stmt;
    stmt.body = ParseBlock();
    while (PeekKeyword("catch")) {
      Advance();
      ExpectPunct("(");
      CatchClause clause;
      clause.modifiers = ParseModifiers();
      clause.types.push_back(ParseType(false));
      while (PeekOp("|")) {
        Advance();
        clause.types.push_back(ParseType(false));
      }
      clause.name = ExpectIdent("exception variable").text;
      ExpectPunct(")");
      clause.body = ParseBlock();
      stmt.catches.push_back(std::move(clause));
    }
    if (PeekKeyword("finally")) {
      Advance();
      stmt.finally_block = ParseBlock();
    }
    if (stmt.catches.empty() && !stmt.finally_block) {
      Fail({"'catch'", "'finally'"});
    }
    return stmt;
  }

  // ---- expressions ----

  Expr Make(Expr::Node node, Span span) {
    EndSpan(span);
    return Expr{std::move(node), span};
  }

  Expr ParseExpr() {
    if (LooksLikeLambda()) return ParseLambda();
    Span span = StartSpan();
    Expr lhs = ParseConditional();
    std::string op;
    size_t width = PeekAssignOp(op);
    if (width == 0) return lhs;
    if (!IsAssignable(lhs)) Fail({"';'", "')'", "operator"});
    pos_ += width;
    Expr rhs = ParseExpr();
    return Make(AssignExpr{op, ExprBox(std::move(lhs)), ExprBox(std::move(rhs))},
                span);
  }

  static bool IsAssignable(const Expr& e) {
    return e.Is<NameExpr>() || e.Is<FieldAccessExpr>() ||
           e.Is<ArrayAccessExpr>();
  }

  // Returns the number of tokens forming an assignment operator at the
  // cursor, or 0.
  size_t PeekAssignOp(std::string& op) const {
    const Token& t = Peek();
    if (t.kind != TokenKind::kOperator) return 0;
    static constexpr std::string_view kSimple[] = {
        "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="};
    for (auto s : kSimple) {
      if (t.text == s) {
        op = t.text;
        return 1;
      }
    }
    if (t.text == ">" && PeekOp(">", 1) && Adjacent(0)) {
      if (PeekOp("=", 2) && Adjacent(1)) {
        op = ">>=";
        return 3;
      }
      if (PeekOp(">", 2) && Adjacent(1) && PeekOp("=", 3) && Adjacent(2)) {
        op = ">>>=";
        return 4;
      }
    }
    return 0;
  }

  // Binary operator at the cursor with its token width, or width 0.
  size_t PeekBinaryOp(std::string& op) const {
    const Token& t = Peek();
    if (t.Is(TokenKind::kKeyword, "instanceof")) {
      op = "instanceof";
      return 1;
    }
    if (t.kind != TokenKind::kOperator) return 0;
    if (t.text == ">") {
      if (PeekOp(">", 1) && Adjacent(0)) {
        if (PeekOp(">", 2) && Adjacent(1)) {
          if (PeekOp("=", 3) && Adjacent(2)) return 0;  // >>>=
          op = ">>>";
          return 3;
        }
        if (PeekOp("=", 2) && Adjacent(1)) return 0;  // >>=
        op = ">>";
        return 2;
      }
      if (PeekOp("=", 1) && Adjacent(0)) {
        op = ">=";
        return 2;
      }
      op = ">";
      return 1;
    }
    for (const auto& level : BinaryLevels()) {
      for (auto candidate : level.ops) {
        if (t.text == candidate) {
          op = t.text;
          return 1;
        }
      }
    }
    return 0;
  }

  static int Precedence(std::string_view op) {
    for (const auto& level : BinaryLevels()) {
      for (auto candidate : level.ops) {
        if (op == candidate) return level.precedence;
      }
    }
    return -1;
  }

  Expr ParseConditional() {
    Span span = StartSpan();
    Expr cond = ParseBinary(1);
    if (!PeekOp("?")) return cond;
    Advance();
    Expr then_expr = ParseExpr();
    ExpectOp(":");
    Expr else_expr = LooksLikeLambda() ? ParseLambda() : ParseConditional();
    return Make(ConditionalExpr{ExprBox(std::move(cond)),
                                ExprBox(std::move(then_expr)),
                                ExprBox(std::move(else_expr))},
                span);
  }

  Expr ParseBinary(int min_prec) {
    Span span = StartSpan();
    Expr lhs = ParseUnary();
    while (true) {
      std::string op;
      size_t width = PeekBinaryOp(op);
      if (width == 0) return lhs;
      int prec = Precedence(op);
      if (prec < min_prec) return lhs;
      pos_ += width;
      if (op == "instanceof") {
        TypeRef type = ParseType(false);
        lhs = Make(InstanceOfExpr{ExprBox(std::move(lhs)), std::move(type)},
                   span);
        continue;
      }
      Expr rhs = ParseBinary(prec + 1);
      lhs = Make(BinaryExpr{op, ExprBox(std::move(lhs)), ExprBox(std::move(rhs))},
                 span);
    }
  }

  // True when "( Type )" at the cursor is a cast rather than a parenthesized
  // expression.
  bool LooksLikeCast() {
    if (!PeekPunct("(")) return false;
    size_t save = pos_;
    bool result = false;
    try {
      Advance();
      bool primitive = PeekPrimitive();
      if (primitive || PeekIdent()) {
        ParseType(false);
        if (PeekPunct(")")) {
          Advance();
          const Token& next = Peek();
          if (primitive) {
            result = true;
          } else {
            result = next.kind == TokenKind::kIdentifier ||
                     next.kind == TokenKind::kLiteral ||
                     next.Is(TokenKind::kPunctuation, "(") ||
                     next.Is(TokenKind::kOperator, "!") ||
                     next.Is(TokenKind::kOperator, "~") ||
                     next.Is(TokenKind::kKeyword, "this") ||
                     next.Is(TokenKind::kKeyword, "super") ||
                     next.Is(TokenKind::kKeyword, "new");
          }
        }
      }
    } catch (const SyntaxError&) {
      result = false;
    }
    pos_ = save;
    return result;
  }

  Expr ParseUnary() {
    Span span = StartSpan();
    const Token& t = Peek();
    if (t.kind == TokenKind::kOperator &&
        (t.text == "!" || t.text == "~" || t.text == "-" || t.text == "+" ||
         t.text == "++" || t.text == "--")) {
      std::string op = Advance().text;
      Expr operand = ParseUnary();
      return Make(UnaryExpr{op, false, ExprBox(std::move(operand))}, span);
    }
    if (LooksLikeCast()) {
      Advance();
      TypeRef type = ParseType(false);
      ExpectPunct(")");
      Expr operand = LooksLikeLambda() ? ParseLambda() : ParseUnary();
      return Make(CastExpr{std::move(type), ExprBox(std::move(operand))}, span);
    }
    Expr e = ParsePostfix(ParsePrimary(), span);
    while (PeekOp("++") || PeekOp("--")) {
      std::string op = Advance().text;
      e = Make(UnaryExpr{op, true, ExprBox(std::move(e))}, span);
    }
    return e;
  }

  std::vector<Expr> ParseArgs() {
    ExpectPunct("(");
    std::vector<Expr> args;
    if (!PeekPunct(")")) {
      while (true) {
        args.push_back(ParseExpr());
        if (!PeekPunct(",")) break;
        Advance();
      }
    }
    ExpectPunct(")");
    return args;
  }

  // Name chain (NameExpr / FieldAccessExpr over names) as dotted text.
  static std::optional<std::string> NameChain(const Expr& e) {
    if (const auto* n = e.As<NameExpr>()) return n->name;
    if (const auto* f = e.As<FieldAccessExpr>()) {
      auto base = NameChain(*f->object);
      if (base) return *base + "." + f->name;
    }
    return std::nullopt;
  }

  Expr ParsePostfix(Expr e, Span span) {
    while (true) {
      if (PeekPunct(".")) {
        if (PeekKeyword("class", 1)) {
          auto chain = NameChain(e);
          if (!chain) Fail({"identifier"});
          Advance();
          Advance();
          e = Make(ClassLiteralExpr{TypeRef::Named(*chain)}, span);
          continue;
        }
        Advance();
        if (PeekOp("<")) Fail({"identifier (explicit type arguments are not supported)"});
        std::string name = ExpectIdent("member name").text;
        if (PeekPunct("(")) {
          std::vector<Expr> args = ParseArgs();
          e = Make(MethodCallExpr{ExprBox(std::move(e)), std::move(name),
                                  std::move(args)},
                   span);
        } else {
          e = Make(FieldAccessExpr{ExprBox(std::move(e)), std::move(name), {}},
                   span);
        }
        continue;
      }
      if (PeekPunct("[")) {
        if (PeekPunct("]", 1)) {
          // "Foo[].class"
          auto chain = NameChain(e);
          if (!chain) Fail({"expression"});
          TypeRef type = TypeRef::Named(*chain);
          type.dims = ParseDims();
          if (!PeekPunct(".") || !PeekKeyword("class", 1)) Fail({"'.class'"});
          Advance();
          Advance();
          e = Make(ClassLiteralExpr{std::move(type)}, span);
          continue;
        }
        Advance();
        Expr index = ParseExpr();
        ExpectPunct("]");
        e = Make(ArrayAccessExpr{ExprBox(std::move(e)), ExprBox(std::move(index))},
                 span);
        continue;
      }
      return e;
    }
  }

  Expr ParsePrimary() {
    Span span = StartSpan();
    const Token& t = Peek();
    if (t.kind == TokenKind::kLiteral) {
      std::string text = Advance().text;
      LiteralKind kind = ClassifyLiteral(text);
      return Make(LiteralExpr{kind, std::move(text)}, span);
    }
    if (t.Is(TokenKind::kKeyword, "this") || t.Is(TokenKind::kKeyword, "super")) {
      std::string word = Advance().text;
      if (PeekPunct("(")) {
        std::vector<Expr> args = ParseArgs();
        return Make(MethodCallExpr{std::nullopt, word, std::move(args)}, span);
      }
      if (word == "this") return Make(ThisExpr{}, span);
      if (!PeekPunct(".")) Fail({"'.'"});
      return Make(SuperExpr{}, span);
    }
    if (t.kind == TokenKind::kIdentifier) {
      std::string name = Advance().text;
      if (PeekPunct("(")) {
        std::vector<Expr> args = ParseArgs();
        return Make(MethodCallExpr{std::nullopt, std::move(name), std::move(args)},
                    span);
      }
      return Make(NameExpr{std::move(name), {}}, span);
    }
    if (PeekPrimitive()) {
      TypeRef type = TypeRef::Primitive(Advance().text);
      type.dims = ParseDims();
      if (!PeekPunct(".") || !PeekKeyword("class", 1)) Fail({"'.class'"});
      Advance();
      Advance();
      return Make(ClassLiteralExpr{std::move(type)}, span);
    }
    if (t.Is(TokenKind::kKeyword, "void") && PeekPunct(".", 1) &&
        PeekKeyword("class", 2)) {
      Advance();
      Advance();
      Advance();
      return Make(ClassLiteralExpr{TypeRef::Void()}, span);
    }
    if (t.Is(TokenKind::kPunctuation, "(")) {
      Advance();
      Expr inner = ParseExpr();
      ExpectPunct(")");
      return inner;
    }
    if (t.Is(TokenKind::kKeyword, "new")) return ParseNew();
    Fail({"expression"});
  }

  Expr ParseNew() {
    Span span = StartSpan();
    ExpectKeyword("new");
    TypeRef type;
    Span type_span = StartSpan();
    if (PeekPrimitive()) {
      type = TypeRef::Primitive(Advance().text);
    } else {
      type = TypeRef::Named(ParseDottedName());
      if (PeekOp("<")) type.args = ParseTypeArgs(type.diamond);
    }
    EndSpan(type_span);
    type.span = type_span;
    if (PeekPunct("[")) {
      NewArrayExpr arr;
      arr.element = std::move(type);
      while (PeekPunct("[") && !PeekPunct("]", 1)) {
        Advance();
        arr.dim_exprs.push_back(ParseExpr());
        ExpectPunct("]");
      }
      arr.extra_dims = ParseDims();
      if (arr.dim_exprs.empty()) {
        if (!PeekPunct("{")) Fail({"array initializer"});
        arr.init = ExprBox(ParseArrayInit());
      }
      return Make(std::move(arr), span);
    }
    if (type.kind == TypeRef::Kind::kPrimitive) Fail({"'['"});
    std::vector<Expr> args = ParseArgs();
    if (PeekPunct("{")) Fail({"';' (anonymous classes are not supported)"});
    return Make(NewExpr{std::move(type), std::move(args)}, span);
  }

  bool LooksLikeLambda() const {
    if (PeekIdent() && PeekOp("->", 1)) return true;
    if (!PeekPunct("(")) return false;
    int depth = 0;
    for (size_t i = 0;; ++i) {
      const Token& t = Peek(i);
      if (t.kind == TokenKind::kEof) return false;
      if (t.Is(TokenKind::kPunctuation, "(")) ++depth;
      if (t.Is(TokenKind::kPunctuation, ")")) {
        if (--depth == 0) return PeekOp("->", i + 1);
      }
    }
  }

  Expr ParseLambda() {
    Span span = StartSpan();
    std::vector<LambdaParam> params;
    bool parenthesized = true;
    if (PeekIdent()) {
      parenthesized = false;
      params.push_back({std::nullopt, Advance().text, {}});
    } else {
      ExpectPunct("(");
      while (!PeekPunct(")")) {
        LambdaParam p;
        if (PeekIdent() && (PeekPunct(",", 1) || PeekPunct(")", 1))) {
          p.name = Advance().text;
        } else {
          ParseModifiers();
          p.type = ParseType(false);
          p.name = ExpectIdent("parameter name").text;
        }
        params.push_back(std::move(p));
        if (!PeekPunct(",")) break;
        Advance();
      }
      ExpectPunct(")");
    }
    ExpectOp("->");
    if (PeekPunct("{")) {
      return Make(LambdaExpr{std::move(params), parenthesized,
                             Box<Block>(ParseBlock())},
                  span);
    }
    return Make(LambdaExpr{std::move(params), parenthesized, ExprBox(ParseExpr())},
                span);
  }

  std::vector<Token> toks_;
  std::vector<Comment> comments_;
  size_t pos_ = 0;
};

}  // namespace

CompilationUnit Parse(std::string_view source) {
  return Parser(source).ParseUnit();
}

Expr ParseExpression(std::string_view source) {
  return Parser(source).ParseStandaloneExpression();
}

}  // namespace jtb::java
