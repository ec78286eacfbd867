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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "jtb/java/ast.h"
#include "jtb/java/keywords.h"
#include "jtb/java/lexer.h"
#include "jtb/java/parser.h"
#include "jtb/java/render.h"
#include "test_util.h"

namespace jtb::java {
namespace {

using ::jtb::testing::ReadFixture;

const std::vector<std::string>& FixtureNames() {
  static const std::vector<std::string> names = {
      "java/JodaTime05.java",     "java/rename_override.java",
      "java/lower_field.java",    "java/keyword_comment.java",
      "java/thalia_main.java",    "java/logger_example.java",
      "java/kitchen_sink.java",
  };
  return names;
}

std::string Join(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t.text;
  return out;
}

TEST(KeywordsTest, FiftyReservedKeywords) {
  EXPECT_EQ(ReservedKeywords().size(), 50u);
  EXPECT_TRUE(IsReservedKeyword("goto"));
  EXPECT_TRUE(IsReservedKeyword("const"));
  EXPECT_FALSE(IsReservedKeyword("var"));
  EXPECT_FALSE(IsReservedKeyword("true"));
  EXPECT_TRUE(IsReservedWord("null"));
  EXPECT_TRUE(IsIdentifier("$x_1"));
  EXPECT_FALSE(IsIdentifier("1x"));
  EXPECT_FALSE(IsIdentifier("class"));
}

TEST(LexerTest, EmptyInput) { EXPECT_TRUE(Lex("").empty()); }

TEST(LexerTest, TrailingLineComment) {
  auto tokens = Lex("int a = 1; // x");
  ASSERT_FALSE(tokens.empty());
  EXPECT_EQ(tokens.back().kind, TokenKind::kComment);
  EXPECT_EQ(tokens.back().text, "// x");
  EXPECT_EQ(tokens[0].kind, TokenKind::kKeyword);
}

TEST(LexerTest, LosslessOnFixtures) {
  for (const auto& name : FixtureNames()) {
    std::string source = ReadFixture(name);
    EXPECT_EQ(Join(Lex(source)), source) << name;
  }
}

TEST(LexerTest, LosslessOnAwkwardText) {
  const std::string text =
      "a\t>>>= b /* c\n d */ \"s\\\"q\" 'x' '\\n' 0x1F 1e-3 2.5f 7L\r\n"
      "x->y::z ... @A\n";
  EXPECT_EQ(Join(Lex(text)), text);
}

TEST(LexerTest, PositionsAreOneBased) {
  auto tokens = Lex("a\n  bb");
  EXPECT_EQ(tokens[0].line, 1);
  EXPECT_EQ(tokens[0].column, 1);
  EXPECT_EQ(tokens.back().text, "bb");
  EXPECT_EQ(tokens.back().line, 2);
  EXPECT_EQ(tokens.back().column, 3);
}

TEST(LexerTest, UnterminatedStringReportsPosition) {
  try {
    Lex("int a;\nString s = \"abc;\n");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 12);
  }
}

TEST(LexerTest, UnterminatedCommentReportsPosition) {
  try {
    Lex("x /* never closed");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(LexerTest, JodaTimeFixtureLexes) {
  EXPECT_NO_THROW(Lex(ReadFixture("java/JodaTime05.java")));
}

TEST(ParserTest, OverrideFixtureShape) {
  CompilationUnit unit = Parse(ReadFixture("java/rename_override.java"));
  ASSERT_EQ(unit.types.size(), 1u);
  const ClassDecl& c = unit.types[0];
  EXPECT_EQ(c.name, "C");
  ASSERT_EQ(c.extends.size(), 1u);
  EXPECT_EQ(c.extends[0].name, "A");
  int fields = 0, methods = 0;
  for (const auto& m : c.members) {
    fields += m.As<FieldDecl>() != nullptr;
    methods += m.As<MethodDecl>() != nullptr;
  }
  EXPECT_EQ(fields, 1);
  EXPECT_EQ(methods, 2);
  ASSERT_TRUE(unit.package.has_value());
  EXPECT_EQ(unit.package->name, "p");
}

TEST(ParserTest, SingleReturnMethod) {
  CompilationUnit unit = Parse("class C { void m() { return; } }");
  ASSERT_EQ(unit.types.size(), 1u);
  ASSERT_EQ(unit.types[0].members.size(), 1u);
  const auto* m = unit.types[0].members[0].As<MethodDecl>();
  ASSERT_NE(m, nullptr);
  ASSERT_TRUE(m->body.has_value());
  ASSERT_EQ(m->body->stmts.size(), 1u);
  const auto* r = m->body->stmts[0].As<ReturnStmt>();
  ASSERT_NE(r, nullptr);
  EXPECT_FALSE(r->value.has_value());
}

TEST(ParserTest, ErrorNamesFirstOffendingToken) {
  try {
    Parse("class C { if }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 11);
    EXPECT_NE(e.found().find("'if'"), std::string::npos);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_NE(std::string(e.what()).find("1:11"), std::string::npos);
  }
}

TEST(ParserTest, RejectsUnsupportedConstructs) {
  for (const char* src : {
           "class C { class D {} }",
           "class C { void m() { int a, b; } }",
           "class C { void m() { switch (x) { } } }",
           "class C { List<?> l; }",
           "class C { Object o = new Object() { }; }",
           "class C { void m() { try (R r = open()) { } } }",
           "class C { void m() { ; } }",
           "class C { @A(1) void m() { } }",
       }) {
    EXPECT_THROW(Parse(src), ParseError) << src;
  }
}

TEST(ParserTest, ThaliaFixtureGenericsAndCast) {
  CompilationUnit unit = Parse(ReadFixture("java/thalia_main.java"));
  const auto* m = unit.types[0].members[0].As<MethodDecl>();
  ASSERT_NE(m, nullptr);
  ASSERT_EQ(m->type_params.size(), 3u);
  EXPECT_EQ(m->type_params[1].name, "I");
  EXPECT_EQ(m->type_params[1].bounds[0].name, "ZonedChronology");
  ASSERT_EQ(m->throws.size(), 1u);
  const auto* decl = m->body->stmts[0].As<LocalVarStmt>();
  ASSERT_NE(decl, nullptr);
  const auto* cast = decl->init->As<CastExpr>();
  ASSERT_NE(cast, nullptr);
  EXPECT_EQ(cast->type.name, "long");
  EXPECT_TRUE(cast->operand->Is<UnaryExpr>());
  EXPECT_EQ(unit.imports.size(), 4u);
}

TEST(ParserTest, ShiftOperatorsReassembled) {
  auto e = ParseExpression("a >> 2 >>> 1");
  const auto* outer = e.As<BinaryExpr>();
  ASSERT_NE(outer, nullptr);
  EXPECT_EQ(outer->op, ">>>");
  EXPECT_EQ(outer->lhs->As<BinaryExpr>()->op, ">>");
  auto ge = ParseExpression("a >= b");
  EXPECT_EQ(ge.As<BinaryExpr>()->op, ">=");
  auto nested = Parse("class C { Map<String, List<String>> m; }");
  const auto* f = nested.types[0].members[0].As<FieldDecl>();
  ASSERT_EQ(f->type.args.size(), 2u);
  EXPECT_EQ(f->type.args[1].args[0].name, "String");
}

TEST(ParserTest, PrecedenceAndAssociativity) {
  auto e = ParseExpression("a - b - c * d");
  const auto* top = e.As<BinaryExpr>();
  ASSERT_NE(top, nullptr);
  EXPECT_EQ(top->op, "-");
  EXPECT_EQ(top->lhs->As<BinaryExpr>()->op, "-");
  EXPECT_EQ(top->rhs->As<BinaryExpr>()->op, "*");
  auto assign = ParseExpression("x = y = 1");
  EXPECT_TRUE(assign.As<AssignExpr>()->value->Is<AssignExpr>());
}

TEST(ParserTest, CastVersusParenthesizedExpression) {
  EXPECT_TRUE(ParseExpression("(String) o").Is<CastExpr>());
  EXPECT_TRUE(ParseExpression("(a) + b").Is<BinaryExpr>());
  EXPECT_TRUE(ParseExpression("(int) -x").Is<CastExpr>());
  EXPECT_TRUE(ParseExpression("(x -> x)").Is<LambdaExpr>());
}

TEST(ParserTest, CommentTriviaAttachment) {
  CompilationUnit unit = Parse(
      "class C {\n"
      "  void m() {\n"
      "    // before\n"
      "    a(); // after\n"
      "    // dangling\n"
      "  }\n"
      "}\n");
  const auto* m = unit.types[0].members[0].As<MethodDecl>();
  const Stmt& s = m->body->stmts[0];
  EXPECT_EQ(s.trivia.leading, (std::vector<std::string>{"// before"}));
  EXPECT_EQ(s.trivia.trailing, "// after");
  EXPECT_EQ(m->body->dangling, (std::vector<std::string>{"// dangling"}));
}

TEST(RenderTest, EmptyClass) {
  EXPECT_EQ(Render(Parse("class C { }")), "class C {\n}\n");
}

TEST(RenderTest, TrailingCommentStaysOnStatementLine) {
  std::string out = Render(Parse("class C { void m() { a(); // note\n } }"));
  EXPECT_NE(out.find("    a(); // note\n"), std::string::npos) << out;
}

TEST(RenderTest, OmitImports) {
  CompilationUnit unit = Parse(ReadFixture("java/JodaTime05.java"));
  std::string out = Render(unit, {.include_imports = false});
  EXPECT_EQ(out.find("import"), std::string::npos);
  EXPECT_NE(out.find("package jodatime;"), std::string::npos);
}

TEST(RenderTest, RoundTripOnFixtures) {
  for (const auto& name : FixtureNames()) {
    CompilationUnit first = Parse(ReadFixture(name));
    std::string rendered = Render(first);
    CompilationUnit second = Parse(rendered);
    EXPECT_EQ(second, first) << name << "\n" << rendered;
    // Rendering is canonical: a second pass is a fixed point.
    EXPECT_EQ(Render(second), rendered) << name;
  }
}

TEST(RenderTest, ParenthesesFollowPrecedence) {
  for (const char* src : {
           "(a + b) * c", "a - (b - c)", "!(a && b)", "(a = b) + 1",
           "a ? b : c ? d : e", "(a ? b : c) ? d : e", "-(-x)", "- -x",
           "(Object) (-x)", "(int) -x", "(new int[3])[0]", "new int[3].length",
           "(x -> x).apply(1)", "a instanceof B && c", "~(a | b) & c",
           "(String) o.toString()", "((String) o).length()", "x++ + ++y",
       }) {
    Expr first = ParseExpression(src);
    std::string rendered = RenderExpr(first);
    EXPECT_EQ(ParseExpression(rendered), first) << src << " -> " << rendered;
  }
}

}  // namespace
}  // namespace jtb::java
