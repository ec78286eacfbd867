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

#include "jtb/java/lexer.h"

#include <array>

#include "jtb/java/keywords.h"

namespace jtb::java {

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kLiteral: return "literal";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kComment: return "comment";
    case TokenKind::kWhitespace: return "whitespace";
    case TokenKind::kEof: return "end of input";
  }
  return "?";
}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

// Longest match first. '>' is deliberately absent from multi-char entries.
constexpr std::array<std::string_view, 34> kOperators = {
    "<<=", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", "+=", "-=",
    "*=",  "/=", "%=", "&=", "|=", "^=", "<<", "=",  "<",  ">",  "!",  "~",
    "?",   ":",  "+",  "-",  "*",  "/",  "&",  "|",  "^",  "%",
};
constexpr std::string_view kPunctuation = "(){}[];,.@";

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsIdentStart(char c) {
  auto u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || u >= 0x80;
}
bool IsIdentPart(char c) { return IsIdentStart(c) || IsDigit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) out.push_back(Next());
    return out;
  }

 private:
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  Token Make(TokenKind kind, size_t start, int line, int col) {
    Token t;
    t.kind = kind;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.line = line;
    t.column = col;
    for (char c : t.text) {
      if (c == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
    return t;
  }

  Token Next() {
    const size_t start = pos_;
    const int line = line_, col = col_;
    char c = Peek();
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
      while (pos_ < src_.size() &&
             (Peek() == ' ' || Peek() == '\t' || Peek() == '\n' ||
              Peek() == '\r' || Peek() == '\f')) {
        ++pos_;
      }
      return Make(TokenKind::kWhitespace, start, line, col);
    }
    if (c == '/' && Peek(1) == '/') {
      while (pos_ < src_.size() && Peek() != '\n' && Peek() != '\r') ++pos_;
      return Make(TokenKind::kComment, start, line, col);
    }
    if (c == '/' && Peek(1) == '*') {
      size_t end = src_.find("*/", pos_ + 2);
      if (end == std::string_view::npos) {
        throw LexError(line, col, "unterminated block comment");
      }
      pos_ = end + 2;
      return Make(TokenKind::kComment, start, line, col);
    }
    if (c == '"' || c == '\'') {
      ++pos_;
      while (true) {
        if (pos_ >= src_.size() || Peek() == '\n' || Peek() == '\r') {
          throw LexError(line, col,
                         c == '"' ? "unterminated string literal"
                                  : "unterminated character literal");
        }
        if (Peek() == '\\') {
          pos_ += 2;
          continue;
        }
        if (Peek() == c) {
          ++pos_;
          break;
        }
        ++pos_;
      }
      return Make(TokenKind::kLiteral, start, line, col);
    }
    if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
      LexNumber();
      return Make(TokenKind::kLiteral, start, line, col);
    }
    if (IsIdentStart(c)) {
      while (pos_ < src_.size() && IsIdentPart(Peek())) ++pos_;
      std::string_view word = src_.substr(start, pos_ - start);
      TokenKind kind = TokenKind::kIdentifier;
      if (word == "true" || word == "false" || word == "null") {
        kind = TokenKind::kLiteral;
      } else if (IsReservedKeyword(word)) {
        kind = TokenKind::kKeyword;
      }
      return Make(kind, start, line, col);
    }
    if (c == '.' && Peek(1) == '.' && Peek(2) == '.') {
      pos_ += 3;
      return Make(TokenKind::kPunctuation, start, line, col);
    }
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        pos_ += op.size();
        return Make(TokenKind::kOperator, start, line, col);
      }
    }
    if (kPunctuation.find(c) != std::string_view::npos) {
      ++pos_;
      return Make(TokenKind::kPunctuation, start, line, col);
    }
    throw LexError(line, col,
                   std::string("unexpected character '") + c + "'");
  }

  void LexNumber() {
    auto digits = [&](bool hex) {
      while (pos_ < src_.size()) {
        char d = Peek();
        bool ok = IsDigit(d) || d == '_' ||
                  (hex && ((d >= 'a' && d <= 'f') || (d >= 'A' && d <= 'F')));
        if (!ok) break;
        ++pos_;
      }
    };
    if (Peek() == '0' && (Peek(1) == 'x' || Peek(1) == 'X' || Peek(1) == 'b' ||
                          Peek(1) == 'B')) {
      bool hex = Peek(1) == 'x' || Peek(1) == 'X';
      pos_ += 2;
      digits(hex);
    } else {
      digits(false);
      if (Peek() == '.' && IsDigit(Peek(1))) {
        ++pos_;
        digits(false);
      } else if (Peek() == '.' && !IsIdentStart(Peek(1)) && Peek(1) != '.') {
        ++pos_;  // "1." is a valid double literal
      }
      if (Peek() == 'e' || Peek() == 'E') {
        size_t save = pos_;
        ++pos_;
        if (Peek() == '+' || Peek() == '-') ++pos_;
        if (IsDigit(Peek())) {
          digits(false);
        } else {
          pos_ = save;
        }
      }
    }
    char s = Peek();
    if (s == 'l' || s == 'L' || s == 'f' || s == 'F' || s == 'd' || s == 'D') {
      ++pos_;
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> Lex(std::string_view source) { return Lexer(source).Run(); }

}  // namespace jtb::java
