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

#ifndef JTB_JAVA_LEXER_H_
#define JTB_JAVA_LEXER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jtb::java {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kLiteral,
  kOperator,
  kPunctuation,
  kComment,
  kWhitespace,
  kEof,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string text;
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes

  bool IsTrivia() const {
    return kind == TokenKind::kComment || kind == TokenKind::kWhitespace;
  }
  bool Is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
};

// Base for all frontend diagnostics that carry a source position.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

class LexError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// Lossless tokenization: concatenating the text of every returned token
// (whitespace and comments included) reproduces `source` byte for byte. No
// trailing EOF token is emitted. `>` is always lexed as a single character
// so that generic argument lists close cleanly; the parser reassembles shift
// and comparison operators from adjacent tokens.
std::vector<Token> Lex(std::string_view source);

}  // namespace jtb::java

#endif  // JTB_JAVA_LEXER_H_
