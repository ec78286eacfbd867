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

#ifndef JTB_JAVA_PARSER_H_
#define JTB_JAVA_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "jtb/java/ast.h"
#include "jtb/java/lexer.h"

namespace jtb::java {

// A syntax error naming the first offending token and what would have been
// accepted in its place.
class ParseError : public SyntaxError {
 public:
  ParseError(int line, int column, std::string found,
             std::vector<std::string> expected);
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string found_;
  std::vector<std::string> expected_;
};

// Parses a whole compilation unit. Throws LexError or ParseError.
CompilationUnit Parse(std::string_view source);

// Parses a single expression (used by tests and tooling).
Expr ParseExpression(std::string_view source);

}  // namespace jtb::java

#endif  // JTB_JAVA_PARSER_H_
