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

#ifndef JTB_JAVA_RENDER_H_
#define JTB_JAVA_RENDER_H_

#include <string>

#include "jtb/java/ast.h"

namespace jtb::java {

struct RenderOptions {
  bool include_imports = true;
};

// Canonical pretty-printer: two-space indentation, one statement per line,
// parentheses derived from operator precedence. Comment trivia is re-emitted
// where it was attached, so that Parse(Render(unit)) == unit.
std::string Render(const CompilationUnit& unit, const RenderOptions& options = {});

std::string RenderExpr(const Expr& expr);
std::string RenderType(const TypeRef& type);
std::string RenderStmt(const Stmt& stmt, int indent = 0);

}  // namespace jtb::java

#endif  // JTB_JAVA_RENDER_H_
