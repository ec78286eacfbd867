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

#ifndef JTB_JAVA_BINDINGS_H_
#define JTB_JAVA_BINDINGS_H_

#include <optional>
#include <string>
#include <vector>

#include "jtb/java/ast.h"

namespace jtb::java {

struct VariableDecl {
  enum class Kind { kField, kLocal, kParam, kLambdaParam, kForEach, kCatch };

  Kind kind = Kind::kLocal;
  std::string name;
  std::optional<TypeRef> type;  // absent for untyped lambda parameters
  std::string owner;            // enclosing class
};

// Variable declarations of a compilation unit; DeclRef::id indexes `decls`.
struct Bindings {
  std::vector<VariableDecl> decls;

  const VariableDecl* Get(const DeclRef& ref) const {
    if (ref.id < 0 || static_cast<size_t>(ref.id) >= decls.size()) {
      return nullptr;
    }
    return &decls[ref.id];
  }
};

// Scope-aware resolution of variable references. Fills every DeclRef in the
// unit: declaring sites get fresh ids, and each NameExpr or FieldAccessExpr
// that denotes a variable declared in the unit points at that declaration.
// Anything else (types, packages, inherited members of external classes) is
// left at -1. Re-running on an already resolved unit is safe.
Bindings ResolveBindings(CompilationUnit& unit);

}  // namespace jtb::java

#endif  // JTB_JAVA_BINDINGS_H_
