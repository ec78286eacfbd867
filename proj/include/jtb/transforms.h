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

#ifndef JTB_TRANSFORMS_H_
#define JTB_TRANSFORMS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jtb/java/ast.h"
#include "jtb/snippet.h"
#include "json.hpp"

namespace jtb::transforms {

// Original → fresh names per namespace. Variables are renamed per
// declaration, so the same original name may appear more than once.
struct RenameMap {
  std::vector<std::pair<std::string, std::string>> variables;
  std::map<std::string, std::string> methods;
  std::map<std::string, std::string> classes;
  std::map<std::string, std::string> packages;
  std::set<std::string> skip_list;

  std::vector<std::string> FreshNames() const;
  nlohmann::json ToJson() const;
  static RenameMap FromJson(const nlohmann::json& j);

  friend bool operator==(const RenameMap&, const RenameMap&) = default;
};

struct RenameResult {
  java::CompilationUnit unit;
  RenameMap map;
};

// Renames variables (scope-aware, one fresh name per declaration), methods
// not in the skip list, classes with their constructors, and the package.
// Calls with a receiver, @Override methods, and `main` are never renamed;
// neither are imports or names the snippet does not declare.
RenameResult RenameIdentifiers(java::CompilationUnit unit, uint64_t seed);

// Undoes RenameIdentifiers. Fresh names are globally unique, so every
// occurrence of one is mapped back regardless of position.
java::CompilationUnit InvertRename(java::CompilationUnit unit,
                                   const RenameMap& map);

// Three-address style lowering: hoists each eligible sub-expression into a
// preceding `var V = E;`, outermost first, until nothing is left to hoist;
// then moves field initializers into initializer blocks placed before the
// field (static ones into `static` blocks).
java::CompilationUnit LowerCode(java::CompilationUnit unit, uint64_t seed);

// Appends " // <kw>" to every line, kw drawn uniformly (with replacement)
// from the reserved keywords. A final newline does not start a new line.
std::string AddKeywordComments(std::string_view source, uint64_t seed);

// Removes exactly the suffixes added by AddKeywordComments.
std::string StripKeywordComments(std::string_view source);

enum class TransformKind { kRename, kLower, kComment, kAll };

std::optional<TransformKind> ParseTransformKind(std::string_view name);
std::string_view TransformKindName(TransformKind kind);

struct TransformOutput {
  Snippet snippet;
  std::optional<RenameMap> rename_map;
};

// Transforms the import-stripped body of a snippet and re-inserts the
// original import lines right after the package declaration (or at the top
// when there is none). Ground truth is unchanged. `seed` is the per-snippet
// seed; each stage derives its own stream from it. Throws the frontend's
// SyntaxError when the snippet does not parse.
TransformOutput ApplyTransform(const Snippet& snippet, TransformKind kind,
                               uint64_t seed);

// rename → lower → keyword comments.
Snippet ApplyAll(const Snippet& snippet, uint64_t seed);

// Collects every identifier token in the unit's canonical rendering.
std::set<std::string> IdentifiersIn(const java::CompilationUnit& unit);

}  // namespace jtb::transforms

#endif  // JTB_TRANSFORMS_H_
