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

#ifndef JTB_INFERENCE_H_
#define JTB_INFERENCE_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jtb/java/ast.h"
#include "jtb/kb.h"
#include "jtb/snippet.h"

namespace jtb::infer {

struct TypeVar {
  enum class Kind {
    kType,       // external simple type name; solved against the KB
    kPrimitive,  // primitive type name; fixed
    kQualified,  // package-qualified type written in full; fixed
    kOpaque,     // local class, type parameter, array, nested type: unknown
    kExpr,       // intermediate expression
  };

  int id = 0;
  Kind kind = Kind::kExpr;
  std::string origin;  // type name, or rendered expression

  friend bool operator==(const TypeVar&, const TypeVar&) = default;
};

std::string_view TypeVarKindName(TypeVar::Kind kind);

struct Constraint {
  enum class Kind {
    kSimpleName,       // tv, name
    kHasMethod,        // tv, name, args, result
    kHasStaticMethod,  // tv, name, args, result
    kHasField,         // tv, name, result
    kHasConstructor,   // tv, args
    kAssignableTo,     // tv (sub), result (super)
    kIsLiteral,        // tv, name (primitive or java.lang.String)
  };

  Kind kind = Kind::kSimpleName;
  int tv = 0;
  std::string name;
  std::vector<int> args;
  int result = -1;

  std::string ToString() const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct ConstraintSystem {
  // Ordered: kType by name, then kPrimitive, kQualified, kOpaque by origin,
  // then kExpr in source order. tvs[i].id == i.
  std::vector<TypeVar> tvs;
  std::vector<Constraint> constraints;

  // Line-oriented text form used for golden files.
  std::string Dump() const;
};

// Walks a parsed unit (imports are ignored) and emits typing constraints.
// Constructs outside the model contribute nothing.
ConstraintSystem ExtractConstraints(const java::CompilationUnit& unit);

// A candidate set; nullopt is the unconstrained domain, which admits every
// type including ones the KB does not know.
using Domain = std::optional<std::set<std::string>>;
// A concrete choice; nullopt is a type outside the KB's knowledge.
using Value = std::optional<std::string>;

struct Assignment {
  std::vector<Domain> domains;     // after filtering, before tie-breaking
  std::vector<Value> values;       // final choice per type variable
  std::vector<bool> unsatisfied;   // a revision would have emptied it
  std::vector<bool> disabled;      // per constraint, dropped after a conflict
  int rounds = 0;                  // filtering rounds including the last
  size_t candidate_budget = 0;     // summed sizes when domains became finite
  bool search_complete = false;    // labeling found a fully checked model
  std::vector<size_t> violations;  // enabled constraints the values break

  // Every resolvable kType variable filtered down to one candidate.
  bool solved = false;
};

struct SolveOptions {
  int node_cap = 20000;
};

Assignment Solve(const ConstraintSystem& system, const kb::KnowledgeBase& kb,
                 const SolveOptions& options = {});

// Assignment compatibility of `actual` to `declared` (argument passing,
// assignment): identity, primitive widening, boxing, KB supertype chains;
// relations the KB cannot decide count as compatible.
bool Compatible(const kb::KnowledgeBase& kb, const Value& actual,
                const Value& declared);

// Indices of constraints violated by a concrete assignment. Constraints with
// `skip[i]` set are ignored; `skip` may be empty.
std::vector<size_t> CheckAssignment(const ConstraintSystem& system,
                                    const kb::KnowledgeBase& kb,
                                    const std::vector<Value>& values,
                                    const std::vector<bool>& skip = {});

struct Inference {
  ImportSet imports;
  ConstraintSystem system;
  Assignment assignment;
  std::vector<std::string> unresolved;   // type names with no KB candidate
  std::vector<std::string> unsatisfied;  // origins of conflicted variables
};

// Strips imports, parses, extracts, solves, and emits the chosen fqn of every
// kType variable outside java.lang and the snippet's own package. Parse
// errors propagate.
Inference Infer(const Snippet& snippet, const kb::KnowledgeBase& kb);
ImportSet InferImports(const Snippet& snippet, const kb::KnowledgeBase& kb);

}  // namespace jtb::infer

#endif  // JTB_INFERENCE_H_
