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

#include <string>
#include <utility>
#include <vector>

#include "jtb/java/keywords.h"
#include "jtb/java/parser.h"
#include "jtb/java/render.h"
#include "jtb/random.h"
#include "jtb/transforms.h"

namespace jtb::transforms {
namespace {

constexpr std::string_view kCommentPrefix = " // ";

struct Line {
  std::string_view body;
  std::string_view ending;  // "\n", "\r\n", or empty for the last line
};

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back({text.substr(start), {}});
      break;
    }
    size_t body_end = nl;
    if (body_end > start && text[body_end - 1] == '\r') --body_end;
    lines.push_back({text.substr(start, body_end - start),
                     text.substr(body_end, nl + 1 - body_end)});
    start = nl + 1;
  }
  return lines;
}

}  // namespace

std::string AddKeywordComments(std::string_view source, uint64_t seed) {
  Rng rng(seed);
  auto keywords = java::ReservedKeywords();
  std::string out;
  out.reserve(source.size() * 2);
  for (const Line& line : SplitLines(source)) {
    out.append(line.body);
    out.append(kCommentPrefix);
    out.append(keywords[rng.Below(keywords.size())]);
    out.append(line.ending);
  }
  return out;
}

std::string StripKeywordComments(std::string_view source) {
  std::string out;
  out.reserve(source.size());
  for (const Line& line : SplitLines(source)) {
    std::string_view body = line.body;
    size_t at = body.rfind(kCommentPrefix);
    if (at != std::string_view::npos &&
        java::IsReservedKeyword(body.substr(at + kCommentPrefix.size()))) {
      body = body.substr(0, at);
    }
    out.append(body);
    out.append(line.ending);
  }
  return out;
}

std::optional<TransformKind> ParseTransformKind(std::string_view name) {
  if (name == "rename") return TransformKind::kRename;
  if (name == "lower") return TransformKind::kLower;
  if (name == "comment") return TransformKind::kComment;
  if (name == "all") return TransformKind::kAll;
  return std::nullopt;
}

std::string_view TransformKindName(TransformKind kind) {
  switch (kind) {
    case TransformKind::kRename:
      return "rename";
    case TransformKind::kLower:
      return "lower";
    case TransformKind::kComment:
      return "comment";
    case TransformKind::kAll:
      return "all";
  }
  return "unknown";
}

namespace {

// Original import lines, verbatim and in order.
std::string ImportLines(std::string_view source) {
  std::string stripped = StripImports(source).source;
  // Lines present in the source but absent from the stripped text are the
  // import lines; walk both in lockstep.
  std::string imports;
  size_t s = 0, t = 0;
  while (s < source.size()) {
    size_t nl = source.find('\n', s);
    size_t end = nl == std::string_view::npos ? source.size() : nl + 1;
    std::string_view line = source.substr(s, end - s);
    if (stripped.compare(t, line.size(), line) == 0) {
      t += line.size();
    } else {
      imports.append(line);
      if (imports.back() != '\n') imports.push_back('\n');
    }
    s = end;
  }
  return imports;
}

// Inserts `imports` after the first line that declares the package, or at
// the very top when there is no package declaration.
std::string ReinsertImports(const std::string& body, const std::string& imports) {
  if (imports.empty()) return body;
  size_t start = 0;
  while (start < body.size()) {
    size_t nl = body.find('\n', start);
    size_t end = nl == std::string::npos ? body.size() : nl + 1;
    std::string_view line(body.data() + start, end - start);
    size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos &&
        line.substr(first).starts_with("package ")) {
      std::string out = body.substr(0, end);
      if (out.back() != '\n') out.push_back('\n');
      return out + imports + body.substr(end);
    }
    start = end;
  }
  return imports + body;
}

}  // namespace

TransformOutput ApplyTransform(const Snippet& snippet, TransformKind kind,
                               uint64_t seed) {
  std::string imports = ImportLines(snippet.source);
  std::string body = StripImports(snippet.source).source;
  TransformOutput out;
  std::string result;
  if (kind == TransformKind::kComment) {
    java::Parse(body);  // validity check only; commenting is text-level
    result = AddKeywordComments(body, DeriveSeed(seed, "comment"));
  } else {
    java::CompilationUnit unit = java::Parse(body);
    if (kind == TransformKind::kRename || kind == TransformKind::kAll) {
      RenameResult renamed = RenameIdentifiers(std::move(unit),
                                               DeriveSeed(seed, "rename"));
      unit = std::move(renamed.unit);
      out.rename_map = std::move(renamed.map);
    }
    if (kind == TransformKind::kLower || kind == TransformKind::kAll) {
      unit = LowerCode(std::move(unit), DeriveSeed(seed, "lower"));
    }
    result = java::Render(unit);
    if (kind == TransformKind::kAll) {
      result = AddKeywordComments(result, DeriveSeed(seed, "comment"));
    }
  }
  out.snippet = snippet;
  out.snippet.source = ReinsertImports(result, imports);
  return out;
}

Snippet ApplyAll(const Snippet& snippet, uint64_t seed) {
  return ApplyTransform(snippet, TransformKind::kAll, seed).snippet;
}

}  // namespace jtb::transforms
