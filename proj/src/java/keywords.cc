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

#include "jtb/java/keywords.h"

#include <algorithm>
#include <array>

namespace jtb::java {
namespace {

constexpr std::array<std::string_view, 50> kKeywords = {
    "abstract",  "assert",       "boolean",    "break",      "byte",
    "case",      "catch",        "char",       "class",      "const",
    "continue",  "default",      "do",         "double",     "else",
    "enum",      "extends",      "final",      "finally",    "float",
    "for",       "goto",         "if",         "implements", "import",
    "instanceof", "int",         "interface",  "long",       "native",
    "new",       "package",      "private",    "protected",  "public",
    "return",    "short",        "static",     "strictfp",   "super",
    "switch",    "synchronized", "this",       "throw",      "throws",
    "transient", "try",          "void",       "volatile",   "while",
};

constexpr std::array<std::string_view, 8> kPrimitives = {
    "boolean", "byte", "char", "double", "float", "int", "long", "short",
};

bool IsIdentStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool IsIdentPart(unsigned char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9');
}

}  // namespace

std::span<const std::string_view> ReservedKeywords() { return kKeywords; }

bool IsReservedKeyword(std::string_view word) {
  return std::binary_search(kKeywords.begin(), kKeywords.end(), word);
}

bool IsReservedWord(std::string_view word) {
  return IsReservedKeyword(word) || word == "true" || word == "false" ||
         word == "null";
}

bool IsPrimitiveTypeName(std::string_view word) {
  return std::binary_search(kPrimitives.begin(), kPrimitives.end(), word);
}

bool IsIdentifier(std::string_view text) {
  if (text.empty() || !IsIdentStart(static_cast<unsigned char>(text[0]))) {
    return false;
  }
  for (char c : text.substr(1)) {
    if (!IsIdentPart(static_cast<unsigned char>(c))) return false;
  }
  return !IsReservedWord(text);
}

}  // namespace jtb::java
