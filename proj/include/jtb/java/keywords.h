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

#ifndef JTB_JAVA_KEYWORDS_H_
#define JTB_JAVA_KEYWORDS_H_

#include <span>
#include <string_view>

namespace jtb::java {

// The 50 reserved keywords of the Java language, in alphabetical order.
// Literals (true, false, null) and contextual keywords such as `var` are not
// part of this list.
std::span<const std::string_view> ReservedKeywords();

bool IsReservedKeyword(std::string_view word);

// Reserved keywords plus the literals true/false/null.
bool IsReservedWord(std::string_view word);

// Primitive type names as they appear in source.
bool IsPrimitiveTypeName(std::string_view word);

// ASCII identifier lexical rules (letters, digits, '_', '$'; non-ASCII bytes
// are accepted as letters). Reserved words are rejected.
bool IsIdentifier(std::string_view text);

}  // namespace jtb::java

#endif  // JTB_JAVA_KEYWORDS_H_
