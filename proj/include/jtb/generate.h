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

#ifndef JTB_GENERATE_H_
#define JTB_GENERATE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jtb/kb.h"
#include "jtb/random.h"
#include "jtb/snippet.h"

namespace jtb::gen {

struct GenConfig {
  std::vector<std::string> libraries;
  int snippets_per_library = 50;
  int min_chain = 2;  // member uses per snippet, the seeding one included
  int max_chain = 5;
  uint64_t seed = 0;
  std::string corpus_name = "generated";

  void Validate() const;  // throws std::invalid_argument
};

// One KB member exercised by a generated statement. `implicit_ctor` marks
// `new T()` on a type whose KB entry lists no members at all.
struct ApiUse {
  std::string owner;  // receiver or constructed type
  kb::MemberSig member;
  bool implicit_ctor = false;

  std::string ToString() const;  // e.g. "org.joda.time.LocalTime#<init>(long)"
  friend bool operator==(const ApiUse&, const ApiUse&) = default;
};

struct GeneratedSnippet {
  Snippet snippet;
  std::vector<ApiUse> provenance;
};

class GenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Synthesizes `class Main { public static void test() throws Exception }`
// whose body seeds a value from literals and chains KB members, binding each
// result to a fresh dictionary-word local. Ground truth is every non-java.lang
// type written in the source. Throws GenError("no constructible type") when
// no library type can start a chain.
GeneratedSnippet GenerateSnippet(const kb::KnowledgeBase& kb,
                                 const std::string& library,
                                 const GenConfig& config, Rng& rng,
                                 const std::string& id);

// snippets_per_library snippets per library, ids "<lib><NN>" (1-based), each
// from its own derived seed. Errors name the failing library.
std::vector<GeneratedSnippet> GenerateCorpus(const kb::KnowledgeBase& kb,
                                             const GenConfig& config);

Corpus ToCorpus(const std::vector<GeneratedSnippet>& generated,
                const std::string& name);

}  // namespace jtb::gen

#endif  // JTB_GENERATE_H_
