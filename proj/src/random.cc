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

#include "jtb/random.h"

#include <cctype>

namespace jtb {
namespace {

constexpr std::string_view kWords[] = {
#include "word_list.inc"
};

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

uint64_t Fnv1a(uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

uint64_t DeriveSeed(uint64_t seed, std::string_view purpose,
                    std::string_view id) {
  uint64_t h = kFnvOffset;
  for (int i = 0; i < 8; ++i) {
    char byte = static_cast<char>((seed >> (8 * i)) & 0xff);
    h = Fnv1a(h, std::string_view(&byte, 1));
  }
  // Length prefixes keep ("ab", "c") distinct from ("a", "bc").
  h = Fnv1a(h, std::to_string(purpose.size()) + ":");
  h = Fnv1a(h, purpose);
  h = Fnv1a(h, std::to_string(id.size()) + ":");
  h = Fnv1a(h, id);
  return SplitMix64(h);
}

std::span<const std::string_view> WordList() { return kWords; }

std::string FreshNameGenerator::Next() {
  auto words = WordList();
  while (true) {
    std::string name;
    for (int i = 0; i < 3; ++i) {
      std::string w(words[rng_.Below(words.size())]);
      w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
      name += w;
    }
    if (taken_.insert(name).second) return name;
  }
}

}  // namespace jtb
