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

#ifndef JTB_RANDOM_H_
#define JTB_RANDOM_H_

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>

namespace jtb {

// Derives an independent stream seed from a root seed, a purpose tag, and an
// optional item id: FNV-1a over the three parts, finished with splitmix64.
// Any single snippet's pipeline is therefore replayable in isolation.
uint64_t DeriveSeed(uint64_t seed, std::string_view purpose,
                    std::string_view id = {});

// Deterministic generator. Uses mt19937_64 with modular reduction (rather
// than std::uniform_int_distribution, whose output is implementation
// defined) so results are identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform-ish index in [0, n); n must be positive.
  size_t Below(size_t n) { return static_cast<size_t>(engine_() % n); }
  // Inclusive range.
  int Between(int lo, int hi) {
    return lo + static_cast<int>(Below(static_cast<size_t>(hi - lo + 1)));
  }
  template <typename T>
  const T& Pick(std::span<const T> items) {
    return items[Below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

// The bundled dictionary: lowercase words, none a Java reserved word.
std::span<const std::string_view> WordList();

// Produces identifiers of three capitalized dictionary words (e.g.
// "GrouseScabsShelley") that avoid a reserved set and never repeat.
class FreshNameGenerator {
 public:
  FreshNameGenerator(uint64_t seed, std::set<std::string> taken)
      : rng_(seed), taken_(std::move(taken)) {}

  std::string Next();
  void Reserve(const std::string& name) { taken_.insert(name); }

 private:
  Rng rng_;
  std::set<std::string> taken_;
};

}  // namespace jtb

#endif  // JTB_RANDOM_H_
