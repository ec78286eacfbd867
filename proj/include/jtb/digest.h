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

#ifndef JTB_DIGEST_H_
#define JTB_DIGEST_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace jtb {

// Lowercase hex SHA-256 of `data`.
std::string Sha256Hex(std::string_view data);

// Digest of a file's bytes; throws std::runtime_error when unreadable.
std::string Sha256File(const std::filesystem::path& path);

// Digest of a directory tree: relative paths and file digests in sorted
// order, so the result is independent of traversal order.
std::string Sha256Tree(const std::filesystem::path& root);

}  // namespace jtb

#endif  // JTB_DIGEST_H_
