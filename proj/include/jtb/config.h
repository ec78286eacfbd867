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

#ifndef JTB_CONFIG_H_
#define JTB_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace jtb {

// Settings shared by all subcommands. Resolution order: command-line flags,
// then the --config file, then these defaults.
struct GlobalConfig {
  uint64_t seed = 1;  // root seed; also the sampling seed sent to models
  int jobs = 4;
  std::string cache_dir = ".jtb-cache";
  std::string kb;
  std::string endpoint = "http://localhost:11434";
  std::string model;
  double temperature = 0.0;
  int max_retries = 3;
  int timeout_ms = 120000;
  std::string api_key_env = "OPENAI_API_KEY";

  nlohmann::json ToJson() const;
  // Overrides the fields named in a flat JSON object. Throws ConfigError on
  // unknown keys, nested values or wrong types.
  void ApplyJson(const nlohmann::json& j);
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads a flat JSON document; throws ConfigError when malformed and
// std::runtime_error when unreadable.
nlohmann::json ReadConfigFile(const std::filesystem::path& path);

// sha256 of the canonical (sorted-key) JSON of the effective config.
std::string ConfigHash(const GlobalConfig& config);

// Metadata block embedded in every report: tool name and version, command,
// effective config and its hash, and sha256 digests of each input (files
// hashed directly, directories as trees).
nlohmann::json ReportMetadata(
    const std::string& command, const GlobalConfig& config,
    const std::map<std::string, std::filesystem::path>& inputs);

}  // namespace jtb

#endif  // JTB_CONFIG_H_
