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

#include "jtb/config.h"

#include <fstream>

#include "jtb/digest.h"

namespace jtb {
namespace {

using json = nlohmann::json;

template <typename T>
void Take(const json& j, const std::string& key, T& field) {
  try {
    field = j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

void TakeInt(const json& j, const std::string& key, int& field) {
  if (!j.is_number_integer()) {
    throw ConfigError("config key '" + key + "' must be an integer");
  }
  field = j.get<int>();
}

}  // namespace

json GlobalConfig::ToJson() const {
  return {{"seed", seed},
          {"jobs", jobs},
          {"cache_dir", cache_dir},
          {"kb", kb},
          {"endpoint", endpoint},
          {"model", model},
          {"temperature", temperature},
          {"max_retries", max_retries},
          {"timeout_ms", timeout_ms},
          {"api_key_env", api_key_env}};
}

void GlobalConfig::ApplyJson(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (v.is_object() || v.is_array()) {
      throw ConfigError("config key '" + key + "' must be a scalar");
    }
    if (key == "seed") {
      if (!v.is_number_unsigned()) {
        throw ConfigError("config key 'seed' must be a non-negative integer");
      }
      seed = v.get<uint64_t>();
    } else if (key == "jobs") {
      TakeInt(v, key, jobs);
    } else if (key == "cache_dir") {
      Take(v, key, cache_dir);
    } else if (key == "kb") {
      Take(v, key, kb);
    } else if (key == "endpoint") {
      Take(v, key, endpoint);
    } else if (key == "model") {
      Take(v, key, model);
    } else if (key == "temperature") {
      if (!v.is_number()) throw ConfigError("config key 'temperature' must be a number");
      temperature = v.get<double>();
    } else if (key == "max_retries") {
      TakeInt(v, key, max_retries);
    } else if (key == "timeout_ms") {
      TakeInt(v, key, timeout_ms);
    } else if (key == "api_key_env") {
      Take(v, key, api_key_env);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

json ReadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("malformed config " + path.string() + ": " + e.what());
  }
}

std::string ConfigHash(const GlobalConfig& config) {
  return Sha256Hex(config.ToJson().dump());
}

json ReportMetadata(const std::string& command, const GlobalConfig& config,
                    const std::map<std::string, std::filesystem::path>& inputs) {
  json digests = json::object();
  for (const auto& [name, path] : inputs) {
    digests[name] = {{"path", path.string()}, {"sha256", Sha256Tree(path)}};
  }
  return {{"tool", "jtb"},
          {"version", JTB_VERSION},
          {"command", command},
          {"config", config.ToJson()},
          {"config_hash", ConfigHash(config)},
          {"inputs", digests}};
}

}  // namespace jtb
