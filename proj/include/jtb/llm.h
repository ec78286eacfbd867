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

#ifndef JTB_LLM_H_
#define JTB_LLM_H_

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jtb/snippet.h"
#include "json.hpp"

namespace jtb::llm {

inline constexpr std::string_view kSystemPrompt =
    "You are a helpful programming assistant.";
inline constexpr std::string_view kUserInstruction =
    "Add import statements to the following Java code. Do not use wildcard "
    "imports. Include only the necessary import statements. Do not import "
    "nonexistent types. Please note that you need to pay close attention and "
    "your response should be specific and accurate. Avoid repetition. Reply "
    "with the import statements only.";
// The instruction, a blank line, then the code.
inline constexpr std::string_view kInputSlot = "{input_code}";

struct PromptPair {
  std::string system;
  std::string user;
  std::vector<std::string> warnings;

  friend bool operator==(const PromptPair& a, const PromptPair& b) {
    return a.system == b.system && a.user == b.user;
  }
};

// Instantiates the template; the slot is replaced literally.
PromptPair BuildPrompt(std::string_view stripped_source);

struct RunConfig {
  std::string endpoint;  // e.g. http://localhost:11434 or https://api.openai.com
  std::string model;
  double temperature = 0.0;
  int64_t seed = 1;
  int max_retries = 3;
  int timeout_ms = 120000;
  int parallelism = 4;
  int retry_backoff_ms = 500;  // doubled after each failed attempt
  std::string api_key_env = "OPENAI_API_KEY";
  std::filesystem::path cache_dir;  // empty disables the cache

  // Throws std::invalid_argument on unusable settings.
  void Validate() const;
};

// kInference is used when results come from the constraint solver.
enum class ErrorKind {
  kNone,
  kTransport,
  kHttpStatus,
  kTimeout,
  kMalformed,
  kInference
};
std::string_view ErrorKindName(ErrorKind kind);
ErrorKind ErrorKindFromName(std::string_view name);

struct QueryOutcome {
  std::string raw;
  ErrorKind error_kind = ErrorKind::kNone;
  std::string error;  // human-readable, never contains credentials
  int http_status = 0;
  int retries = 0;
  double latency_ms = 0;
  bool cache_hit = false;

  bool ok() const { return error_kind == ErrorKind::kNone; }
};

// OpenAI chat-completion request for `prompt`.
nlohmann::json BuildRequestBody(const RunConfig& config,
                                const PromptPair& prompt);

// Full URL path for an endpoint: a bare host gets /v1/chat/completions, a
// base ending in /v1 gets /chat/completions, a full path is kept.
std::string CompletionPath(std::string_view endpoint_path);

// Content address of a request: sha256 over (model, prompt hash, seed,
// temperature).
std::string CacheKey(const RunConfig& config, const PromptPair& prompt);

// Successful responses stored as <dir>/<key[0:2]>/<key>.json.
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::optional<QueryOutcome> Get(const std::string& key) const;
  void Put(const std::string& key, const RunConfig& config,
           const QueryOutcome& outcome) const;
  std::filesystem::path PathFor(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

// Thread-safe chat-completion client with retries and the disk cache.
class Client {
 public:
  explicit Client(RunConfig config);

  QueryOutcome Query(const PromptPair& prompt);

  // HTTP requests actually sent (including retries).
  size_t network_calls() const { return network_calls_; }
  size_t cache_hits() const { return cache_hits_; }
  const RunConfig& config() const { return config_; }

 private:
  QueryOutcome Send(const PromptPair& prompt);
  std::shared_ptr<std::mutex> KeyLock(const std::string& key);

  RunConfig config_;
  std::optional<ResponseCache> cache_;
  std::atomic<size_t> network_calls_{0};
  std::atomic<size_t> cache_hits_{0};
  std::mutex locks_mu_;
  std::map<std::string, std::shared_ptr<std::mutex>> key_locks_;
};

struct InferenceResult {
  std::string id;
  std::string raw;
  ImportSet parsed;
  double latency_ms = 0;
  int retries = 0;
  ErrorKind error_kind = ErrorKind::kNone;
  std::string error;
  int http_status = 0;

  bool ok() const { return error_kind == ErrorKind::kNone; }
  nlohmann::json ToJson() const;
  static InferenceResult FromJson(const nlohmann::json& j);
  friend bool operator==(const InferenceResult&,
                         const InferenceResult&) = default;
};

// Imports named in a model reply; fences and prose are tolerated.
ImportSet ParseResponse(std::string_view raw);

struct EvalStats {
  size_t network_calls = 0;
  size_t cache_hits = 0;
  size_t failures = 0;
};

// Queries every snippet (imports stripped) with at most `parallelism`
// requests in flight. Results are sorted by snippet id.
std::vector<InferenceResult> RunEval(const Corpus& corpus,
                                     const RunConfig& config,
                                     EvalStats* stats = nullptr);

void SaveResults(const std::vector<InferenceResult>& results,
                 const std::filesystem::path& path);
std::vector<InferenceResult> LoadResults(const std::filesystem::path& path);

}  // namespace jtb::llm

#endif  // JTB_LLM_H_
