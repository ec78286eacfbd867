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

#include "jtb/llm.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "jtb/digest.h"

namespace jtb::llm {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

ParsedUrl SplitUrl(std::string_view url) {
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw std::invalid_argument("endpoint needs a scheme: '" +
                                std::string(url) + "'");
  }
  std::string_view scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw std::invalid_argument("unsupported endpoint scheme '" +
                                std::string(scheme) + "'");
  }
  size_t path_start = url.find('/', scheme_end + 3);
  ParsedUrl out;
  out.origin = std::string(url.substr(0, path_start));
  if (out.origin.size() == scheme_end + 3) {
    throw std::invalid_argument("endpoint has no host: '" + std::string(url) +
                                "'");
  }
  if (path_start != std::string_view::npos) {
    out.path = std::string(url.substr(path_start));
  }
  return out;
}

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

bool Retryable(const QueryOutcome& o) {
  switch (o.error_kind) {
    case ErrorKind::kTransport:
    case ErrorKind::kTimeout:
      return true;
    case ErrorKind::kHttpStatus:
      return o.http_status == 429 || o.http_status >= 500;
    default:
      return false;
  }
}

constexpr size_t kMaxErrorBody = 4096;

}  // namespace

PromptPair BuildPrompt(std::string_view stripped_source) {
  PromptPair p;
  p.system = std::string(kSystemPrompt);
  std::string tmpl = std::string(kUserInstruction) + "\n\n" +
                     std::string(kInputSlot);
  // Single literal replacement: braces inside the code are never touched.
  size_t slot = tmpl.find(kInputSlot);
  tmpl.replace(slot, kInputSlot.size(), stripped_source);
  p.user = std::move(tmpl);
  if (stripped_source.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    p.warnings.push_back("empty input code");
  }
  return p;
}

void RunConfig::Validate() const {
  SplitUrl(endpoint);
  if (model.empty()) throw std::invalid_argument("model id is empty");
  if (max_retries < 0) throw std::invalid_argument("max retries < 0");
  if (timeout_ms <= 0) throw std::invalid_argument("timeout must be > 0");
  if (parallelism <= 0) throw std::invalid_argument("parallelism must be > 0");
  if (retry_backoff_ms < 0) throw std::invalid_argument("backoff < 0");
  if (temperature < 0) throw std::invalid_argument("temperature < 0");
}

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNone: return "none";
    case ErrorKind::kTransport: return "transport";
    case ErrorKind::kHttpStatus: return "http_status";
    case ErrorKind::kTimeout: return "timeout";
    case ErrorKind::kMalformed: return "malformed_response";
    case ErrorKind::kInference: return "inference_error";
  }
  return "none";
}

ErrorKind ErrorKindFromName(std::string_view name) {
  for (ErrorKind k : {ErrorKind::kNone, ErrorKind::kTransport,
                      ErrorKind::kHttpStatus, ErrorKind::kTimeout,
                      ErrorKind::kMalformed, ErrorKind::kInference}) {
    if (ErrorKindName(k) == name) return k;
  }
  throw std::invalid_argument("unknown error kind '" + std::string(name) +
                              "'");
}

json BuildRequestBody(const RunConfig& config, const PromptPair& prompt) {
  return json{{"model", config.model},
              {"messages",
               json::array({{{"role", "system"}, {"content", prompt.system}},
                            {{"role", "user"}, {"content", prompt.user}}})},
              {"temperature", config.temperature},
              {"seed", config.seed},
              {"stream", false}};
}

std::string CompletionPath(std::string_view path) {
  std::string p(path);
  while (!p.empty() && p.back() == '/') p.pop_back();
  if (p.ends_with("/chat/completions")) return p;
  if (p.ends_with("/v1")) return p + "/chat/completions";
  return p + "/v1/chat/completions";
}

std::string CacheKey(const RunConfig& config, const PromptPair& prompt) {
  json key = {{"model", config.model},
              {"prompt_sha256",
               Sha256Hex(prompt.system + std::string(1, '\0') + prompt.user)},
              {"seed", config.seed},
              {"temperature", config.temperature}};
  return Sha256Hex(key.dump());
}

std::filesystem::path ResponseCache::PathFor(const std::string& key) const {
  return dir_ / key.substr(0, 2) / (key + ".json");
}

std::optional<QueryOutcome> ResponseCache::Get(const std::string& key) const {
  std::ifstream in(PathFor(key), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.value("key", "") != key) return std::nullopt;
    QueryOutcome o;
    o.raw = j.at("response").get<std::string>();
    o.latency_ms = j.value("latency_ms", 0.0);
    o.retries = j.value("retries", 0);
    o.http_status = 200;
    o.cache_hit = true;
    return o;
  } catch (const json::exception&) {
    return std::nullopt;  // corrupt entry: treat as a miss and overwrite
  }
}

void ResponseCache::Put(const std::string& key, const RunConfig& config,
                        const QueryOutcome& outcome) const {
  const auto path = PathFor(key);
  std::filesystem::create_directories(path.parent_path());
  json j = {{"key", key},
            {"model", config.model},
            {"seed", config.seed},
            {"temperature", config.temperature},
            {"response", outcome.raw},
            {"latency_ms", outcome.latency_ms},
            {"retries", outcome.retries}};
  // Write-then-rename keeps readers from seeing partial entries.
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  auto tmp = path;
  tmp += ".tmp" + tid.str();
  {
    std::ofstream out(tmp, std::ios::binary);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Client::Client(RunConfig config) : config_(std::move(config)) {
  config_.Validate();
  if (!config_.cache_dir.empty()) cache_.emplace(config_.cache_dir);
}

std::shared_ptr<std::mutex> Client::KeyLock(const std::string& key) {
  std::lock_guard<std::mutex> lock(locks_mu_);
  auto& slot = key_locks_[key];
  if (!slot) slot = std::make_shared<std::mutex>();
  return slot;
}

QueryOutcome Client::Query(const PromptPair& prompt) {
  if (!cache_) return Send(prompt);
  const std::string key = CacheKey(config_, prompt);
  // Identical prompts in flight wait for one another instead of paying twice.
  auto key_mu = KeyLock(key);
  std::lock_guard<std::mutex> lock(*key_mu);
  if (auto hit = cache_->Get(key)) {
    ++cache_hits_;
    return *hit;
  }
  QueryOutcome out = Send(prompt);
  if (out.ok()) cache_->Put(key, config_, out);
  return out;
}

QueryOutcome Client::Send(const PromptPair& prompt) {
  const ParsedUrl url = SplitUrl(config_.endpoint);
  const std::string path = CompletionPath(url.path);
  const std::string body = BuildRequestBody(config_, prompt).dump();
  httplib::Headers headers;
  if (const char* key = std::getenv(config_.api_key_env.c_str());
      key != nullptr && *key != '\0') {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }
  const auto timeout = std::chrono::milliseconds(config_.timeout_ms);

  const auto start = Clock::now();
  QueryOutcome out;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0 && config_.retry_backoff_ms > 0) {
      int64_t wait = static_cast<int64_t>(config_.retry_backoff_ms)
                     << std::min(attempt - 1, 6);
      std::this_thread::sleep_for(std::chrono::milliseconds(wait));
    }
    out = QueryOutcome{};
    out.retries = attempt;

    httplib::Client client(url.origin);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    ++network_calls_;
    const auto sent = Clock::now();
    httplib::Result res =
        client.Post(path, headers, body, "application/json");
    if (!res) {
      const httplib::Error err = res.error();
      const bool timed_out =
          err == httplib::Error::ConnectionTimeout ||
          ((err == httplib::Error::Read || err == httplib::Error::Write) &&
           MillisSince(sent) >= 0.9 * config_.timeout_ms);
      out.error_kind = timed_out ? ErrorKind::kTimeout : ErrorKind::kTransport;
      out.error = (timed_out ? "timeout after " +
                                   std::to_string(config_.timeout_ms) +
                                   " ms: "
                             : std::string("transport error: ")) +
                  httplib::to_string(err);
    } else if (res->status < 200 || res->status >= 300) {
      out.error_kind = ErrorKind::kHttpStatus;
      out.http_status = res->status;
      out.error = "HTTP " + std::to_string(res->status) + ": " +
                  res->body.substr(0, kMaxErrorBody);
    } else {
      out.http_status = res->status;
      try {
        json reply = json::parse(res->body);
        out.raw = reply.at("choices")
                      .at(0)
                      .at("message")
                      .at("content")
                      .get<std::string>();
      } catch (const json::exception& e) {
        out.error_kind = ErrorKind::kMalformed;
        out.error = std::string("malformed completion: ") + e.what();
      }
    }
    if (out.ok() || !Retryable(out)) break;
  }
  out.latency_ms = MillisSince(start);
  return out;
}

ImportSet ParseResponse(std::string_view raw) { return ExtractImports(raw); }

json InferenceResult::ToJson() const {
  json j = {{"id", id},
            {"raw", raw},
            {"parsed", parsed.Strings()},
            {"latency_ms", latency_ms},
            {"retries", retries}};
  if (ok()) {
    j["error"] = nullptr;
  } else {
    j["error"] = {{"kind", ErrorKindName(error_kind)},
                  {"message", error},
                  {"http_status", http_status}};
  }
  return j;
}

InferenceResult InferenceResult::FromJson(const json& j) {
  InferenceResult r;
  r.id = j.at("id").get<std::string>();
  r.raw = j.value("raw", "");
  for (const auto& f : j.value("parsed", json::array())) {
    r.parsed.Insert(Fqn(f.get<std::string>()));
  }
  r.latency_ms = j.value("latency_ms", 0.0);
  r.retries = j.value("retries", 0);
  if (j.contains("error") && !j["error"].is_null()) {
    const auto& e = j["error"];
    r.error_kind = ErrorKindFromName(e.at("kind").get<std::string>());
    r.error = e.value("message", "");
    r.http_status = e.value("http_status", 0);
  }
  return r;
}

std::vector<InferenceResult> RunEval(const Corpus& corpus,
                                     const RunConfig& config,
                                     EvalStats* stats) {
  Client client(config);
  std::vector<InferenceResult> results(corpus.snippets.size());
  std::atomic<size_t> next{0};
  std::mutex warn_mu;
  auto worker = [&] {
    for (size_t i = next++; i < corpus.snippets.size(); i = next++) {
      const Snippet& s = corpus.snippets[i];
      PromptPair prompt = BuildPrompt(StripImports(s.source).source);
      for (const auto& w : prompt.warnings) {
        std::lock_guard<std::mutex> lock(warn_mu);
        std::cerr << "warning: snippet '" << s.id << "': " << w << "\n";
      }
      InferenceResult& r = results[i];
      r.id = s.id;
      QueryOutcome out;
      try {
        out = client.Query(prompt);
      } catch (const std::exception& e) {
        // e.g. an unwritable cache; still confined to this snippet
        out.error_kind = ErrorKind::kTransport;
        out.error = e.what();
      }
      r.raw = out.raw;
      r.latency_ms = out.latency_ms;
      r.retries = out.retries;
      r.error_kind = out.error_kind;
      r.error = out.error;
      r.http_status = out.ok() ? 0 : out.http_status;
      if (out.ok()) r.parsed = ParseResponse(out.raw);
    }
  };
  const size_t n_threads = std::min<size_t>(
      static_cast<size_t>(config.parallelism),
      std::max<size_t>(1, corpus.snippets.size()));
  std::vector<std::thread> threads;
  for (size_t t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  std::sort(results.begin(), results.end(),
            [](const InferenceResult& a, const InferenceResult& b) {
              return a.id < b.id;
            });
  if (stats) {
    stats->network_calls = client.network_calls();
    stats->cache_hits = client.cache_hits();
    stats->failures = static_cast<size_t>(
        std::count_if(results.begin(), results.end(),
                      [](const InferenceResult& r) { return !r.ok(); }));
  }
  return results;
}

void SaveResults(const std::vector<InferenceResult>& results,
                 const std::filesystem::path& path) {
  json arr = json::array();
  for (const auto& r : results) arr.push_back(r.ToJson());
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  out << arr.dump(2) << "\n";
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::vector<InferenceResult> LoadResults(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  json arr;
  try {
    arr = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed results file " + path.string() + ": " +
                             e.what());
  }
  if (!arr.is_array()) {
    throw std::runtime_error("results file " + path.string() +
                             " is not an array");
  }
  std::vector<InferenceResult> out;
  for (const auto& j : arr) out.push_back(InferenceResult::FromJson(j));
  return out;
}

}  // namespace jtb::llm
