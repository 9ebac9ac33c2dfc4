#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace synthline {

enum class BackendKind { remote, mock };

std::string to_string(BackendKind kind);
BackendKind backend_kind_from_string(const std::string& s);

// Name of the environment variable holding the remote API key.
inline constexpr const char* kApiKeyEnv = "SYNTH_API_KEY";

struct BackendConfig {
  BackendKind kind = BackendKind::mock;
  std::string base_url;                // remote only
  std::string model_name = "mock-small";
  double temperature = 0.7;            // [0, 2]
  int max_tokens = 512;
  int max_concurrency = 4;
  int max_retries = 3;
  double timeout_seconds = 30.0;

  void validate() const;  // throws ConfigError
};

struct ChatRequest {
  std::string system_text;
  std::string user_text;
  std::uint64_t request_index = 0;
  std::string model_name;
  double temperature = 0.7;
  int max_tokens = 512;
};

// Cache key: hash of (model, temperature, max_tokens, request index, prompt
// bytes). Changing any request parameter invalidates the entry.
std::string prompt_hash(const ChatRequest& req);

// Directory of immutable completion files named by prompt hash. A hit
// bypasses the network entirely.
class GenerationCache {
 public:
  explicit GenerationCache(std::filesystem::path dir);

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& completion);
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::mutex mu_;
};

class TextBackend {
 public:
  virtual ~TextBackend() = default;
  virtual std::string complete(const ChatRequest& req) = 0;
  virtual std::string name() const = 0;
};

// Deterministic offline stand-in for the remote endpoint. Output is a pure
// function of (prompt bytes, request index). When the prompt embeds the
// format_spec_for() grammar the mock emits task-shaped JSON sample lines with
// uniformly drawn labels; when the prompt lists allowed labels it answers
// with one label; otherwise it emits a few words sampled from the prompt.
class MockBackend : public TextBackend {
 public:
  std::string complete(const ChatRequest& req) override;
  std::string name() const override { return "mock"; }
};

// OpenAI-compatible chat-completions client with bounded retries and
// exponential backoff on transient failures (408/429/5xx, network errors).
class RemoteBackend : public TextBackend {
 public:
  RemoteBackend(BackendConfig config, std::string api_key);

  std::string complete(const ChatRequest& req) override;
  std::string name() const override { return "remote:" + config_.model_name; }

 private:
  BackendConfig config_;
  std::string api_key_;
  std::string origin_;       // scheme://host[:port]
  std::string path_prefix_;  // leading path of base_url, if any
};

// Builds the configured backend. Remote kind reads the API key from
// SYNTH_API_KEY and throws Error("AuthError") when it is missing.
std::unique_ptr<TextBackend> make_backend(const BackendConfig& config);

// Cache-first completion. On a miss the request goes to the backend and the
// completion is stored before returning. `cache` may be null (no caching).
std::string chat_complete(TextBackend& backend, const ChatRequest& req,
                          GenerationCache* cache);

// Counting wrapper used by the pipeline manifest and the cache-soundness
// checks: wire_requests only counts completions that reached the backend.
class CountingSession {
 public:
  CountingSession(TextBackend& backend, GenerationCache* cache)
      : backend_(backend), cache_(cache) {}

  std::string complete(const ChatRequest& req);

  std::uint64_t wire_requests() const { return wire_requests_; }
  std::uint64_t cache_hits() const { return cache_hits_; }

 private:
  TextBackend& backend_;
  GenerationCache* cache_;
  std::mutex mu_;
  std::uint64_t wire_requests_ = 0;
  std::uint64_t cache_hits_ = 0;
};

}  // namespace synthline
