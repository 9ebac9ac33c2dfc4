#include "synthline/backend.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "synthline/errors.hpp"
#include "synthline/hash.hpp"
#include "synthline/text.hpp"

namespace synthline {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(BackendKind kind) {
  return kind == BackendKind::remote ? "remote" : "mock";
}

BackendKind backend_kind_from_string(const std::string& s) {
  if (s == "remote") return BackendKind::remote;
  if (s == "mock") return BackendKind::mock;
  throw ConfigError("ConfigSchemaError", "unknown backend kind: " + s);
}

void BackendConfig::validate() const {
  if (temperature < 0.0 || temperature > 2.0) {
    throw ConfigError("ConfigSchemaError", "temperature must be in [0,2]");
  }
  if (max_tokens < 1) {
    throw ConfigError("ConfigSchemaError", "max_tokens must be >= 1");
  }
  if (max_concurrency < 1) {
    throw ConfigError("ConfigSchemaError", "max_concurrency must be >= 1");
  }
  if (max_retries < 0) {
    throw ConfigError("ConfigSchemaError", "max_retries must be >= 0");
  }
  if (timeout_seconds <= 0.0) {
    throw ConfigError("ConfigSchemaError", "timeout_seconds must be positive");
  }
  if (kind == BackendKind::remote && base_url.empty()) {
    throw ConfigError("ConfigSchemaError", "remote backend requires base_url");
  }
}

std::string prompt_hash(const ChatRequest& req) {
  char temp[32];
  std::snprintf(temp, sizeof(temp), "%.6f", req.temperature);
  std::string bytes = req.model_name;
  bytes += '\x1f';
  bytes += temp;
  bytes += '\x1f';
  bytes += std::to_string(req.max_tokens);
  bytes += '\x1f';
  bytes += std::to_string(req.request_index);
  bytes += '\x1e';
  bytes += req.system_text;
  bytes += '\x1f';
  bytes += req.user_text;
  return sha256_hex(bytes);
}

GenerationCache::GenerationCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  }
}

std::optional<std::string> GenerationCache::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  const auto path = dir_ / (key + ".txt");
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void GenerationCache::store(const std::string& key, const std::string& completion) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto path = dir_ / (key + ".txt");
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    return;  // entries are immutable once written
  }
  const auto tmp = dir_ / (key + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write cache entry: " + tmp.string());
    }
    out.write(completion.data(), static_cast<std::streamsize>(completion.size()));
    if (!out) {
      throw IoError("failed writing cache entry: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot finalize cache entry " + path.string() + ": " + ec.message());
  }
}

namespace {

// Reads the quoted names following `marker` in a format-spec sentence,
// stopping at the terminating period. Returns an empty list if the marker is
// absent.
std::vector<std::string> parse_quoted_list(const std::string& text, const std::string& marker) {
  std::vector<std::string> out;
  std::size_t pos = text.find(marker);
  if (pos == std::string::npos) {
    return out;
  }
  pos += marker.size();
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) {
      ++pos;
    }
    if (pos >= text.size() || text[pos] != '"') {
      break;
    }
    std::size_t close = text.find('"', pos + 1);
    if (close == std::string::npos) {
      break;
    }
    out.push_back(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  return out;
}

std::vector<std::string> word_pool(const std::string& prompt) {
  std::vector<std::string> pool;
  std::vector<std::string> tokens = word_tokens(prompt);
  for (auto& t : tokens) {
    if (std::find(pool.begin(), pool.end(), t) == pool.end()) {
      pool.push_back(std::move(t));
      if (pool.size() >= 512) {
        break;
      }
    }
  }
  if (pool.empty()) {
    pool = {"sample", "text", "output"};
  }
  return pool;
}

std::string sample_words(DeterministicRng& rng, const std::vector<std::string>& pool,
                         std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) out += ' ';
    out += pool[rng.below(pool.size())];
  }
  return out;
}

}  // namespace

std::string MockBackend::complete(const ChatRequest& req) {
  DeterministicRng rng(mix64(fnv1a64(req.user_text) ^ mix64(req.request_index + 1)));
  const std::vector<std::string> pool = word_pool(req.user_text);

  std::vector<std::string> keys = parse_quoted_list(req.user_text, "exactly these keys: ");
  std::vector<std::string> labels = parse_quoted_list(req.user_text, "must be one of: ");

  if (!keys.empty()) {
    std::vector<std::string> fields;
    for (const auto& k : keys) {
      if (k != "label") {
        fields.push_back(k);
      }
    }
    std::string out;
    for (int sample = 0; sample < 4; ++sample) {
      ordered_json obj = ordered_json::object();
      for (const auto& f : fields) {
        obj[f] = sample_words(rng, pool, 6 + rng.below(7));
      }
      if (!labels.empty()) {
        obj["label"] = labels[rng.below(labels.size())];
      } else {
        obj["label"] = sample_words(rng, pool, 4 + rng.below(5));
      }
      if (sample) out += '\n';
      out += obj.dump();
    }
    return out;
  }
  if (!labels.empty()) {
    return labels[rng.below(labels.size())];
  }
  return sample_words(rng, pool, 8);
}

RemoteBackend::RemoteBackend(BackendConfig config, std::string api_key)
    : config_(std::move(config)), api_key_(std::move(api_key)) {
  const std::string& url = config_.base_url;
  std::size_t scheme = url.find("://");
  std::size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
  std::size_t slash = url.find('/', host_start);
  if (slash == std::string::npos) {
    origin_ = url;
  } else {
    origin_ = url.substr(0, slash);
    path_prefix_ = url.substr(slash);
    while (!path_prefix_.empty() && path_prefix_.back() == '/') {
      path_prefix_.pop_back();
    }
  }
}

std::string RemoteBackend::complete(const ChatRequest& req) {
  ordered_json body;
  body["model"] = req.model_name;
  body["messages"] = ordered_json::array({
      ordered_json{{"role", "system"}, {"content", req.system_text}},
      ordered_json{{"role", "user"}, {"content", req.user_text}},
  });
  body["temperature"] = req.temperature;
  body["max_tokens"] = req.max_tokens;
  const std::string payload = body.dump();
  const std::string path = path_prefix_ + "/v1/chat/completions";

  const int attempts = config_.max_retries + 1;
  int last_status = 0;
  bool last_timeout = false;
  std::string last_detail;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      const auto delay = std::chrono::milliseconds(250) * (1 << (attempt - 1));
      std::this_thread::sleep_for(delay);
    }
    httplib::Client client(origin_);
    const auto timeout =
        std::chrono::milliseconds(static_cast<long>(config_.timeout_seconds * 1000.0));
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers headers = {{"Authorization", "Bearer " + api_key_}};
    auto res = client.Post(path, headers, payload, "application/json");
    if (!res) {
      last_status = 0;
      last_timeout = res.error() == httplib::Error::ConnectionTimeout ||
                     res.error() == httplib::Error::Read;
      last_detail = httplib::to_string(res.error());
      continue;  // network errors are transient
    }
    const int status = res->status;
    if (status == 200) {
      json parsed;
      try {
        parsed = json::parse(res->body);
      } catch (const json::exception& e) {
        throw Error("MalformedResponse", std::string("response is not JSON: ") + e.what());
      }
      try {
        return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
      } catch (const json::exception&) {
        throw Error("MalformedResponse", "response lacks choices[0].message.content");
      }
    }
    if (status == 401 || status == 403) {
      throw Error("AuthError", "endpoint rejected the API key (status " +
                                   std::to_string(status) + ")");
    }
    const bool transient = status == 408 || status == 429 || status >= 500;
    if (!transient) {
      throw HttpError(status, "request failed with status " + std::to_string(status));
    }
    last_status = status;
    last_timeout = false;
  }
  if (last_status == 0 && last_timeout) {
    throw Error("TimeoutError", "request timed out after " + std::to_string(attempts) +
                                    " attempts (" + last_detail + ")");
  }
  if (last_status == 0) {
    throw HttpError(0, "network failure after " + std::to_string(attempts) + " attempts (" +
                           last_detail + ")");
  }
  throw HttpError(last_status, "status " + std::to_string(last_status) + " after " +
                                   std::to_string(attempts) + " attempts");
}

std::unique_ptr<TextBackend> make_backend(const BackendConfig& config) {
  config.validate();
  if (config.kind == BackendKind::mock) {
    return std::make_unique<MockBackend>();
  }
  const char* key = std::getenv(kApiKeyEnv);
  if (key == nullptr || *key == '\0') {
    throw Error("AuthError", std::string("remote backend requires ") + kApiKeyEnv +
                                 " in the environment");
  }
  return std::make_unique<RemoteBackend>(config, key);
}

std::string chat_complete(TextBackend& backend, const ChatRequest& req,
                          GenerationCache* cache) {
  if (cache == nullptr) {
    return backend.complete(req);
  }
  const std::string key = prompt_hash(req);
  if (auto hit = cache->lookup(key)) {
    return *hit;
  }
  std::string completion = backend.complete(req);
  cache->store(key, completion);
  return completion;
}

std::string CountingSession::complete(const ChatRequest& req) {
  if (cache_) {
    const std::string key = prompt_hash(req);
    if (auto hit = cache_->lookup(key)) {
      std::lock_guard<std::mutex> lock(mu_);
      ++cache_hits_;
      return *hit;
    }
    std::string completion = backend_.complete(req);
    {
      std::lock_guard<std::mutex> lock(mu_);
      ++wire_requests_;
    }
    cache_->store(key, completion);
    return completion;
  }
  std::string completion = backend_.complete(req);
  std::lock_guard<std::mutex> lock(mu_);
  ++wire_requests_;
  return completion;
}

}  // namespace synthline
