#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ambipun/types.hpp"

namespace ambipun {

struct EndpointConfig {
  // "http://host:port" with an optional path prefix.
  std::string base_url = "http://127.0.0.1:8765";
  // Name of the environment variable holding the bearer token, if any.
  std::string api_key_env = "AMBIPUN_API_KEY";
  double timeout_seconds = 30.0;
  int max_retries = 2;
  int max_in_flight = 4;
  double temperature = 0.7;
  int max_tokens = 64;
  int initial_backoff_ms = 100;
};

EndpointConfig endpoint_config(const PipelineConfig& cfg, const std::string& base_url);

// Generated sentences are cut to this many whitespace-separated tokens.
inline constexpr std::size_t kMaxSentenceTokens = 30;

std::string truncate_tokens(std::string_view sentence, std::size_t max_tokens);

// JSON-over-HTTP client for the completion, generation, classification and
// reverse-dictionary endpoints. Thread safe; each call opens its own
// connection and at most `max_in_flight` calls are outstanding at once.
class ModelClient {
 public:
  explicit ModelClient(EndpointConfig cfg);
  ~ModelClient();
  ModelClient(ModelClient&&) noexcept;
  ModelClient& operator=(ModelClient&&) noexcept;

  const EndpointConfig& config() const noexcept { return cfg_; }

  // POST /complete
  std::string complete(std::string_view prompt) const;
  // POST /generate. Throws PreconditionError for empty keywords or n < 1.
  std::vector<std::string> generate_sentences(const std::vector<std::string>& keywords, int n,
                                              std::uint64_t seed) const;
  // POST /classify. One score in [0, 1] per sentence.
  std::vector<double> classify(const std::vector<std::string>& sentences) const;
  // POST /reverse_dictionary
  std::vector<std::string> reverse_dictionary(std::string_view definition, int k) const;

  // Sends `body` to `path` with the retry policy and returns the parsed reply.
  nlohmann::json post_json(const std::string& path, const nlohmann::json& body) const;

 private:
  struct State;
  EndpointConfig cfg_;
  std::unique_ptr<State> state_;
};

}  // namespace ambipun
