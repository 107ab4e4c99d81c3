#include "ambipun/llm_client.hpp"

#include <chrono>
#include <cstdlib>
#include <semaphore>
#include <thread>

#include <httplib.h>

#include "ambipun/errors.hpp"

namespace ambipun {

namespace {

struct ParsedUrl {
  std::string scheme_host_port;
  std::string path_prefix;
};

ParsedUrl parse_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint URL needs a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, ""};
  auto prefix = url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {url.substr(0, path_start), prefix};
}

std::string excerpt(const std::string& body) {
  constexpr std::size_t kMax = 200;
  return body.size() <= kMax ? body : body.substr(0, kMax) + "...";
}

bool transient_status(int status) { return status == 429 || status >= 500; }

}  // namespace

struct ModelClient::State {
  explicit State(int max_in_flight) : slots(max_in_flight) {}
  std::counting_semaphore<1024> slots;
};

EndpointConfig endpoint_config(const PipelineConfig& cfg, const std::string& base_url) {
  EndpointConfig e;
  e.base_url = base_url;
  e.api_key_env = cfg.api_key_env;
  e.timeout_seconds = cfg.timeout_seconds;
  e.max_retries = cfg.max_retries;
  e.max_in_flight = cfg.max_in_flight;
  e.temperature = cfg.temperature;
  e.max_tokens = cfg.max_tokens;
  return e;
}

std::string truncate_tokens(std::string_view sentence, std::size_t max_tokens) {
  std::string out;
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < sentence.size() && count < max_tokens) {
    const auto start = sentence.find_first_not_of(" \t\r\n", pos);
    if (start == std::string_view::npos) break;
    auto end = sentence.find_first_of(" \t\r\n", start);
    if (end == std::string_view::npos) end = sentence.size();
    if (!out.empty()) out.push_back(' ');
    out.append(sentence.substr(start, end - start));
    ++count;
    pos = end;
  }
  return out;
}

ModelClient::ModelClient(EndpointConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.max_retries < 0) throw ConfigError("max_retries must be >= 0");
  if (!(cfg_.timeout_seconds > 0)) throw ConfigError("timeout must be positive");
  if (cfg_.max_tokens < 1) throw ConfigError("max_tokens must be >= 1");
  if (cfg_.max_in_flight < 1 || cfg_.max_in_flight > 1024) {
    throw ConfigError("max_in_flight must be in [1, 1024]");
  }
  parse_url(cfg_.base_url);
  state_ = std::make_unique<State>(cfg_.max_in_flight);
}

ModelClient::~ModelClient() = default;
ModelClient::ModelClient(ModelClient&&) noexcept = default;
ModelClient& ModelClient::operator=(ModelClient&&) noexcept = default;

nlohmann::json ModelClient::post_json(const std::string& path, const nlohmann::json& body) const {
  const auto url = parse_url(cfg_.base_url);
  const auto full_path = url.path_prefix + path;
  const auto payload = body.dump();
  const auto timeout = std::chrono::duration<double>(cfg_.timeout_seconds);

  httplib::Headers headers;
  if (!cfg_.api_key_env.empty()) {
    if (const char* key = std::getenv(cfg_.api_key_env.c_str()); key != nullptr && *key != '\0') {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }

  state_->slots.acquire();
  struct Release {
    std::counting_semaphore<1024>& s;
    ~Release() { s.release(); }
  } release{state_->slots};

  std::string last_error;
  for (int attempt = 0;; ++attempt) {
    httplib::Client client(url.scheme_host_port);
    const auto secs = static_cast<time_t>(cfg_.timeout_seconds);
    const auto usecs = static_cast<time_t>((cfg_.timeout_seconds - static_cast<double>(secs)) * 1e6);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);

    const auto started = std::chrono::steady_clock::now();
    auto res = client.Post(full_path, headers, payload, "application/json");
    const bool last = attempt >= cfg_.max_retries;

    if (!res) {
      const auto err = res.error();
      const bool timed_out = err == httplib::Error::ConnectionTimeout ||
                             (err == httplib::Error::Read &&
                              std::chrono::steady_clock::now() - started >= timeout);
      last_error = httplib::to_string(err);
      if (last) {
        if (timed_out) throw TimeoutError("request to " + full_path + " timed out: " + last_error);
        throw EndpointError(0, "", "request to " + full_path + " failed after " +
                                       std::to_string(attempt + 1) + " attempts: " + last_error);
      }
    } else if (res->status >= 200 && res->status < 300) {
      try {
        return nlohmann::json::parse(res->body);
      } catch (const nlohmann::json::parse_error&) {
        throw EndpointError(res->status, excerpt(res->body), "malformed JSON from " + full_path);
      }
    } else if (last || !transient_status(res->status)) {
      throw EndpointError(res->status, excerpt(res->body),
                          "HTTP " + std::to_string(res->status) + " from " + full_path);
    }
    const auto backoff = std::chrono::milliseconds(
        static_cast<long long>(cfg_.initial_backoff_ms) << std::min(attempt, 10));
    std::this_thread::sleep_for(backoff);
  }
}

namespace {

template <typename T>
T field(const nlohmann::json& reply, const char* name, const std::string& path) {
  if (!reply.is_object() || !reply.contains(name)) {
    throw EndpointError(200, excerpt(reply.dump()), path + " reply lacks \"" + name + "\"");
  }
  try {
    return reply.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw EndpointError(200, excerpt(reply.dump()), path + " reply has a mistyped \"" + name + "\"");
  }
}

}  // namespace

std::string ModelClient::complete(std::string_view prompt) const {
  const nlohmann::json body = {{"prompt", std::string(prompt)},
                               {"max_tokens", cfg_.max_tokens},
                               {"temperature", cfg_.temperature}};
  return field<std::string>(post_json("/complete", body), "text", "/complete");
}

std::vector<std::string> ModelClient::generate_sentences(const std::vector<std::string>& keywords,
                                                         int n, std::uint64_t seed) const {
  if (keywords.empty()) throw PreconditionError("generate_sentences needs at least one keyword");
  if (n < 1) throw PreconditionError("generate_sentences needs n >= 1");
  const nlohmann::json body = {{"keywords", keywords}, {"num_return", n}, {"seed", seed}};
  auto raw = field<std::vector<std::string>>(post_json("/generate", body), "sentences", "/generate");
  std::vector<std::string> out;
  for (const auto& s : raw) {
    if (out.size() == static_cast<std::size_t>(n)) break;
    auto t = truncate_tokens(s, kMaxSentenceTokens);
    if (!t.empty()) out.push_back(std::move(t));
  }
  if (out.empty()) throw EmptyResponse("/generate returned no sentences");
  return out;
}

std::vector<double> ModelClient::classify(const std::vector<std::string>& sentences) const {
  if (sentences.empty()) throw PreconditionError("classify needs at least one sentence");
  const nlohmann::json body = {{"sentences", sentences}};
  auto scores = field<std::vector<double>>(post_json("/classify", body), "scores", "/classify");
  if (scores.size() != sentences.size()) throw LengthMismatch(sentences.size(), scores.size());
  for (double s : scores) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw EndpointError(200, "", "/classify score outside [0, 1]: " + std::to_string(s));
    }
  }
  return scores;
}

std::vector<std::string> ModelClient::reverse_dictionary(std::string_view definition, int k) const {
  const nlohmann::json body = {{"definition", std::string(definition)}, {"k", k}};
  return field<std::vector<std::string>>(post_json("/reverse_dictionary", body), "words",
                                         "/reverse_dictionary");
}

}  // namespace ambipun
