#include "ambipun/mock_server.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "ambipun/errors.hpp"
#include "ambipun/rng.hpp"
#include "ambipun/textnorm.hpp"

namespace ambipun::mock {

namespace {

constexpr std::array<std::string_view, 48> kVocabulary = {
    "anchor",  "banjo",   "candle",  "canyon",  "cobalt",  "compass", "cricket", "dolphin",
    "ember",   "falcon",  "fiddle",  "garnet",  "glacier", "harbor",  "hazel",   "igloo",
    "jasmine", "kettle",  "lantern", "lemon",   "magnet",  "meadow",  "nectar",  "nutmeg",
    "orchid",  "paddle",  "pebble",  "pepper",  "quartz",  "quiver",  "raven",   "saddle",
    "saffron", "tundra",  "thistle", "tulip",   "umbrella", "velvet", "walnut",  "willow",
    "yarrow",  "zephyr",  "biscuit", "pretzel", "marble",  "lobster", "giraffe", "cactus"};

constexpr int kCompletionWords = 7;

std::string join(const std::vector<std::string>& words, std::string_view sep, std::size_t begin,
                 std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out.append(sep);
    out += words[i];
  }
  return out;
}

std::string last_word(std::string_view prompt) {
  const auto tokens = textnorm::tokenize(prompt);
  return tokens.empty() ? std::string() : tokens.back();
}

std::string render(std::uint64_t pick, const std::vector<std::string>& kw) {
  const auto n = kw.size();
  const auto& last = kw.back();
  const auto head = [&](std::string_view sep) {
    return n > 1 ? join(kw, sep, 0, n - 1) : std::string("thing");
  };
  switch (pick % 4) {
    case 0: return "what do you call a " + head(" with ") + "? " + last + ".";
    case 1: return "why did the " + head(" and the ") + " laugh? because of the " + last + ".";
    case 2: return "i told my " + head(" about the ") + " and it was a real " + last + ".";
    default: return "a " + head(" and a ") + " walked into a bar and ordered a " + last + ".";
  }
}

}  // namespace

std::string complete(std::string_view prompt, std::uint64_t seed) {
  const auto word = last_word(prompt);
  std::string out;
  for (int i = 0; i < kCompletionWords; ++i) {
    const auto h = fnv1a64(std::to_string(seed) + "|" + word + "|" + std::to_string(i));
    if (i > 0) out += ", ";
    out += kVocabulary[h % kVocabulary.size()];
  }
  return out;
}

std::vector<std::string> generate(const std::vector<std::string>& keywords, int num_return,
                                  std::uint64_t request_seed, std::uint64_t server_seed) {
  std::vector<std::string> out;
  if (keywords.empty()) return out;
  const auto key = join(keywords, ",", 0, keywords.size());
  for (int i = 0; i < num_return; ++i) {
    const auto h = fnv1a64(key + "|" + std::to_string(request_seed) + "|" +
                           std::to_string(server_seed) + "|" + std::to_string(i));
    out.push_back(render(h, keywords));
  }
  return out;
}

double classify(std::string_view sentence) {
  return static_cast<double>(fnv1a64(sentence) % 10000) / 10000.0;
}

std::vector<std::string> reverse_dictionary(std::string_view definition, int k,
                                            std::uint64_t seed) {
  std::vector<std::string> out;
  const auto limit = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), kVocabulary.size());
  for (std::uint64_t i = 0; out.size() < limit; ++i) {
    const auto h = fnv1a64(std::to_string(seed) + "|" + std::string(definition) + "|" +
                           std::to_string(i));
    std::string w(kVocabulary[h % kVocabulary.size()]);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  return out;
}

struct MockServer::Impl {
  httplib::Server server;
  std::thread thread;
  std::mutex stop_mutex;
  std::promise<void> finished;
  std::shared_future<void> finished_future = finished.get_future().share();
  int port = 0;
  std::string host;
};

namespace {

void reply_json(httplib::Response& res, const nlohmann::json& body) {
  res.set_content(body.dump(), "application/json");
}

void bad_request(httplib::Response& res, const std::string& message) {
  res.status = 400;
  reply_json(res, {{"error", message}});
}

template <typename Fn>
httplib::Server::Handler json_handler(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(req.body);
      reply_json(res, fn(body));
    } catch (const nlohmann::json::exception& e) {
      bad_request(res, e.what());
    }
  };
}

}  // namespace

MockServer::MockServer(int port, std::uint64_t seed, const std::string& host)
    : impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->server;
  srv.Post("/complete", json_handler([seed](const nlohmann::json& b) {
             return nlohmann::json{{"text", complete(b.at("prompt").get<std::string>(), seed)}};
           }));
  srv.Post("/generate", json_handler([seed](const nlohmann::json& b) {
             const auto kw = b.at("keywords").get<std::vector<std::string>>();
             const int n = b.value("num_return", 1);
             const auto req_seed = b.value("seed", std::uint64_t{0});
             return nlohmann::json{{"sentences", generate(kw, n, req_seed, seed)}};
           }));
  srv.Post("/classify", json_handler([](const nlohmann::json& b) {
             std::vector<double> scores;
             for (const auto& s : b.at("sentences")) scores.push_back(classify(s.get<std::string>()));
             return nlohmann::json{{"scores", scores}};
           }));
  srv.Post("/reverse_dictionary", json_handler([seed](const nlohmann::json& b) {
             return nlohmann::json{{"words", reverse_dictionary(b.at("definition").get<std::string>(),
                                                                b.value("k", 5), seed)}};
           }));
  srv.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });

  // The library default adds SO_REUSEPORT, which lets a second server share a busy port.
  srv.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
  });
  impl_->host = host;
  if (port == 0) {
    impl_->port = srv.bind_to_any_port(host);
    if (impl_->port <= 0) throw BindError("cannot bind any port on " + host);
  } else {
    if (!srv.bind_to_port(host, port)) {
      throw BindError("cannot bind " + host + ":" + std::to_string(port));
    }
    impl_->port = port;
  }
  impl_->thread = std::thread([impl = impl_.get()] {
    impl->server.listen_after_bind();
    impl->finished.set_value();
  });
  srv.wait_until_ready();
}

MockServer::~MockServer() { stop(); }

int MockServer::port() const noexcept { return impl_->port; }

std::string MockServer::url() const {
  return "http://" + impl_->host + ":" + std::to_string(impl_->port);
}

void MockServer::stop() {
  if (!impl_) return;
  std::lock_guard lock(impl_->stop_mutex);
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

void MockServer::wait() { impl_->finished_future.wait(); }

}  // namespace ambipun::mock
