#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ambipun::mock {

// Deterministic stand-ins for the model endpoints. All hashing is FNV-1a
// 64-bit over UTF-8 bytes, so any implementation can reproduce the outputs.

// Seven comma-separated words chosen by hashing the prompt's last word.
std::string complete(std::string_view prompt, std::uint64_t seed);

// `num_return` sentences, each built from a template that embeds every
// keyword and ends with the last one.
std::vector<std::string> generate(const std::vector<std::string>& keywords, int num_return,
                                  std::uint64_t request_seed, std::uint64_t server_seed);

// (fnv1a64(sentence) mod 10000) / 10000
double classify(std::string_view sentence);

// k distinct words chosen by hashing the definition.
std::vector<std::string> reverse_dictionary(std::string_view definition, int k,
                                            std::uint64_t seed);

// Serves /complete, /generate, /classify, /reverse_dictionary (POST) and
// /healthz (GET) on a background thread until destroyed.
class MockServer {
 public:
  // Port 0 binds any free port. Throws BindError.
  MockServer(int port, std::uint64_t seed, const std::string& host = "127.0.0.1");
  ~MockServer();
  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  int port() const noexcept;
  std::string url() const;
  void stop();
  // Blocks until stop() is called from another thread.
  void wait();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ambipun::mock
