#include "ambipun/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "ambipun/errors.hpp"

namespace ambipun {

namespace {

bool is_ascii_alpha(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalpha(c) != 0; });
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

const PunTask& validate_task(const PunTask& task) {
  if (task.pun_word.empty()) throw InvalidTask("pun_word", "empty pun word");
  if (!is_ascii_alpha(task.pun_word)) {
    throw InvalidTask("pun_word", "pun word must be alphabetic: \"" + task.pun_word + "\"");
  }
  if (std::any_of(task.pun_word.begin(), task.pun_word.end(),
                  [](unsigned char c) { return std::isupper(c) != 0; })) {
    throw InvalidTask("pun_word", "pun word must be lowercase: \"" + task.pun_word + "\"");
  }
  if (is_blank(task.sense1)) throw InvalidTask("sense1", "empty definition");
  if (is_blank(task.sense2)) throw InvalidTask("sense2", "empty definition");
  if (task.sense1 == task.sense2) throw InvalidTask("sense2", "both senses are identical");
  return task;
}

std::string_view to_string(ContextMethod method) {
  switch (method) {
    case ContextMethod::kTfIdf: return "tfidf";
    case ContextMethod::kWord2Vec: return "w2v";
    case ContextMethod::kLlm: return "llm";
  }
  return "?";
}

std::string_view to_string(PositionMode mode) {
  switch (mode) {
    case PositionMode::kBegin: return "begin";
    case PositionMode::kMiddle: return "middle";
    case PositionMode::kEnd: return "end";
  }
  return "?";
}

ContextMethod parse_context_method(std::string_view name) {
  if (name == "tfidf") return ContextMethod::kTfIdf;
  if (name == "w2v") return ContextMethod::kWord2Vec;
  if (name == "llm") return ContextMethod::kLlm;
  throw ConfigError("unknown context method: " + std::string(name));
}

PositionMode parse_position_mode(std::string_view name) {
  if (name == "begin") return PositionMode::kBegin;
  if (name == "middle") return PositionMode::kMiddle;
  if (name == "end") return PositionMode::kEnd;
  throw ConfigError("unknown pun position mode: " + std::string(name));
}

std::vector<std::string> ContextWordSet::tokens() const {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.word);
  return out;
}

std::size_t Rational::ceil_times(std::size_t n) const {
  const auto p = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(num);
  const auto d = static_cast<std::uint64_t>(den);
  return static_cast<std::size_t>((p + d - 1) / d);
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ConfigError("not a rational number: \"" + std::string(text) + "\"");
    }
    return v;
  };
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
  } else {
    r.num = parse_int(text);
    r.den = 1;
  }
  if (r.den <= 0) throw ConfigError("rational denominator must be positive");
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

void validate_config(const PipelineConfig& cfg) {
  auto positive = [](int v, const char* name) {
    if (v <= 0) throw ConfigError(std::string(name) + " must be positive");
  };
  positive(cfg.related_word_count, "related_word_count");
  positive(cfg.context_word_count, "context_word_count");
  positive(cfg.llm_keywords_per_word, "llm_keywords_per_word");
  positive(cfg.context_words_per_sense_in_prompt, "context_words_per_sense_in_prompt");
  positive(cfg.candidates_per_task, "candidates_per_task");
  positive(cfg.sense_count_threshold, "sense_count_threshold");
  positive(cfg.max_sentences_per_word, "max_sentences_per_word");
  positive(cfg.max_in_flight, "max_in_flight");
  positive(cfg.max_tokens, "max_tokens");
  if (cfg.final_sample_size < 0) throw ConfigError("final_sample_size must be >= 0");
  if (cfg.max_retries < 0) throw ConfigError("max_retries must be >= 0");
  if (!(cfg.timeout_seconds > 0)) throw ConfigError("timeout_seconds must be positive");
  if (!(cfg.temperature >= 0)) throw ConfigError("temperature must be >= 0");
  if (cfg.keep_fraction.den <= 0 || cfg.keep_fraction.num <= 0 ||
      cfg.keep_fraction.num > cfg.keep_fraction.den) {
    throw ConfigError("keep_fraction must lie in (0, 1]");
  }
  if (cfg.context_words_per_sense_in_prompt > cfg.context_word_count) {
    throw ConfigError("context_words_per_sense_in_prompt exceeds context_word_count");
  }
}

}  // namespace ambipun
