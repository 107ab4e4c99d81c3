#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ambipun {

// A pun word and the two senses it should carry.
struct PunTask {
  std::string pun_word;
  std::string sense1;
  std::string sense2;
  std::string task_id;

  bool operator==(const PunTask&) const = default;
};

// Returns `task` unchanged when it is well formed, throws InvalidTask otherwise.
const PunTask& validate_task(const PunTask& task);

enum class ContextMethod { kTfIdf, kWord2Vec, kLlm };

// Slot of the pun word among the five prompt keywords: 1, 3 or 5.
enum class PositionMode { kBegin, kMiddle, kEnd };

std::string_view to_string(ContextMethod method);
std::string_view to_string(PositionMode mode);
// Both throw ConfigError on unknown names.
ContextMethod parse_context_method(std::string_view name);
PositionMode parse_position_mode(std::string_view name);

struct RelatedWordSet {
  int sense_index = 1;
  std::vector<std::string> words;  // best first

  bool operator==(const RelatedWordSet&) const = default;
};

struct ScoredWord {
  std::string word;
  double score = 0.0;

  bool operator==(const ScoredWord&) const = default;
};

struct ContextWordSet {
  int sense_index = 1;
  ContextMethod method = ContextMethod::kTfIdf;
  std::vector<ScoredWord> words;  // best first

  std::vector<std::string> tokens() const;
  bool operator==(const ContextWordSet&) const = default;
};

inline constexpr std::string_view kPromptPrefix = "generate sentence: ";

struct Candidate {
  std::string text;
  std::string prompt;
  std::uint64_t seed = 0;
  PositionMode pun_position_mode = PositionMode::kEnd;

  bool operator==(const Candidate&) const = default;
};

struct ScoredCandidate {
  Candidate candidate;
  double humor_score = 0.0;

  bool operator==(const ScoredCandidate&) const = default;
};

// Exact fraction in (0, 1]. Used for the pruning keep ratio so that
// ceil(n * num / den) needs no floating point.
struct Rational {
  std::int64_t num = 2;
  std::int64_t den = 3;

  // ceil(n * num / den)
  std::size_t ceil_times(std::size_t n) const;
  // Value equality, so 2/3 == 4/6.
  bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};

// Accepts "num/den" or a bare integer. Throws ConfigError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

struct PipelineConfig {
  int related_word_count = 5;
  int context_word_count = 10;
  int llm_keywords_per_word = 7;
  int context_words_per_sense_in_prompt = 2;
  Rational keep_fraction{2, 3};
  int candidates_per_task = 30;
  int final_sample_size = 30;
  PositionMode pun_position_mode = PositionMode::kEnd;
  int sense_count_threshold = 1;
  int max_sentences_per_word = 500;

  std::string completion_url = "http://127.0.0.1:8765";
  std::string generation_url = "http://127.0.0.1:8765";
  std::string classifier_url = "http://127.0.0.1:8765";
  // Empty selects the local embedding reverse dictionary.
  std::string reverse_dictionary_url;
  std::string api_key_env = "AMBIPUN_API_KEY";
  double timeout_seconds = 30.0;
  int max_retries = 2;
  int max_in_flight = 4;
  double temperature = 0.7;
  int max_tokens = 64;

  std::uint64_t seed = 0;

  bool operator==(const PipelineConfig&) const = default;
};

// Throws ConfigError when an invariant does not hold.
void validate_config(const PipelineConfig& cfg);

}  // namespace ambipun
