#include "ambipun/generation.hpp"

#include <algorithm>
#include <unordered_set>

#include "ambipun/errors.hpp"
#include "ambipun/parallel.hpp"
#include "ambipun/rng.hpp"
#include "ambipun/textnorm.hpp"

namespace ambipun {

namespace {

void drop_repeats(std::vector<std::string>& words) {
  std::unordered_set<std::string> seen;
  std::erase_if(words, [&](const std::string& w) { return !seen.insert(w).second; });
}

std::vector<std::string> draw(const std::vector<std::string>& pool, std::size_t count,
                              SeededRng& rng, int sense_index) {
  if (pool.size() < count) throw InsufficientContextWords(sense_index);
  std::vector<std::string> picks;
  for (auto i : rng.sample_indices(pool.size(), count)) picks.push_back(pool[i]);
  return picks;
}

}  // namespace

std::size_t pun_slot(PositionMode mode, std::size_t per_sense) {
  switch (mode) {
    case PositionMode::kBegin: return 0;
    case PositionMode::kMiddle: return per_sense;
    case PositionMode::kEnd: return 2 * per_sense;
  }
  return 2 * per_sense;
}

KeywordPrompt assemble_prompt(const std::string& pun_word,
                              const std::vector<std::string>& sense1_picks,
                              const std::vector<std::string>& sense2_picks, PositionMode mode) {
  if (sense1_picks.size() != sense2_picks.size()) {
    throw PreconditionError("both senses need the same number of prompt keywords");
  }
  KeywordPrompt p;
  p.position_mode = mode;
  p.keywords = sense1_picks;
  p.keywords.insert(p.keywords.end(), sense2_picks.begin(), sense2_picks.end());
  p.keywords.insert(p.keywords.begin() +
                        static_cast<std::ptrdiff_t>(pun_slot(mode, sense1_picks.size())),
                    pun_word);
  p.rendered = std::string(kPromptPrefix);
  for (std::size_t i = 0; i < p.keywords.size(); ++i) {
    if (i > 0) p.rendered += ", ";
    p.rendered += p.keywords[i];
  }
  return p;
}

KeywordPrompt build_prompt(const PunTask& task, const ContextWordSet& sense1,
                           const ContextWordSet& sense2, PositionMode mode, std::uint64_t seed,
                           std::size_t per_sense) {
  SeededRng rng(seed);
  auto pool1 = sense1.tokens();
  std::erase(pool1, task.pun_word);
  drop_repeats(pool1);
  const auto picks1 = draw(pool1, per_sense, rng, 1);

  auto pool2 = sense2.tokens();
  std::erase_if(pool2, [&](const std::string& w) {
    return w == task.pun_word || std::find(picks1.begin(), picks1.end(), w) != picks1.end();
  });
  drop_repeats(pool2);
  const auto picks2 = draw(pool2, per_sense, rng, 2);
  return assemble_prompt(task.pun_word, picks1, picks2, mode);
}

GenerationResult generate_candidates(const ModelClient& client, const PunTask& task,
                                     const ContextWordSet& sense1, const ContextWordSet& sense2,
                                     const PipelineConfig& cfg) {
  const auto count = static_cast<std::size_t>(cfg.candidates_per_task);
  const auto per_sense = static_cast<std::size_t>(cfg.context_words_per_sense_in_prompt);

  struct Attempt {
    KeywordPrompt prompt;
    std::uint64_t seed;
    std::vector<std::string> sentences;
  };
  // Prompts are built up front so precondition failures surface before any request.
  std::vector<Attempt> attempts;
  attempts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto seed = derive_seed(cfg.seed, i);
    attempts.push_back(
        {build_prompt(task, sense1, sense2, cfg.pun_position_mode, seed, per_sense), seed, {}});
  }
  auto replies = ordered_parallel_map<std::vector<std::string>>(
      count, cfg.max_in_flight, [&](std::size_t i) {
        return client.generate_sentences(attempts[i].prompt.keywords, 1, attempts[i].seed);
      });

  GenerationResult result;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& text : replies[i]) {
      const auto tokens = textnorm::tokenize(text);
      if (std::find(tokens.begin(), tokens.end(), task.pun_word) == tokens.end()) {
        ++result.dropped_without_pun;
        continue;
      }
      if (!seen.insert(text).second) {
        ++result.duplicates;
        continue;
      }
      result.candidates.push_back(Candidate{std::move(text), attempts[i].prompt.rendered,
                                            attempts[i].seed, cfg.pun_position_mode});
    }
  }
  if (result.candidates.empty()) throw AllCandidatesDropped(result.dropped_without_pun);
  return result;
}

}  // namespace ambipun
