#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ambipun/llm_client.hpp"
#include "ambipun/types.hpp"

namespace ambipun {

struct KeywordPrompt {
  std::vector<std::string> keywords;
  PositionMode position_mode = PositionMode::kEnd;
  std::string rendered;

  bool operator==(const KeywordPrompt&) const = default;
};

// Zero-based slot of the pun word for `per_sense` keywords on each side.
std::size_t pun_slot(PositionMode mode, std::size_t per_sense = 2);

// Lays out sense-1 picks then sense-2 picks with the pun word at its slot.
KeywordPrompt assemble_prompt(const std::string& pun_word,
                              const std::vector<std::string>& sense1_picks,
                              const std::vector<std::string>& sense2_picks, PositionMode mode);

// Draws `per_sense` words from each set without replacement using `seed`.
// Sense-2 draws skip words already picked for sense 1 so all keywords are
// distinct. Throws InsufficientContextWords.
KeywordPrompt build_prompt(const PunTask& task, const ContextWordSet& sense1,
                           const ContextWordSet& sense2, PositionMode mode, std::uint64_t seed,
                           std::size_t per_sense = 2);

struct GenerationResult {
  std::vector<Candidate> candidates;
  std::size_t dropped_without_pun = 0;
  std::size_t duplicates = 0;
};

// One prompt per candidate slot (cfg.candidates_per_task), prompt i seeded
// with derive_seed(cfg.seed, i). Output order follows the prompt index.
// Throws AllCandidatesDropped when no sentence contains the pun word.
GenerationResult generate_candidates(const ModelClient& client, const PunTask& task,
                                     const ContextWordSet& sense1, const ContextWordSet& sense2,
                                     const PipelineConfig& cfg);

}  // namespace ambipun
