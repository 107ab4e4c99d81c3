#pragma once

#include <nlohmann/json.hpp>

#include "ambipun/config.hpp"
#include "ambipun/errors.hpp"
#include "ambipun/types.hpp"

namespace ambipun {

NLOHMANN_JSON_SERIALIZE_ENUM(ContextMethod, {
                                                {ContextMethod::kTfIdf, "tfidf"},
                                                {ContextMethod::kWord2Vec, "w2v"},
                                                {ContextMethod::kLlm, "llm"},
                                            })

NLOHMANN_JSON_SERIALIZE_ENUM(PositionMode, {
                                               {PositionMode::kBegin, "begin"},
                                               {PositionMode::kMiddle, "middle"},
                                               {PositionMode::kEnd, "end"},
                                           })

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PunTask, pun_word, sense1, sense2, task_id)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RelatedWordSet, sense_index, words)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ScoredWord, word, score)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ContextWordSet, sense_index, method, words)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Candidate, text, prompt, seed, pun_position_mode)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ScoredCandidate, candidate, humor_score)

inline void to_json(nlohmann::json& j, const Rational& r) { j = to_string(r); }
inline void from_json(const nlohmann::json& j, Rational& r) {
  r = parse_rational(j.get<std::string>());
}

// Config values are carried as their file-syntax strings.
inline void to_json(nlohmann::json& j, const PipelineConfig& cfg) {
  j = nlohmann::json::object();
  for (const auto& [key, value] : config_entries(cfg)) j[key] = value;
}
inline void from_json(const nlohmann::json& j, PipelineConfig& cfg) {
  cfg = PipelineConfig{};
  for (const auto& [key, value] : j.items()) {
    apply_config_value(cfg, key, value.get<std::string>());
  }
  validate_config(cfg);
}

}  // namespace ambipun
