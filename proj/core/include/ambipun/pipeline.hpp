#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ambipun/corpus_index.hpp"
#include "ambipun/embeddings.hpp"
#include "ambipun/textnorm.hpp"
#include "ambipun/types.hpp"

namespace ambipun {

// Read-only inputs shared by every task. Pointers may be null when the
// chosen strategies do not need them.
struct PipelineResources {
  const textnorm::StopwordList* stopwords = nullptr;
  const textnorm::SenseCountLexicon* lexicon = nullptr;
  const CorpusIndex* index = nullptr;
  const EmbeddingTable* embeddings = nullptr;
  // Built from `index` when present, uniform otherwise.
  const IdfTable* idf = nullptr;
};

struct TaskOutcome {
  PunTask task;
  ContextMethod method = ContextMethod::kTfIdf;
  RelatedWordSet related1;
  RelatedWordSet related2;
  ContextWordSet context1;
  ContextWordSet context2;
  std::size_t generated = 0;
  std::size_t dropped_without_pun = 0;
  std::size_t duplicates = 0;
  std::size_t kept_after_pruning = 0;
  std::vector<ScoredCandidate> final_puns;
};

// Reverse dictionary for one sense: the remote endpoint when
// cfg.reverse_dictionary_url is set, the local embedding method otherwise.
RelatedWordSet related_words(const PunTask& task, int sense_index, const PipelineResources& res,
                             const PipelineConfig& cfg);

ContextWordSet context_words(const PunTask& task, const RelatedWordSet& related,
                             ContextMethod method, const PipelineResources& res,
                             const PipelineConfig& cfg);

// related words -> context words -> candidates -> scores -> prune -> sample.
TaskOutcome run_task(const PunTask& task, ContextMethod method, const PipelineResources& res,
                     const PipelineConfig& cfg);

// One JSON object per final pun carrying its full provenance.
std::vector<nlohmann::ordered_json> pun_records(const TaskOutcome& outcome);

}  // namespace ambipun
