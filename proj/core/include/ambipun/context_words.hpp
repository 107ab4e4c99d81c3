#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ambipun/corpus_index.hpp"
#include "ambipun/embeddings.hpp"
#include "ambipun/llm_client.hpp"
#include "ambipun/textnorm.hpp"
#include "ambipun/types.hpp"

namespace ambipun {

struct ContextOptions {
  std::string pun_word;
  int context_word_count = 10;
  int sense_count_threshold = 1;
  int llm_keywords_per_word = 7;
  std::size_t max_sentences_per_word = kDefaultMaxSentences;
  int max_in_flight = 4;
};

ContextOptions context_options(const PipelineConfig& cfg, std::string pun_word);

// tf: occurrences in the retrieved sentences of every related word that
// proposed the keyword; df: corpus document frequency.
struct TfIdfScore {
  std::string keyword;
  std::size_t tf = 0;
  std::size_t df = 0;
  double score = 0.0;  // tf * ln((N + 1) / (df + 1))
};

double tfidf_value(std::size_t tf, std::size_t df, std::size_t total_sentences);

// All pooled RAKE keywords of one sense with their scores, unfiltered and
// unordered-by-score (sorted by keyword).
std::vector<TfIdfScore> tfidf_scores(const CorpusIndex& index, const RelatedWordSet& related,
                                     const textnorm::StopwordList& stopwords,
                                     std::size_t max_sentences_per_word);

// Extractive strategy: retrieve, RAKE, pool per sense, rank by TF-IDF.
ContextWordSet tfidf_context(const CorpusIndex& index, const RelatedWordSet& related,
                             const textnorm::StopwordList& stopwords,
                             const textnorm::SenseCountLexicon& lexicon,
                             const ContextOptions& options);

// Similarity strategy: pooled nearest neighbours of each related word,
// scored by the best cosine seen.
ContextWordSet w2v_context(const EmbeddingTable& table, const RelatedWordSet& related,
                           const textnorm::SenseCountLexicon& lexicon,
                           const ContextOptions& options);

// Few-shot keyword prompt for one related word.
std::string keyword_prompt(std::string_view word, int keyword_count = 7);

// Comma-separated alphabetic items of the first completion line, lowercased,
// at most `max_items`. Throws ParseError when nothing usable remains.
std::vector<std::string> parse_keyword_completion(std::string_view completion,
                                                  std::size_t max_items);

// Generative strategy: one completion per related word, merged in
// related-word order; scores are 1 / rank.
ContextWordSet llm_context(const ModelClient& client, const RelatedWordSet& related,
                           const textnorm::SenseCountLexicon& lexicon,
                           const ContextOptions& options);

}  // namespace ambipun
