#include "ambipun/context_words.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "ambipun/errors.hpp"
#include "ambipun/parallel.hpp"
#include "ambipun/rake.hpp"

namespace ambipun {

namespace {

std::unordered_set<std::string> excluded_words(const RelatedWordSet& related,
                                               const ContextOptions& options) {
  std::unordered_set<std::string> out(related.words.begin(), related.words.end());
  if (!options.pun_word.empty()) out.insert(options.pun_word);
  return out;
}

// Keeps refine survivors outside `exclude`, ranks by score then word.
ContextWordSet finish(std::vector<ScoredWord> pooled, const std::unordered_set<std::string>& exclude,
                      const textnorm::SenseCountLexicon& lexicon, const ContextOptions& options,
                      int sense_index, ContextMethod method) {
  std::erase_if(pooled, [&](const ScoredWord& w) {
    return exclude.contains(w.word) ||
           !textnorm::passes_refine(w.word, lexicon, options.sense_count_threshold);
  });
  std::sort(pooled.begin(), pooled.end(), [](const ScoredWord& a, const ScoredWord& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  });
  if (pooled.size() > static_cast<std::size_t>(options.context_word_count)) {
    pooled.resize(static_cast<std::size_t>(options.context_word_count));
  }
  return ContextWordSet{sense_index, method, std::move(pooled)};
}

std::string_view number_word(int n) {
  static constexpr std::array<std::string_view, 13> kWords = {
      "zero", "one", "two", "three", "four", "five", "six",
      "seven", "eight", "nine", "ten", "eleven", "twelve"};
  return n >= 0 && n < static_cast<int>(kWords.size()) ? kWords[n] : std::string_view{};
}

}  // namespace

ContextOptions context_options(const PipelineConfig& cfg, std::string pun_word) {
  ContextOptions o;
  o.pun_word = std::move(pun_word);
  o.context_word_count = cfg.context_word_count;
  o.sense_count_threshold = cfg.sense_count_threshold;
  o.llm_keywords_per_word = cfg.llm_keywords_per_word;
  o.max_sentences_per_word = static_cast<std::size_t>(cfg.max_sentences_per_word);
  o.max_in_flight = cfg.max_in_flight;
  return o;
}

double tfidf_value(std::size_t tf, std::size_t df, std::size_t total_sentences) {
  return static_cast<double>(tf) * std::log((static_cast<double>(total_sentences) + 1.0) /
                                            (static_cast<double>(df) + 1.0));
}

std::vector<TfIdfScore> tfidf_scores(const CorpusIndex& index, const RelatedWordSet& related,
                                     const textnorm::StopwordList& stopwords,
                                     std::size_t max_sentences_per_word) {
  std::map<std::string, std::size_t> pooled_tf;
  for (const auto& word : related.words) {
    std::vector<std::vector<std::string>> tokenized;
    for (const auto& s : retrieve(index, word, max_sentences_per_word)) {
      tokenized.push_back(textnorm::tokenize(s));
    }
    if (tokenized.empty()) continue;
    const auto keywords = rake::flatten_keywords(rake::extract(tokenized, stopwords));
    std::unordered_map<std::string_view, std::size_t> counts;
    for (const auto& sentence : tokenized) {
      for (const auto& tok : sentence) ++counts[tok];
    }
    for (const auto& kw : keywords) pooled_tf[kw] += counts[kw];
  }
  std::vector<TfIdfScore> out;
  out.reserve(pooled_tf.size());
  for (const auto& [kw, tf] : pooled_tf) {
    const auto df = index.doc_freq(kw);
    out.push_back({kw, tf, df, tfidf_value(tf, df, index.total_sentences())});
  }
  return out;
}

ContextWordSet tfidf_context(const CorpusIndex& index, const RelatedWordSet& related,
                             const textnorm::StopwordList& stopwords,
                             const textnorm::SenseCountLexicon& lexicon,
                             const ContextOptions& options) {
  std::vector<ScoredWord> pooled;
  for (auto& s : tfidf_scores(index, related, stopwords, options.max_sentences_per_word)) {
    pooled.push_back({std::move(s.keyword), s.score});
  }
  return finish(std::move(pooled), excluded_words(related, options), lexicon, options,
                related.sense_index, ContextMethod::kTfIdf);
}

ContextWordSet w2v_context(const EmbeddingTable& table, const RelatedWordSet& related,
                           const textnorm::SenseCountLexicon& lexicon,
                           const ContextOptions& options) {
  const auto exclude = excluded_words(related, options);
  std::unordered_map<std::string, double> best;
  for (const auto& word : related.words) {
    if (!table.contains(word)) continue;
    // Filtering inside the scan gives each related word k usable neighbours
    // instead of k raw ones that refine may mostly discard.
    const auto query = table.vector(word);
    const auto usable = [&](const std::string& w) {
      return w != word && !exclude.contains(w) &&
             textnorm::passes_refine(w, lexicon, options.sense_count_threshold);
    };
    for (auto& n : rank_by_cosine(table, query,
                                  static_cast<std::size_t>(options.context_word_count), usable)) {
      auto [it, inserted] = best.emplace(n.word, n.cosine);
      if (!inserted) it->second = std::max(it->second, n.cosine);
    }
  }
  std::vector<ScoredWord> pooled;
  pooled.reserve(best.size());
  for (auto& [w, s] : best) pooled.push_back({w, s});
  return finish(std::move(pooled), exclude, lexicon, options, related.sense_index,
                ContextMethod::kWord2Vec);
}

std::string keyword_prompt(std::string_view word, int keyword_count) {
  auto count = std::string(number_word(keyword_count));
  if (count.empty()) count = std::to_string(keyword_count);
  const std::string lead = "generate " + count + " keywords for ";
  // Two worked examples precede the query.
  return lead + "laptop: battery, macbook, internet, technology, keyboard, technology, portable\n" +
         lead + "guitar: strings, music, chord, melody, acoustic, concert, rhythm\n" + lead +
         std::string(word) + ":";
}

std::vector<std::string> parse_keyword_completion(std::string_view completion,
                                                  std::size_t max_items) {
  const auto start = completion.find_first_not_of(" \t\r\n");
  std::string_view line;
  if (start != std::string_view::npos) {
    line = completion.substr(start);
    line = line.substr(0, line.find('\n'));
  }
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (pos <= line.size() && items.size() < max_items) {
    auto comma = line.find(',', pos);
    if (comma == std::string_view::npos) comma = line.size();
    auto item = line.substr(pos, comma - pos);
    const auto b = item.find_first_not_of(" \t\r.");
    if (b != std::string_view::npos) {
      item = item.substr(b, item.find_last_not_of(" \t\r.") - b + 1);
      std::string lowered(item);
      std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (textnorm::is_alphabetic(lowered)) items.push_back(std::move(lowered));
    }
    pos = comma + 1;
  }
  if (items.empty()) {
    throw ParseError("completion has no comma-separated alphabetic keywords: \"" +
                     std::string(completion.substr(0, 80)) + "\"");
  }
  return items;
}

ContextWordSet llm_context(const ModelClient& client, const RelatedWordSet& related,
                           const textnorm::SenseCountLexicon& lexicon,
                           const ContextOptions& options) {
  const auto per_word = static_cast<std::size_t>(options.llm_keywords_per_word);
  const auto lists = ordered_parallel_map<std::vector<std::string>>(
      related.words.size(), options.max_in_flight, [&](std::size_t i) {
        const auto completion =
            client.complete(keyword_prompt(related.words[i], options.llm_keywords_per_word));
        return parse_keyword_completion(completion, per_word);
      });

  const auto exclude = excluded_words(related, options);
  std::vector<std::string> merged;
  for (const auto& list : lists) {
    for (const auto& w : list) {
      if (!exclude.contains(w)) merged.push_back(w);
    }
  }
  auto refined = textnorm::refine(merged, lexicon, options.sense_count_threshold);
  if (refined.size() > static_cast<std::size_t>(options.context_word_count)) {
    refined.resize(static_cast<std::size_t>(options.context_word_count));
  }
  ContextWordSet out{related.sense_index, ContextMethod::kLlm, {}};
  for (std::size_t i = 0; i < refined.size(); ++i) {
    out.words.push_back({refined[i], 1.0 / static_cast<double>(i + 1)});
  }
  return out;
}

}  // namespace ambipun
