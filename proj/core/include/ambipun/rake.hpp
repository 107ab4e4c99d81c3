#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ambipun/textnorm.hpp"

namespace ambipun::rake {

struct Phrase {
  std::vector<std::string> words;
  double score = 0.0;

  std::string joined() const;
  bool operator==(const Phrase&) const = default;
};

struct RakeResult {
  // Distinct candidate phrases, best first; ties ordered by joined text.
  std::vector<Phrase> phrases;
  // deg(w) / freq(w) for every word that occurs in some phrase.
  std::map<std::string, double> word_scores;

  bool operator==(const RakeResult&) const = default;
};

// Candidate phrases are maximal stopword-free runs inside one sentence.
// Every phrase occurrence adds 1 to freq(w) and the phrase length to deg(w)
// for each word occurrence it contains.
RakeResult extract(std::span<const std::vector<std::string>> tokenized_sentences,
                   const textnorm::StopwordList& stopwords);

// Convenience overload that runs textnorm::tokenize on each sentence first.
RakeResult extract_text(std::span<const std::string> sentences,
                        const textnorm::StopwordList& stopwords);

// Phrase words in phrase order, first occurrence kept.
std::vector<std::string> flatten_keywords(const RakeResult& result);

}  // namespace ambipun::rake
