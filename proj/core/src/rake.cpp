#include "ambipun/rake.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ambipun::rake {

std::string Phrase::joined() const {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

RakeResult extract(std::span<const std::vector<std::string>> tokenized_sentences,
                   const textnorm::StopwordList& stopwords) {
  std::vector<std::vector<std::string>> occurrences;
  for (const auto& sentence : tokenized_sentences) {
    std::vector<std::string> run;
    for (const auto& tok : sentence) {
      if (stopwords.contains(tok)) {
        if (!run.empty()) occurrences.push_back(std::move(run));
        run.clear();
      } else {
        run.push_back(tok);
      }
    }
    if (!run.empty()) occurrences.push_back(std::move(run));
  }

  std::unordered_map<std::string, double> freq;
  std::unordered_map<std::string, double> degree;
  for (const auto& phrase : occurrences) {
    const auto len = static_cast<double>(phrase.size());
    for (const auto& w : phrase) {
      freq[w] += 1.0;
      degree[w] += len;
    }
  }

  RakeResult result;
  for (const auto& [w, f] : freq) result.word_scores.emplace(w, degree[w] / f);

  std::unordered_set<std::string> seen;
  for (auto& words : occurrences) {
    Phrase p{std::move(words), 0.0};
    if (!seen.insert(p.joined()).second) continue;
    for (const auto& w : p.words) p.score += result.word_scores.at(w);
    result.phrases.push_back(std::move(p));
  }
  std::sort(result.phrases.begin(), result.phrases.end(), [](const Phrase& a, const Phrase& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.joined() < b.joined();
  });
  return result;
}

RakeResult extract_text(std::span<const std::string> sentences,
                        const textnorm::StopwordList& stopwords) {
  std::vector<std::vector<std::string>> tokenized;
  tokenized.reserve(sentences.size());
  for (const auto& s : sentences) tokenized.push_back(textnorm::tokenize(s));
  return extract(tokenized, stopwords);
}

std::vector<std::string> flatten_keywords(const RakeResult& result) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& p : result.phrases) {
    for (const auto& w : p.words) {
      if (seen.insert(w).second) out.push_back(w);
    }
  }
  return out;
}

}  // namespace ambipun::rake
