#pragma once

// Slow, obviously-correct reference implementations used by the unit and
// acceptance tests. None of them call into the library code they check,
// apart from tokenize, which every stage shares by contract.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ambipun/textnorm.hpp"

namespace oracle {

using Tokens = std::vector<std::string>;

struct RakeOut {
  std::vector<std::pair<std::string, double>> phrases;  // joined text, score
  std::map<std::string, double> word_scores;
};

inline std::vector<Tokens> split_phrases(const std::vector<Tokens>& sentences,
                                         const std::set<std::string>& stop) {
  std::vector<Tokens> phrases;
  for (const auto& s : sentences) {
    std::size_t i = 0;
    while (i < s.size()) {
      if (stop.count(s[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && !stop.count(s[j])) ++j;
      phrases.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(i),
                           s.begin() + static_cast<std::ptrdiff_t>(j));
      i = j;
    }
  }
  return phrases;
}

inline std::string join(const Tokens& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? " " : "") + words[i];
  return out;
}

// deg/freq computed word by word with a fresh pass over every phrase.
inline RakeOut rake(const std::vector<Tokens>& sentences, const std::set<std::string>& stop) {
  const auto phrases = split_phrases(sentences, stop);
  std::set<std::string> vocab;
  for (const auto& p : phrases) vocab.insert(p.begin(), p.end());
  RakeOut out;
  for (const auto& w : vocab) {
    double freq = 0;
    double deg = 0;
    for (const auto& p : phrases) {
      const auto c = std::count(p.begin(), p.end(), w);
      freq += static_cast<double>(c);
      deg += static_cast<double>(c) * static_cast<double>(p.size());
    }
    out.word_scores[w] = deg / freq;
  }
  std::set<std::string> seen;
  for (const auto& p : phrases) {
    if (!seen.insert(join(p)).second) continue;
    double score = 0;
    for (const auto& w : p) score += out.word_scores[w];
    out.phrases.emplace_back(join(p), score);
  }
  std::sort(out.phrases.begin(), out.phrases.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return out;
}

inline Tokens flatten(const RakeOut& r) {
  Tokens out;
  for (const auto& [joined, score] : r.phrases) {
    for (const auto& w : ambipun::textnorm::tokenize(joined)) {
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  }
  return out;
}

struct TfIdfInput {
  std::vector<std::string> corpus;
  std::vector<std::string> related;
  std::set<std::string> stopwords;
  std::map<std::string, int> sense_counts;
  int threshold = 1;
  std::string pun_word;
  std::size_t top = 10;
  std::size_t max_sentences = 500;
};

// Retrieval by linear scan, RAKE by the oracle above, df by rescanning the
// corpus for every keyword.
inline std::vector<std::pair<std::string, double>> tfidf_top(const TfIdfInput& in) {
  std::vector<Tokens> tokenized;
  for (const auto& s : in.corpus) {
    if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
    tokenized.push_back(ambipun::textnorm::tokenize(s));
  }
  const double n = static_cast<double>(tokenized.size());
  std::map<std::string, std::size_t> tf;
  for (const auto& r : in.related) {
    std::vector<Tokens> hits;
    for (const auto& s : tokenized) {
      if (hits.size() < in.max_sentences && std::count(s.begin(), s.end(), r) > 0) hits.push_back(s);
    }
    for (const auto& kw : flatten(rake(hits, in.stopwords))) {
      for (const auto& s : hits) tf[kw] += static_cast<std::size_t>(std::count(s.begin(), s.end(), kw));
    }
  }
  std::vector<std::pair<std::string, double>> scored;
  for (const auto& [kw, count] : tf) {
    if (kw == in.pun_word || std::count(in.related.begin(), in.related.end(), kw)) continue;
    if (!std::all_of(kw.begin(), kw.end(), [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); })) continue;
    if (auto it = in.sense_counts.find(kw); it != in.sense_counts.end() && it->second > in.threshold) continue;
    std::size_t df = 0;
    for (const auto& s : tokenized) df += std::count(s.begin(), s.end(), kw) > 0 ? 1 : 0;
    scored.emplace_back(kw, static_cast<double>(count) * std::log((n + 1.0) / (static_cast<double>(df) + 1.0)));
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (scored.size() > in.top) scored.resize(in.top);
  return scored;
}

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Scores every row, sorts the whole list, then cuts.
template <typename Keep>
std::vector<std::pair<std::string, double>> cosine_rank(
    const std::vector<std::pair<std::string, Vec>>& rows, const Vec& query, std::size_t k,
    Keep keep) {
  std::vector<std::pair<std::string, double>> all;
  const double qn = std::sqrt(dot(query, query));
  for (const auto& [w, v] : rows) {
    const double vn = std::sqrt(dot(v, v));
    if (vn == 0.0 || !keep(w)) continue;
    all.emplace_back(w, dot(query, v) / (qn * vn));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

// "w" + base-26 letters of i: wa, wb, ..., wz, wab, ...
inline std::string word_name(const std::string& prefix, std::size_t i) {
  std::string w = prefix;
  for (std::size_t n = i;; n /= 26) {
    w.push_back(static_cast<char>('a' + n % 26));
    if (n < 26) break;
  }
  return w;
}

// Random table with small integer coordinates so exact cosine ties occur.
inline std::vector<std::pair<std::string, Vec>> random_table(std::mt19937_64& rng,
                                                             std::size_t vocab, std::size_t dim,
                                                             int range = 3) {
  std::uniform_int_distribution<int> coord(-range, range);
  std::vector<std::pair<std::string, Vec>> rows;
  for (std::size_t i = 0; i < vocab; ++i) {
    Vec v(dim);
    for (auto& x : v) x = coord(rng);
    rows.emplace_back(word_name("w", i), std::move(v));
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  return rows;
}

// Random sentences over `vocab` words named by word_name("t", i).
inline std::vector<std::string> random_sentences(std::mt19937_64& rng, std::size_t count,
                                                 std::size_t vocab, std::size_t max_len = 9) {
  std::uniform_int_distribution<std::size_t> word(0, vocab - 1);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string s;
    for (std::size_t j = 0, n = len(rng); j < n; ++j) {
      if (j) s.push_back(' ');
      s += word_name("t", word(rng));
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace oracle
