#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ambipun {

using SentenceId = std::uint32_t;

struct IndexLimits {
  // 0 means no limit.
  std::size_t max_lines = 0;
  // Tokenization workers; 0 picks hardware concurrency.
  unsigned workers = 0;
};

// Inverted index over a one-sentence-per-line corpus. Empty lines are
// skipped, so sentence ids count nonempty lines only.
class CorpusIndex {
 public:
  CorpusIndex() = default;

  static CorpusIndex build(const std::filesystem::path& corpus, const IndexLimits& limits = {});
  static CorpusIndex from_sentences(std::vector<std::string> sentences, unsigned workers = 1);

  std::size_t total_sentences() const noexcept { return sentences_.size(); }
  const std::string& sentence(SentenceId id) const { return sentences_.at(id); }
  const std::vector<std::string>& sentences() const noexcept { return sentences_; }

  // Strictly increasing ids of sentences containing `token`; empty if absent.
  std::span<const SentenceId> postings(std::string_view token) const;
  std::size_t doc_freq(std::string_view token) const { return postings(token).size(); }
  std::size_t vocabulary_size() const noexcept { return postings_.size(); }

  // Sorted token list, for iteration in a stable order.
  std::vector<std::string> vocabulary() const;

  // Binary format, little endian:
  //   "AMBIPIDX" u32 version=1
  //   u64 N, then N x (u32 len, bytes)
  //   u64 T, then T x (u32 len, bytes, u32 count, count x u32 id), tokens sorted
  void save(const std::filesystem::path& path) const;
  static CorpusIndex load(const std::filesystem::path& path);
  std::string serialize() const;
  static CorpusIndex deserialize(std::string_view bytes);

  bool operator==(const CorpusIndex&) const = default;

 private:
  std::vector<std::string> sentences_;
  std::unordered_map<std::string, std::vector<SentenceId>> postings_;
};

// Up to `max_sentences` sentences containing `word`, ascending id order.
std::vector<std::string> retrieve(const CorpusIndex& index, std::string_view word,
                                  std::size_t max_sentences);

inline constexpr std::size_t kDefaultMaxSentences = 500;

// Smoothed inverse document frequency, ln((N+1)/(df+1)) + 1. Tokens absent
// from the corpus fall back to the largest observed value.
class IdfTable {
 public:
  IdfTable() = default;
  explicit IdfTable(const CorpusIndex& index);

  double operator()(std::string_view token) const;
  bool empty() const noexcept { return values_.empty(); }

 private:
  std::unordered_map<std::string, double> values_;
  double fallback_ = 1.0;
};

}  // namespace ambipun
