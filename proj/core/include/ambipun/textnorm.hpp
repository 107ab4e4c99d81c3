#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ambipun::textnorm {

// Lowercases ASCII and splits on whitespace and ASCII punctuation. Bytes
// >= 0x80 are kept inside tokens so UTF-8 words stay whole.
std::vector<std::string> tokenize(std::string_view text);

// True iff every byte is an ASCII letter and the token is nonempty.
bool is_alphabetic(std::string_view token);

class StopwordList {
 public:
  StopwordList() = default;
  // Words are lowercased. Throws PreconditionError if none remain.
  explicit StopwordList(std::vector<std::string> words);

  // One word per line; blank lines and '#' comments skipped.
  static StopwordList load(const std::filesystem::path& path);

  bool contains(std::string_view word) const {
    return words_.find(std::string(word)) != words_.end();
  }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

 private:
  std::unordered_set<std::string> words_;
};

// word -> number of dictionary senses. Words not listed count as monosemous.
class SenseCountLexicon {
 public:
  SenseCountLexicon() = default;
  explicit SenseCountLexicon(std::unordered_map<std::string, int> entries);

  // `word<TAB>sense_count` per line. Throws IoError / FormatError(line).
  static SenseCountLexicon load(const std::filesystem::path& path);

  std::optional<int> sense_count(std::string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::unordered_map<std::string, int> entries_;
};

// Drops tokens that are not purely alphabetic, tokens with more than
// `threshold` senses, and repeats. Order of survivors is preserved.
std::vector<std::string> refine(std::span<const std::string> words,
                                const SenseCountLexicon& lexicon, int threshold);

// Single-token form of the refine predicate (ignores duplicates).
bool passes_refine(std::string_view word, const SenseCountLexicon& lexicon, int threshold);

}  // namespace ambipun::textnorm
